#include "dirac/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dirac {

namespace {

constexpr Eps kRho = {7, 6, 5, 4, 3, 2, 1, 0};

bool non_increasing(const Eps& e) {
    for (int i = 0; i < 7; ++i)
        if (e[i] < e[i + 1]) return false;
    return true;
}

std::int64_t height(const Eps& top, const Eps& e) {
    std::int64_t h = 0, c = 0;
    for (int k = 0; k < 7; ++k) {
        c += top[k] - e[k];
        h += c;
    }
    return h;
}

std::int64_t sq_shifted(const Eps& e) {
    std::int64_t s = 0;
    for (int i = 0; i < 8; ++i) s += (e[i] + kRho[i]) * (e[i] + kRho[i]);
    return s;
}

Eps sorted_desc(Eps e) {
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

}  // namespace

BigInt weyl_dim(const Labels& lambda) {
    if (!is_dominant(lambda)) throw NotDominant("weyl_dim needs a dominant weight");
    Eps e = to_eps(lambda);
    BigInt num = 1, den = 1;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            num *= e[i] - e[j] + (j - i);
            den *= j - i;
        }
    return num / den;
}

std::int64_t orbit_size(const Labels& dominant) {
    Eps e = to_eps(dominant);
    std::int64_t n = 40320;
    for (int i = 0; i < 8;) {
        int j = i;
        while (j < 8 && e[j] == e[i]) ++j;
        for (int k = 2; k <= j - i; ++k) n /= k;
        i = j;
    }
    return n;
}

WeightMultiplicities freudenthal_weights(const Labels& lambda, int depth_cap) {
    if (!is_dominant(lambda)) throw NotDominant("freudenthal_weights needs a dominant weight");
    const Eps top = to_eps(lambda);
    WeightMultiplicities out;

    // Dominant weights below lambda: close under subtracting positive roots
    // while staying dominant.
    std::set<Eps> seen{top};
    std::vector<Eps> frontier{top};
    while (!frontier.empty()) {
        std::vector<Eps> next;
        for (const auto& m : frontier)
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    Eps v = m;
                    --v[i];
                    ++v[j];
                    if (!non_increasing(v) || seen.count(v)) continue;
                    if (depth_cap >= 0 && height(top, v) > depth_cap) {
                        out.complete = false;
                        continue;
                    }
                    seen.insert(v);
                    next.push_back(v);
                }
        frontier = std::move(next);
    }

    std::vector<Eps> order(seen.begin(), seen.end());
    std::sort(order.begin(), order.end(),
              [&](const Eps& a, const Eps& b) { return height(top, a) < height(top, b); });
    std::map<Eps, std::int64_t> mult;
    const std::int64_t top_sq = sq_shifted(top);
    for (const auto& m : order) {
        if (m == top) {
            mult[m] = 1;
            continue;
        }
        std::int64_t num = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (std::int64_t k = 1;; ++k) {
                    Eps v = m;
                    v[i] += k;
                    v[j] -= k;
                    auto it = mult.find(sorted_desc(v));
                    if (it == mult.end()) break;
                    num += it->second * (v[i] - v[j]);
                }
        const std::int64_t den = top_sq - sq_shifted(m);
        if (den <= 0 || (2 * num) % den != 0) throw std::logic_error("Freudenthal recursion is not integral");
        mult[m] = 2 * num / den;
    }
    for (const auto& [e, c] : mult)
        if (c > 0) out.dominant[from_eps(e)] = c;
    return out;
}

std::map<Labels, std::int64_t> all_weights(const WeightMultiplicities& w) {
    std::map<Labels, std::int64_t> out;
    for (const auto& [dom, c] : w.dominant) {
        Eps e = to_eps(dom);
        std::sort(e.begin(), e.end());
        do {
            out[from_eps(e)] += c;
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

BigInt IrrepDecomposition::dimension() const {
    BigInt d = 0;
    for (const auto& [l, c] : terms) d += weyl_dim(l) * c;
    return d;
}

IrrepDecomposition klimyk_tensor(const Labels& small, const Labels& mu, std::int64_t cap) {
    if (!is_dominant(small) || !is_dominant(mu)) throw NotDominant("klimyk_tensor needs dominant weights");
    const BigInt dsmall = weyl_dim(small);
    if (dsmall > cap)
        throw KlimykCapExceeded("dim E_small = " + dsmall.str() + " exceeds the cap " + std::to_string(cap));

    const Eps m = to_eps(mu);
    std::map<Labels, std::int64_t> acc;
    for (const auto& [nu, c] : all_weights(freudenthal_weights(small))) {
        Eps n = to_eps(nu);
        Eps x;
        for (int i = 0; i < 8; ++i) x[i] = m[i] + n[i] + kRho[i];
        // Sort descending, tracking the sign; repeated entries mean x is singular.
        int sign = 1;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (x[i] < x[j]) sign = -sign;
        Eps s = sorted_desc(x);
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
        for (int i = 0; i < 8; ++i) s[i] -= kRho[i];
        acc[from_eps(s)] += sign * c;
    }

    IrrepDecomposition out;
    for (const auto& [l, c] : acc) {
        if (c < 0) throw std::logic_error("Klimyk expansion left a negative multiplicity");
        if (c > 0) out.terms[l] = c;
    }
    if (out.dimension() != dsmall * weyl_dim(mu)) throw std::logic_error("Klimyk expansion lost dimension");
    return out;
}

std::vector<SpinPart> spin_module_parts() {
    std::vector<SpinPart> out;
    for (const auto& c : chambers()) out.push_back({c.rho_n_varpi, c.index, c.length % 2 ? -1 : 1});
    return out;
}

namespace {

// Varpi labels of w^(j) Lambda when all are integers >= 1.
std::optional<Labels> shifted_labels(const Vec8& x) {
    const auto& t = tables();
    Labels l{};
    for (int i = 0; i < 7; ++i) {
        Rational c = dot(x, t.simple_k[i]);
        if (!c.is_integer() || c.num() < 1) return std::nullopt;
        l[i] = c.num() - 1;
    }
    return l;
}

Vec8 checked_lambda(const std::vector<Rational>& lambda) {
    if (lambda.size() != 7) throw std::invalid_argument("infinitesimal character needs 7 zeta coordinates");
    for (const auto& c : lambda)
        if (c.sign() < 0) throw NotDominant("infinitesimal character is not dominant for Delta+(g)");
    return from_zeta(lambda);
}

}  // namespace

std::vector<DiracCandidate> dirac_candidate_ktypes(const std::vector<Rational>& lambda) {
    const Vec8 lam = checked_lambda(lambda);
    std::map<Labels, DiracCandidate> by_gamma;
    for (const auto& c : chambers()) {
        auto g = shifted_labels(c.w.apply(lam));
        if (!g) continue;
        auto [it, fresh] = by_gamma.try_emplace(*g);
        DiracCandidate& d = it->second;
        if (fresh) {
            d.gamma = *g;
            d.chamber = c.index;
            d.parity = c.length % 2 ? -1 : 1;
        } else if (c.length < chambers()[d.chamber].length) {
            d.chamber = c.index;
            d.parity = c.length % 2 ? -1 : 1;
        }
        d.chambers.push_back(c.index);
    }
    std::vector<DiracCandidate> out;
    for (auto& [g, d] : by_gamma) out.push_back(std::move(d));
    return out;
}

std::vector<SpinContribution> spin_contribution(const Labels& mu, const std::vector<Rational>& lambda) {
    const Vec8 lam = checked_lambda(lambda);
    SpinNorm s = spin_norm_sq(mu);
    if (s.value != zeta_norm_sq(lambda)) return {};
    const auto& ch = chambers();
    std::vector<Vec8> images;
    for (const auto& c : ch) images.push_back(c.w.apply(lam));
    std::vector<SpinContribution> out;
    for (int j : s.chambers) {
        SpinContribution r;
        r.gamma = spin_gamma(mu, j);
        r.chamber = j;
        r.parity = ch[j].length % 2 ? -1 : 1;
        const Vec8 target = from_varpi(r.gamma) + tables().rho_c;
        for (std::size_t i = 0; i < ch.size(); ++i)
            if (images[i] == target) r.hp_chambers.push_back(static_cast<int>(i));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace dirac
