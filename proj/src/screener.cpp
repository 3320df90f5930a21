#include "dirac/screener.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dirac/parallel.hpp"

namespace dirac {

InfChar inf_char(const IntVec7& v) { return InfChar(v.begin(), v.end()); }

bool is_integral(const InfChar& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

std::string status_name(ScreenStatus s) {
    switch (s) {
        case ScreenStatus::PassesEquality: return "PassesEquality";
        case ScreenStatus::PassesStrict: return "PassesStrict";
        case ScreenStatus::FailsDiracInequality: return "FailsDiracInequality";
        case ScreenStatus::FailsHJBound: return "FailsHJBound";
        case ScreenStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Rational nu_norm_sq(const InfChar& nu) { return zeta_norm_sq(nu); }

ScreenVerdict dirac_inequality_check(const Labels& mu, const InfChar& lambda) {
    const Rational s = spin_norm_sq(mu).value;
    const Rational l = nu_norm_sq(lambda);
    if (s == l) return {ScreenStatus::PassesEquality, std::nullopt};
    if (s > l) return {ScreenStatus::PassesStrict, std::nullopt};
    return {ScreenStatus::FailsDiracInequality, ScreenWitness{mu, 0, s}};
}

namespace {

Labels pencil_point(Labels mu, int n) {
    for (int i = 0; i < 7; ++i) mu[i] += n * kBeta[i];
    return mu;
}

}  // namespace

PencilResult pencil_min_spin(const Labels& mu, const InfChar& lambda, int cap) {
    if (cap < 0) throw std::invalid_argument("pencil cap must be non-negative");
    const Rational target = nu_norm_sq(lambda);
    PencilResult r;
    for (int n = 0; n <= cap; ++n) {
        Rational s = spin_norm_sq(pencil_point(mu, n)).value;
        r.profile.push_back(s);
        if (n == 0 || s < r.min_spin) {
            r.min_spin = s;
            r.n_star = n;
        } else if (s > r.min_spin && s > target) {
            r.conclusive = true;
            break;
        }
    }
    return r;
}

void validate_involutions(const std::vector<InvolutionMatrix>& list) {
    for (std::size_t k = 0; k < list.size(); ++k) {
        const Mat8& m = list[k].matrix;
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                Rational sq, orth;
                for (int i = 0; i < 8; ++i) {
                    sq += m[r][i] * m[i][c];
                    orth += m[i][r] * m[i][c];
                }
                const Rational id = r == c ? Rational(1) : Rational(0);
                if (sq != id) throw InvalidInvolution(k, "matrix does not square to the identity");
                if (orth != id) throw InvalidInvolution(k, "matrix does not preserve the form");
            }
        WeylElement w;
        w.matrix = m;
        try {
            weyl_length(w);
        } catch (const std::invalid_argument&) {
            throw InvalidInvolution(k, "matrix does not permute the roots");
        }
    }
}

InvolutionSet::InvolutionSet(const std::vector<InvolutionMatrix>& list) : size_(list.size()) {
    validate_involutions(list);
    const auto& t = tables();
    // Candidates keyed by the positive roots negated by theta; a form whose
    // key contains another key is dominated and dropped.
    std::map<std::uint64_t, std::array<std::array<std::int64_t, 7>, 7>> by_key;
    for (const auto& inv : list) {
        WeylElement w;
        w.matrix = inv.matrix;
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < t.pos_g.size(); ++i)
            if (w.apply(t.pos_g[i]) == Rational(-1) * t.pos_g[i]) key |= std::uint64_t{1} << i;
        if (by_key.count(key)) continue;
        std::array<Vec8, 7> u;
        for (int i = 0; i < 7; ++i) u[i] = t.fw_g[i] - w.apply(t.fw_g[i]);
        std::array<std::array<std::int64_t, 7>, 7> m{};
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                Rational d = dot(u[i], u[j]);
                if (!d.is_integer()) throw std::logic_error("involution form is not integral");
                m[i][j] = d.num();
            }
        by_key.emplace(key, m);
    }
    for (const auto& [key, m] : by_key) {
        bool dominated = false;
        for (const auto& [other, unused] : by_key)
            if (other != key && (other & key) == other) {
                dominated = true;
                break;
            }
        if (!dominated) forms_.push_back(m);
    }
}

Rational InvolutionSet::min_nu_norm_sq(const InfChar& lambda) const {
    if (lambda.size() != 7) throw std::invalid_argument("expected 7 zeta coordinates");
    if (forms_.empty()) throw std::invalid_argument("empty involution set");
    std::optional<Rational> best;
    for (const auto& m : forms_) {
        Rational q;
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (m[i][j] != 0) q += lambda[i] * lambda[j] * Rational(m[i][j]);
        q = q / Rational(4);
        if (!best || q < *best) best = q;
    }
    return *best;
}

bool InvolutionSet::admits(const InfChar& lambda, NuBoundary b) const {
    if (forms_.empty()) return false;
    Rational q = min_nu_norm_sq(lambda);
    return b == NuBoundary::Strict ? q < kNuBound : q <= kNuBound;
}

bool InvolutionSet::admits(const IntVec7& v, NuBoundary b) const {
    // 4 * 157/2, shifted so that the test is always q <= bound
    const std::int64_t bound = b == NuBoundary::Strict ? 313 : 314;
    for (const auto& m : forms_) {
        std::int64_t q = 0;
        for (int i = 0; i < 7 && q <= bound; ++i) {
            if (v[i] == 0) continue;
            std::int64_t row = 0;
            for (int j = 0; j < 7; ++j) row += m[i][j] * v[j];
            q += v[i] * row;
        }
        if (q <= bound) return true;
    }
    return false;
}

namespace {

WeylElement root_reflection(const Vec8& a) {
    WeylElement e = WeylElement::identity();
    e.word.clear();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) e.matrix[r][c] -= a[r] * a[c];
    return e;
}

// Every involution of W(g) as a product of reflections in mutually
// orthogonal positive roots, deduplicated by matrix.
std::vector<WeylElement> weyl_involutions() {
    const auto& pos = tables().pos_g;
    const std::size_t n = pos.size();
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) orth[i][j] = dot(pos[i], pos[j]).is_zero();
    std::vector<WeylElement> refl;
    for (const auto& r : pos) refl.push_back(root_reflection(r));

    std::set<Mat8> seen;
    std::vector<WeylElement> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start, const WeylElement& w) -> void {
        if (seen.insert(w.matrix).second) out.push_back(w);
        for (std::size_t j = start; j < n; ++j) {
            bool ok = std::all_of(cur.begin(), cur.end(), [&](std::size_t i) { return orth[i][j]; });
            if (!ok) continue;
            cur.push_back(j);
            self(self, j + 1, w * refl[j]);
            cur.pop_back();
        }
    };
    rec(rec, 0, WeylElement::identity());
    return out;
}

}  // namespace

std::size_t weyl_involution_count() { return weyl_involutions().size(); }

std::vector<InvolutionMatrix> fully_supported_involutions() {
    const auto& t = tables();
    std::vector<InvolutionMatrix> out;
    for (const auto& w : weyl_involutions()) {
        // s_i lies in the support of w exactly when w moves zeta_i.
        bool full = true;
        for (int i = 0; i < 7 && full; ++i) full = w.apply(t.fw_g[i]) != t.fw_g[i];
        if (full) out.push_back({w.matrix, "weyl-involution"});
    }
    return out;
}

bool hj_filter(const InfChar& lambda, const InvolutionSet* involutions, NuBoundary b) {
    if (lambda.size() != 7) throw std::invalid_argument("expected 7 zeta coordinates");
    if (!involutions) return true;
    return involutions->admits(lambda, b);
}

bool phi_coefficient_conditions(const IntVec7& v) {
    const auto [a, b, c, d, e, f, g] = v;
    if (*std::min_element(v.begin(), v.end()) != 0) return false;
    return a + c > 0 && b + d > 0 && c + d > 0 && d + e > 0 && e + f > 0 && f + g > 0;
}

namespace {

// Calls f on every v in [0, max_coord]^7 that the involution set admits.
// Admissibility is monotone in each coordinate (the forms have non-negative
// entries), so a rejected prefix ends its loop.
template <class F>
void walk_admitted(int max_coord, const InvolutionSet& inv, NuBoundary b, F&& f) {
    IntVec7 v{};
    auto rec = [&](auto&& self, int d) -> void {
        if (d == 7) {
            f(v);
            return;
        }
        for (int x = 0; x <= max_coord; ++x) {
            v[d] = x;
            if (!inv.admits(v, b)) break;
            self(self, d + 1);
        }
        v[d] = 0;
    };
    rec(rec, 0);
}

template <class F>
void walk_box(int max_coord, F&& f) {
    IntVec7 v{};
    auto rec = [&](auto&& self, int d) -> void {
        if (d == 7) {
            f(v);
            return;
        }
        for (int x = 0; x <= max_coord; ++x) {
            v[d] = x;
            self(self, d + 1);
        }
        v[d] = 0;
    };
    rec(rec, 0);
}

template <class F>
void walk(int max_coord, const InvolutionSet* inv, NuBoundary b, F&& f) {
    if (inv)
        walk_admitted(max_coord, *inv, b, f);
    else
        walk_box(max_coord, f);
}

}  // namespace

std::vector<IntVec7> enumerate_inf_chars(int max_coord, const InvolutionSet* involutions, NuBoundary b) {
    if (max_coord < 1) throw std::invalid_argument("max_coord must be at least 1");
    std::vector<IntVec7> out;
    walk(max_coord, involutions, b, [&](const IntVec7& v) {
        if (*std::max_element(v.begin(), v.end()) == max_coord && phi_coefficient_conditions(v)) out.push_back(v);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> phi_counts(int max_coord, const InvolutionSet* involutions, NuBoundary b) {
    if (max_coord < 1) throw std::invalid_argument("max_coord must be at least 1");
    std::vector<std::size_t> counts(max_coord, 0);
    walk(max_coord, involutions, b, [&](const IntVec7& v) {
        if (phi_coefficient_conditions(v)) ++counts[*std::max_element(v.begin(), v.end()) - 1];
    });
    return counts;
}

bool lemma_vanishing_check(const InfChar& lambda) {
    const Vec8 x = from_zeta(lambda);
    const auto& t = tables();
    for (const auto& c : chambers()) {
        const Vec8 y = c.w.apply(x);
        bool zero = false;
        for (int i = 0; i < 7 && !zero; ++i) zero = dot(y, t.simple_k[i]).is_zero();
        if (!zero) return false;
    }
    return true;
}

std::vector<CertsMember> certs_from(const std::vector<Labels>& ktypes, unsigned threads) {
    std::vector<std::optional<CertsMember>> slot(ktypes.size());
    parallel_for(ktypes.size(), threads, [&](std::size_t i) {
        Rational s = spin_norm_sq(ktypes[i]).value;
        Rational l = lambda_norm_sq(ktypes[i]);
        if (s - l >= kNuBound) slot[i] = CertsMember{ktypes[i], s, l};
    });
    std::vector<CertsMember> out;
    for (auto& m : slot)
        if (m) out.push_back(*m);
    return out;
}

std::vector<CertsMember> certs_census(unsigned threads) { return certs_from(enumerate_usmall_ktypes(threads), threads); }

ScreenVerdict screen(const Labels& mu, const InfChar& lambda, const InvolutionSet* involutions, int pencil_cap,
                     NuBoundary b) {
    if (!is_dominant(mu) || !is_K_type(mu)) throw std::invalid_argument("not a K-type");
    if (!hj_filter(lambda, involutions, b)) return {ScreenStatus::FailsHJBound, std::nullopt};
    const Rational target = nu_norm_sq(lambda);
    PencilResult p = pencil_min_spin(mu, lambda, pencil_cap);
    if (p.min_spin < target)
        return {ScreenStatus::FailsDiracInequality, ScreenWitness{pencil_point(mu, p.n_star), p.n_star, p.min_spin}};
    if (!p.conclusive) return {ScreenStatus::Inconclusive, std::nullopt};
    return dirac_inequality_check(mu, lambda);
}

}  // namespace dirac
