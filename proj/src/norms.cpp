#include "dirac/norms.hpp"

#include <algorithm>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "dirac/linalg.hpp"
#include "dirac/lp.hpp"
#include "dirac/parallel.hpp"

namespace dirac {

Eps to_eps(const Labels& l) {
    Eps e{};
    for (int k = 6; k >= 0; --k) e[k] = e[k + 1] + l[k];
    return e;
}

Labels from_eps(const Eps& e) {
    Labels l{};
    for (int k = 0; k < 7; ++k) l[k] = e[k] - e[k + 1];
    return l;
}

Rational eps_norm_sq(const Eps& e) {
    std::int64_t s = 0, s2 = 0;
    for (auto v : e) {
        s += v;
        s2 += v * v;
    }
    return Rational(8 * s2 - s * s, 8);
}

bool is_dominant(const Labels& l) {
    return std::all_of(l.begin(), l.end(), [](std::int64_t v) { return v >= 0; });
}

bool is_K_type(const Labels& l) { return ((l[0] + l[2] + l[4] + l[6]) % 2 + 2) % 2 == 0; }

Labels k_dominant(const Labels& l) {
    Eps e = to_eps(l);
    std::sort(e.begin(), e.end(), std::greater<>());
    return from_eps(e);
}

Rational norm_sq(const Labels& l) { return eps_norm_sq(to_eps(l)); }

namespace {

constexpr Eps kRhoC = {7, 6, 5, 4, 3, 2, 1, 0};

struct NormTables {
    std::vector<Eps> rho_n_eps;
    std::vector<std::array<Vec8, 7>> wz, wa;
    // 4 <varpi_k, w^(j) alpha_i>, integral
    std::vector<std::array<std::array<std::int64_t, 7>, 7>> adm4;
    struct Face {
        std::vector<int> idx;
        Matrix<Rational> inv;
    };
    std::array<Face, 128> faces;
    std::vector<std::vector<std::int64_t>> lp_a;  // 7 x 35 labels of positive noncompact roots
    std::vector<std::int64_t> lp_shift;          // labels of 2 rho_n^(0)
    std::vector<Labels> vertices;                // labels of 2 rho_n^(j)
};

const NormTables& nt() {
    static const NormTables t = [] {
        const auto& rt = tables();
        const auto& ch = chambers();
        NormTables n;
        for (const auto& c : ch) {
            n.rho_n_eps.push_back(to_eps(c.rho_n_varpi));
            std::array<Vec8, 7> z, a;
            std::array<std::array<std::int64_t, 7>, 7> adm{};
            for (int i = 0; i < 7; ++i) {
                z[i] = c.w.apply(rt.fw_g[i]);
                a[i] = c.w.apply(rt.simple_g[i]);
                for (int k = 0; k < 7; ++k) {
                    Rational v = Rational(4) * dot(rt.fw_k[k], a[i]);
                    if (!v.is_integer()) throw std::logic_error("admissibility table not integral");
                    adm[i][k] = v.num();
                }
            }
            n.wz.push_back(z);
            n.wa.push_back(a);
            n.adm4.push_back(adm);
            Labels v;
            for (int i = 0; i < 7; ++i) v[i] = 2 * c.rho_n_varpi[i];
            n.vertices.push_back(v);
        }
        for (unsigned s = 0; s < 128; ++s) {
            auto& f = n.faces[s];
            for (int i = 0; i < 7; ++i)
                if (s >> i & 1) f.idx.push_back(i);
            Matrix<Rational> g(f.idx.size(), std::vector<Rational>(f.idx.size()));
            for (std::size_t r = 0; r < f.idx.size(); ++r)
                for (std::size_t c = 0; c < f.idx.size(); ++c) g[r][c] = rt.gram_zeta[f.idx[r]][f.idx[c]];
            f.inv = f.idx.empty() ? g : inverse(g);
        }
        n.lp_a.assign(7, std::vector<std::int64_t>(rt.pos_p.size()));
        n.lp_shift.assign(7, 0);
        for (std::size_t j = 0; j < rt.pos_p.size(); ++j) {
            Labels l = varpi_labels(rt.pos_p[j]);
            for (int i = 0; i < 7; ++i) {
                n.lp_a[i][j] = l[i];
                n.lp_shift[i] += l[i];
            }
        }
        return n;
    }();
    return t;
}

Eps sorted_diff(const Eps& a, const Eps& b) {
    Eps e;
    for (int i = 0; i < 8; ++i) e[i] = a[i] - b[i];
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

}  // namespace

Rational spin_norm_sq_at(const Labels& mu, int j) {
    Eps e = sorted_diff(to_eps(mu), nt().rho_n_eps.at(j));
    for (int i = 0; i < 8; ++i) e[i] += kRhoC[i];
    return eps_norm_sq(e);
}

Labels spin_gamma(const Labels& mu, int j) { return from_eps(sorted_diff(to_eps(mu), nt().rho_n_eps.at(j))); }

SpinNorm spin_norm_sq(const Labels& mu) {
    const auto& t = nt();
    const Eps m = to_eps(mu);
    // Compare 8 * norm^2 as integers; the denominator is common.
    std::int64_t best = INT64_MAX;
    std::vector<int> arg;
    for (std::size_t j = 0; j < t.rho_n_eps.size(); ++j) {
        Eps e = sorted_diff(m, t.rho_n_eps[j]);
        std::int64_t s = 0, s2 = 0;
        for (int i = 0; i < 8; ++i) {
            std::int64_t v = e[i] + kRhoC[i];
            s += v;
            s2 += v * v;
        }
        std::int64_t n8 = 8 * s2 - s * s;
        if (n8 < best) {
            best = n8;
            arg.assign(1, static_cast<int>(j));
        } else if (n8 == best) {
            arg.push_back(static_cast<int>(j));
        }
    }
    return {Rational(best, 8), arg};
}

ConeProjection project_dominant_cone(const Vec8& xi, int j) {
    const auto& t = nt();
    const auto& g = tables().gram_zeta;
    const auto& z = t.wz.at(j);
    std::array<Rational, 7> b;
    for (int i = 0; i < 7; ++i) b[i] = dot(xi, z[i]);
    for (unsigned s = 0; s < 128; ++s) {
        const auto& f = t.faces[s];
        const std::size_t k = f.idx.size();
        std::array<Rational, 7> c{};
        bool ok = true;
        for (std::size_t r = 0; r < k && ok; ++r) {
            Rational v;
            for (std::size_t q = 0; q < k; ++q) v += f.inv[r][q] * b[f.idx[q]];
            if (v.sign() < 0) ok = false;
            c[f.idx[r]] = v;
        }
        if (!ok) continue;
        for (int i = 0; i < 7 && ok; ++i) {
            if (s >> i & 1) continue;
            Rational r = b[i];
            for (int q : f.idx) r -= c[q] * g[q][i];
            if (r.sign() > 0) ok = false;
        }
        if (!ok) continue;
        ConeProjection p;
        p.coeffs = c;
        for (int i = 0; i < 7; ++i)
            if (c[i].sign() > 0) {
                p.point = p.point + c[i] * z[i];
                p.face |= 1u << i;
            }
        return p;
    }
    throw std::logic_error("cone projection: no face satisfied the optimality conditions");
}

bool projection_certificate(const Vec8& xi, int j, const Vec8& p) {
    const auto& z = nt().wz.at(j);
    // p must lie in the cone: its coordinates along the generators are the
    // pairings with the dual basis w^(j) alpha_i.
    const auto& a = nt().wa.at(j);
    for (int i = 0; i < 7; ++i)
        if (dot(p, a[i]).sign() < 0) return false;
    Vec8 r = xi - p;
    for (int i = 0; i < 7; ++i)
        if (dot(r, z[i]).sign() > 0) return false;
    return dot(r, p).is_zero();
}

std::vector<int> admissible_chambers(const Labels& mu) {
    const auto& t = nt();
    Labels x;
    for (int i = 0; i < 7; ++i) x[i] = mu[i] + 2;
    std::vector<int> out;
    for (std::size_t j = 0; j < t.adm4.size(); ++j) {
        bool ok = true;
        for (int i = 0; i < 7 && ok; ++i) {
            std::int64_t s = 0;
            for (int k = 0; k < 7; ++k) s += x[k] * t.adm4[j][i][k];
            ok = s >= 0;
        }
        if (ok) out.push_back(static_cast<int>(j));
    }
    return out;
}

LambdaA lambda_a_at(const Labels& mu, int j) {
    const auto& rt = tables();
    const auto& ch = chambers().at(j);
    Vec8 xi = from_varpi(mu) + Rational(2) * rt.rho_c - ch.rho_j;
    ConeProjection p = project_dominant_cone(xi, j);
    return {p.point, dot(p.point, p.point), j};
}

LambdaA lambda_a(const Labels& mu) {
    auto adm = admissible_chambers(mu);
    if (adm.empty()) throw std::logic_error("no chamber contains mu + 2 rho_c");
    return lambda_a_at(mu, adm.front());
}

Labels prv_component(const Labels& mu, const Labels& nu) {
    Labels s;
    for (int i = 0; i < 7; ++i) s[i] = mu[i] - nu[6 - i];
    return k_dominant(s);
}

namespace {

using BigQ = boost::multiprecision::cpp_rational;

std::vector<std::int64_t> lp_rhs(const Labels& mu) {
    const auto& t = nt();
    std::vector<std::int64_t> b(7);
    for (int i = 0; i < 7; ++i) b[i] = mu[i] + t.lp_shift[i];
    return b;
}

// mu <= 2 rho_n^(j) in dominance order for some j: then mu lies in the
// convex hull of that orbit and hence in the zonotope.
bool dominated_by_vertex(const Labels& mu) {
    for (const auto& v : nt().vertices) {
        bool ok = true;
        for (int i = 1; i <= 7 && ok; ++i) {
            std::int64_t c = 0;
            for (int k = 1; k <= 7; ++k) c += std::min(i, k) * (8 - std::max(i, k)) * (v[k - 1] - mu[k - 1]);
            ok = c >= 0;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Rational>> usmall_witness(const Labels& mu) {
    auto x = box_feasible<Rational>(nt().lp_a, lp_rhs(mu), 2);
    if (!x) return std::nullopt;
    for (auto& v : *x) v -= 1;
    return x;
}

bool is_usmall(const Labels& mu) {
    if (is_dominant(mu) && dominated_by_vertex(mu)) return true;
    const auto& t = nt();
    const auto b = lp_rhs(mu);
    std::optional<bool> res;
    try {
        auto x = box_feasible<Rational>(t.lp_a, b, 2);
        if (x) {
            // Re-check the certificate exactly.
            for (int i = 0; i < 7; ++i) {
                Rational s;
                for (std::size_t j = 0; j < x->size(); ++j)
                    if (t.lp_a[i][j] != 0) s += Rational(t.lp_a[i][j]) * (*x)[j];
                if (s != Rational(b[i])) throw std::logic_error("u-small LP returned an infeasible point");
            }
        }
        res = x.has_value();
    } catch (const RationalOverflow&) {
        res = box_feasible<BigQ>(t.lp_a, b, 2).has_value();
    }
    return *res;
}

Rational usmall_support_varpi(int i) {
    const auto& rt = tables();
    Rational h;
    for (const auto& a : rt.pos_p) {
        Rational v = dot(a, rt.fw_k.at(i));
        h += v.sign() < 0 ? -v : v;
    }
    return h;
}

std::vector<Labels> usmall_candidates() {
    const auto& rt = tables();
    std::array<std::array<std::int64_t, 7>, 7> g8{};
    std::array<std::int64_t, 7> h8{};
    for (int i = 0; i < 7; ++i) {
        Rational h = Rational(8) * usmall_support_varpi(i);
        if (!h.is_integer()) throw std::logic_error("support value not in (1/8)Z");
        h8[i] = h.num();
        for (int k = 0; k < 7; ++k) {
            Rational v = Rational(8) * rt.gram_varpi[k][i];
            if (!v.is_integer() || v.sign() <= 0) throw std::logic_error("unexpected varpi Gram entry");
            g8[k][i] = v.num();
        }
    }
    std::vector<Labels> out;
    Labels a{};
    std::array<std::int64_t, 7> s{};
    std::function<void(int)> rec = [&](int k) {
        if (k == 7) {
            if (is_K_type(a)) out.push_back(a);
            return;
        }
        for (a[k] = 0;; ++a[k]) {
            bool fits = true;
            for (int i = 0; i < 7; ++i) fits = fits && s[i] + a[k] * g8[k][i] <= h8[i];
            if (!fits) break;
            for (int i = 0; i < 7; ++i) s[i] += a[k] * g8[k][i];
            rec(k + 1);
            for (int i = 0; i < 7; ++i) s[i] -= a[k] * g8[k][i];
        }
        a[k] = 0;
    };
    rec(0);
    return out;
}

std::vector<Labels> enumerate_usmall_ktypes(unsigned threads) {
    const auto cand = usmall_candidates();
    std::vector<char> keep(cand.size(), 0);
    nt();  // build shared tables before spawning workers
    parallel_for(cand.size(), threads, [&](std::size_t i) { keep[i] = is_usmall(cand[i]); });
    std::vector<Labels> out;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (keep[i]) out.push_back(cand[i]);
    return out;
}

NormReport norm_report(const Labels& mu) {
    NormReport r;
    r.mu = mu;
    r.lambda = lambda_a(mu);
    r.spin = spin_norm_sq(mu);
    r.usmall = is_usmall(mu);
    return r;
}

}  // namespace dirac
