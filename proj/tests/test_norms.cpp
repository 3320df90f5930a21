#include <doctest.h>

#include <algorithm>
#include <random>

#include "dirac/linalg.hpp"
#include "dirac/norms.hpp"

using namespace dirac;

namespace {

Labels random_ktype(std::mt19937_64& rng, int hi) {
    std::uniform_int_distribution<std::int64_t> d(0, hi);
    for (;;) {
        Labels l;
        for (auto& x : l) x = d(rng);
        if (is_K_type(l)) return l;
    }
}

Vec8 random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-40, 40);
    Vec8 v;
    for (int i = 0; i < 6; ++i) v[i] = Rational(d(rng), 4);
    Rational s(d(rng), 4);
    v[6] = -s;
    v[7] = s;
    return v;
}

// min_j || dom_k(mu - rho_n^(j)) + rho_c ||^2 computed in ambient coordinates.
Rational spin_oracle(const Labels& mu) {
    const auto& t = tables();
    std::optional<Rational> best;
    for (const auto& c : chambers()) {
        Vec8 x = from_varpi(mu) - c.rho_n_j;
        Vec8 d = dominant_representative(Weight::ambient(x), DominantSystem::k()).weight.as_vec8() + t.rho_c;
        Rational n = dot(d, d);
        if (!best || n < *best) best = n;
    }
    return *best;
}

// Nearest point of cone{g_i} to xi by trying every face.
Vec8 brute_projection(const Vec8& xi, const std::array<Vec8, 7>& gen) {
    std::optional<Rational> best;
    Vec8 arg{};
    for (unsigned mask = 0; mask < 128; ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < 7; ++i)
            if (mask >> i & 1) idx.push_back(i);
        Vec8 p{};
        if (!idx.empty()) {
            const std::size_t n = idx.size();
            Matrix<Rational> g(n, std::vector<Rational>(n));
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) g[a][b] = dot(gen[idx[a]], gen[idx[b]]);
            Matrix<Rational> gi = inverse(g);
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) {
                Rational c;
                for (std::size_t b = 0; b < n; ++b) c += gi[a][b] * dot(gen[idx[b]], xi);
                if (c.sign() < 0) ok = false;
                p = p + c * gen[idx[a]];
            }
            if (!ok) continue;
        }
        Vec8 r = xi - p;
        Rational d = dot(r, r);
        if (!best || d < *best) {
            best = d;
            arg = p;
        }
    }
    return arg;
}

}  // namespace

TEST_CASE("epsilon coordinates") {
    Labels l = {1, 2, 3, 4, 5, 6, 7};
    CHECK(from_eps(to_eps(l)) == l);
    CHECK(norm_sq(Labels{1, 1, 1, 1, 1, 1, 1}) == Rational(42));
    CHECK(norm_sq(Labels{0, 0, 0, 1, 0, 0, 0}) == dot(from_varpi({0, 0, 0, 1, 0, 0, 0}), from_varpi({0, 0, 0, 1, 0, 0, 0})));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        Labels m = random_ktype(rng, 9);
        CHECK(norm_sq(m) == dot(from_varpi(m), from_varpi(m)));
    }
}

TEST_CASE("K-type parity rule") {
    CHECK(is_K_type({0, 1, 0, 1, 0, 0, 8}));
    CHECK_FALSE(is_K_type({1, 0, 0, 0, 0, 0, 0}));
    CHECK(is_K_type({0, 0, 0, 1, 0, 0, 0}));
}

TEST_CASE("spin norms of the multiplicity-two neighbourhood") {
    const std::vector<Labels> ks = {{0, 0, 0, 0, 1, 0, 7}, {0, 1, 0, 0, 0, 0, 8}, {0, 0, 1, 0, 0, 1, 7},
                                    {0, 0, 0, 1, 1, 0, 7}, {1, 0, 0, 0, 1, 0, 8}, {1, 0, 0, 0, 0, 2, 7},
                                    {0, 1, 0, 1, 0, 0, 8}, {1, 1, 0, 0, 0, 0, 9}, {0, 0, 0, 1, 0, 1, 8},
                                    {0, 1, 0, 0, 1, 1, 7}, {1, 0, 0, 0, 0, 1, 9}, {0, 0, 0, 0, 1, 2, 7}};
    const std::vector<int> want = {68, 58, 58, 58, 58, 68, 42, 58, 58, 58, 58, 74};
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(spin_norm_sq(ks[i]).value == Rational(want[i]));

    // The same K-types as printed by atlas, before the coordinate shift.
    const std::vector<std::array<std::int64_t, 7>> atlas = {
        {0, 3, 0, 0, 0, 1, 0}, {0, 3, 1, 0, 0, 0, 0}, {0, 2, 0, 1, 0, 0, 1}, {0, 2, 0, 0, 1, 1, 0},
        {1, 3, 0, 0, 0, 1, 0}, {1, 3, 0, 0, 0, 0, 2}, {0, 2, 1, 0, 1, 0, 0}, {1, 3, 1, 0, 0, 0, 0},
        {0, 3, 0, 0, 1, 0, 1}, {0, 2, 1, 0, 0, 1, 1}, {1, 4, 0, 0, 0, 0, 1}, {0, 3, 0, 0, 0, 1, 2}};
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(atlas_k_shift(atlas[i]) == ks[i]);
}

TEST_CASE("spin norm agrees with the ambient definition") {
    CHECK(spin_norm_sq(Labels{}).value == Rational(399, 2));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 150; ++i) {
        Labels mu = random_ktype(rng, 12);
        SpinNorm s = spin_norm_sq(mu);
        CHECK(s.value == spin_oracle(mu));
        for (int j : s.chambers) CHECK(spin_norm_sq_at(mu, j) == s.value);
    }
}

TEST_CASE("cone projection satisfies KKT on random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> ch(0, 71);
    const auto& t = tables();
    for (int it = 0; it < 1000; ++it) {
        const int j = ch(rng);
        const Vec8 xi = random_vec(rng);
        ConeProjection p = project_dominant_cone(xi, j);
        std::array<Vec8, 7> gen;
        for (int i = 0; i < 7; ++i) gen[i] = chambers()[j].w.apply(t.fw_g[i]);
        Vec8 sum{};
        for (int i = 0; i < 7; ++i) {
            CHECK(p.coeffs[i].sign() >= 0);
            sum = sum + p.coeffs[i] * gen[i];
        }
        CHECK(sum == p.point);
        const Vec8 r = xi - p.point;
        for (const auto& g : gen) CHECK(dot(r, g).sign() <= 0);
        CHECK(dot(r, p.point).is_zero());
        CHECK(projection_certificate(xi, j, p.point));
    }
}

TEST_CASE("cone projection matches exhaustive face search") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> ch(0, 71);
    const auto& t = tables();
    for (int it = 0; it < 40; ++it) {
        const int j = ch(rng);
        const Vec8 xi = random_vec(rng);
        std::array<Vec8, 7> gen;
        for (int i = 0; i < 7; ++i) gen[i] = chambers()[j].w.apply(t.fw_g[i]);
        CHECK(project_dominant_cone(xi, j).point == brute_projection(xi, gen));
    }
    Vec8 inside = chambers()[5].rho_j;
    CHECK(project_dominant_cone(inside, 5).point == inside);
    CHECK_FALSE(projection_certificate(inside, 5, Vec8{}));
}

TEST_CASE("lambda_a does not depend on the admissible chamber") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 1000; ++it) {
        Labels mu = random_ktype(rng, 10);
        auto adm = admissible_chambers(mu);
        REQUIRE_FALSE(adm.empty());
        LambdaA first = lambda_a_at(mu, adm.front());
        CHECK(first.norm_sq == lambda_norm_sq(mu));
        CHECK(first.norm_sq.sign() >= 0);
        for (int j : adm) {
            LambdaA other = lambda_a_at(mu, j);
            CHECK(other.value == first.value);
        }
    }
}

TEST_CASE("lambda_a of the trivial K-type") {
    LambdaA l = lambda_a(Labels{});
    CHECK(l.norm_sq == Rational(0));
    // |Lambda|^2 = |lambda_a|^2 + |nu|^2 with nu = rho for the trivial representation.
    CHECK(dot(tables().rho, tables().rho) - l.norm_sq == Rational(399, 2));
}

TEST_CASE("PRV component") {
    CHECK(prv_component({1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1}) == Labels{});
    CHECK(prv_component({0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0}) == Labels{});
    CHECK(prv_component({2, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}) == Labels{1, 1, 0, 0, 0, 0, 0});
    CHECK(prv_component({0, 1, 0, 0, 0, 0, 3}, Labels{}) == Labels{0, 1, 0, 0, 0, 0, 3});
}

TEST_CASE("u-small zonotope") {
    const Rational h[7] = {Rational(35, 2), 15, Rational(45, 2), 18, Rational(45, 2), 15, Rational(35, 2)};
    for (int i = 0; i < 7; ++i) CHECK(usmall_support_varpi(i) == h[i]);

    CHECK(is_usmall(Labels{}));
    CHECK(is_usmall({0, 0, 0, 0, 0, 0, 20}));
    CHECK_FALSE(is_usmall({0, 0, 0, 0, 0, 0, 22}));

    const auto& t = tables();
    for (const auto& c : chambers()) {
        Labels v = c.rho_n_varpi;
        for (auto& x : v) x *= 2;
        CHECK(is_usmall(v));
        // Past the vertex along beta: the support function in direction rho^(j) rules it out.
        v[3] += 2;
        Rational support;
        for (const auto& a : t.pos_p) {
            Rational s = dot(a, c.rho_j);
            support += s.sign() < 0 ? -s : s;
        }
        CHECK(dot(from_varpi(v), c.rho_j) > support);
        CHECK_FALSE(is_usmall(v));
    }
}

TEST_CASE("u-small witnesses are exact") {
    std::mt19937_64 rng(6);
    const auto& t = tables();
    int inside = 0;
    for (int it = 0; it < 120; ++it) {
        Labels mu = random_ktype(rng, 7);
        auto w = usmall_witness(mu);
        CHECK(w.has_value() == is_usmall(mu));
        if (!w) continue;
        ++inside;
        REQUIRE(w->size() == t.pos_p.size());
        Vec8 s{};
        for (std::size_t k = 0; k < w->size(); ++k) {
            CHECK((*w)[k] >= Rational(-1));
            CHECK((*w)[k] <= Rational(1));
            s = s + (*w)[k] * t.pos_p[k];
        }
        CHECK(s == from_varpi(mu));
    }
    CHECK(inside >= 10);
}

TEST_CASE("u-smallness is W(k)-invariant") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 60; ++it) {
        Labels mu = random_ktype(rng, 8);
        Eps e = to_eps(mu);
        std::shuffle(e.begin(), e.end(), rng);
        Labels moved = from_eps(e);
        CHECK(k_dominant(moved) == mu);
        CHECK(is_usmall(moved) == is_usmall(mu));
    }
}

TEST_CASE("u-small candidate box") {
    auto c = usmall_candidates();
    CHECK(c.size() == 115101);
    CHECK(std::is_sorted(c.begin(), c.end()));
    for (const auto& mu : c) {
        CHECK(is_K_type(mu));
        CHECK(is_dominant(mu));
    }
}

TEST_CASE("norm report") {
    NormReport r = norm_report({0, 1, 0, 1, 0, 0, 8});
    CHECK(r.spin.value == Rational(42));
    CHECK(r.usmall);
    CHECK(r.lambda.norm_sq == lambda_norm_sq({0, 1, 0, 1, 0, 0, 8}));
}
