#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dirac/json_io.hpp"
#include "dirac/screener.hpp"

using namespace dirac;

namespace {

const std::vector<IntVec7> kPhi1 = {
    {0, 0, 1, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 1, 1, 0}, {0, 0, 1, 1, 1, 1, 1},
    {0, 1, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 1, 1, 1}, {0, 1, 1, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 1, 1},
    {0, 1, 1, 1, 1, 0, 1}, {0, 1, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 1, 1},
    {1, 0, 0, 1, 1, 0, 1}, {1, 0, 0, 1, 1, 1, 0}, {1, 0, 0, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 0}, {1, 0, 1, 1, 0, 1, 1},
    {1, 0, 1, 1, 1, 0, 1}, {1, 0, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 1, 1}, {1, 1, 0, 1, 0, 1, 0}, {1, 1, 0, 1, 0, 1, 1},
    {1, 1, 0, 1, 1, 0, 1}, {1, 1, 0, 1, 1, 1, 0}, {1, 1, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 0, 1, 1, 0},
    {1, 1, 1, 0, 1, 1, 1}, {1, 1, 1, 1, 0, 1, 0}, {1, 1, 1, 1, 0, 1, 1}, {1, 1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 0}};

InfChar q(std::initializer_list<Rational> l) { return InfChar(l); }

// ||(Lambda - theta Lambda)/2||^2 evaluated directly.
Rational direct_nu(const InfChar& lambda, const Mat8& theta) {
    Vec8 x = from_zeta(lambda);
    Vec8 t{};
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) t[r] += theta[r][c] * x[c];
    Vec8 nu = Rational(1, 2) * (x - t);
    return dot(nu, nu);
}

const std::vector<InvolutionMatrix>& derived() {
    static const auto list = fully_supported_involutions();
    return list;
}

}  // namespace

TEST_CASE("infinitesimal characters") {
    CHECK(is_integral(inf_char({1, 0, 0, 1, 0, 1, 0})));
    CHECK_FALSE(is_integral(q({1, Rational(1, 2), 0, 0, 0, 0, 0})));
    CHECK_FALSE(is_integral(q({-1, 0, 0, 0, 0, 0, 0})));
    CHECK(zeta_norm_sq(inf_char({1, 0, 0, 1, 0, 1, 0})) == Rational(42));
    CHECK(zeta_norm_sq(inf_char({1, 1, 1, 1, 1, 1, 1})) == Rational(399, 2));
}

TEST_CASE("Dirac inequality") {
    const InfChar lam = inf_char({1, 0, 0, 1, 0, 1, 0});
    CHECK(dirac_inequality_check({0, 1, 0, 1, 0, 0, 8}, lam).status == ScreenStatus::PassesEquality);
    CHECK(dirac_inequality_check({0, 0, 0, 0, 1, 2, 7}, lam).status == ScreenStatus::PassesStrict);
    CHECK(dirac_inequality_check(Labels{}, inf_char({1, 1, 1, 1, 1, 1, 1})).status == ScreenStatus::PassesEquality);
    auto f = dirac_inequality_check({0, 1, 0, 1, 0, 0, 8}, inf_char({1, 1, 1, 1, 1, 1, 1}));
    CHECK(f.status == ScreenStatus::FailsDiracInequality);
    REQUIRE(f.witness);
    CHECK(f.witness->spin_norm_sq == Rational(42));
    CHECK(f.witness->spin_norm_sq < Rational(399, 2));
}

TEST_CASE("pencil through the minimal representation") {
    const InfChar lam = inf_char({1, 1, 1, 0, 1, 1, 1});
    const Rational target(231, 2);
    auto p = pencil_min_spin(Labels{}, lam, 10);
    CHECK(p.conclusive);
    CHECK(p.min_spin == target);
    std::vector<int> eq;
    for (std::size_t n = 0; n < p.profile.size(); ++n)
        if (p.profile[n] == target) eq.push_back(static_cast<int>(n));
    // Frozen: equality on n = 3..6 (see the acceptance notes).
    CHECK(eq == std::vector<int>{3, 4, 5, 6});
    CHECK(p.profile.front() == Rational(399, 2));
    CHECK(p.n_star == 3);

    auto z = pencil_min_spin(Labels{}, lam, 0);
    CHECK(z.n_star == 0);
    CHECK(z.profile.size() == 1);
    CHECK_FALSE(z.conclusive);

    CHECK_THROWS_AS(pencil_min_spin(Labels{}, lam, -1), std::invalid_argument);
}

TEST_CASE("pencil early stop matches a full scan") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> d(0, 6);
    const std::vector<InfChar> lams = {inf_char({1, 0, 0, 1, 0, 1, 0}), inf_char({1, 1, 1, 0, 1, 1, 1}),
                                       inf_char({0, 1, 1, 0, 1, 1, 1})};
    int tested = 0;
    while (tested < 60) {
        Labels mu;
        for (auto& x : mu) x = d(rng);
        if (!is_K_type(mu)) continue;
        ++tested;
        const InfChar& lam = lams[tested % lams.size()];
        auto p = pencil_min_spin(mu, lam, 40);
        REQUIRE(p.conclusive);
        Rational best;
        int arg = -1;
        for (int n = 0; n <= 40; ++n) {
            Labels m = mu;
            m[3] += n;
            Rational s = spin_norm_sq(m).value;
            if (static_cast<std::size_t>(n) < p.profile.size()) CHECK(p.profile[n] == s);
            if (arg < 0 || s < best) best = s, arg = n;
        }
        CHECK(p.min_spin == best);
        CHECK(p.n_star == arg);
    }
}

TEST_CASE("nu norms") {
    CHECK(nu_norm_sq(q({1, 1, 1, 0, 1, 1, 1})) == Rational(231, 2));
    CHECK(nu_norm_sq(q({1, 1, 1, 0, 1, 0, 1})) == Rational(159, 2));
    CHECK(nu_norm_sq(q({1, 1, 1, 1, 1, 1, 1})) == Rational(399, 2));
    CHECK(nu_norm_sq(q({0, 0, 0, 0, 0, 0, 0})) == Rational(0));
    const Rational h(1, 2);
    CHECK(nu_norm_sq(q({-3 * h, 1, 5 * h, -3 * h, 5 * h, -3 * h, 5 * h})) == Rational(55));
}

TEST_CASE("Phi_1 coefficient conditions") {
    std::vector<IntVec7> brute;
    for (int m = 0; m < 128; ++m) {
        IntVec7 v;
        for (int i = 0; i < 7; ++i) v[i] = m >> (6 - i) & 1;
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        if (*hi != 1 || *lo != 0) continue;
        if (v[0] + v[2] > 0 && v[1] + v[3] > 0 && v[2] + v[3] > 0 && v[3] + v[4] > 0 && v[4] + v[5] > 0 && v[5] + v[6] > 0)
            brute.push_back(v);
    }
    CHECK(brute == kPhi1);
    CHECK(enumerate_inf_chars(1, nullptr) == kPhi1);
    CHECK_FALSE(phi_coefficient_conditions({1, 1, 1, 1, 1, 1, 1}));
    CHECK_FALSE(phi_coefficient_conditions({0, 1, 0, 1, 1, 1, 1}));
    for (const auto& v : enumerate_inf_chars(2, nullptr)) {
        CHECK(phi_coefficient_conditions(v));
        CHECK(*std::max_element(v.begin(), v.end()) == 2);
    }
}

TEST_CASE("vanishing lemma") {
    CHECK(lemma_vanishing_check(inf_char({0, 1, 0, 1, 1, 1, 1})));
    CHECK(lemma_vanishing_check(inf_char({0, 0, 0, 0, 0, 0, 0})));
    CHECK_FALSE(lemma_vanishing_check(inf_char({1, 1, 1, 1, 1, 1, 1})));
    // Each failed pair condition forces a vanishing coordinate.
    for (const IntVec7& v : {IntVec7{0, 1, 0, 2, 1, 1, 3}, IntVec7{1, 0, 1, 0, 2, 1, 1}, IntVec7{2, 1, 0, 0, 1, 1, 1},
                             IntVec7{1, 1, 1, 0, 0, 2, 1}, IntVec7{1, 2, 1, 1, 0, 0, 1}, IntVec7{3, 1, 1, 1, 1, 0, 0}})
        CHECK(lemma_vanishing_check(inf_char(v)));
}

TEST_CASE("involution validation") {
    InvolutionMatrix id{WeylElement::identity().matrix, "identity"};
    InvolutionMatrix minus = id;
    for (int i = 0; i < 8; ++i) minus.matrix[i][i] = -1;
    CHECK_NOTHROW(validate_involutions({id, minus}));

    InvolutionMatrix twice = id;
    for (int i = 0; i < 8; ++i) twice.matrix[i][i] = 2;
    InvolutionMatrix rot{(WeylElement::reflection(1) * WeylElement::reflection(3)).matrix, "s1 s3"};
    InvolutionMatrix ok{(WeylElement::reflection(2) * WeylElement::reflection(5)).matrix, "s2 s5"};
    CHECK_NOTHROW(validate_involutions({ok}));
    try {
        validate_involutions({id, ok, rot});
        FAIL("expected rejection");
    } catch (const InvalidInvolution& e) {
        CHECK(e.index == 2);
    }
    try {
        validate_involutions({twice});
        FAIL("expected rejection");
    } catch (const InvalidInvolution& e) {
        CHECK(e.index == 0);
    }
    CHECK_THROWS_AS(InvolutionSet({id, twice}), InvalidInvolution);
}

TEST_CASE("involution files") {
    InvolutionMatrix minus{WeylElement::identity().matrix, "w0"};
    for (int i = 0; i < 8; ++i) minus.matrix[i][i] = -1;
    Json doc = involutions_json({minus});
    auto back = parse_involutions(doc);
    REQUIRE(back.size() == 1);
    CHECK(back[0].matrix == minus.matrix);
    CHECK(back[0].tag == "w0");

    doc[0]["matrix"][3][3] = "1/2";
    try {
        parse_involutions(Json::array({involutions_json({minus})[0], doc[0]}));
        FAIL("expected rejection");
    } catch (const InvalidInvolution& e) {
        CHECK(e.index == 1);
    }
    CHECK_THROWS_AS(parse_involutions(Json::object()), std::invalid_argument);
    Json bad = Json::array({{{"matrix", Json::array({1, 2})}}});
    CHECK_THROWS_AS(parse_involutions(bad), InvalidInvolution);
}

TEST_CASE("involution sets") {
    InvolutionMatrix id{WeylElement::identity().matrix, "identity"};
    InvolutionSet trivial({id});
    CHECK(trivial.min_nu_norm_sq(inf_char({1, 1, 1, 1, 1, 1, 1})) == Rational(0));
    CHECK(hj_filter(inf_char({5, 5, 5, 5, 5, 5, 5}), &trivial));

    InvolutionMatrix minus = id;
    for (int i = 0; i < 8; ++i) minus.matrix[i][i] = -1;
    InvolutionSet w0({minus});
    CHECK(w0.min_nu_norm_sq(inf_char({1, 1, 1, 0, 1, 0, 1})) == Rational(159, 2));
    CHECK_FALSE(w0.admits(inf_char({1, 1, 1, 0, 1, 0, 1})));
    CHECK_FALSE(w0.admits(inf_char({1, 1, 1, 0, 1, 0, 1}), NuBoundary::Inclusive));
    CHECK(w0.admits(inf_char({1, 0, 0, 1, 0, 1, 0})));
}

TEST_CASE("fallback filter always passes") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::int64_t> d(0, 12);
    for (int i = 0; i < 100; ++i) {
        IntVec7 v;
        for (auto& x : v) x = d(rng);
        CHECK(hj_filter(inf_char(v), nullptr));
        CHECK(hj_filter(inf_char(v), nullptr, NuBoundary::Inclusive));
    }
}

TEST_CASE("derived involutions") {
    CHECK(weyl_involution_count() == 10208);
    const auto& list = derived();
    CHECK(list.size() == 8479);
    CHECK_NOTHROW(validate_involutions(list));
    // Every derived involution moves every zeta_i.
    for (std::size_t k = 0; k < list.size(); k += 97)
        for (int i = 0; i < 7; ++i) {
            Vec8 z = tables().fw_g[i], t{};
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c) t[r] += list[k].matrix[r][c] * z[c];
            CHECK(t != z);
        }
}

TEST_CASE("minimal nu over an involution set") {
    const auto& list = derived();
    InvolutionSet set(list);
    CHECK(set.size() == list.size());
    CHECK(set.forms() <= list.size());
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> d(0, 4);
    for (int it = 0; it < 25; ++it) {
        IntVec7 v;
        for (auto& x : v) x = d(rng);
        const InfChar lam = inf_char(v);
        Rational best = direct_nu(lam, list[0].matrix);
        for (const auto& inv : list) best = std::min(best, direct_nu(lam, inv.matrix));
        CHECK(set.min_nu_norm_sq(lam) == best);
        CHECK(set.admits(lam) == (best < kNuBound));
        CHECK(set.admits(v) == set.admits(lam));
        CHECK(set.admits(v, NuBoundary::Inclusive) == (best <= kNuBound));
    }
}

TEST_CASE("Phi counts for small maximal coordinate") {
    InvolutionSet set(derived());
    CHECK(phi_counts(3, &set, NuBoundary::Inclusive) == std::vector<std::size_t>{35, 1085, 8518});
    CHECK(phi_counts(3, &set, NuBoundary::Strict) == std::vector<std::size_t>{35, 1085, 8516});
    CHECK(phi_counts(3, nullptr) == std::vector<std::size_t>{35, 1085, 8573});
    auto two = enumerate_inf_chars(2, &set, NuBoundary::Inclusive);
    CHECK(two.size() == 1085);
    CHECK(std::is_sorted(two.begin(), two.end()));
}

TEST_CASE("Certs membership rule") {
    auto members = certs_from({Labels{}, {0, 0, 0, 0, 0, 0, 2}, {0, 1, 0, 1, 0, 0, 8}, {0, 0, 0, 0, 0, 0, 4}});
    std::set<Labels> got;
    for (const auto& m : members) {
        got.insert(m.mu);
        CHECK(m.spin_norm_sq - m.lambda_norm_sq >= kNuBound);
        CHECK(m.spin_norm_sq == spin_norm_sq(m.mu).value);
        CHECK(m.lambda_norm_sq == lambda_norm_sq(m.mu));
    }
    // The trivial K-type has gap 399/2 - 0.
    CHECK(got.count(Labels{}) == 1);
    CHECK(got.count({0, 1, 0, 1, 0, 0, 8}) == 0);
}

TEST_CASE("screen verdicts") {
    const InfChar lam = inf_char({1, 0, 0, 1, 0, 1, 0});
    auto v = screen({0, 1, 0, 1, 0, 0, 8}, lam, nullptr);
    CHECK(v.status == ScreenStatus::PassesEquality);

    auto f = screen({0, 0, 0, 0, 1, 0, 7}, inf_char({1, 1, 1, 1, 1, 1, 1}), nullptr);
    CHECK(f.status == ScreenStatus::FailsDiracInequality);
    REQUIRE(f.witness);
    CHECK(f.witness->spin_norm_sq < Rational(399, 2));

    InvolutionMatrix minus{WeylElement::identity().matrix, "w0"};
    for (int i = 0; i < 8; ++i) minus.matrix[i][i] = -1;
    InvolutionSet w0({minus});
    CHECK(screen({0, 1, 0, 1, 0, 0, 8}, inf_char({1, 1, 1, 1, 1, 1, 1}), &w0).status == ScreenStatus::FailsHJBound);

    CHECK(screen(Labels{}, inf_char({1, 1, 1, 0, 1, 1, 1}), nullptr, 2).status == ScreenStatus::Inconclusive);
    CHECK(screen(Labels{}, inf_char({1, 1, 1, 0, 1, 1, 1}), nullptr, 20).status == ScreenStatus::PassesStrict);
    CHECK_THROWS_AS(screen({1, 0, 0, 0, 0, 0, 0}, lam, nullptr), std::invalid_argument);
    CHECK(status_name(ScreenStatus::FailsHJBound) != status_name(ScreenStatus::Inconclusive));
}
