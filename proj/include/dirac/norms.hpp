#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dirac/rootdata.hpp"

namespace dirac {

// Integer weights of su(8) in epsilon coordinates (defined modulo the
// all-ones vector).  Labels [a1..a7] correspond to e_k = a_k + ... + a_7, e_8 = 0.
using Eps = std::array<std::int64_t, 8>;

Eps to_eps(const Labels& l);
Labels from_eps(const Eps& e);
Rational eps_norm_sq(const Eps& e);

bool is_dominant(const Labels& l);
// a + c + e + g even.
bool is_K_type(const Labels& l);
// Dominant W(k)-representative of an integral weight.
Labels k_dominant(const Labels& l);
Rational norm_sq(const Labels& l);

struct SpinNorm {
    Rational value;
    std::vector<int> chambers;  // every j attaining the minimum
};

SpinNorm spin_norm_sq(const Labels& mu);
// ||{mu - rho_n^(j)} + rho_c||^2 for one chamber.
Rational spin_norm_sq_at(const Labels& mu, int j);
// {mu - rho_n^(j)}, the dominant representative.
Labels spin_gamma(const Labels& mu, int j);

struct ConeProjection {
    Vec8 point;
    std::array<Rational, 7> coeffs{};  // along w^(j) zeta_i
    unsigned face = 0;                 // bitmask of generators with positive weight
};

// Nearest point to xi in the cone spanned by w^(j) zeta_1..7.
ConeProjection project_dominant_cone(const Vec8& xi, int j);
// Checks the optimality conditions of a claimed projection.
bool projection_certificate(const Vec8& xi, int j, const Vec8& p);

// Chambers j whose closed cone contains mu + 2 rho_c.
std::vector<int> admissible_chambers(const Labels& mu);

struct LambdaA {
    Vec8 value;
    Rational norm_sq;
    int chamber = 0;
};

LambdaA lambda_a(const Labels& mu);
LambdaA lambda_a_at(const Labels& mu, int j);
inline Rational lambda_norm_sq(const Labels& mu) { return lambda_a(mu).norm_sq; }

// Highest weight of the PRV component of E_mu (x) E_nu.
Labels prv_component(const Labels& mu, const Labels& nu);

// Membership of mu in { sum c_a a : a in Delta+(p), -1 <= c_a <= 1 }.
bool is_usmall(const Labels& mu);
// Same, returning the coefficients (empty when outside).
std::optional<std::vector<Rational>> usmall_witness(const Labels& mu);

// Support function of the u-small zonotope in direction varpi_i.
Rational usmall_support_varpi(int i);
// Dominant K-types inside the support-function box; a superset of the census.
std::vector<Labels> usmall_candidates();
std::vector<Labels> enumerate_usmall_ktypes(unsigned threads = 0);

struct NormReport {
    Labels mu{};
    LambdaA lambda;
    SpinNorm spin;
    bool usmall = false;
};

NormReport norm_report(const Labels& mu);

}  // namespace dirac
