#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dirac/norms.hpp"

namespace dirac {

using BigInt = boost::multiprecision::cpp_int;

// su(8) = k.  Weights are varpi labels; dominance is with respect to Delta+(k).
BigInt weyl_dim(const Labels& lambda);

struct WeightMultiplicities {
    std::map<Labels, std::int64_t> dominant;  // dominant weight -> multiplicity
    bool complete = true;                     // false when depth_cap cut the descent
};

// Freudenthal recursion over the dominant weights of E_lambda.  depth_cap
// bounds the number of simple roots subtracted (negative: unlimited).
WeightMultiplicities freudenthal_weights(const Labels& lambda, int depth_cap = -1);
// Every weight (all W(k)-conjugates) with its multiplicity.
std::map<Labels, std::int64_t> all_weights(const WeightMultiplicities& w);
// Size of the W(k)-orbit of a dominant weight.
std::int64_t orbit_size(const Labels& dominant);

struct IrrepDecomposition {
    std::map<Labels, std::int64_t> terms;
    BigInt dimension() const;
};

struct KlimykCapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// E_small (x) E_mu by the Brauer-Klimyk rule, iterating over the weights of
// E_small.  Refuses when dim E_small exceeds cap.
IrrepDecomposition klimyk_tensor(const Labels& small, const Labels& mu, std::int64_t cap = 100000);

struct SpinPart {
    Labels highest{};
    int chamber = 0;
    int parity = 1;  // (-1)^length
};

std::vector<SpinPart> spin_module_parts();

struct DiracCandidate {
    Labels gamma{};
    int chamber = 0;            // minimal-length solution of w Lambda = gamma + rho_c
    int parity = 1;             // (-1)^length of that chamber element
    std::vector<int> chambers;  // every chamber j with w^(j) Lambda = gamma + rho_c
};

struct NotDominant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// All k-dominant gamma with gamma + rho_c in W(g) Lambda.  Lambda in zeta
// coordinates, dominant for Delta+(g).
std::vector<DiracCandidate> dirac_candidate_ktypes(const std::vector<Rational>& lambda);

struct SpinContribution {
    Labels gamma{};
    int chamber = 0;               // spin-module component E_{rho_n^(j)} realising the minimum
    int parity = 1;                // (-1)^length of w^(j)
    std::vector<int> hp_chambers;  // i with w^(i) Lambda = gamma + rho_c
};

// Empty unless spin_norm_sq(mu) = |Lambda|^2; one record per achieving chamber.
std::vector<SpinContribution> spin_contribution(const Labels& mu, const std::vector<Rational>& lambda);

}  // namespace dirac
