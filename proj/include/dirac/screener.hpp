#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirac/norms.hpp"

namespace dirac {

// Infinitesimal character [a,b,c,d,e,f,g] = a zeta_1 + ... + g zeta_7.
using InfChar = std::vector<Rational>;
using IntVec7 = std::array<std::int64_t, 7>;

InfChar inf_char(const IntVec7& v);
bool is_integral(const InfChar& lambda);

// Highest weight of p as a k-module.
constexpr Labels kBeta = {0, 0, 0, 1, 0, 0, 0};
// Strict bound on ||nu||^2 for fully supported candidates.
inline const Rational kNuBound{157, 2};

// Whether ||nu||^2 = 157/2 itself passes the nu bound.
enum class NuBoundary { Strict, Inclusive };

enum class ScreenStatus { PassesEquality, PassesStrict, FailsDiracInequality, FailsHJBound, Inconclusive };
std::string status_name(ScreenStatus s);

struct ScreenWitness {
    Labels ktype{};
    int pencil_n = 0;
    Rational spin_norm_sq;
};

struct ScreenVerdict {
    ScreenStatus status = ScreenStatus::PassesStrict;
    std::optional<ScreenWitness> witness;
};

ScreenVerdict dirac_inequality_check(const Labels& mu, const InfChar& lambda);

struct PencilResult {
    bool conclusive = false;  // false: the cap was reached before the stop rule fired
    int n_star = 0;
    Rational min_spin;
    std::vector<Rational> profile;  // spin_norm_sq(mu + n beta), n = 0..last scanned
};

// Scans mu + n beta and stops at the first n whose value exceeds both the
// running minimum and ||Lambda||^2.
PencilResult pencil_min_spin(const Labels& mu, const InfChar& lambda, int cap = 50);

// ||x||^2 for x in zeta coordinates.
Rational nu_norm_sq(const InfChar& nu);

struct InvolutionMatrix {
    Mat8 matrix;
    std::string tag;
};

struct InvalidInvolution : std::invalid_argument {
    std::size_t index;
    InvalidInvolution(std::size_t i, const std::string& what)
        : std::invalid_argument("involution " + std::to_string(i) + ": " + what), index(i) {}
};

// Squares to 1, preserves B and permutes the roots; throws InvalidInvolution.
void validate_involutions(const std::vector<InvolutionMatrix>& list);

// Validated involution list reduced to the quadratic forms
// ||(Lambda - theta Lambda)/2||^2 that can be minimal.
class InvolutionSet {
public:
    explicit InvolutionSet(const std::vector<InvolutionMatrix>& list);

    std::size_t size() const { return size_; }
    std::size_t forms() const { return forms_.size(); }
    // min over theta of ||(Lambda - theta Lambda)/2||^2.
    Rational min_nu_norm_sq(const InfChar& lambda) const;
    bool admits(const InfChar& lambda, NuBoundary b = NuBoundary::Strict) const;
    // Integral fast path: exists theta with ||(v - theta v)/2||^2 < 157/2
    // (or <= under Inclusive).
    bool admits(const IntVec7& v, NuBoundary b = NuBoundary::Strict) const;

private:
    // 4 ||(Lambda - theta Lambda)/2||^2 = Lambda^T M Lambda in zeta coordinates.
    std::vector<std::array<std::array<std::int64_t, 7>, 7>> forms_;
    std::size_t size_ = 0;
};

// Every involution of W(g) whose support is all seven simple reflections.
std::vector<InvolutionMatrix> fully_supported_involutions();
// Number of involutions of W(g), identity included.
std::size_t weyl_involution_count();

// Without an involution set the filter quantifies over every involution of
// W(g), identity included, and so always passes.
bool hj_filter(const InfChar& lambda, const InvolutionSet* involutions, NuBoundary b = NuBoundary::Strict);

// a+c, b+d, c+d, d+e, e+f, f+g > 0 and min = 0.
bool phi_coefficient_conditions(const IntVec7& v);

// Vectors in [0, max_coord]^7 with largest entry max_coord meeting the
// coefficient conditions and, with involutions, the nu bound.  Sorted.
std::vector<IntVec7> enumerate_inf_chars(int max_coord, const InvolutionSet* involutions,
                                         NuBoundary b = NuBoundary::Strict);
// counts[i - 1] = #Phi_i for i = 1..max_coord.
std::vector<std::size_t> phi_counts(int max_coord, const InvolutionSet* involutions,
                                    NuBoundary b = NuBoundary::Strict);

// For every chamber j some varpi label of w^(j) Lambda vanishes.
bool lemma_vanishing_check(const InfChar& lambda);

struct CertsMember {
    Labels mu{};
    Rational spin_norm_sq;
    Rational lambda_norm_sq;
};

// u-small K-types with spin_norm_sq - lambda_norm_sq >= 157/2.
std::vector<CertsMember> certs_census(unsigned threads = 0);
std::vector<CertsMember> certs_from(const std::vector<Labels>& ktypes, unsigned threads = 0);

// hj_filter, then the pencil through mu, then the Dirac inequality at mu.
ScreenVerdict screen(const Labels& mu, const InfChar& lambda, const InvolutionSet* involutions, int pencil_cap = 50,
                     NuBoundary b = NuBoundary::Strict);

}  // namespace dirac
