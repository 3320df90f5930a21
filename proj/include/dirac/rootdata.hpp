#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirac/rational.hpp"

namespace dirac {

using Vec8 = std::array<Rational, 8>;
using Mat7 = std::array<std::array<Rational, 7>, 7>;
using Mat8 = std::array<std::array<Rational, 8>, 8>;
using Labels = std::array<std::int64_t, 7>;

enum class Frame { Ambient, Zeta, Varpi, AtlasK };

std::string frame_name(Frame f);

// Coordinate vector tagged with its frame.  Ambient weights have 8
// coordinates, the others 7.
struct Weight {
    std::vector<Rational> coords;
    Frame frame = Frame::Ambient;

    static Weight ambient(const Vec8& v);
    static Weight zeta(const std::vector<Rational>& c) { return {c, Frame::Zeta}; }
    static Weight varpi(const std::vector<Rational>& c) { return {c, Frame::Varpi}; }
    static Weight varpi(const Labels& l);
    Vec8 as_vec8() const;

    friend bool operator==(const Weight&, const Weight&) = default;
};

struct SpanViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RootSystemTables {
    std::vector<Vec8> g_roots;  // 126
    std::vector<Vec8> k_roots;  // 56
    std::vector<Vec8> p_roots;  // 70
    std::vector<Vec8> pos_g;    // 63, positive for rho
    std::vector<Vec8> pos_k;    // 28
    std::vector<Vec8> pos_p;    // 35
    std::array<Vec8, 7> simple_g;
    std::array<Vec8, 7> simple_k;
    std::array<Vec8, 7> fw_g;  // zeta_i
    std::array<Vec8, 7> fw_k;  // varpi_i
    Vec8 rho;
    Vec8 rho_c;
    Mat7 gram_zeta;
    Mat7 gram_varpi;
    Mat7 cartan_g;
};

struct WeylElement {
    Mat8 matrix;
    std::vector<int> word;  // simple reflection indices 1..7, leftmost applied last

    static WeylElement identity();
    static WeylElement reflection(int i);  // s_{alpha_i}
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    Vec8 apply(const Vec8& v) const;
};

struct Chamber {
    int index = 0;
    WeylElement w;
    Vec8 rho_j;
    Vec8 rho_n_j;
    Labels rho_n_varpi{};
    int length = 0;
};

struct OrbitCensus {
    std::size_t orbit_size = 0;
    std::size_t k_dominant = 0;
    std::vector<std::size_t> layer_sizes;  // points per length
};

Rational dot(const Vec8& a, const Vec8& b);
Vec8 operator+(const Vec8& a, const Vec8& b);
Vec8 operator-(const Vec8& a, const Vec8& b);
Vec8 operator*(const Rational& c, const Vec8& a);
Vec8 reflect(const Vec8& x, const Vec8& root);

// Built once on first use and shared read-only afterwards.
const RootSystemTables& tables();
const std::vector<Chamber>& chambers();

// Recomputes the W(g)-orbit of rho from scratch.
OrbitCensus orbit_census();

RootSystemTables build_e7_tables();

Weight convert(const Weight& w, Frame target);
bool in_root_span(const Vec8& v);

// Atlas K-type coordinates to varpi labels.
Labels atlas_k_shift(const std::array<std::int64_t, 7>& y);

struct DominantSystem {
    enum Kind { GChamber, K } kind = K;
    int chamber = 0;
    static DominantSystem k() { return {K, 0}; }
    static DominantSystem g(int j) { return {GChamber, j}; }
};

struct DominantResult {
    Weight weight;
    WeylElement element;
};

DominantResult dominant_representative(const Weight& w, DominantSystem sys);

// #{alpha > 0 : w alpha < 0}; throws if the matrix does not permute the roots.
int weyl_length(const WeylElement& w);

// Lengths in varpi-label arithmetic: labels of a weight against gamma_i.
Labels varpi_labels(const Vec8& v);
Vec8 from_varpi(const Labels& l);
Vec8 from_zeta(const std::vector<Rational>& c);
std::vector<Rational> zeta_coords(const Vec8& v);
// B(x, x) for x given in zeta coordinates.
Rational zeta_norm_sq(const std::vector<Rational>& c);

}  // namespace dirac
