#include "dirac/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dirac/linalg.hpp"

namespace dirac {

std::string frame_name(Frame f) {
    switch (f) {
        case Frame::Ambient: return "ambient";
        case Frame::Zeta: return "zeta";
        case Frame::Varpi: return "varpi";
        case Frame::AtlasK: return "atlas-k";
    }
    return "?";
}

Rational dot(const Vec8& a, const Vec8& b) {
    Rational s;
    for (int i = 0; i < 8; ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec8 operator+(const Vec8& a, const Vec8& b) {
    Vec8 r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec8 operator-(const Vec8& a, const Vec8& b) {
    Vec8 r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec8 operator*(const Rational& c, const Vec8& a) {
    Vec8 r;
    for (int i = 0; i < 8; ++i) r[i] = c * a[i];
    return r;
}

// All roots have squared length 2, so the coroot is the root itself.
Vec8 reflect(const Vec8& x, const Vec8& root) {
    Rational c = dot(x, root);
    if (c.is_zero()) return x;
    return x - c * root;
}

Weight Weight::ambient(const Vec8& v) { return {std::vector<Rational>(v.begin(), v.end()), Frame::Ambient}; }

Weight Weight::varpi(const Labels& l) {
    std::vector<Rational> c(l.begin(), l.end());
    return {c, Frame::Varpi};
}

Vec8 Weight::as_vec8() const {
    if (frame != Frame::Ambient || coords.size() != 8)
        throw std::invalid_argument("expected an ambient weight with 8 coordinates");
    Vec8 v;
    std::copy(coords.begin(), coords.end(), v.begin());
    return v;
}

namespace {

Vec8 vec(std::initializer_list<Rational> xs) {
    Vec8 v;
    std::copy(xs.begin(), xs.end(), v.begin());
    return v;
}

Vec8 unit(int i) {
    Vec8 v;
    v[i] = 1;
    return v;
}

Mat7 gram(const std::array<Vec8, 7>& b) {
    Mat7 g;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) g[i][j] = dot(b[i], b[j]);
    return g;
}

std::array<Vec8, 7> dual_basis(const std::array<Vec8, 7>& simple) {
    Mat7 c = gram(simple);
    Matrix<Rational> m(7, std::vector<Rational>(7));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) m[i][j] = c[i][j];
    Matrix<Rational> inv = inverse(m);
    std::array<Vec8, 7> out;
    for (int i = 0; i < 7; ++i) {
        Vec8 v;
        for (int k = 0; k < 7; ++k) v = v + inv[i][k] * simple[k];
        out[i] = v;
    }
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("E7 table construction: ") + what);
}

}  // namespace

RootSystemTables build_e7_tables() {
    RootSystemTables t;
    const Rational h(1, 2);
    t.simple_g[0] = vec({h, -h, -h, -h, -h, -h, -h, h});
    t.simple_g[1] = unit(0) + unit(1);
    for (int i = 3; i <= 7; ++i) t.simple_g[i - 1] = unit(i - 2) - unit(i - 3);

    std::set<Vec8> roots(t.simple_g.begin(), t.simple_g.end());
    std::vector<Vec8> frontier(t.simple_g.begin(), t.simple_g.end());
    while (!frontier.empty()) {
        std::vector<Vec8> next;
        for (const auto& r : frontier)
            for (const auto& s : t.simple_g) {
                Vec8 x = reflect(r, s);
                if (roots.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    t.g_roots.assign(roots.begin(), roots.end());

    t.cartan_g = gram(t.simple_g);
    t.fw_g = dual_basis(t.simple_g);
    for (const auto& z : t.fw_g) t.rho = t.rho + z;

    const auto& a = t.simple_g;
    t.simple_k[0] = a[0];
    for (int i = 1; i < 6; ++i) t.simple_k[i] = a[i + 1];
    t.simple_k[6] = a[0] + Rational(2) * a[1] + Rational(2) * a[2] + Rational(3) * a[3] + Rational(2) * a[4] + a[5];
    t.fw_k = dual_basis(t.simple_k);
    for (const auto& w : t.fw_k) t.rho_c = t.rho_c + w;

    for (const auto& r : t.g_roots) {
        bool positive = dot(r, t.rho).sign() > 0;
        Rational c2 = dot(r, t.fw_g[1]);  // coefficient of alpha_2
        bool compact = c2.is_integer() && c2.num() % 2 == 0;
        (compact ? t.k_roots : t.p_roots).push_back(r);
        if (positive) {
            t.pos_g.push_back(r);
            (compact ? t.pos_k : t.pos_p).push_back(r);
        }
    }
    t.gram_zeta = gram(t.fw_g);
    t.gram_varpi = gram(t.fw_k);

    require(t.g_roots.size() == 126, "expected 126 roots");
    require(t.k_roots.size() == 56 && t.p_roots.size() == 70, "compact/noncompact split");
    require(t.pos_g.size() == 63 && t.pos_k.size() == 28 && t.pos_p.size() == 35, "positive root counts");
    for (const auto& r : t.g_roots) require(dot(r, r) == Rational(2), "root length");
    for (const auto& r : t.pos_k) {
        bool k_positive = dot(r, t.rho_c).sign() > 0;
        require(k_positive, "compact positivity");
    }
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Rational d = i == j ? Rational(1) : Rational(0);
            require(dot(t.fw_g[i], t.simple_g[j]) == d, "zeta duality");
            require(dot(t.fw_k[i], t.simple_k[j]) == d, "varpi duality");
        }
    require(dot(t.rho, t.rho) == Rational(399, 2), "|rho|^2");
    require(dot(t.rho_c, t.rho_c) == Rational(42), "|rho_c|^2");
    return t;
}

const RootSystemTables& tables() {
    static const RootSystemTables t = build_e7_tables();
    return t;
}

bool in_root_span(const Vec8& v) {
    // The root span is the orthogonal complement of e7 + e8.
    return (v[6] + v[7]).is_zero();
}

Labels varpi_labels(const Vec8& v) {
    const auto& t = tables();
    Labels l{};
    for (int i = 0; i < 7; ++i) {
        Rational c = dot(v, t.simple_k[i]);
        if (!c.is_integer()) throw std::invalid_argument("weight is not k-integral");
        l[i] = c.num();
    }
    return l;
}

Vec8 from_varpi(const Labels& l) {
    const auto& t = tables();
    Vec8 v;
    for (int i = 0; i < 7; ++i)
        if (l[i] != 0) v = v + Rational(l[i]) * t.fw_k[i];
    return v;
}

Vec8 from_zeta(const std::vector<Rational>& c) {
    if (c.size() != 7) throw std::invalid_argument("expected 7 zeta coordinates");
    const auto& t = tables();
    Vec8 v;
    for (int i = 0; i < 7; ++i)
        if (!c[i].is_zero()) v = v + c[i] * t.fw_g[i];
    return v;
}

std::vector<Rational> zeta_coords(const Vec8& v) {
    const auto& t = tables();
    std::vector<Rational> c(7);
    for (int i = 0; i < 7; ++i) c[i] = dot(v, t.simple_g[i]);
    return c;
}

Rational zeta_norm_sq(const std::vector<Rational>& c) {
    if (c.size() != 7) throw std::invalid_argument("expected 7 zeta coordinates");
    const auto& g = tables().gram_zeta;
    Rational s;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (!c[i].is_zero() && !c[j].is_zero()) s += c[i] * c[j] * g[i][j];
    return s;
}

Weight convert(const Weight& w, Frame target) {
    const auto& t = tables();
    const std::size_t want = w.frame == Frame::Ambient ? 8 : 7;
    if (w.coords.size() != want)
        throw std::invalid_argument(frame_name(w.frame) + " weight needs " + std::to_string(want) + " coordinates");

    Vec8 amb;
    switch (w.frame) {
        case Frame::Ambient:
            amb = w.as_vec8();
            if (!in_root_span(amb)) throw SpanViolation("ambient vector is not in the span of the roots");
            break;
        case Frame::Zeta:
        case Frame::AtlasK: amb = from_zeta(w.coords); break;
        case Frame::Varpi:
            for (int i = 0; i < 7; ++i)
                if (!w.coords[i].is_zero()) amb = amb + w.coords[i] * t.fw_k[i];
            break;
    }
    if (target == Frame::Ambient) return Weight::ambient(amb);
    std::vector<Rational> c(7);
    const auto& basis = target == Frame::Varpi ? t.simple_k : t.simple_g;
    for (int i = 0; i < 7; ++i) c[i] = dot(amb, basis[i]);
    return {c, target};
}

Labels atlas_k_shift(const std::array<std::int64_t, 7>& y) {
    return {y[0], y[2], y[3], y[4], y[5], y[6], y[0] + 2 * y[1] + 2 * y[2] + 3 * y[3] + 2 * y[4] + y[5]};
}

WeylElement WeylElement::identity() {
    WeylElement e;
    for (int i = 0; i < 8; ++i) e.matrix[i][i] = 1;
    return e;
}

WeylElement WeylElement::reflection(int i) {
    const Vec8& a = tables().simple_g.at(i - 1);
    WeylElement e = identity();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) e.matrix[r][c] -= a[r] * a[c];
    e.word = {i};
    return e;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement e;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            Rational s;
            for (int k = 0; k < 8; ++k)
                if (!matrix[r][k].is_zero() && !o.matrix[k][c].is_zero()) s += matrix[r][k] * o.matrix[k][c];
            e.matrix[r][c] = s;
        }
    e.word = word;
    e.word.insert(e.word.end(), o.word.begin(), o.word.end());
    return e;
}

WeylElement WeylElement::inverse() const {
    // Orthogonal, so the inverse is the transpose.
    WeylElement e;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) e.matrix[r][c] = matrix[c][r];
    e.word.assign(word.rbegin(), word.rend());
    return e;
}

Vec8 WeylElement::apply(const Vec8& v) const {
    Vec8 out;
    for (int r = 0; r < 8; ++r) {
        Rational s;
        for (int c = 0; c < 8; ++c)
            if (!matrix[r][c].is_zero() && !v[c].is_zero()) s += matrix[r][c] * v[c];
        out[r] = s;
    }
    return out;
}

int weyl_length(const WeylElement& w) {
    const auto& t = tables();
    static const std::set<Vec8> root_set(t.g_roots.begin(), t.g_roots.end());
    for (const auto& r : t.g_roots)
        if (!root_set.count(w.apply(r))) throw std::invalid_argument("matrix does not permute the E7 roots");
    int len = 0;
    for (const auto& r : t.pos_g)
        if (dot(w.apply(r), t.rho).sign() < 0) ++len;
    return len;
}

DominantResult dominant_representative(const Weight& w, DominantSystem sys) {
    const auto& t = tables();
    Vec8 x = convert(w, Frame::Ambient).as_vec8();
    std::array<Vec8, 7> simple;
    if (sys.kind == DominantSystem::K) {
        simple = t.simple_k;
    } else {
        const auto& ch = chambers().at(sys.chamber);
        for (int i = 0; i < 7; ++i) simple[i] = ch.w.apply(t.simple_g[i]);
    }
    WeylElement e = WeylElement::identity();
    const bool record_word = sys.kind == DominantSystem::GChamber && sys.chamber == 0;
    for (;;) {
        int i = 0;
        while (i < 7 && dot(x, simple[i]).sign() >= 0) ++i;
        if (i == 7) break;
        const Vec8& a = simple[i];
        x = reflect(x, a);
        // e <- s_a e
        for (int c = 0; c < 8; ++c) {
            Rational p;
            for (int r = 0; r < 8; ++r)
                if (!a[r].is_zero() && !e.matrix[r][c].is_zero()) p += a[r] * e.matrix[r][c];
            if (p.is_zero()) continue;
            for (int r = 0; r < 8; ++r)
                if (!a[r].is_zero()) e.matrix[r][c] -= p * a[r];
        }
        if (record_word) e.word.insert(e.word.begin(), i + 1);
    }
    return {Weight::ambient(x), e};
}

// ---------------------------------------------------------------------------
// Orbit of rho.  Points are stored doubled (coordinates are half-integers with
// |x| <= 17/2) as eight signed bytes packed into one word.

namespace {

using P8 = std::array<int, 8>;

std::uint64_t pack(const P8& x) {
    std::uint64_t k = 0;
    for (int i = 0; i < 8; ++i) k |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(x[i]))) << (8 * i);
    return k;
}

P8 unpack(std::uint64_t k) {
    P8 x;
    for (int i = 0; i < 8; ++i) x[i] = static_cast<std::int8_t>(static_cast<std::uint8_t>(k >> (8 * i)));
    return x;
}

P8 doubled(const Vec8& v) {
    P8 x;
    for (int i = 0; i < 8; ++i) {
        Rational d = Rational(2) * v[i];
        require(d.is_integer(), "doubled coordinate");
        x[i] = static_cast<int>(d.num());
    }
    return x;
}

// <x, a> for doubled x and doubled a.
int pair4(const P8& x, const P8& a) {
    int s = 0;
    for (int i = 0; i < 8; ++i) s += x[i] * a[i];
    return s / 4;
}

struct OrbitScan {
    OrbitCensus census;
    std::vector<std::pair<int, std::uint64_t>> k_dominant;  // (length, point)
};

OrbitScan scan_orbit() {
    const auto& t = tables();
    std::array<P8, 7> ag, ak;
    for (int i = 0; i < 7; ++i) {
        ag[i] = doubled(t.simple_g[i]);
        ak[i] = doubled(t.simple_k[i]);
    }
    OrbitScan out;
    std::vector<std::uint64_t> layer{pack(doubled(t.rho))};
    int len = 0;
    while (!layer.empty()) {
        out.census.layer_sizes.push_back(layer.size());
        out.census.orbit_size += layer.size();
        std::vector<std::uint64_t> next;
        next.reserve(layer.size() * 3);
        for (std::uint64_t k : layer) {
            P8 x = unpack(k);
            bool kdom = true;
            for (int i = 0; i < 7 && kdom; ++i) kdom = pair4(x, ak[i]) > 0;
            if (kdom) out.k_dominant.emplace_back(len, k);
            for (int i = 0; i < 7; ++i) {
                int c = pair4(x, ag[i]);
                if (c <= 0) continue;
                P8 y = x;
                for (int r = 0; r < 8; ++r) y[r] -= c * ag[i][r];
                next.push_back(pack(y));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
        ++len;
    }
    out.census.k_dominant = out.k_dominant.size();
    return out;
}

Vec8 halved(const P8& x) {
    Vec8 v;
    for (int i = 0; i < 8; ++i) v[i] = Rational(x[i], 2);
    return v;
}

std::vector<Chamber> build_chambers() {
    const auto& t = tables();
    OrbitScan scan = scan_orbit();
    require(scan.census.orbit_size == 2903040, "orbit of rho must have 2903040 points");
    require(scan.census.k_dominant == 72, "expected 72 k-dominant points");

    std::vector<Chamber> out;
    for (auto [len, key] : scan.k_dominant) {
        Chamber c;
        c.rho_j = halved(unpack(key));
        c.rho_n_j = c.rho_j - t.rho_c;
        c.rho_n_varpi = varpi_labels(c.rho_n_j);
        c.length = len;

        // Peel off the smallest descent until rho is reached.
        std::vector<int> word;
        Vec8 y = c.rho_j;
        while (y != t.rho) {
            int i = 0;
            while (dot(y, t.simple_g[i]).sign() >= 0) ++i;
            y = reflect(y, t.simple_g[i]);
            word.push_back(i + 1);
        }
        require(static_cast<int>(word.size()) == len, "descent word length");
        c.w = WeylElement::identity();
        for (int i : word) c.w = c.w * WeylElement::reflection(i);
        require(c.w.apply(t.rho) == c.rho_j, "chamber element maps rho to rho^(j)");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.rho_n_varpi < b.rho_n_varpi;
    });
    for (std::size_t j = 0; j < out.size(); ++j) out[j].index = static_cast<int>(j);
    require(out[0].length == 0 && out[0].rho_j == t.rho, "chamber 0 contains rho");
    return out;
}

}  // namespace

const std::vector<Chamber>& chambers() {
    static const std::vector<Chamber> c = build_chambers();
    return c;
}

OrbitCensus orbit_census() { return scan_orbit().census; }

}  // namespace dirac
