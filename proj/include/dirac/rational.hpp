#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dirac {

struct RationalOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Exact rational over int64 with overflow detection.  Always kept reduced
// with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : n_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = neg(n);
            d = neg(d);
        }
        std::int64_t g = std::gcd(n, d);
        n_ = n / g;
        d_ = d / g;
    }

    constexpr std::int64_t num() const { return n_; }
    constexpr std::int64_t den() const { return d_; }
    constexpr bool is_integer() const { return d_ == 1; }
    constexpr bool is_zero() const { return n_ == 0; }
    constexpr int sign() const { return (n_ > 0) - (n_ < 0); }

    Rational operator-() const { return raw(neg(n_), d_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.d_ == 1 && b.d_ == 1) return Rational(add(a.n_, b.n_));
        std::int64_t g = std::gcd(a.d_, b.d_);
        std::int64_t ad = a.d_ / g, bd = b.d_ / g;
        std::int64_t n = add(mul(a.n_, bd), mul(b.n_, ad));
        std::int64_t d = mul(a.d_, bd);
        std::int64_t g2 = std::gcd(n, g);
        if (g2 > 1) {
            n /= g2;
            d /= g2;
        }
        return raw(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        std::int64_t g1 = std::gcd(a.n_, b.d_), g2 = std::gcd(b.n_, a.d_);
        return raw(mul(a.n_ / g1, b.n_ / g2), mul(a.d_ / g2, b.d_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.n_ == 0) throw std::domain_error("division by zero");
        Rational inv = b.n_ > 0 ? raw(b.d_, b.n_) : raw(neg(b.d_), neg(b.n_));
        return a * inv;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.n_) * b.d_;
        __int128 r = static_cast<__int128>(b.n_) * a.d_;
        return l <=> r;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;
    // Accepts "p", "p/q", "-p/q" and decimal forms such as "7.5".
    static Rational parse(std::string_view s);
    double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

private:
    static Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.n_ = n;
        r.d_ = d;
        return r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw RationalOverflow("rational overflow");
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw RationalOverflow("rational overflow");
        return r;
    }
    static std::int64_t neg(std::int64_t a) {
        if (a == INT64_MIN) throw RationalOverflow("rational overflow");
        return -a;
    }

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dirac
