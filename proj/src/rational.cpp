#include "dirac/rational.hpp"

#include <charconv>

namespace dirac {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto first = s.data(), last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || first == last)
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string Rational::str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::parse(std::string_view s) {
    s = trim(s);
    if (auto slash = s.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool negative = !ip.empty() && ip.front() == '-';
        if (negative) ip.remove_prefix(1);
        if (fp.empty() || fp.size() > 17) throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Rational r = Rational(ip.empty() ? 0 : parse_int(ip)) + Rational(parse_int(fp), scale);
        return negative ? -r : r;
    }
    return Rational(parse_int(s));
}

}  // namespace dirac
