#pragma once

// Arbitrary-precision integer and rational scalars plus the handful of
// numeric helpers the spectral code needs (integer sqrt, square testing,
// parsing and canonical formatting).

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "conic/errors.hpp"

namespace conic {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 50-decimal-digit binary float, used only for display approximations.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Integer& n) { return n.sign(); }
inline int sign(const Rational& r) { return num(r).sign(); }

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt_floor(const Integer& n)
{
    if (n < 0) throw domain_error("isqrt_floor: negative argument");
    if (n == 0) return 0;
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer* root = nullptr)
{
    if (n < 0) return false;
    Integer r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline std::optional<Integer> as_integer(const Rational& r)
{
    if (den(r) != 1) return std::nullopt;
    return num(r);
}

inline BigFloat to_bigfloat(const Rational& r)
{
    return BigFloat(num(r)) / BigFloat(den(r));
}

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r)
{
    std::string s = num(r).str();
    if (den(r) != 1) {
        s += '/';
        s += den(r).str();
    }
    return s;
}

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
inline Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) throw parse_error("not an integer: " + std::string(text));
            return Rational(Integer(std::string(text)));
        }
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) throw parse_error("not a rational: " + std::string(text));
        Integer iq{std::string(q)};
        if (iq == 0) throw parse_error("zero denominator: " + std::string(text));
        return Rational(Integer(std::string(p)), iq);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad rational '") + std::string(text) + "': " + e.what());
    }
}

} // namespace conic
