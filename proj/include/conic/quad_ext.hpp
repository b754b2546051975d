#pragma once

// Exact arithmetic in real quadratic extensions: values q + c*sqrt(d) with
// q, c rational and d a square-free nonnegative integer.  The canonical form
// is unique (d square-free, c = 0 forces d = 0, d = 0 or 1 folds into q), so
// structural equality coincides with numeric equality, and the total order
// is decided by exact sign analysis, never by floating point.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "conic/rational.hpp"

namespace conic {

namespace detail {

// Writes n = s^2 * f with f square-free.  Trial division up to 10^6 is
// enough for every radicand this library produces (4 + lambda with small
// numerator and denominator); anything it cannot certify is a hard error
// rather than a silently wrong canonical form.
inline void square_free_split(const Integer& n, Integer& s, Integer& f)
{
    if (n < 0) throw domain_error("square_free_split: negative argument");
    s = 1;
    f = 1;
    if (n <= 1) {
        f = n;
        return;
    }
    constexpr std::int64_t kTrialBound = 1'000'000;
    Integer m = n;
    auto strip = [&](const Integer& p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e / 2 > 0) {
            Integer pk = 1;
            for (int i = 0; i < e / 2; ++i) pk *= p;
            s *= pk;
        }
        if (e % 2) f *= p;
    };
    strip(2);
    for (Integer p = 3; p <= kTrialBound && p * p <= m; p += 2) strip(p);
    if (m > 1) {
        Integer root;
        if (is_perfect_square(m, &root)) {
            s *= root;
        } else if (m < Integer(kTrialBound) * kTrialBound) {
            // No factor below the bound and below its square: m is prime.
            f *= m;
        } else {
            throw error("square-free extraction failed: residual " + m.str() +
                        " exceeds the trial-division certificate bound");
        }
    }
}

// Exact sign of q + c*sqrt(d), d square-free (or any nonnegative integer).
inline int sign_of(const Rational& q, const Rational& c, const Integer& d)
{
    if (c == 0 || d == 0) return sign(q);
    if (q == 0) return sign(c);
    int sq = sign(q);
    int sc = sign(c);
    if (sq == sc) return sq;
    // Opposite signs: |q| vs |c|*sqrt(d) decided by squaring.
    Rational lhs = q * q;
    Rational rhs = c * c * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sq : sc;
}

// Exact sign of q + c1*sqrt(d1) + c2*sqrt(d2), the general two-radical
// comparison kernel.  Recurses once through a squaring step.
inline int sign_of_sum(const Rational& q, const Rational& c1, const Integer& d1,
                       const Rational& c2, const Integer& d2)
{
    if (c2 == 0 || d2 <= 1) return sign_of(q + (d2 == 1 ? c2 : Rational(0)), c1, d1);
    if (c1 == 0 || d1 <= 1) return sign_of(q + (d1 == 1 ? c1 : Rational(0)), c2, d2);
    if (d1 == d2) return sign_of(q, c1 + c2, d1);
    int sa = sign_of(q, c1, d1); // A = q + c1*sqrt(d1)
    int sb = sign(c2);           // B = c2*sqrt(d2)
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // A and B have opposite signs; sign(A+B) = sign(A) * sign(A^2 - B^2).
    int cmp_sq = sign_of(q * q + c1 * c1 * d1 - c2 * c2 * d2, 2 * q * c1, d1);
    return sa * cmp_sq;
}

} // namespace detail

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& rational) : rat_(rational) {} // NOLINT: implicit by design
    QuadExt(long long n) : rat_(n) {}                     // NOLINT

    // General constructor; canonicalizes q + c*sqrt(d).
    QuadExt(Rational q, Rational c, Integer d) : rat_(std::move(q)), coeff_(std::move(c))
    {
        if (d < 0) throw domain_error("QuadExt: negative radicand");
        if (coeff_ == 0 || d == 0) {
            coeff_ = 0;
            return;
        }
        Integer s, f;
        detail::square_free_split(d, s, f);
        coeff_ *= s;
        if (f == 1 || coeff_ == 0) {
            rat_ += coeff_ * (f == 1 ? 1 : 0);
            coeff_ = 0;
            radicand_ = 0;
        } else {
            radicand_ = f;
        }
    }

    const Rational& rat() const { return rat_; }
    const Rational& coeff() const { return coeff_; }
    const Integer& radicand() const { return radicand_; }

    bool is_rational() const { return coeff_ == 0; }

    std::optional<Integer> as_integer() const
    {
        if (!is_rational()) return std::nullopt;
        return conic::as_integer(rat_);
    }

    bool operator==(const QuadExt& o) const
    {
        return rat_ == o.rat_ && coeff_ == o.coeff_ && radicand_ == o.radicand_;
    }

    int sign() const { return detail::sign_of(rat_, coeff_, radicand_); }

    friend QuadExt operator-(const QuadExt& x)
    {
        QuadExt r;
        r.rat_ = -x.rat_;
        r.coeff_ = -x.coeff_;
        r.radicand_ = x.radicand_;
        return r;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y)
    {
        if (x.is_rational() || y.is_rational() || x.radicand_ == y.radicand_) {
            Integer d = x.is_rational() ? y.radicand_ : x.radicand_;
            return QuadExt(x.rat_ + y.rat_, x.coeff_ + y.coeff_, d);
        }
        throw incompatible_field_error("sum of sqrt(" + x.radicand_.str() + ") and sqrt(" +
                                       y.radicand_.str() + ") values leaves the field");
    }

    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y)
    {
        if (x.is_rational())
            return QuadExt(x.rat_ * y.rat_, x.rat_ * y.coeff_, y.radicand_);
        if (y.is_rational())
            return QuadExt(y.rat_ * x.rat_, y.rat_ * x.coeff_, x.radicand_);
        if (x.radicand_ == y.radicand_)
            return QuadExt(x.rat_ * y.rat_ + x.coeff_ * y.coeff_ * x.radicand_,
                           x.rat_ * y.coeff_ + x.coeff_ * y.rat_, x.radicand_);
        throw incompatible_field_error("product of sqrt(" + x.radicand_.str() + ") and sqrt(" +
                                       y.radicand_.str() + ") values leaves the field");
    }

private:
    Rational rat_ = 0;
    Rational coeff_ = 0;
    Integer radicand_ = 0;
};

// Total order consistent with the real values; works across distinct radicands.
inline int cmp(const QuadExt& x, const QuadExt& y)
{
    if (x == y) return 0;
    return detail::sign_of_sum(x.rat() - y.rat(), x.coeff(), x.radicand(), -y.coeff(),
                               y.radicand());
}

inline bool operator<(const QuadExt& x, const QuadExt& y) { return cmp(x, y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return cmp(x, y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return cmp(x, y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return cmp(x, y) >= 0; }

struct QuadLess {
    bool operator()(const QuadExt& x, const QuadExt& y) const { return cmp(x, y) < 0; }
};

inline QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

// Exact square root of a nonnegative rational, with the square part of the
// radicand extracted: sqrt(8) = 2*sqrt(2), sqrt(9/4) = 3/2.
inline QuadExt sqrt_rational(const Rational& x)
{
    if (x < 0) throw domain_error("sqrt_rational: negative argument");
    if (x == 0) return QuadExt(0);
    // sqrt(n/m) = sqrt(n*m) / m.
    Integer nm = num(x) * den(x);
    Integer s, f;
    detail::square_free_split(nm, s, f);
    Rational c(s, den(x));
    if (f == 1) return QuadExt(c);
    return QuadExt(0, c, f);
}

// mu^2 + p*mu + q0, exact; stays inside mu's quadratic field.
inline QuadExt eval_quadratic(const QuadExt& mu, const Rational& p, const Rational& q0)
{
    return mu * mu + QuadExt(p) * mu + QuadExt(q0);
}

inline BigFloat to_bigfloat(const QuadExt& x)
{
    BigFloat v = to_bigfloat(x.rat());
    if (!x.is_rational())
        v += to_bigfloat(x.coeff()) * boost::multiprecision::sqrt(BigFloat(x.radicand()));
    return v;
}

// Decimal approximation with the given number of significant digits.
inline std::string approx_string(const QuadExt& x, int digits = 12)
{
    std::ostringstream os;
    os.precision(digits);
    os << to_bigfloat(x);
    return os.str();
}

// Same approximation as a double (rounded through the decimal string so the
// printed JSON digits are stable).
inline double approx_double(const QuadExt& x, int digits = 12)
{
    return std::stod(approx_string(x, digits));
}

// Minimal human/machine form: "q", "c*sqrt(d)", or "q +/- c*sqrt(d)", with
// rationals rendered as "p" or "p/q".  parse_quad accepts everything this emits.
inline std::string to_string(const QuadExt& x)
{
    if (x.is_rational()) return to_string(x.rat());
    std::string root = "sqrt(" + x.radicand().str() + ")";
    std::string term;
    Rational ac = x.coeff() < 0 ? Rational(-x.coeff()) : x.coeff();
    if (ac == 1)
        term = root;
    else
        term = to_string(ac) + "*" + root;
    if (x.rat() == 0) return (x.coeff() < 0 ? "-" : "") + term;
    return to_string(x.rat()) + (x.coeff() < 0 ? " - " : " + ") + term;
}

namespace detail {

struct QuadParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Rational rational()
    {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        }
        if (pos == start) throw parse_error("expected a number in '" + std::string(s) + "'");
        return parse_rational(s.substr(start, pos - start));
    }
    // term := rational ['*' sqrt] | ['+'|'-'] sqrt ;  sqrt := "sqrt(" integer ")"
    void term(Rational& rat_acc, Rational& coeff_acc, Integer& rad, int outer_sign)
    {
        skip_ws();
        int sgn = outer_sign;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            std::size_t save = pos;
            if (s[pos] == '-') sgn = -sgn;
            ++pos;
            if (peek_sqrt()) {
                add_sqrt(Rational(sgn), coeff_acc, rad);
                return;
            }
            pos = save;
            sgn = outer_sign;
        }
        if (peek_sqrt()) {
            add_sqrt(Rational(sgn), coeff_acc, rad);
            return;
        }
        Rational r = rational() * sgn;
        skip_ws();
        if (eat('*')) {
            add_sqrt(r, coeff_acc, rad);
            return;
        }
        if (peek_sqrt()) {
            throw parse_error("missing '*' before sqrt in '" + std::string(s) + "'");
        }
        rat_acc += r;
    }
    bool peek_sqrt()
    {
        skip_ws();
        return s.substr(pos, 5) == "sqrt(";
    }
    void add_sqrt(const Rational& c, Rational& coeff_acc, Integer& rad)
    {
        skip_ws();
        if (!peek_sqrt()) throw parse_error("expected sqrt(...) in '" + std::string(s) + "'");
        pos += 5;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        std::size_t digits_end = pos;
        if (digits_end == start || !eat(')'))
            throw parse_error("malformed sqrt(...) in '" + std::string(s) + "'");
        Integer d{std::string(s.substr(start, digits_end - start))};
        if (coeff_acc != 0 && rad != d)
            throw parse_error("two distinct radicands in '" + std::string(s) + "'");
        rad = d;
        coeff_acc += c;
    }
};

} // namespace detail

// Accepts "p/q", "p/q + r/s*sqrt(d)", "r/s*sqrt(d) - p/q", "-sqrt(2)", etc.
inline QuadExt parse_quad(std::string_view text)
{
    detail::QuadParser p{text};
    Rational rat_acc = 0, coeff_acc = 0;
    Integer rad = 0;
    p.term(rat_acc, coeff_acc, rad, +1);
    p.skip_ws();
    while (p.pos < p.s.size()) {
        int sgn;
        if (p.eat('+'))
            sgn = +1;
        else if (p.eat('-'))
            sgn = -1;
        else
            throw parse_error("trailing characters in '" + std::string(text) + "'");
        p.term(rat_acc, coeff_acc, rad, sgn);
        p.skip_ws();
    }
    return QuadExt(rat_acc, coeff_acc, rad);
}

} // namespace conic
