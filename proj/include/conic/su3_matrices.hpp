#pragma once

// Explicit su(3) generator matrices and the numeric Casimir cross-check.
// Entries live in Q(sqrt(3)) + i*Q(sqrt(3)), which is closed under all the
// matrix operations needed here, so sums of squares come out exact; only the
// final comparison against the expected scalar uses floating point.

#include <array>
#include <cstdlib>
#include <vector>

#include "conic/errors.hpp"
#include "conic/rational.hpp"

namespace conic {

// r + s*sqrt(3) with rational r, s.
struct QS3 {
    Rational r = 0;
    Rational s = 0;

    QS3() = default;
    QS3(Rational r_, Rational s_ = 0) : r(std::move(r_)), s(std::move(s_)) {}
    QS3(long long n) : r(n) {}

    bool operator==(const QS3&) const = default;
};

inline QS3 operator+(const QS3& x, const QS3& y) { return {x.r + y.r, x.s + y.s}; }
inline QS3 operator-(const QS3& x, const QS3& y) { return {x.r - y.r, x.s - y.s}; }
inline QS3 operator-(const QS3& x) { return {-x.r, -x.s}; }
inline QS3 operator*(const QS3& x, const QS3& y)
{
    return {x.r * y.r + 3 * x.s * y.s, x.r * y.s + x.s * y.r};
}

inline BigFloat to_bigfloat(const QS3& x)
{
    static const BigFloat sqrt3 = sqrt(BigFloat(3));
    return to_bigfloat(x.r) + to_bigfloat(x.s) * sqrt3;
}

// Complex numbers over QS3.
struct CQ {
    QS3 re;
    QS3 im;

    CQ() = default;
    CQ(QS3 re_, QS3 im_ = QS3()) : re(std::move(re_)), im(std::move(im_)) {}
    CQ(long long n) : re(n) {}

    bool operator==(const CQ&) const = default;
};

inline CQ operator+(const CQ& x, const CQ& y) { return {x.re + y.re, x.im + y.im}; }
inline CQ operator-(const CQ& x, const CQ& y) { return {x.re - y.re, x.im - y.im}; }
inline CQ operator-(const CQ& x) { return {-x.re, -x.im}; }
inline CQ operator*(const CQ& x, const CQ& y)
{
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline CQ conj(const CQ& x) { return {x.re, -x.im}; }

inline double abs_approx(const CQ& x)
{
    double re = to_bigfloat(x.re).convert_to<double>();
    double im = to_bigfloat(x.im).convert_to<double>();
    return std::abs(re) > std::abs(im) ? std::abs(re) : std::abs(im);
}

class ExactMat {
public:
    ExactMat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static ExactMat identity(int n)
    {
        ExactMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = CQ(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CQ& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const CQ& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    bool operator==(const ExactMat&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<CQ> data_;
};

inline ExactMat operator+(const ExactMat& x, const ExactMat& y)
{
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw shape_error("matrix sum shape mismatch");
    ExactMat out(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) + y.at(i, j);
    return out;
}

inline ExactMat operator-(const ExactMat& x, const ExactMat& y)
{
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw shape_error("matrix difference shape mismatch");
    ExactMat out(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
    return out;
}

inline ExactMat operator*(const ExactMat& x, const ExactMat& y)
{
    if (x.cols() != y.rows()) throw shape_error("matrix product shape mismatch");
    ExactMat out(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const CQ& v = x.at(i, k);
            if (v == CQ()) continue;
            for (int j = 0; j < y.cols(); ++j) out.at(i, j) = out.at(i, j) + v * y.at(k, j);
        }
    return out;
}

inline ExactMat operator*(const CQ& c, const ExactMat& x)
{
    ExactMat out(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) out.at(i, j) = c * x.at(i, j);
    return out;
}

inline ExactMat commutator(const ExactMat& x, const ExactMat& y)
{
    return x * y - y * x;
}

inline CQ trace(const ExactMat& x)
{
    if (x.rows() != x.cols()) throw shape_error("trace of a non-square matrix");
    CQ t;
    for (int i = 0; i < x.rows(); ++i) t = t + x.at(i, i);
    return t;
}

// The invariant inner product <A,B> = -tr(AB)/2 making e1..e8 orthonormal.
inline QS3 pairing(const ExactMat& x, const ExactMat& y)
{
    CQ t = trace(x * y);
    if (!(t.im == QS3())) throw consistency_error("pairing of su(3) elements must be real");
    return QS3(Rational(-1, 2)) * t.re;
}

// The eight basis matrices: e1..e4 span the horizontal complement of
// s[u(1) x u(2)], e5 the scaled u(1) direction diag(2i,-i,-i)/sqrt(3),
// e6..e8 the su(2) block.
inline std::array<ExactMat, 8> generator_basis()
{
    auto I = [](long long num, long long den = 1) { return CQ(QS3(0), QS3(Rational(num, den))); };
    auto R = [](long long num) { return CQ(QS3(Rational(num))); };
    auto S = [](long long num, long long den) { return CQ(QS3(0), QS3(0, Rational(num, den))); };

    std::array<ExactMat, 8> e{ExactMat(3, 3), ExactMat(3, 3), ExactMat(3, 3), ExactMat(3, 3),
                              ExactMat(3, 3), ExactMat(3, 3), ExactMat(3, 3), ExactMat(3, 3)};
    e[0].at(0, 1) = R(1);
    e[0].at(1, 0) = R(-1);

    e[1].at(0, 1) = I(1);
    e[1].at(1, 0) = I(1);

    e[2].at(0, 2) = R(1);
    e[2].at(2, 0) = R(-1);

    e[3].at(0, 2) = I(1);
    e[3].at(2, 0) = I(1);

    // 1/sqrt(3) = sqrt(3)/3, so the entries are (2/3)sqrt(3)i and -(1/3)sqrt(3)i.
    e[4].at(0, 0) = S(2, 3);
    e[4].at(1, 1) = S(-1, 3);
    e[4].at(2, 2) = S(-1, 3);

    e[5].at(1, 1) = I(1);
    e[5].at(2, 2) = I(-1);

    e[6].at(1, 2) = R(1);
    e[6].at(2, 1) = R(-1);

    e[7].at(1, 2) = I(1);
    e[7].at(2, 1) = I(1);

    return e;
}

// Adjoint representation: ad(e_i) as 8x8 real matrices in the e-basis,
// computed from structure constants via the orthonormal pairing.  Each
// expansion is verified exactly before use.
inline std::array<ExactMat, 8> adjoint_rep()
{
    auto e = generator_basis();
    std::array<ExactMat, 8> ad{ExactMat(8, 8), ExactMat(8, 8), ExactMat(8, 8), ExactMat(8, 8),
                               ExactMat(8, 8), ExactMat(8, 8), ExactMat(8, 8), ExactMat(8, 8)};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            ExactMat bracket = commutator(e[i], e[j]);
            ExactMat recon(3, 3);
            for (int k = 0; k < 8; ++k) {
                QS3 c = pairing(bracket, e[k]);
                ad[i].at(k, j) = CQ(c);
                recon = recon + CQ(c) * e[k];
            }
            if (!(recon == bracket))
                throw consistency_error("structure-constant expansion failed to reconstruct a bracket");
        }
    }
    return ad;
}

// d-th symmetric power of the su(2) block (rows/columns 2,3 of su(3)): the
// images of e6, e7, e8 on Sym^d C^2 in the monomial basis v1^(d-j) v2^j.
inline std::array<ExactMat, 3> su2_rep_on_sym(int d)
{
    if (d < 0) throw domain_error("symmetric power requires d >= 0");
    auto e = generator_basis();
    std::array<ExactMat, 3> rep{ExactMat(d + 1, d + 1), ExactMat(d + 1, d + 1),
                                ExactMat(d + 1, d + 1)};
    for (int m = 0; m < 3; ++m) {
        const ExactMat& x = e[5 + m];
        CQ x11 = x.at(1, 1), x12 = x.at(1, 2), x21 = x.at(2, 1), x22 = x.at(2, 2);
        ExactMat& out = rep[m];
        for (int j = 0; j <= d; ++j) {
            out.at(j, j) = CQ(QS3(Rational(d - j))) * x11 + CQ(QS3(Rational(j))) * x22;
            if (j + 1 <= d) out.at(j + 1, j) = CQ(QS3(Rational(d - j))) * x21;
            if (j - 1 >= 0) out.at(j - 1, j) = CQ(QS3(Rational(j))) * x12;
        }
    }
    return rep;
}

// Exact sum of squares over a representation image.
template <std::size_t N>
inline ExactMat casimir_matrix(const std::array<ExactMat, N>& rep)
{
    static_assert(N >= 1);
    int n = rep[0].rows();
    for (const ExactMat& m : rep)
        if (m.rows() != n || m.cols() != n) throw shape_error("representation matrices must be square of equal size");
    ExactMat sum(n, n);
    for (const ExactMat& m : rep) sum = sum + m * m;
    return sum;
}

// True iff sum rho(e_i)^2 - expected*Id has every entry below 1e-10 in
// magnitude.  The sum itself is exact; only this comparison is approximate.
template <std::size_t N>
inline bool verify_casimir_numeric(const std::array<ExactMat, N>& rep, const Rational& expected)
{
    ExactMat diff = casimir_matrix(rep) - CQ(QS3(expected)) * ExactMat::identity(rep[0].rows());
    for (int i = 0; i < diff.rows(); ++i)
        for (int j = 0; j < diff.cols(); ++j)
            if (abs_approx(diff.at(i, j)) >= 1e-10) return false;
    return true;
}

} // namespace conic
