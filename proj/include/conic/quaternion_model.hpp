#pragma once

// Exact verification of the Sasaki-quaternion algebra at a base point of
// C^2 = span(dx1..dx4), with u1 = x1 + i x2, u2 = x3 + i x4:
//
//   omega0 = dx1^dx2 + dx3^dx4,  H = Re(du1^du2),  G = -Im(du1^du2),
//
// the three complex structures J0, JH, JG obtained by contraction, and the
// four 8x8 operators I, K, T, T-underbar on the scalar slots (u, a_s, a_r,
// a_eta) plus the form block.  Everything is integer arithmetic.

#include <array>
#include <string>
#include <vector>

#include "conic/errors.hpp"

namespace conic {

using Mat4 = std::array<std::array<long long, 4>, 4>;
using Mat8 = std::array<std::array<long long, 8>, 8>;

namespace detail {

template <typename M>
M mat_mul(const M& x, const M& y)
{
    M out{};
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

template <typename M>
M mat_add(const M& x, const M& y)
{
    M out{};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i][j] = x[i][j] + y[i][j];
    return out;
}

template <typename M>
M mat_neg(const M& x)
{
    M out{};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i][j] = -x[i][j];
    return out;
}

template <typename M>
M mat_transpose(const M& x)
{
    M out{};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[j][i] = x[i][j];
    return out;
}

template <typename M>
M mat_identity()
{
    M out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i][i] = 1;
    return out;
}

} // namespace detail

struct FiberModel {
    Mat4 omega0{}; // coefficient matrices of the three 2-forms
    Mat4 H{};
    Mat4 G{};
    Mat4 J0{}; // complex structures on the form block
    Mat4 JH{};
    Mat4 JG{};
};

// Contraction of basis vectors against a 2-form F: e_i -| F = sum_j F[i][j] dx_j,
// so the endomorphism sending e_i to its contraction has matrix F^T.
inline Mat4 contraction_operator(const Mat4& form)
{
    return detail::mat_transpose(form);
}

// Build the three 2-forms and their contraction operators.  The negate_h
// switch is a negative control: it breaks J_G J_H = J_0 (and friends) while
// keeping every J orthogonal and square -Id, which is exactly what a sign
// slip in H would look like.
inline FiberModel build_J_matrices(bool negate_h = false)
{
    FiberModel m;

    // Complex 1-forms du1 = dx1 + i dx2, du2 = dx3 + i dx4.
    std::array<long long, 4> re1{1, 0, 0, 0}, im1{0, 1, 0, 0};
    std::array<long long, 4> re2{0, 0, 1, 0}, im2{0, 0, 0, 1};

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            // du1 ^ du2 = (re1 + i im1) ^ (re2 + i im2), coefficientwise.
            long long re = (re1[i] * re2[j] - re1[j] * re2[i]) - (im1[i] * im2[j] - im1[j] * im2[i]);
            long long im = (re1[i] * im2[j] - re1[j] * im2[i]) + (im1[i] * re2[j] - im1[j] * re2[i]);
            m.H[i][j] = re;
            m.G[i][j] = -im;
        }
    }
    if (negate_h) m.H = detail::mat_neg(m.H);

    m.omega0[0][1] = 1;
    m.omega0[1][0] = -1;
    m.omega0[2][3] = 1;
    m.omega0[3][2] = -1;

    m.J0 = contraction_operator(m.omega0);
    m.JH = contraction_operator(m.H);
    m.JG = contraction_operator(m.G);
    return m;
}

struct QuaternionOps {
    Mat8 I{};
    Mat8 K{};
    Mat8 T{};
    Mat8 T_under{};
};

// The scalar 4x4 blocks act on (u, a_s, a_r, a_eta); the form block carries
// J0, JH, JG, -JG respectively.
inline QuaternionOps build_IKT(const FiberModel& m)
{
    constexpr std::array<std::array<long long, 4>, 4> scalar_i{
        {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
    constexpr std::array<std::array<long long, 4>, 4> scalar_k{
        {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}};
    constexpr std::array<std::array<long long, 4>, 4> scalar_t{
        {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}};

    auto assemble = [](const std::array<std::array<long long, 4>, 4>& scalar, const Mat4& form) {
        Mat8 out{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                out[i][j] = scalar[i][j];
                out[i + 4][j + 4] = form[i][j];
            }
        return out;
    };

    QuaternionOps ops;
    ops.I = assemble(scalar_i, m.J0);
    ops.K = assemble(scalar_k, m.JH);
    ops.T = assemble(scalar_t, m.JG);
    ops.T_under = assemble(scalar_t, detail::mat_neg(m.JG));
    return ops;
}

struct IdentityCheck {
    std::string name;
    bool passed = false;
};

struct QuaternionReport {
    std::vector<IdentityCheck> checks;
    bool all_passed = true;

    void record(std::string name, bool ok)
    {
        checks.push_back({std::move(name), ok});
        all_passed = all_passed && ok;
    }
};

// Exhaustive exact verification of the fiberwise algebra.
inline QuaternionReport verify_all(const FiberModel& m)
{
    using detail::mat_identity;
    using detail::mat_mul;
    using detail::mat_neg;
    using detail::mat_transpose;

    QuaternionReport report;
    const Mat4 id4 = mat_identity<Mat4>();
    const Mat8 id8 = mat_identity<Mat8>();

    auto check4 = [&](const std::string& name, const Mat4& lhs, const Mat4& rhs) {
        report.record(name, lhs == rhs);
    };

    check4("J0^2 = -Id", mat_mul(m.J0, m.J0), mat_neg(id4));
    check4("JH^2 = -Id", mat_mul(m.JH, m.JH), mat_neg(id4));
    check4("JG^2 = -Id", mat_mul(m.JG, m.JG), mat_neg(id4));
    check4("JG JH = J0", mat_mul(m.JG, m.JH), m.J0);
    check4("JH J0 = JG", mat_mul(m.JH, m.J0), m.JG);
    check4("J0 JG = JH", mat_mul(m.J0, m.JG), m.JH);
    check4("J0 orthogonal", mat_mul(mat_transpose(m.J0), m.J0), id4);
    check4("JH orthogonal", mat_mul(mat_transpose(m.JH), m.JH), id4);
    check4("JG orthogonal", mat_mul(mat_transpose(m.JG), m.JG), id4);

    QuaternionOps ops = build_IKT(m);
    auto check8 = [&](const std::string& name, const Mat8& lhs, const Mat8& rhs) {
        report.record(name, lhs == rhs);
    };

    check8("K Tu = I", mat_mul(ops.K, ops.T_under), ops.I);
    check8("I K = Tu", mat_mul(ops.I, ops.K), ops.T_under);
    check8("Tu I = K", mat_mul(ops.T_under, ops.I), ops.K);
    check8("I^2 = -Id", mat_mul(ops.I, ops.I), mat_neg(id8));
    check8("K^2 = -Id", mat_mul(ops.K, ops.K), mat_neg(id8));
    check8("Tu^2 = -Id", mat_mul(ops.T_under, ops.T_under), mat_neg(id8));
    check8("IK + KI = 0", detail::mat_add(mat_mul(ops.I, ops.K), mat_mul(ops.K, ops.I)), Mat8{});
    check8("ITu + TuI = 0", detail::mat_add(mat_mul(ops.I, ops.T_under), mat_mul(ops.T_under, ops.I)),
           Mat8{});
    check8("KTu + TuK = 0", detail::mat_add(mat_mul(ops.K, ops.T_under), mat_mul(ops.T_under, ops.K)),
           Mat8{});

    return report;
}

} // namespace conic
