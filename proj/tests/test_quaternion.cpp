#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "conic/quaternion_model.hpp"
#include "conic/rational.hpp"

using conic::Mat4;
using conic::Mat8;

TEST_CASE("canonical forms at the base point")
{
    auto m = conic::build_J_matrices();

    // H = Re(du1^du2) = dx1^dx3 - dx2^dx4.
    Mat4 h{};
    h[0][2] = 1;
    h[2][0] = -1;
    h[1][3] = -1;
    h[3][1] = 1;
    CHECK(m.H == h);

    // G = -Im(du1^du2) = -(dx1^dx4 + dx2^dx3).
    Mat4 g{};
    g[0][3] = -1;
    g[3][0] = 1;
    g[1][2] = -1;
    g[2][1] = 1;
    CHECK(m.G == g);

    // Contraction images: J0 maps e1 -> e2, e2 -> -e1, e3 -> e4, e4 -> -e3.
    auto column = [](const Mat4& mat, int j) {
        return std::array<long long, 4>{mat[0][j], mat[1][j], mat[2][j], mat[3][j]};
    };
    CHECK(column(m.J0, 0) == std::array<long long, 4>{0, 1, 0, 0});
    CHECK(column(m.J0, 1) == std::array<long long, 4>{-1, 0, 0, 0});
    CHECK(column(m.JH, 0) == std::array<long long, 4>{0, 0, 1, 0});
    CHECK(column(m.JG, 0) == std::array<long long, 4>{0, 0, 0, -1});
}

TEST_CASE("all identities verify")
{
    auto report = conic::verify_all(conic::build_J_matrices());
    CHECK(report.all_passed);
    CHECK(report.checks.size() == 18);
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.passed);
    }
}

TEST_CASE("negated H is flagged")
{
    auto report = conic::verify_all(conic::build_J_matrices(true));
    CHECK(!report.all_passed);

    auto status = [&](const std::string& name) {
        for (const auto& check : report.checks)
            if (check.name == name) return check.passed;
        FAIL("missing check " << name);
        return false;
    };
    // The sign flip breaks the triple products but none of the squares or
    // orthogonality relations.
    CHECK(!status("JG JH = J0"));
    CHECK(!status("JH J0 = JG"));
    CHECK(status("J0 JG = JH") == false);
    CHECK(status("JH^2 = -Id"));
    CHECK(status("JH orthogonal"));
    CHECK(status("I^2 = -Id"));
}

TEST_CASE("T and T-underbar differ only in the form block sign")
{
    auto ops = conic::build_IKT(conic::build_J_matrices());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(ops.T[i][j] == ops.T_under[i][j]);
            CHECK(ops.T[i + 4][j + 4] == -ops.T_under[i + 4][j + 4]);
            CHECK(ops.T[i][j + 4] == 0);
            CHECK(ops.T[i + 4][j] == 0);
        }

    // The underbar matters: with plain T the triple product identity fails.
    CHECK(conic::detail::mat_mul(ops.K, ops.T) != ops.I);
    CHECK(conic::detail::mat_mul(ops.K, ops.T_under) == ops.I);
}

TEST_CASE("the algebra spanned by Id, I, K, T-underbar has rank 4")
{
    auto ops = conic::build_IKT(conic::build_J_matrices());
    std::vector<Mat8> basis{conic::detail::mat_identity<Mat8>(), ops.I, ops.K, ops.T_under};

    // Gaussian elimination over Q on the 4 x 64 coefficient matrix.
    std::vector<std::vector<conic::Rational>> rows;
    for (const auto& mat : basis) {
        std::vector<conic::Rational> row;
        for (const auto& r : mat)
            for (long long v : r) row.emplace_back(v);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t col = 0;
    while (rank < 4 && col < 64) {
        int pivot = -1;
        for (int r = rank; r < 4; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot >= 0) {
            std::swap(rows[rank], rows[pivot]);
            for (int r = rank + 1; r < 4; ++r) {
                if (rows[r][col] == 0) continue;
                conic::Rational f = rows[r][col] / rows[rank][col];
                for (std::size_t c = col; c < 64; ++c) rows[r][c] -= f * rows[rank][c];
            }
            ++rank;
        }
        ++col;
    }
    CHECK(rank == 4);
}
