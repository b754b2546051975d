#include <catch2/catch_amalgamated.hpp>

#include "conic/su3.hpp"
#include "conic/su3_matrices.hpp"
#include "weight_oracle.hpp"

using conic::IrrepLabel;
using conic::Rational;
using conic::Weight;

TEST_CASE("dimension formula")
{
    CHECK(conic::dim({0, 0}) == 1);
    CHECK(conic::dim({1, 0}) == 3);
    CHECK(conic::dim({0, 1}) == 3);
    CHECK(conic::dim({1, 1}) == 8);
    CHECK(conic::dim({2, 0}) == 6);
    CHECK(conic::dim({2, 2}) == 27);
    CHECK(conic::dim({3, 0}) == 10);
    CHECK_THROWS_AS(IrrepLabel(-1, 0), conic::domain_error);
}

TEST_CASE("casimir scalars")
{
    CHECK(conic::casimir_su3({0, 0}) == 0);
    CHECK(conic::casimir_su3({1, 1}) == -12);
    CHECK(conic::casimir_su3({1, 0}) == Rational(-16, 3));
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= 8; ++b)
            if (a + b > 0) CHECK(conic::casimir_su3({a, b}) < 0);

    CHECK(conic::casimir_su2(0) == 0);
    CHECK(conic::casimir_su2(1) == -3);
    CHECK(conic::casimir_su2(2) == -8);

    CHECK(conic::casimir_k_twisted(0) == -8);
    CHECK(conic::casimir_k_twisted(1) == Rational(-28, 3));
    CHECK(conic::casimir_k_twisted(-3) == -20);
    CHECK(conic::casimir_k_twisted(2) == conic::casimir_k_twisted(-2));
}

TEST_CASE("weight coordinates")
{
    CHECK(conic::weight_from_xstar(1, 0, 0) == Weight(2, -1, -1));
    CHECK(conic::highest_weight({1, 1}) == Weight(3, 0, -3));
    CHECK(conic::highest_weight({2, 0}) == Weight(4, -2, -2));
    CHECK_THROWS_AS(Weight(1, 0, 0), conic::domain_error);

    // Torus evaluations stay integral across whole weight systems.
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b)
            for (const auto& [w, m] : conic::weight_multiplicities({a, b})) {
                CHECK((w[1] - w[2]) % 3 == 0);
                (void)m;
            }

    // Charge of the target functional (-l+1)x1 + 2x2 is -2l.
    for (long long l = -12; l <= 12; ++l)
        CHECK(conic::u1_charge(conic::weight_from_xstar(-l + 1, 2, 0)) == -2 * l);
}

TEST_CASE("small weight systems")
{
    auto standard = conic::weight_multiplicities({1, 0});
    REQUIRE(standard.size() == 3);
    CHECK(standard.at(Weight(2, -1, -1)) == 1);
    CHECK(standard.at(Weight(-1, 2, -1)) == 1);
    CHECK(standard.at(Weight(-1, -1, 2)) == 1);

    auto adjoint = conic::weight_multiplicities({1, 1});
    REQUIRE(adjoint.size() == 7);
    CHECK(adjoint.at(Weight(0, 0, 0)) == 2);
    CHECK(adjoint.at(Weight(3, -3, 0)) == 1);
    CHECK(adjoint.at(Weight(-3, 3, 0)) == 1);
    CHECK(adjoint.at(Weight(3, 0, -3)) == 1);

    auto sym2 = conic::weight_multiplicities({2, 0});
    CHECK(sym2.size() == 6);
    for (const auto& [w, m] : sym2) {
        CHECK(m == 1);
        (void)w;
    }
}

TEST_CASE("weight system properties")
{
    for (long long a = 0; a <= 8; ++a) {
        for (long long b = 0; b <= 8; ++b) {
            auto system = conic::weight_multiplicities({a, b});

            long long total = 0;
            for (const auto& [w, m] : system) {
                total += m;
                // Weyl symmetry: any coordinate swap lands on the same multiplicity.
                CHECK(system.at(Weight(w[1], w[0], w[2])) == m);
                CHECK(system.at(Weight(w[0], w[2], w[1])) == m);
            }
            CHECK(total == conic::dim({a, b}));

            // Duality: mirror of the (b,a) system.
            auto dual = conic::weight_multiplicities({b, a});
            REQUIRE(dual.size() == system.size());
            for (const auto& [w, m] : system) CHECK(dual.at(Weight(-w[0], -w[1], -w[2])) == m);

            CHECK(system.at(conic::highest_weight({a, b})) == 1);
        }
    }
}

TEST_CASE("Freudenthal agrees with Weyl character division")
{
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= 8; ++b) {
            auto freudenthal = conic::weight_multiplicities({a, b});
            auto character = oracle::weight_system({a, b});
            CHECK(freudenthal == character);
        }
}

TEST_CASE("generator basis structure")
{
    auto e = conic::generator_basis();
    for (int i = 0; i < 8; ++i) {
        CHECK(trace(e[i]) == conic::CQ());
        // Anti-Hermitian: entry (j,k) equals minus the conjugate of (k,j).
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(e[i].at(j, k) == -conj(e[i].at(k, j)));
        for (int j = 0; j < 8; ++j) {
            conic::QS3 expected = (i == j) ? conic::QS3(1) : conic::QS3(0);
            CHECK(conic::pairing(e[i], e[j]) == expected);
        }
    }
}

TEST_CASE("casimir matrix checks")
{
    auto e = conic::generator_basis();
    CHECK(conic::verify_casimir_numeric(e, Rational(-16, 3)));
    CHECK(!conic::verify_casimir_numeric(e, Rational(-5)));

    auto ad = conic::adjoint_rep();
    CHECK(conic::verify_casimir_numeric(ad, Rational(-12)));

    // Exact statement behind the numeric one: the sums are scalar matrices.
    CHECK(conic::casimir_matrix(ad) == conic::CQ(-12) * conic::ExactMat::identity(8));

    auto v2 = conic::su2_rep_on_sym(2);
    CHECK(conic::casimir_matrix(v2) == conic::CQ(-8) * conic::ExactMat::identity(3));
    auto v1 = conic::su2_rep_on_sym(1);
    CHECK(conic::casimir_matrix(v1) == conic::CQ(-3) * conic::ExactMat::identity(2));
    for (int d = 0; d <= 6; ++d) {
        auto rep = conic::su2_rep_on_sym(d);
        CHECK(conic::verify_casimir_numeric(rep, conic::casimir_su2(d)));
    }
}

TEST_CASE("symmetric powers are Lie homomorphisms")
{
    // In the 2x2 block: [e6,e7] = 2e8, [e7,e8] = 2e6, [e8,e6] = 2e7.
    for (int d = 1; d <= 5; ++d) {
        auto rep = conic::su2_rep_on_sym(d);
        CHECK(conic::commutator(rep[0], rep[1]) == conic::CQ(2) * rep[2]);
        CHECK(conic::commutator(rep[1], rep[2]) == conic::CQ(2) * rep[0]);
        CHECK(conic::commutator(rep[2], rep[0]) == conic::CQ(2) * rep[1]);
    }
}

TEST_CASE("shape errors")
{
    std::array<conic::ExactMat, 2> bad{conic::ExactMat(2, 2), conic::ExactMat(3, 3)};
    CHECK_THROWS_AS(conic::casimir_matrix(bad), conic::shape_error);
    std::array<conic::ExactMat, 1> nonsquare{conic::ExactMat(2, 3)};
    CHECK_THROWS_AS(conic::casimir_matrix(nonsquare), conic::shape_error);
    CHECK_THROWS_AS(conic::trace(conic::ExactMat(2, 3)), conic::shape_error);
}
