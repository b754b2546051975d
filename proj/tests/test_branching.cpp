#include <catch2/catch_amalgamated.hpp>

#include "conic/branching.hpp"

TEST_CASE("closed form anchor cases")
{
    CHECK(conic::contains_target_closed(1, 1, 0));
    CHECK(conic::contains_target_closed(2, 0, 1));
    CHECK(conic::contains_target_closed(0, 2, -1));
    for (long long l = -20; l <= 20; ++l) CHECK(!conic::contains_target_closed(0, 0, l));

    // Inside the inequality window [-1,2] but killed by the congruence:
    // every weight of W_{2,1} has charge = 2 mod 3, so the target charge -2l
    // requires l = 2 mod 3.
    CHECK(!conic::contains_target_closed(2, 1, 0));
    CHECK(!conic::contains_target_closed(2, 1, 1));
    CHECK(conic::contains_target_closed(2, 1, -1));
    CHECK(conic::contains_target_closed(2, 1, 2));

    CHECK_THROWS_AS(conic::contains_target_closed(-1, 0, 0), conic::domain_error);
}

TEST_CASE("general criterion anchor cases")
{
    CHECK(conic::it_general(1, 0, 1, 0));
    CHECK(!conic::it_general(0, 0, 5, 0));
    CHECK(conic::it_general(2, 1, 1, 2)); // (a,b,l) = (1,1,0): k = 0 works
}

TEST_CASE("closed form reduces to the general criterion")
{
    for (long long a = 0; a <= 10; ++a)
        for (long long b = 0; b <= 10; ++b)
            for (long long l = -15; l <= 15; ++l)
                CHECK(conic::contains_target_closed(a, b, l) ==
                      conic::it_general(a + b, b, -l + 1, 2));
}

TEST_CASE("oracle anchor cases")
{
    CHECK(conic::contains_target_oracle(1, 1, 0));
    CHECK(conic::contains_target_oracle(0, 2, -1));
    CHECK(conic::contains_target_oracle(2, 0, 1));
    for (long long l = -6; l <= 6; ++l) CHECK(!conic::contains_target_oracle(1, 0, l));
    CHECK(!conic::contains_target_oracle(2, 1, 0));
}

TEST_CASE("oracle equivalence on the full grid")
{
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= 8; ++b)
            for (long long l = -12; l <= 12; ++l) {
                bool closed = conic::contains_target_closed(a, b, l);
                bool oracle = conic::contains_target_oracle(a, b, l);
                INFO("a=" << a << " b=" << b << " l=" << l);
                CHECK(closed == oracle);
            }
}

TEST_CASE("string peeling conserves multiplicity")
{
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b) {
            auto system = conic::weight_multiplicities({a, b});
            std::map<long long, long long> charge_total;
            for (const auto& [w, m] : system) charge_total[conic::u1_charge(w)] += m;

            auto dec = conic::branch_to_u2({a, b});
            std::map<long long, long long> peeled_total;
            for (const auto& [charge, dims] : dec.strings)
                for (const auto& [d, count] : dims) peeled_total[charge] += d * count;

            CHECK(charge_total == peeled_total);
        }
}

TEST_CASE("conjugation symmetry of containment")
{
    // Suggested by duality, not asserted as an invariant of the closed form's
    // source; recorded as a grid conjecture.
    for (long long a = 0; a <= 8; ++a)
        for (long long b = 0; b <= 8; ++b)
            for (long long l = -12; l <= 12; ++l)
                CHECK(conic::contains_target_closed(a, b, l) ==
                      conic::contains_target_closed(b, a, -l));
}

TEST_CASE("oracle budget")
{
    CHECK_THROWS_AS(conic::contains_target_oracle(13, 0, 0), conic::resource_error);
    CHECK_THROWS_AS(conic::contains_target_oracle(0, 13, 0), conic::resource_error);
    CHECK_NOTHROW(conic::contains_target_oracle(12, 12, 0));
}
