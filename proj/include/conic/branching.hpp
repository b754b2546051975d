#pragma once

// Containment of the S[U(1) x U(2)]-irrep with labels (k1,k2) = (-l+1, 2)
// (u(1)-charge -2l, su(2)-triplet) in the restriction of W_{a,b}, decided
// three independent ways: a closed-form test, the general two-parameter
// criterion it specializes, and a brute-force restriction of the full weight
// system.

#include <algorithm>
#include <map>

#include "conic/errors.hpp"
#include "conic/su3.hpp"

namespace conic {

// Closed form: the window max(3-a-2b, b-a-3) <= l <= min(2a+b-3, 3+b-a)
// together with 3 | (a+2b-3+l).  The congruence is forced by the integrality
// of the parameter k below (3k = a+2b-3+l); dropping it admits false
// positives such as (a,b,l) = (2,1,0), where every weight of W_{2,1} has
// charge congruent to 2 mod 3 but the target charge is 0.
inline bool contains_target_closed(long long a, long long b, long long l)
{
    if (a < 0 || b < 0) throw domain_error("irrep label requires a, b >= 0");
    long long lo = std::max(3 - a - 2 * b, b - a - 3);
    long long hi = std::min(2 * a + b - 3, 3 + b - a);
    return lo <= l && l <= hi && (a + 2 * b - 3 + l) % 3 == 0;
}

// General criterion: V_{k1 x1 + k2 x2} appears in W restricted from the
// representation with torus labels (m1, m2) iff some integer k satisfies
// m1 >= k2+k >= m2 >= k >= 0 and k1 = m1 + m2 - k2 - 3k.  The target case is
// (m1, m2, k1, k2) = (a+b, b, -l+1, 2).
inline bool it_general(long long m1, long long m2, long long k1, long long k2)
{
    for (long long k = 0; k <= m2; ++k) {
        if (m1 >= k2 + k && k2 + k >= m2 && k1 == m1 + m2 - k2 - 3 * k) return true;
    }
    return false;
}

// Restriction of W_{a,b} to S[U(1) x U(2)] by string peeling, organized as
// charge -> (su(2) string dimension -> number of strings).
struct BranchDecomposition {
    std::map<long long, std::map<long long, long long>> strings;
};

inline BranchDecomposition branch_to_u2(const IrrepLabel& label)
{
    // charge -> (su(2) weight -> multiplicity)
    std::map<long long, std::map<long long, long long>> profiles;
    for (const auto& [w, m] : weight_multiplicities(label))
        profiles[u1_charge(w)][su2_weight(w)] += m;

    BranchDecomposition out;
    for (auto& [charge, profile] : profiles) {
        while (!profile.empty()) {
            auto [s_max, count] = *profile.rbegin();
            if (count <= 0) throw consistency_error("string peeling hit a nonpositive count");
            for (long long s = -s_max; s <= s_max; s += 2) {
                auto it = profile.find(s);
                if (it == profile.end() || it->second < count)
                    throw consistency_error("charge profile is not a union of su(2) strings");
                it->second -= count;
                if (it->second == 0) profile.erase(it);
            }
            out.strings[charge][s_max + 1] += count;
        }
    }
    return out;
}

// Number of su(2)-triplets at charge -2l in the restriction.  The relevant
// infinite-dimensional induced module is multiplicity-free, so any count
// above 1 signals an internal inconsistency.
inline long long target_count_oracle(long long a, long long b, long long l)
{
    if (a < 0 || b < 0) throw domain_error("irrep label requires a, b >= 0");
    if (a > 12 || b > 12)
        throw resource_error("branching oracle budget is a, b <= 12");
    BranchDecomposition dec = branch_to_u2({a, b});
    auto charge_it = dec.strings.find(-2 * l);
    if (charge_it == dec.strings.end()) return 0;
    auto dim_it = charge_it->second.find(3);
    long long count = dim_it == charge_it->second.end() ? 0 : dim_it->second;
    if (count > 1) throw consistency_error("target irrep appeared with multiplicity above one");
    return count;
}

inline bool contains_target_oracle(long long a, long long b, long long l)
{
    return target_count_oracle(a, b, l) == 1;
}

} // namespace conic
