#pragma once

// SU(3) representation theory: irreducible labels W_{a,b}, dimensions, Casimir
// eigenvalues, and complete weight systems via the Freudenthal recursion.
//
// Weights live in the integer lattice {w in Z^3 : w1+w2+w3 = 0}.  A functional
// k1*x1 + k2*x2 + k3*x3 on the diagonal torus (x_i reading off the i-th entry)
// is stored as w_i = 3*k_i - (k1+k2+k3), i.e. three times its traceless part.
// The factor 3 keeps every weight of every W_{a,b} integral.  In these
// coordinates the Weyl group acts by permuting the three entries.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "conic/errors.hpp"
#include "conic/rational.hpp"

namespace conic {

struct Weight {
    std::array<long long, 3> w{0, 0, 0};

    Weight() = default;
    Weight(long long w1, long long w2, long long w3) : w{w1, w2, w3}
    {
        if (w1 + w2 + w3 != 0) throw domain_error("weight coordinates must sum to zero");
    }

    auto operator<=>(const Weight&) const = default;

    long long operator[](int i) const { return w[static_cast<std::size_t>(i)]; }
};

inline long long inner(const Weight& u, const Weight& v)
{
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Weight operator+(const Weight& u, const Weight& v)
{
    return Weight(u[0] + v[0], u[1] + v[1], u[2] + v[2]);
}

inline Weight operator-(const Weight& u, const Weight& v)
{
    return Weight(u[0] - v[0], u[1] - v[1], u[2] - v[2]);
}

inline Weight operator*(long long c, const Weight& u)
{
    return Weight(c * u[0], c * u[1], c * u[2]);
}

// Functional k1*x1 + k2*x2 + k3*x3 in lattice coordinates.
inline Weight weight_from_xstar(long long k1, long long k2, long long k3)
{
    long long s = k1 + k2 + k3;
    return Weight(3 * k1 - s, 3 * k2 - s, 3 * k3 - s);
}

// Value of the weight on the torus direction diag(2i,-i,-i): always integral.
inline long long u1_charge(const Weight& w)
{
    return w[0];
}

// Value on diag(0,i,-i), the su(2) Cartan direction inside u(2): integral,
// with the su(2) triplet showing up as the string {-2, 0, 2}.
inline long long su2_weight(const Weight& w)
{
    return (w[1] - w[2]) / 3;
}

struct IrrepLabel {
    long long a = 0;
    long long b = 0;

    IrrepLabel(long long a_, long long b_) : a(a_), b(b_)
    {
        if (a < 0 || b < 0) throw domain_error("irrep label requires a, b >= 0");
    }

    auto operator<=>(const IrrepLabel&) const = default;
};

inline long long dim(const IrrepLabel& label)
{
    return (label.a + 1) * (label.b + 1) * (label.a + label.b + 2) / 2;
}

// Highest weight (a+b)x1 + b*x2 of W_{a,b}.
inline Weight highest_weight(const IrrepLabel& label)
{
    return weight_from_xstar(label.a + label.b, label.b, 0);
}

// Casimir scalar of W_{a,b}: sum of squares of a basis orthonormal for the
// pairing -tr(XY)/2.
inline Rational casimir_su3(const IrrepLabel& label)
{
    Rational a = label.a, b = label.b;
    return Rational(-4, 3) * (a * a + b * b + a * b) - 4 * a - 4 * b;
}

// Casimir of su(2) on the (d+1)-dimensional irrep V_d, same normalization.
inline Rational casimir_su2(long long d)
{
    if (d < 0) throw domain_error("su(2) label requires d >= 0");
    Rational dd = d;
    return -(dd * dd + 2 * dd);
}

// Casimir of s[u(1) x u(2)] on the charge-twisted module rho_{-l} (x) End_0 m:
// the su(2) part contributes -8, the u(1) twist -4l^2/3.
inline Rational casimir_k_twisted(long long l)
{
    Rational ll = l;
    return Rational(-8) - Rational(4, 3) * ll * ll;
}

using WeightSystem = std::map<Weight, long long>;

namespace detail {

inline Weight dominant_rep(const Weight& mu)
{
    std::array<long long, 3> s = mu.w;
    std::sort(s.begin(), s.end(), std::greater<>());
    return Weight(s[0], s[1], s[2]);
}

} // namespace detail

// Complete weight system of W_{a,b} by Freudenthal's recursion.  Dominant
// multiplicities are computed level by level below the highest weight, then
// spread over Weyl orbits (coordinate permutations).
inline WeightSystem weight_multiplicities(const IrrepLabel& label)
{
    const Weight lambda = highest_weight(label);
    const Weight rho(3, 0, -3);
    const std::array<Weight, 3> positive = {Weight(3, -3, 0), Weight(0, 3, -3), Weight(3, 0, -3)};

    const Weight alpha1 = positive[0];
    const Weight alpha2 = positive[1];

    // Dominant weights of W_{a,b} are exactly the dominant lattice points
    // lambda - p*alpha1 - q*alpha2 with p,q >= 0; all of them fall in the
    // box p,q <= a+b.
    struct Dominant {
        long long level;
        Weight mu;
    };
    std::vector<Dominant> dominants;
    const long long box = label.a + label.b;
    for (long long p = 0; p <= box; ++p) {
        for (long long q = 0; q <= box; ++q) {
            Weight mu = lambda - p * alpha1 - q * alpha2;
            if (mu[0] >= mu[1] && mu[1] >= mu[2]) dominants.push_back({p + q, mu});
        }
    }
    std::sort(dominants.begin(), dominants.end(), [](const Dominant& x, const Dominant& y) {
        if (x.level != y.level) return x.level < y.level;
        return x.mu < y.mu;
    });

    const long long lambda_norm = inner(lambda, lambda);
    const Weight lambda_rho = lambda + rho;
    const long long top_norm = inner(lambda_rho, lambda_rho);

    std::map<Weight, long long> dominant_mult;
    auto mult_at = [&](const Weight& nu) -> long long {
        auto it = dominant_mult.find(detail::dominant_rep(nu));
        return it == dominant_mult.end() ? 0 : it->second;
    };

    for (const auto& [level, mu] : dominants) {
        if (level == 0) {
            dominant_mult[mu] = 1;
            continue;
        }
        long long numer = 0;
        for (const Weight& alpha : positive) {
            for (long long k = 1;; ++k) {
                Weight nu = mu + k * alpha;
                if (inner(nu, nu) > lambda_norm) break;
                numer += 2 * mult_at(nu) * inner(nu, alpha);
            }
        }
        Weight mu_rho = mu + rho;
        long long denom = top_norm - inner(mu_rho, mu_rho);
        if (denom <= 0 || numer % denom != 0)
            throw consistency_error("Freudenthal recursion produced a non-integral step");
        dominant_mult[mu] = numer / denom;
    }

    WeightSystem system;
    for (const auto& [mu, m] : dominant_mult) {
        if (m <= 0) throw consistency_error("Freudenthal recursion produced a nonpositive multiplicity");
        std::array<long long, 3> perm = mu.w;
        std::sort(perm.begin(), perm.end());
        do {
            system[Weight(perm[0], perm[1], perm[2])] = m;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return system;
}

} // namespace conic
