#pragma once

// Sheaf-cohomology dimensions on P^2: closed forms for the twisted tangent
// bundle example, the Riemann-Roch Euler characteristic for general Chern
// data, and the cohomological part S_coh of the spectrum.

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "conic/errors.hpp"
#include "conic/rational.hpp"

namespace conic {

// h^1[P^2, (End T'P^2)(l)]: equals c_2(End T'P^2) = 3 at l = -1, -2 and
// vanishes elsewhere (positivity kills l <= -3 and l >= 0 separately).
inline long long h1_end_ttp2(long long l)
{
    return (l == -1 || l == -2) ? 3 : 0;
}

// h^0[P^2, (End_0 T'P^2)(l)] = 3l(l+3)/2 for l > 0, zero otherwise
// (stability of the tangent bundle for l <= 0).
inline long long h0_end0_ttp2(long long l)
{
    return l > 0 ? 3 * l * (l + 3) / 2 : 0;
}

// h^0[P^2, O(k)] = (k+1)(k+2)/2 for k >= 0.
inline long long h0_line_bundle(long long k)
{
    return k >= 0 ? (k + 1) * (k + 2) / 2 : 0;
}

struct ChernData {
    long long rank = 2;
    long long c1_sq = 9;
    long long c2 = 3;
};

// chi[P^2, (EndE)(k)] by Riemann-Roch in terms of r, c1^2(E), c2(E).  The
// rational terms always combine to an integer: r^2 k(k+3) is even.
inline long long euler_char(const ChernData& chern, long long k)
{
    long long r = chern.rank;
    Rational chi = Rational(r * r * k * k, 2) + Rational(r * r) + Rational(3 * k * r * r, 2) -
                   2 * r * chern.c2 + (r - 1) * chern.c1_sq;
    auto n = as_integer(chi);
    if (!n) throw consistency_error("Euler characteristic must be an integer");
    return n->convert_to<long long>();
}

// h^1[P^2, (EndE)(k)] from the Euler characteristic, given h^0 of EndE at
// the two Serre-dual twists:
//   h^1 = h^0(k) + h^0(-k-3) + 2r c2 - (r-1) c1^2 - r^2 (k+1)(k+2)/2.
template <typename H0Fn>
inline long long h1_via_rr(const ChernData& chern, H0Fn&& h0_end, long long k)
{
    long long r = chern.rank;
    long long value = h0_end(k) + h0_end(-k - 3) + 2 * r * chern.c2 - (r - 1) * chern.c1_sq -
                      r * r * (k + 1) * (k + 2) / 2;
    if (value < 0)
        throw consistency_error("negative h^1 from Riemann-Roch; inconsistent h^0 inputs");
    return value;
}

// Cohomology data backing the spectrum assembly.  The built-in profile uses
// the closed forms above and is valid at every twist; profiles loaded from
// explicit tables carry a finite validity window and refuse to extrapolate.
class CohomologyProfile {
public:
    static CohomologyProfile ttp2()
    {
        CohomologyProfile p;
        p.closed_form_h0_ = true;
        p.h1_ = {{-2, 3}, {-1, 3}};
        return p;
    }

    static CohomologyProfile from_tables(std::pair<long long, long long> valid_range,
                                         std::map<long long, long long> h1,
                                         std::map<long long, long long> h0,
                                         ChernData chern = ChernData{},
                                         bool irreducible_hym = true)
    {
        if (valid_range.first > valid_range.second)
            throw profile_error("profile valid_range is empty");
        CohomologyProfile p;
        p.valid_range_ = valid_range;
        p.h1_ = std::move(h1);
        p.h0_ = std::move(h0);
        p.chern_ = chern;
        p.irreducible_hym_ = irreducible_hym;
        for (const auto& [l, v] : p.h1_) {
            if (v < 0) throw profile_error("negative h^1 entry in profile");
            if (!p.in_range(l)) throw profile_error("h^1 entry outside valid_range");
        }
        for (const auto& [l, v] : p.h0_) {
            if (v < 0) throw profile_error("negative h^0 entry in profile");
            if (!p.in_range(l)) throw profile_error("h^0 entry outside valid_range");
        }
        return p;
    }

    bool in_range(long long l) const
    {
        return !valid_range_ || (valid_range_->first <= l && l <= valid_range_->second);
    }

    std::optional<std::pair<long long, long long>> valid_range() const { return valid_range_; }

    long long h1_end(long long l) const
    {
        require_range(l, "h^1");
        auto it = h1_.find(l);
        return it == h1_.end() ? 0 : it->second;
    }

    long long h0_end0(long long l) const
    {
        require_range(l, "h^0");
        if (closed_form_h0_) return h0_end0_ttp2(l);
        auto it = h0_.find(l);
        return it == h0_.end() ? 0 : it->second;
    }

    const ChernData& chern() const { return chern_; }
    bool irreducible_hym() const { return irreducible_hym_; }

    // The twists with nonvanishing h^1: finite by Enriques-Severi-Zariski.
    std::set<long long> s_coh() const
    {
        std::set<long long> out;
        for (const auto& [l, v] : h1_)
            if (v != 0) out.insert(l);
        return out;
    }

private:
    CohomologyProfile() = default;

    void require_range(long long l, const char* what) const
    {
        if (!in_range(l))
            throw incomplete_data_error(std::string(what) +
                                        " requested outside the profile's valid range");
    }

    std::optional<std::pair<long long, long long>> valid_range_; // nullopt: all twists
    std::map<long long, long long> h1_;
    std::map<long long, long long> h0_;
    bool closed_form_h0_ = false;
    ChernData chern_{};
    bool irreducible_hym_ = true;
};

inline std::set<long long> s_coh(const CohomologyProfile& profile)
{
    return profile.s_coh();
}

} // namespace conic
