#pragma once

// Assembly of Spec P for the deformation operator of a pulled-back
// irreducible Hermitian Yang-Mills bundle: the union of
//
//   S_nabla = { -1 +- sqrt(4+lambda), -2 +- sqrt(4+lambda) :
//               lambda in Spec nabla*nabla on S^5 }
//   S_coh   = { integers l with h^1[P^2,(EndE)(l)] != 0 }
//
// with multiplicities
//
//   mult(mu) = 2 dim E_{mu^2+2mu-3} + 2 dim E_{mu^2+4mu}
//            + [mu integral] ( 2h^1(EndE(mu)) - 2h^0(End_0E(mu))
//                                             - 2h^0(End_0E(-mu-3)) ).

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "conic/cohomology.hpp"
#include "conic/errors.hpp"
#include "conic/laplacian.hpp"
#include "conic/quad_ext.hpp"

namespace conic {

struct Breakdown {
    long long dim_lambda1 = 0; // dim E at mu^2 + 2mu - 3
    long long dim_lambda2 = 0; // dim E at mu^2 + 4mu
    long long h1_term = 0;     // h^1(EndE(mu)), integral mu only
    long long h0_mu = 0;       // h^0(End_0E(mu))
    long long h0_dual = 0;     // h^0(End_0E(-mu-3))
};

struct PEigenvalue {
    QuadExt value;
    long long mult = 0;
    Breakdown breakdown;
};

struct Window {
    QuadExt lo;
    QuadExt hi;
    bool open_lo = false;
    bool open_hi = false;

    bool contains(const QuadExt& x) const
    {
        int cl = cmp(lo, x);
        int ch = cmp(x, hi);
        return (open_lo ? cl < 0 : cl <= 0) && (open_hi ? ch < 0 : ch <= 0);
    }
};

// Spectrum source plus cohomology data for one bundle.  The spectrum callback
// must return the complete table below its cutoff argument; the built-in
// profile wires in the S^5 enumeration.
struct BundleProfile {
    std::function<SpectrumTable(const Rational&)> spectrum;
    CohomologyProfile cohomology = CohomologyProfile::ttp2();
    bool irreducible_hym = true;

    static BundleProfile ttp2(unsigned threads = 1)
    {
        BundleProfile p;
        p.spectrum = [threads](const Rational& cutoff) { return spec_s5(cutoff, 8, threads); };
        return p;
    }
};

namespace detail {

// Least rational bound >= |x| usable as an exact enumeration cutoff.
inline Rational rational_upper_bound_abs(const QuadExt& x)
{
    Rational r = abs(x.rat());
    Rational c = abs(x.coeff());
    if (c == 0 || x.radicand() == 0) return r;
    return r + c * (isqrt_floor(x.radicand()) + 1);
}

class SpectrumCache {
public:
    explicit SpectrumCache(const BundleProfile& profile) : profile_(profile) {}

    const SpectrumTable& table_up_to(const Rational& cutoff)
    {
        if (!table_ || cutoff > table_->cutoff) table_ = profile_.spectrum(cutoff);
        return *table_;
    }

    long long eigenspace_dim(const Rational& value)
    {
        for (const LaplacianLine& line : table_up_to(value).lines)
            if (line.value == value) return line.mult;
        return 0;
    }

private:
    const BundleProfile& profile_;
    std::optional<SpectrumTable> table_;
};

inline PEigenvalue multiplicity_impl(const BundleProfile& profile, SpectrumCache& cache,
                                     const QuadExt& mu)
{
    PEigenvalue out;
    out.value = mu;

    QuadExt lambda1 = eval_quadratic(mu, 2, -3);
    QuadExt lambda2 = eval_quadratic(mu, 4, 0);
    if (lambda1.is_rational()) out.breakdown.dim_lambda1 = cache.eigenspace_dim(lambda1.rat());
    if (lambda2.is_rational()) out.breakdown.dim_lambda2 = cache.eigenspace_dim(lambda2.rat());

    long long mult = 2 * (out.breakdown.dim_lambda1 + out.breakdown.dim_lambda2);
    if (auto n = mu.as_integer()) {
        long long l = n->convert_to<long long>();
        out.breakdown.h1_term = profile.cohomology.h1_end(l);
        out.breakdown.h0_mu = profile.cohomology.h0_end0(l);
        out.breakdown.h0_dual = profile.cohomology.h0_end0(-l - 3);
        mult += 2 * out.breakdown.h1_term - 2 * out.breakdown.h0_mu - 2 * out.breakdown.h0_dual;

        // At the gap twists the unified formula must collapse to the pure
        // cohomological statement dim Eigen_mu = 2 h^1(EndE(mu)).
        if ((l == -1 || l == -2) && mult != 2 * out.breakdown.h1_term)
            throw theorem_violation_error("gap eigenvalue multiplicity differs from 2 h^1");
    }
    if (mult <= 0)
        throw theorem_violation_error("spectrum member computed with nonpositive multiplicity");
    out.mult = mult;
    return out;
}

inline std::set<QuadExt, QuadLess> candidates_impl(SpectrumCache& cache, const Window& window)
{
    std::set<QuadExt, QuadLess> out;
    if (cmp(window.lo, window.hi) > 0) return out;

    // Any candidate -c + s or -c - s (s = sqrt(4+lambda) >= 0, c in {1,2})
    // inside the window obeys s <= max over endpoints e of |e + c|, so
    // lambda <= m^2 - 4 with m that maximum.
    Rational m = 0;
    for (long long c : {1, 2}) {
        m = std::max(m, detail::rational_upper_bound_abs(window.lo + QuadExt(c)));
        m = std::max(m, detail::rational_upper_bound_abs(window.hi + QuadExt(c)));
    }
    Rational lambda_cut = m * m - 4;

    for (const LaplacianLine& line : cache.table_up_to(lambda_cut).lines) {
        if (line.value < -4) continue;
        QuadExt s = sqrt_rational(line.value + 4);
        for (long long c : {1, 2}) {
            for (const QuadExt& mu : {QuadExt(-c) + s, QuadExt(-c) - s})
                if (window.contains(mu)) out.insert(mu);
        }
    }
    return out;
}

} // namespace detail

// All members of S_nabla in the window, in canonical exact form.
inline std::set<QuadExt, QuadLess> s_nabla_candidates(const BundleProfile& profile,
                                                      const Window& window)
{
    detail::SpectrumCache cache(profile);
    return detail::candidates_impl(cache, window);
}

// Multiplicity of one eigenvalue via the decomposition bookkeeping.
inline PEigenvalue multiplicity(const BundleProfile& profile, const QuadExt& mu)
{
    detail::SpectrumCache cache(profile);
    return detail::multiplicity_impl(profile, cache, mu);
}

// The full spectral table on a window: S_nabla united with S_coh, sorted
// increasing, every entry carrying its multiplicity breakdown.
inline std::vector<PEigenvalue> spec_p_table(const BundleProfile& profile, const Window& window)
{
    if (!profile.irreducible_hym)
        throw domain_error("spectral assembly requires an irreducible Hermitian Yang-Mills triple");

    detail::SpectrumCache cache(profile);
    std::set<QuadExt, QuadLess> values = detail::candidates_impl(cache, window);
    for (long long l : profile.cohomology.s_coh())
        if (window.contains(QuadExt(l))) values.insert(QuadExt(l));

    std::vector<PEigenvalue> table;
    table.reserve(values.size());
    for (const QuadExt& mu : values) table.push_back(detail::multiplicity_impl(profile, cache, mu));
    return table;
}

// dim Ker P = 2 h^1[P^2, EndE].
inline long long kernel_dim(const BundleProfile& profile)
{
    return 2 * profile.cohomology.h1_end(0);
}

struct SymmetryPair {
    QuadExt mu;       // the partner below the center -3/2
    QuadExt partner;  // -3 - mu
    long long mult_mu = 0;
    long long mult_partner = 0;
    bool matched = false;
};

struct SymmetryReport {
    QuadExt radius;
    std::vector<SymmetryPair> pairs;
    bool is_symmetric = true;
};

// Pair each eigenvalue mu in [-3/2 - radius, -3/2 + radius] with -3 - mu and
// compare multiplicities; Kodaira-Serre duality predicts equality.
inline SymmetryReport symmetry_report(const BundleProfile& profile, const QuadExt& radius)
{
    const QuadExt center(Rational(-3, 2));
    Window window{center - radius, center + radius, false, false};

    SymmetryReport report;
    report.radius = radius;

    std::vector<PEigenvalue> table = spec_p_table(profile, window);
    auto find_mult = [&table](const QuadExt& v) -> long long {
        for (const PEigenvalue& entry : table)
            if (entry.value == v) return entry.mult;
        return 0;
    };

    for (const PEigenvalue& entry : table) {
        if (cmp(entry.value, center) > 0) continue; // count each pair once, from below
        SymmetryPair pair;
        pair.mu = entry.value;
        pair.partner = QuadExt(-3) - entry.value;
        pair.mult_mu = entry.mult;
        pair.mult_partner = find_mult(pair.partner);
        pair.matched = pair.mult_mu == pair.mult_partner;
        report.is_symmetric = report.is_symmetric && pair.matched;
        report.pairs.push_back(std::move(pair));
    }

    // Anything strictly above the center must be some pair's partner;
    // an unpaired upper eigenvalue breaks the symmetry too.
    for (const PEigenvalue& entry : table) {
        if (cmp(entry.value, center) <= 0) continue;
        QuadExt mirror = QuadExt(-3) - entry.value;
        if (find_mult(mirror) == 0) {
            SymmetryPair pair;
            pair.mu = mirror;
            pair.partner = entry.value;
            pair.mult_mu = 0;
            pair.mult_partner = entry.mult;
            pair.matched = false;
            report.is_symmetric = false;
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

} // namespace conic
