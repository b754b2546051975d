#pragma once

// One-shot verification suite: every headline claim of the computation,
// each checked end to end with exact arithmetic and, where one exists, an
// independent oracle.  The CLI `verify` subcommand and the acceptance test
// binary both run this.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conic/branching.hpp"
#include "conic/cohomology.hpp"
#include "conic/laplacian.hpp"
#include "conic/quaternion_model.hpp"
#include "conic/spec_p.hpp"
#include "conic/su3_matrices.hpp"

namespace conic {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace checks {

inline CheckResult table_reproduction()
{
    CheckResult r{"table-reproduction", false, ""};
    struct Row {
        QuadExt value;
        long long mult;
    };
    const std::vector<Row> expected = {
        {QuadExt(-4), 12},
        {QuadExt(Rational(-1), Rational(-1), Integer(8)), 16},
        {QuadExt(-2), 6},
        {QuadExt(-1), 6},
        {QuadExt(Rational(-2), Rational(1), Integer(8)), 16},
        {QuadExt(1), 12},
    };
    std::vector<PEigenvalue> table =
        spec_p_table(BundleProfile::ttp2(), Window{QuadExt(-4), QuadExt(1)});
    bool ok = table.size() == expected.size();
    for (std::size_t i = 0; ok && i < table.size(); ++i)
        ok = table[i].value == expected[i].value && table[i].mult == expected[i].mult;
    r.passed = ok;
    r.detail = ok ? "six eigenvalues on [-4, 1] with multiplicities 12, 16, 6, 6, 16, 12"
                  : "assembled table deviates from the reference six rows";
    return r;
}

inline CheckResult laplacian_low_spectrum()
{
    CheckResult r{"laplacian-low-spectrum", false, ""};
    SpectrumTable t = spec_s5(8);
    r.passed = t.lines.size() == 2 && t.lines[0].value == 4 && t.lines[0].mult == 8 &&
               t.lines[1].value == 5 && t.lines[1].mult == 12;
    r.detail = r.passed ? "spectrum below 8 is exactly 4 (x8), 5 (x12)"
                        : "low spectrum differs from 4 (x8), 5 (x12)";
    return r;
}

inline CheckResult branching_equivalence()
{
    CheckResult r{"branching-equivalence", false, ""};
    long long mismatches = 0;
    for (long long a = 0; a <= 8; ++a) {
        for (long long b = 0; b <= 8; ++b) {
            for (long long l = -12; l <= 12; ++l) {
                bool closed = contains_target_closed(a, b, l);
                bool general = it_general(a + b, b, -l + 1, 2);
                bool oracle = contains_target_oracle(a, b, l);
                if (closed != general || closed != oracle) ++mismatches;
            }
        }
    }
    r.passed = mismatches == 0;
    std::ostringstream os;
    os << "closed form vs restriction scan vs weight-peeling oracle on a,b <= 8, |l| <= 12: "
       << mismatches << " mismatches";
    r.detail = os.str();
    return r;
}

inline CheckResult casimir_matrices()
{
    CheckResult r{"casimir-matrices", false, ""};
    auto scalar8 = [](const Rational& c) {
        return CQ(QS3(c)) * ExactMat::identity(8);
    };
    auto scalar3 = [](const Rational& c) {
        return CQ(QS3(c)) * ExactMat::identity(3);
    };
    bool standard = casimir_matrix(generator_basis()) == scalar3(Rational(-16, 3));
    bool adjoint = casimir_matrix(adjoint_rep()) == scalar8(Rational(-12));
    auto v2 = su2_rep_on_sym(2);
    bool su2 = casimir_matrix(v2) == CQ(QS3(Rational(-8))) * ExactMat::identity(3);
    bool numeric = verify_casimir_numeric(generator_basis(), Rational(-16, 3)) &&
                   verify_casimir_numeric(adjoint_rep(), Rational(-12));
    r.passed = standard && adjoint && su2 && numeric;
    r.detail = r.passed
                   ? "standard rep -16/3, adjoint -12, su(2) on V2 -8, all exact scalars"
                   : "a Casimir matrix is not the expected scalar";
    return r;
}

inline CheckResult cohomology_consistency()
{
    CheckResult r{"cohomology-consistency", false, ""};
    auto h0_end = [](long long k) { return h0_end0_ttp2(k) + h0_line_bundle(k); };
    bool rr = true;
    for (long long k = -5; k <= 5; ++k)
        rr = rr && h1_via_rr(ChernData{}, h0_end, k) == h1_end_ttp2(k);
    bool serre = true;
    for (long long l = -10; l <= 7; ++l)
        serre = serre && h1_end_ttp2(l) == h1_end_ttp2(-l - 3);
    r.passed = rr && serre;
    r.detail = r.passed ? "Riemann-Roch h^1 matches closed form on [-5, 5]; Serre symmetric"
                        : "Riemann-Roch or Serre consistency broke";
    return r;
}

inline CheckResult holomorphic_section()
{
    CheckResult r{"holomorphic-section", false, ""};
    bool ok = true;
    for (long long l = 1; l <= 3; ++l) {
        SpectrumTable t = spec_p2(l, Rational(4 * l));
        long long mult = 0;
        for (const LaplacianLine& line : t.lines)
            if (line.value == Rational(4 * l)) mult = line.mult;
        ok = ok && mult == 3 * l * (l + 3) / 2;
    }
    r.passed = ok;
    r.detail = ok ? "twisted eigenvalue 4l carries exactly the 3l(l+3)/2 sections, l = 1, 2, 3"
                  : "section count at eigenvalue 4l is off";
    return r;
}

inline CheckResult spectral_symmetry_and_gap(const BundleProfile& profile)
{
    CheckResult r{"spectral-symmetry-and-gap", false, ""};
    SymmetryReport report = symmetry_report(profile, QuadExt(Rational(25, 2)));

    std::vector<PEigenvalue> gap =
        spec_p_table(profile, Window{QuadExt(-3), QuadExt(0), true, true});
    bool gap_ok = true;
    std::set<long long> expected;
    for (long long l : profile.cohomology.s_coh())
        if (-3 < l && l < 0) expected.insert(l);
    gap_ok = gap.size() == expected.size();
    for (const PEigenvalue& e : gap) {
        auto n = e.value.as_integer();
        gap_ok = gap_ok && n && expected.count(n->convert_to<long long>()) &&
                 e.mult == 2 * profile.cohomology.h1_end(n->convert_to<long long>());
    }

    r.passed = report.is_symmetric && gap_ok;
    if (r.passed) {
        r.detail = "mirror multiplicities agree to radius 25/2; gap (-3, 0) holds only "
                   "the cohomological pair";
    } else if (!report.is_symmetric) {
        std::ostringstream os;
        os << "asymmetric pairs:";
        for (const SymmetryPair& p : report.pairs)
            if (!p.matched)
                os << " [" << to_string(p.mu) << ": " << p.mult_mu << " vs " << p.mult_partner
                   << "]";
        r.detail = os.str();
    } else {
        r.detail = "unexpected eigenvalue inside the gap (-3, 0)";
    }
    return r;
}

inline CheckResult quaternion_identities()
{
    CheckResult r{"quaternion-identities", false, ""};
    QuaternionReport base = verify_all(build_J_matrices());

    // Negating H must break all six triple products (the three on the form
    // block and the three 8x8 ones built from the flipped matrices) while
    // leaving every square, orthogonality, and anticommutator intact.
    QuaternionReport skew = verify_all(build_J_matrices(true));
    std::set<std::string> failed;
    for (const IdentityCheck& c : skew.checks)
        if (!c.passed) failed.insert(c.name);
    bool control = failed == std::set<std::string>{"JG JH = J0", "JH J0 = JG", "J0 JG = JH",
                                                   "K Tu = I", "I K = Tu", "Tu I = K"};
    r.passed = base.all_passed && control;
    r.detail = r.passed ? "all fiberwise identities exact; sign flip flags the triple products"
                        : "a quaternion identity or the negative control misbehaved";
    return r;
}

inline CheckResult enumeration_bound()
{
    CheckResult r{"enumeration-bound", false, ""};
    SpectrumTable tight = spec_s5(10, 8);
    SpectrumTable wide = spec_s5(10, 100);
    bool ok = tight.lines.size() == wide.lines.size();
    for (std::size_t i = 0; ok && i < tight.lines.size(); ++i)
        ok = tight.lines[i].value == wide.lines[i].value &&
             tight.lines[i].mult == wide.lines[i].mult &&
             tight.lines[i].witnesses == wide.lines[i].witnesses;
    r.passed = ok;
    r.detail = ok ? "label scans under a^2+b^2 <= 18 and <= 110 produce identical tables"
                  : "widening the label scan changed the spectrum: bound invalid";
    return r;
}

inline CheckResult kernel_claim(const BundleProfile& profile)
{
    CheckResult r{"kernel-claim", false, ""};
    BundleProfile builtin = BundleProfile::ttp2();
    bool builtin_ok = kernel_dim(builtin) == 0;
    std::vector<PEigenvalue> table = spec_p_table(builtin, Window{QuadExt(-4), QuadExt(1)});
    for (const PEigenvalue& e : table) builtin_ok = builtin_ok && !(e.value == QuadExt(0));

    // For whichever profile is active, 0 must appear in the table exactly
    // when the kernel is nontrivial.
    bool zero_in_table = false;
    for (const PEigenvalue& e : spec_p_table(profile, Window{QuadExt(0), QuadExt(0)}))
        zero_in_table = zero_in_table || e.value == QuadExt(0);
    bool active_ok = (kernel_dim(profile) > 0) == zero_in_table;

    r.passed = builtin_ok && active_ok;
    r.detail = r.passed ? "rigid bundle: kernel dimension 0 and 0 absent from the spectrum"
                        : "kernel dimension disagrees with the assembled table";
    return r;
}

} // namespace checks

// Run the suite; `only` keeps checks whose name contains it (empty: all).
// Profile-independent claims always run against the built-in bundle; the
// symmetry, gap, and kernel checks use the supplied profile.
inline std::vector<CheckResult> run_verification(const BundleProfile& profile,
                                                 const std::string& only = "")
{
    std::vector<CheckResult> results;
    auto want = [&only](const char* name) {
        return only.empty() || std::string(name).find(only) != std::string::npos;
    };
    if (want("table-reproduction")) results.push_back(checks::table_reproduction());
    if (want("laplacian-low-spectrum")) results.push_back(checks::laplacian_low_spectrum());
    if (want("branching-equivalence")) results.push_back(checks::branching_equivalence());
    if (want("casimir-matrices")) results.push_back(checks::casimir_matrices());
    if (want("cohomology-consistency")) results.push_back(checks::cohomology_consistency());
    if (want("holomorphic-section")) results.push_back(checks::holomorphic_section());
    if (want("spectral-symmetry-and-gap"))
        results.push_back(checks::spectral_symmetry_and_gap(profile));
    if (want("quaternion-identities")) results.push_back(checks::quaternion_identities());
    if (want("enumeration-bound")) results.push_back(checks::enumeration_bound());
    if (want("kernel-claim")) results.push_back(checks::kernel_claim(profile));
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results)
{
    for (const CheckResult& r : results)
        if (!r.passed) return false;
    return !results.empty();
}

} // namespace conic
