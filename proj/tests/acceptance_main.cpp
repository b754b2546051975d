// Acceptance gate: the ten headline claims, each on one pass/fail line with
// its runtime.  Exits nonzero if any line fails its check or time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <conic/verification.hpp>

namespace {

struct Criterion {
    std::string description;
    double budget_seconds;
    std::function<conic::CheckResult()> run;
};

} // namespace

int main()
{
    using conic::BundleProfile;
    namespace checks = conic::checks;
    const BundleProfile profile = BundleProfile::ttp2();

    std::vector<Criterion> criteria = {
        {"spectral table on [-4, 1]: values -4, -1-2*sqrt(2), -2, -1, -2+2*sqrt(2), 1 with "
         "multiplicities 12, 16, 6, 6, 16, 12",
         1.0, [] { return checks::table_reproduction(); }},
        {"Laplacian spectrum below 8 is exactly 4 (x8), 5 (x12)", 1.0,
         [] { return checks::laplacian_low_spectrum(); }},
        {"closed-form branching = restriction scan = weight-peeling oracle on a,b <= 8, |l| <= 12",
         30.0, [] { return checks::branching_equivalence(); }},
        {"Casimir matrices: -16/3 on the standard rep, -12 on the adjoint, -8 on V2", 1.0,
         [] { return checks::casimir_matrices(); }},
        {"Riemann-Roch h^1 matches the closed form on [-5, 5] and is Serre symmetric", 1.0,
         [] { return checks::cohomology_consistency(); }},
        {"twisted Laplacian eigenvalue 4l has multiplicity 3l(l+3)/2 for l = 1, 2, 3", 5.0,
         [] { return checks::holomorphic_section(); }},
        {"spectrum symmetric about -3/2 to radius 25/2; gap (-3, 0) holds only {-1, -2}", 10.0,
         [&profile] { return checks::spectral_symmetry_and_gap(profile); }},
        {"quaternion fiber identities exact; sign-flip control flags the triple products", 1.0,
         [] { return checks::quaternion_identities(); }},
        {"eigenvalue scan bound validated against a 6x wider label scan at cutoff 10", 10.0,
         [] { return checks::enumeration_bound(); }},
        {"kernel dimension 0 and 0 absent from the spectral table", 1.0,
         [&profile] { return checks::kernel_claim(profile); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        conic::CheckResult result = criteria[i].run();
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        bool ok = result.passed && elapsed <= criteria[i].budget_seconds;
        if (!ok) ++failures;
        std::printf("%s  %2zu. %s (%.3f s)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].description.c_str(), elapsed);
        if (!result.passed) std::printf("      -> %s\n", result.detail.c_str());
        if (result.passed && !ok)
            std::printf("      -> exceeded the %.0f s budget\n", criteria[i].budget_seconds);
    }
    return failures == 0 ? 0 : 1;
}
