// Assemble and print the full spectrum of the deformation operator on the
// interval [-4, 1] for the built-in twisted tangent bundle, then show where
// each multiplicity comes from.

#include <iostream>

#include <conic/spec_p.hpp>

int main()
{
    using namespace conic;

    BundleProfile profile = BundleProfile::ttp2();
    Window window{QuadExt(-4), QuadExt(1)};

    std::cout << "eigenvalues of the deformation operator on [-4, 1]:\n\n";
    for (const PEigenvalue& e : spec_p_table(profile, window)) {
        std::cout << "  " << to_string(e.value) << "  (multiplicity " << e.mult << ")\n";
        std::cout << "      2*dim E(mu^2+2mu-3) = " << 2 * e.breakdown.dim_lambda1
                  << ", 2*dim E(mu^2+4mu) = " << 2 * e.breakdown.dim_lambda2;
        if (e.value.as_integer())
            std::cout << ", 2h^1 = " << 2 * e.breakdown.h1_term
                      << ", -2h^0 = " << -2 * (e.breakdown.h0_mu + e.breakdown.h0_dual);
        std::cout << "\n";
    }

    std::cout << "\nkernel dimension: " << kernel_dim(profile) << "\n";

    SymmetryReport report = symmetry_report(profile, QuadExt(Rational(5, 2)));
    std::cout << "symmetry about -3/2 to radius 5/2: "
              << (report.is_symmetric ? "holds" : "broken") << " across " << report.pairs.size()
              << " mirror pairs\n";
    return 0;
}
