// Drive the spectrum assembly with user-supplied cohomology tables instead of
// the built-in bundle: load a profile from JSON and compare its spectral gap
// with the built-in one.

#include <iostream>

#include <conic/serialize.hpp>

int main()
{
    using namespace conic;

    // A bundle profile is the cohomology side of the computation: which h^1
    // and h^0 values hold on which range of twists.  This one reproduces the
    // built-in bundle on [-4, 1] from explicit tables.
    Json j = Json::parse(R"({
        "valid_range": [-4, 1],
        "h1_end":  {"-2": 3, "-1": 3},
        "h0_end0": {"1": 6},
        "chern":   {"rank": 2, "c1_sq": 9, "c2": 3}
    })");
    BundleProfile profile = profile_from_json(j);

    std::cout << "spectrum on the open gap (-3, 0):\n";
    Window gap{QuadExt(-3), QuadExt(0), true, true};
    for (const PEigenvalue& e : spec_p_table(profile, gap))
        std::cout << "  " << to_string(e.value) << "  (multiplicity " << e.mult << ")\n";

    // Outside the declared range the profile refuses to extrapolate.
    try {
        spec_p_table(profile, Window{QuadExt(-4), QuadExt(2)});
    } catch (const incomplete_data_error& e) {
        std::cout << "window [-4, 2] is out of reach: " << e.what() << "\n";
    }
    return 0;
}
