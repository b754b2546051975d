// conic-spectra: exact spectral tables for the deformation operator of the
// twisted tangent bundle, plus the supporting Laplacian, cohomology, and
// branching queries and a self-verification suite.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <conic/serialize.hpp>
#include <conic/verification.hpp>

namespace {

struct Options {
    std::string min = "-4";
    std::string max = "1";
    std::string cutoff = "8";
    bool open = false;
    std::string space = "s5";
    long long twist = 0;
    long long a = 0;
    long long b = 0;
    bool oracle = false;
    std::string profile_path;
    std::string only;
    std::string format = "pretty";
    unsigned threads = 1;
};

conic::BundleProfile resolve_profile(const Options& opt)
{
    std::string path = opt.profile_path;
    if (path.empty()) {
        if (const char* env = std::getenv("CONIC_SPECTRA_PROFILE")) path = env;
    }
    if (path.empty()) return conic::BundleProfile::ttp2(opt.threads);
    return conic::load_profile(path, opt.threads);
}

int cmd_table(const Options& opt)
{
    conic::BundleProfile profile = resolve_profile(opt);
    conic::Window window{conic::parse_quad(opt.min), conic::parse_quad(opt.max), opt.open,
                         opt.open};
    std::vector<conic::PEigenvalue> table = conic::spec_p_table(profile, window);
    if (opt.format == "json")
        std::cout << conic::json_dump(conic::spec_p_to_json(table));
    else if (opt.format == "csv")
        std::cout << conic::spec_p_csv(table);
    else
        std::cout << conic::spec_p_pretty(table);
    return 0;
}

int cmd_laplacian(const Options& opt)
{
    conic::Rational cutoff = conic::parse_rational(opt.cutoff);
    conic::SpectrumTable table = opt.space == "p2"
                                     ? conic::spec_p2(opt.twist, cutoff)
                                     : conic::spec_s5(cutoff, 8, opt.threads);
    if (opt.format == "json")
        std::cout << conic::json_dump(conic::laplacian_to_json(table));
    else if (opt.format == "csv")
        std::cout << conic::laplacian_csv(table);
    else
        std::cout << conic::laplacian_pretty(table);
    return 0;
}

int cmd_cohomology(const Options& opt)
{
    conic::BundleProfile profile = resolve_profile(opt);
    long long h1 = profile.cohomology.h1_end(opt.twist);
    long long h0 = profile.cohomology.h0_end0(opt.twist);
    if (opt.format == "json") {
        conic::Json j;
        j["l"] = opt.twist;
        j["h1"] = h1;
        j["h0_end0"] = h0;
        std::cout << conic::json_dump(j);
    } else {
        std::cout << "h1=" << h1 << " h0_end0=" << h0 << "\n";
    }
    return 0;
}

int cmd_branch(const Options& opt)
{
    bool closed = conic::contains_target_closed(opt.a, opt.b, opt.twist);
    std::optional<bool> oracle;
    if (opt.oracle) oracle = conic::contains_target_oracle(opt.a, opt.b, opt.twist);
    if (opt.format == "json") {
        conic::Json j;
        j["a"] = opt.a;
        j["b"] = opt.b;
        j["l"] = opt.twist;
        j["closed"] = closed;
        if (oracle) j["oracle"] = *oracle;
        std::cout << conic::json_dump(j);
        return 0;
    }
    std::cout << "closed=" << (closed ? "true" : "false");
    if (oracle) std::cout << " oracle=" << (*oracle ? "true" : "false");
    std::cout << "\n";
    return 0;
}

int cmd_verify(const Options& opt)
{
    conic::BundleProfile profile = resolve_profile(opt);
    std::vector<conic::CheckResult> results = conic::run_verification(profile, opt.only);
    if (opt.format == "json") {
        conic::Json j;
        conic::Json checks = conic::Json::array();
        for (const conic::CheckResult& r : results) {
            conic::Json c;
            c["name"] = r.name;
            c["passed"] = r.passed;
            c["detail"] = r.detail;
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["all_passed"] = conic::all_passed(results);
        std::cout << conic::json_dump(j);
    } else {
        for (const conic::CheckResult& r : results)
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        if (results.empty()) std::cout << "no checks matched the filter\n";
    }
    return conic::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact spectrum of the deformation operator on the twisted tangent bundle"};
    app.require_subcommand(1);

    Options opt;

    auto add_format = [&opt](CLI::App* sub, bool with_csv) {
        auto values = with_csv ? std::set<std::string>{"pretty", "json", "csv"}
                               : std::set<std::string>{"pretty", "json"};
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember(values))
            ->capture_default_str();
    };
    auto add_profile = [&opt](CLI::App* sub) {
        sub->add_option("--profile", opt.profile_path,
                        "Bundle profile JSON (default: built-in twisted tangent bundle; "
                        "CONIC_SPECTRA_PROFILE is honored)");
    };
    auto add_threads = [&opt](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "Worker threads for the spectrum scan")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* table = app.add_subcommand("table", "Assembled spectrum on a window");
    table->add_option("--min", opt.min, "Lower window bound, exact (e.g. -4 or -1-2*sqrt(2))")
        ->capture_default_str();
    table->add_option("--max", opt.max, "Upper window bound, exact")->capture_default_str();
    table->add_flag("--open", opt.open, "Treat both window bounds as open");
    add_profile(table);
    add_threads(table);
    add_format(table, true);

    CLI::App* lap = app.add_subcommand("laplacian", "Rough Laplacian spectrum");
    lap->add_option("--space", opt.space, "Base space")
        ->check(CLI::IsMember({"s5", "p2"}))
        ->capture_default_str();
    lap->add_option("--l", opt.twist, "Twist (p2 only)")->capture_default_str();
    lap->add_option("--max", opt.cutoff, "Spectrum cutoff, rational")->capture_default_str();
    add_threads(lap);
    add_format(lap, true);

    CLI::App* coh = app.add_subcommand("cohomology", "Cohomology dimensions at a twist");
    coh->add_option("--l", opt.twist, "Twist")->required();
    add_profile(coh);
    add_format(coh, false);

    CLI::App* branch = app.add_subcommand("branch", "Membership of the target representation");
    branch->add_option("--a", opt.a, "Highest-weight label a")->required();
    branch->add_option("--b", opt.b, "Highest-weight label b")->required();
    branch->add_option("--l", opt.twist, "Twist")->required();
    branch->add_flag("--oracle", opt.oracle, "Also run the brute-force weight-peeling oracle");
    add_format(branch, false);

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--only", opt.only, "Run only checks whose name contains this substring");
    add_profile(verify);
    add_format(verify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return cmd_table(opt);
        if (lap->parsed()) return cmd_laplacian(opt);
        if (coh->parsed()) return cmd_cohomology(opt);
        if (branch->parsed()) return cmd_branch(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const conic::profile_error& e) {
        std::cerr << "profile error: " << e.what() << "\n";
        return 2;
    } catch (const conic::incomplete_data_error& e) {
        std::cerr << "incomplete data: " << e.what() << "\n";
        return 3;
    } catch (const conic::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const conic::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
