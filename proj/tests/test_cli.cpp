#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <conic/serialize.hpp>
#include <conic/verification.hpp>

using namespace conic;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(CONIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

const char* kGoodProfile = R"({
  "valid_range": [-4, 1],
  "h1_end": {"-2": 3, "-1": 3},
  "h0_end0": {"1": 6}
})";

} // namespace

TEST_CASE("exact values embed in and return from JSON")
{
    QuadExt v(Rational(-1), Rational(-2), Integer(2));
    Json j = quad_to_json(v);
    CHECK(j.at("rat") == "-1");
    CHECK(j.at("coeff") == "-2");
    CHECK(j.at("radicand") == 2);
    CHECK(quad_from_json(j) == v);

    // Rational values carry a zero radical part.
    Json r = quad_to_json(QuadExt(Rational(7, 3)));
    CHECK(r.at("rat") == "7/3");
    CHECK(r.at("coeff") == "0");
    CHECK(r.at("radicand") == 0);

    // Round trip across the whole reference table.
    auto table = spec_p_table(BundleProfile::ttp2(), Window{QuadExt(-4), QuadExt(1)});
    for (const PEigenvalue& e : table) {
        CHECK(quad_from_json(quad_to_json(e.value)) == e.value);
        CHECK(parse_quad(to_string(e.value)) == e.value);
    }
}

TEST_CASE("table emitters produce the reference bytes")
{
    auto table = spec_p_table(BundleProfile::ttp2(), Window{QuadExt(-4), QuadExt(1)});

    CHECK(spec_p_csv(table) ==
          "value_exact,value_approx,mult\n"
          "-4,-4,12\n"
          "-1 - 2*sqrt(2),-3.82842712475,16\n"
          "-2,-2,6\n"
          "-1,-1,6\n"
          "-2 + 2*sqrt(2),0.828427124746,16\n"
          "1,1,12\n");

    Json j = spec_p_to_json(table);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 6);
    CHECK(j[1].at("value").at("coeff") == "-2");
    CHECK(j[1].at("approx").get<double>() == approx_display(table[1].value));
    CHECK(j[1].at("mult") == 16);
    CHECK(j[1].at("breakdown").at("dim_lambda1") == 8);

    CHECK(laplacian_pretty(spec_s5(8)) == "4 (×8), 5 (×12)\n");
    CHECK(laplacian_csv(spec_s5(8)) == "value,mult\n4,8\n5,12\n");

    Json lap = laplacian_to_json(spec_s5(8));
    CHECK(lap.at("space") == "s5");
    CHECK(lap.at("cutoff") == "8");
    REQUIRE(lap.at("lines").size() == 2);
    CHECK(lap.at("lines")[0].at("value") == "4");
    CHECK(lap.at("lines")[0].at("mult") == 8);
    CHECK(lap.at("lines")[0].at("witnesses").size() == 1);
    CHECK(lap.at("lines")[0].at("witnesses")[0] == Json::array({1, 1, 0}));
}

TEST_CASE("emission does not depend on the thread count")
{
    auto one = spec_p_table(BundleProfile::ttp2(1), Window{QuadExt(-4), QuadExt(1)});
    auto four = spec_p_table(BundleProfile::ttp2(4), Window{QuadExt(-4), QuadExt(1)});
    CHECK(json_dump(spec_p_to_json(one)) == json_dump(spec_p_to_json(four)));
    CHECK(spec_p_csv(one) == spec_p_csv(four));
    CHECK(json_dump(laplacian_to_json(spec_s5(20, 8, 1))) ==
          json_dump(laplacian_to_json(spec_s5(20, 8, 3))));
}

TEST_CASE("profiles load from JSON")
{
    Json j = Json::parse(kGoodProfile);
    BundleProfile p = profile_from_json(j);
    CHECK(p.cohomology.h1_end(-2) == 3);
    CHECK(p.cohomology.h0_end0(1) == 6);
    CHECK(p.cohomology.h0_end0(0) == 0); // omitted keys default to zero
    CHECK(p.cohomology.chern().rank == 2);
    CHECK(p.cohomology.chern().c1_sq == 9);
    CHECK(p.cohomology.chern().c2 == 3);
    CHECK(p.irreducible_hym);

    // The loaded tables reproduce the built-in spectrum on their range.
    auto table = spec_p_table(p, Window{QuadExt(-4), QuadExt(1)});
    REQUIRE(table.size() == 6);
    CHECK(table[0].mult == 12);
    CHECK(table[2].mult == 6);

    SECTION("chern and flags are honored")
    {
        Json custom = Json::parse(R"({
            "valid_range": [-1, 0],
            "chern": {"rank": 3, "c1_sq": 0, "c2": 5},
            "irreducible_hym": false
        })");
        BundleProfile q = profile_from_json(custom);
        CHECK(q.cohomology.chern().rank == 3);
        CHECK(q.cohomology.chern().c2 == 5);
        CHECK_FALSE(q.irreducible_hym);
    }
    SECTION("malformed profiles raise profile errors")
    {
        CHECK_THROWS_AS(profile_from_json(Json::parse("[]")), profile_error);
        CHECK_THROWS_AS(profile_from_json(Json::parse("{}")), profile_error);
        CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"valid_range": [0]})")), profile_error);
        CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"valid_range": [1, 0]})")),
                        profile_error);
        CHECK_THROWS_AS(
            profile_from_json(Json::parse(R"({"valid_range": [0, 1], "h1_end": {"x": 1}})")),
            profile_error);
        CHECK_THROWS_AS(
            profile_from_json(Json::parse(R"({"valid_range": [0, 1], "h1_end": {"0": 1.5}})")),
            profile_error);
        CHECK_THROWS_AS(
            profile_from_json(Json::parse(R"({"valid_range": [0, 1], "h1_end": {"5": 1}})")),
            profile_error);
        CHECK_THROWS_AS(load_profile("/definitely/not/a/file.json"), profile_error);
    }
}

TEST_CASE("command line end to end")
{
    SECTION("default table is the reference table")
    {
        RunResult r = run_cli("table");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("-1 - 2*sqrt(2)") != std::string::npos);
        CHECK(r.out.find("(×16)") != std::string::npos);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    }
    SECTION("csv output matches the library emitter byte for byte")
    {
        auto table = spec_p_table(BundleProfile::ttp2(), Window{QuadExt(-4), QuadExt(1)});
        RunResult first = run_cli("table --min -4 --max 1 --format csv");
        RunResult second = run_cli("table --min -4 --max 1 --format csv");
        CHECK(first.exit_code == 0);
        CHECK(first.out == spec_p_csv(table));
        CHECK(first.out == second.out);
    }
    SECTION("json output matches the library emitter and reparses")
    {
        auto table = spec_p_table(BundleProfile::ttp2(), Window{QuadExt(-4), QuadExt(1)});
        RunResult r = run_cli("table --format json");
        CHECK(r.exit_code == 0);
        CHECK(r.out == json_dump(spec_p_to_json(table)));
        Json parsed = Json::parse(r.out);
        REQUIRE(parsed.size() == 6);
        CHECK(quad_from_json(parsed[1].at("value")) == table[1].value);
    }
    SECTION("documented one-liners")
    {
        CHECK(run_cli("laplacian --space s5 --max 8").out == "4 (×8), 5 (×12)\n");
        CHECK(run_cli("cohomology --l -1").out == "h1=3 h0_end0=0\n");
        CHECK(run_cli("branch --a 2 --b 0 --l 1 --oracle").out == "closed=true oracle=true\n");

        RunResult gap = run_cli("table --min -3 --max 0 --open");
        CHECK(std::count(gap.out.begin(), gap.out.end(), '\n') == 2);
        CHECK(gap.out.find("-2") != std::string::npos);
        CHECK(gap.out.find("-1") != std::string::npos);

        RunResult empty = run_cli("table --min 0 --max 0");
        CHECK(empty.exit_code == 0);
        CHECK(empty.out == "(empty spectrum on this window)\n");
    }
    SECTION("exit codes map the error taxonomy")
    {
        auto good = write_temp("conic_profile_ok.json", kGoodProfile);
        CHECK(run_cli("table --profile " + good.string()).exit_code == 0);
        CHECK(run_cli("table --profile /no/such/profile.json").exit_code == 2);
        CHECK(run_cli("table --profile " + good.string() + " --min -4 --max 2").exit_code == 3);
        CHECK(run_cli("branch --a 13 --b 13 --l 0 --oracle").exit_code == 4);

        auto bad = write_temp("conic_profile_bad.json", "{ not json");
        CHECK(run_cli("table --profile " + bad.string()).exit_code == 2);
    }
    SECTION("environment variable supplies the profile")
    {
        auto good = write_temp("conic_profile_env.json", kGoodProfile);
        std::string cmd = "CONIC_SPECTRA_PROFILE=" + good.string() + " " + CONIC_CLI_PATH +
                          " table --min -4 --max 2 2>/dev/null";
        int status = std::system(cmd.c_str());
        CHECK(WEXITSTATUS(status) == 3);
    }
    SECTION("verify subcommand")
    {
        RunResult only = run_cli("verify --only kernel-claim");
        CHECK(only.exit_code == 0);
        CHECK(only.out.find("[PASS] kernel-claim") != std::string::npos);
        CHECK(std::count(only.out.begin(), only.out.end(), '\n') == 1);

        RunResult json_run = run_cli("verify --only kernel-claim --format json");
        Json parsed = Json::parse(json_run.out);
        CHECK(parsed.at("all_passed") == true);
        REQUIRE(parsed.at("checks").size() == 1);
        CHECK(parsed.at("checks")[0].at("name") == "kernel-claim");

        std::string corrupted = R"({
            "valid_range": [-14, 11],
            "h1_end": {"-2": 4, "-1": 3},
            "h0_end0": {"1": 6, "2": 15, "3": 27, "4": 42, "5": 60, "6": 81,
                        "7": 105, "8": 132, "9": 162, "10": 195, "11": 231}
        })";
        auto path = write_temp("conic_profile_corrupt.json", corrupted);
        RunResult bad = run_cli("verify --profile " + path.string());
        CHECK(bad.exit_code == 1);
        CHECK(bad.out.find("[FAIL] spectral-symmetry-and-gap") != std::string::npos);
        CHECK(bad.out.find("[PASS] table-reproduction") != std::string::npos);
    }
}
