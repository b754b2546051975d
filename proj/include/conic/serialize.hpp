#pragma once

// JSON / CSV / plain-text emission and profile loading.  This is the only
// header that includes the JSON library; everything else stays serialization
// agnostic.  All emitters are deterministic: equal inputs give equal bytes.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conic/cohomology.hpp"
#include "conic/errors.hpp"
#include "conic/laplacian.hpp"
#include "conic/quad_ext.hpp"
#include "conic/spec_p.hpp"

namespace conic {

using Json = nlohmann::ordered_json;

inline Json quad_to_json(const QuadExt& x)
{
    Json j;
    j["rat"] = to_string(x.rat());
    j["coeff"] = to_string(x.coeff());
    j["radicand"] = x.radicand().convert_to<long long>();
    return j;
}

inline QuadExt quad_from_json(const Json& j)
{
    try {
        return QuadExt(parse_rational(j.at("rat").get<std::string>()),
                       parse_rational(j.at("coeff").get<std::string>()),
                       Integer(j.at("radicand").get<long long>()));
    } catch (const Json::exception& e) {
        throw parse_error(std::string("malformed exact value: ") + e.what());
    }
}

// Display double: the 12-significant-digit approximation re-read as a double,
// so the emitted JSON number matches the textual rendering.
inline double approx_display(const QuadExt& x)
{
    return std::stod(approx_string(x));
}

inline Json laplacian_to_json(const SpectrumTable& table)
{
    Json j;
    j["space"] = table.space == Space::S5 ? "s5" : "p2";
    if (table.twist) j["twist"] = *table.twist;
    j["cutoff"] = to_string(table.cutoff);
    Json lines = Json::array();
    for (const LaplacianLine& line : table.lines) {
        Json entry;
        entry["value"] = to_string(line.value);
        entry["mult"] = line.mult;
        Json ws = Json::array();
        for (const auto& w : line.witnesses) ws.push_back({w[0], w[1], w[2]});
        entry["witnesses"] = std::move(ws);
        lines.push_back(std::move(entry));
    }
    j["lines"] = std::move(lines);
    return j;
}

inline std::string laplacian_pretty(const SpectrumTable& table)
{
    if (table.lines.empty()) return "(no eigenvalues below cutoff)\n";
    std::string out;
    for (std::size_t i = 0; i < table.lines.size(); ++i) {
        if (i) out += ", ";
        out += to_string(table.lines[i].value);
        out += " (×" + std::to_string(table.lines[i].mult) + ")";
    }
    out += '\n';
    return out;
}

inline std::string laplacian_csv(const SpectrumTable& table)
{
    std::string out = "value,mult\n";
    for (const LaplacianLine& line : table.lines)
        out += to_string(line.value) + "," + std::to_string(line.mult) + "\n";
    return out;
}

inline Json breakdown_to_json(const Breakdown& b)
{
    Json j;
    j["dim_lambda1"] = b.dim_lambda1;
    j["dim_lambda2"] = b.dim_lambda2;
    j["h1_term"] = b.h1_term;
    j["h0_mu"] = b.h0_mu;
    j["h0_dual"] = b.h0_dual;
    return j;
}

inline Json spec_p_to_json(const std::vector<PEigenvalue>& table)
{
    Json j = Json::array();
    for (const PEigenvalue& e : table) {
        Json entry;
        entry["value"] = quad_to_json(e.value);
        entry["approx"] = approx_display(e.value);
        entry["mult"] = e.mult;
        entry["breakdown"] = breakdown_to_json(e.breakdown);
        j.push_back(std::move(entry));
    }
    return j;
}

inline std::string spec_p_csv(const std::vector<PEigenvalue>& table)
{
    std::string out = "value_exact,value_approx,mult\n";
    for (const PEigenvalue& e : table)
        out += to_string(e.value) + "," + approx_string(e.value) + "," +
               std::to_string(e.mult) + "\n";
    return out;
}

inline std::string spec_p_pretty(const std::vector<PEigenvalue>& table)
{
    if (table.empty()) return "(empty spectrum on this window)\n";
    std::size_t exact_w = 0;
    std::size_t approx_w = 0;
    for (const PEigenvalue& e : table) {
        exact_w = std::max(exact_w, to_string(e.value).size());
        approx_w = std::max(approx_w, approx_string(e.value).size());
    }
    std::string out;
    for (const PEigenvalue& e : table) {
        std::string exact = to_string(e.value);
        std::string approx = approx_string(e.value);
        out += exact + std::string(exact_w - exact.size(), ' ');
        out += "  ≈ " + std::string(approx_w - approx.size(), ' ') + approx;
        out += "  (×" + std::to_string(e.mult) + ")\n";
    }
    return out;
}

inline std::string json_dump(const Json& j)
{
    return j.dump(2) + "\n";
}

// ---- bundle profile loading -------------------------------------------------

namespace detail {

inline long long profile_key(const std::string& key)
{
    try {
        std::size_t used = 0;
        long long value = std::stoll(key, &used);
        if (used != key.size()) throw profile_error("bad integer key '" + key + "' in profile");
        return value;
    } catch (const std::exception&) {
        throw profile_error("bad integer key '" + key + "' in profile");
    }
}

inline std::map<long long, long long> profile_table(const Json& j, const char* field)
{
    std::map<long long, long long> out;
    if (!j.contains(field)) return out;
    if (!j.at(field).is_object())
        throw profile_error(std::string(field) + " must be an object of integer entries");
    for (const auto& [key, value] : j.at(field).items()) {
        if (!value.is_number_integer())
            throw profile_error(std::string(field) + " entries must be integers");
        out[profile_key(key)] = value.get<long long>();
    }
    return out;
}

} // namespace detail

inline BundleProfile profile_from_json(const Json& j, unsigned threads = 1)
{
    try {
        if (!j.is_object()) throw profile_error("profile must be a JSON object");
        if (!j.contains("valid_range")) throw profile_error("profile lacks valid_range");
        const Json& range = j.at("valid_range");
        if (!range.is_array() || range.size() != 2 || !range[0].is_number_integer() ||
            !range[1].is_number_integer())
            throw profile_error("valid_range must be [lo, hi] with integer bounds");

        ChernData chern;
        if (j.contains("chern")) {
            const Json& c = j.at("chern");
            chern.rank = c.value("rank", chern.rank);
            chern.c1_sq = c.value("c1_sq", chern.c1_sq);
            chern.c2 = c.value("c2", chern.c2);
        }

        bool irreducible = j.value("irreducible_hym", true);
        CohomologyProfile cohomology = CohomologyProfile::from_tables(
            {range[0].get<long long>(), range[1].get<long long>()},
            detail::profile_table(j, "h1_end"), detail::profile_table(j, "h0_end0"), chern,
            irreducible);

        BundleProfile profile = BundleProfile::ttp2(threads);
        profile.cohomology = std::move(cohomology);
        profile.irreducible_hym = irreducible;
        return profile;
    } catch (const Json::exception& e) {
        throw profile_error(std::string("malformed profile: ") + e.what());
    }
}

inline BundleProfile load_profile(const std::string& path, unsigned threads = 1)
{
    std::ifstream in(path);
    if (!in) throw profile_error("cannot open profile '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw profile_error("cannot parse profile '" + path + "': " + e.what());
    }
    return profile_from_json(j, threads);
}

} // namespace conic
