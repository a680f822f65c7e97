#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "opentropy/catalog.hpp"
#include "opentropy/verifier.hpp"

namespace opentropy {

using ordered_json = nlohmann::ordered_json;

// 17 significant digits: enough for doubles to round-trip bit-identically
// through parse -> serialize.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline constexpr const char* kProfileCsvHeader = "x,S,V,renyi,tsallis,dS,d2S,logconv_margin";

inline std::string serialize_profile_csv(const EntropyProfile& profile) {
    std::string out = kProfileCsvHeader;
    out += '\n';
    for (const ProfileRow& r : profile.rows) {
        out += format_double(r.x);
        out += ',';
        out += format_double(r.S);
        out += ',';
        out += format_double(r.V);
        out += ',';
        out += format_double(r.renyi);
        out += ',';
        out += format_double(r.tsallis);
        out += ',';
        if (r.dS) out += format_double(*r.dS);
        out += ',';
        if (r.d2S) out += format_double(*r.d2S);
        out += ',';
        if (r.logconv_margin) out += format_double(*r.logconv_margin);
        out += '\n';
    }
    return out;
}

inline EntropyProfile parse_profile_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kProfileCsvHeader)
        throw std::runtime_error("parse_profile_csv: missing or unexpected header row");
    EntropyProfile profile;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        size_t pos = 0;
        while (true) {
            const size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (cells.size() != 8)
            throw std::runtime_error("parse_profile_csv: expected 8 columns, got " + std::to_string(cells.size()));
        auto num = [](const std::string& s) { return std::strtod(s.c_str(), nullptr); };
        ProfileRow r;
        r.x = num(cells[0]);
        r.S = num(cells[1]);
        r.V = num(cells[2]);
        r.renyi = num(cells[3]);
        r.tsallis = num(cells[4]);
        if (!cells[5].empty()) r.dS = num(cells[5]);
        if (!cells[6].empty()) r.d2S = num(cells[6]);
        if (!cells[7].empty()) r.logconv_margin = num(cells[7]);
        profile.rows.push_back(r);
    }
    return profile;
}

// Echo of one CLI run: resolved parameters plus violation counts.
struct RunManifest {
    std::string command;
    ordered_json config = ordered_json::object();
    std::string version = "0.1.0";
    double wall_time_seconds = 0.0;
    size_t unconditional_count = 0;
    size_t conditional_count = 0;
    size_t grazing_count = 0;
};

inline ordered_json manifest_to_json(const RunManifest& m) {
    ordered_json j;
    j["command"] = m.command;
    j["config"] = m.config;
    j["version"] = m.version;
    j["wall_time_seconds"] = m.wall_time_seconds;
    j["counts"] = {{"violations", m.unconditional_count},
                   {"findings", m.conditional_count},
                   {"grazing", m.grazing_count}};
    return j;
}

inline ordered_json violation_to_json(const ViolationReport& r) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["family"] = r.family.empty() ? ordered_json(nullptr) : ordered_json(r.family);
    j["n"] = r.n == 0 ? ordered_json(nullptr) : ordered_json(r.n);
    j["c"] = std::isnan(r.c) ? ordered_json(nullptr) : ordered_json(r.c);
    j["x"] = std::isnan(r.x) ? ordered_json(nullptr) : ordered_json(r.x);
    j["y"] = std::isnan(r.y) ? ordered_json(nullptr) : ordered_json(r.y);
    j["k"] = r.k < 0 ? ordered_json(nullptr) : ordered_json(r.k);
    j["margin"] = r.margin;
    j["exact_margin"] = r.exact_margin.empty() ? ordered_json(nullptr) : ordered_json(r.exact_margin);
    j["conditional"] = r.conditional;
    return j;
}

// Stable report order: (check_id, n, c, location).
inline void sort_reports(std::vector<ViolationReport>& v) {
    auto key = [](const ViolationReport& r) {
        return std::make_tuple(r.check_id, r.n, std::isnan(r.c) ? -2.0 : r.c, std::isnan(r.x) ? -1e300 : r.x,
                               std::isnan(r.y) ? -1e300 : r.y, r.k);
    };
    std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

inline ordered_json report_to_json(VerifyReport rep, const RunManifest& manifest) {
    sort_reports(rep.violations);
    sort_reports(rep.findings);
    sort_reports(rep.grazing);
    ordered_json j;
    RunManifest m = manifest;
    m.unconditional_count = rep.violations.size();
    m.conditional_count = rep.findings.size();
    m.grazing_count = rep.grazing.size();
    j["manifest"] = manifest_to_json(m);
    j["violations"] = ordered_json::array();
    for (const auto& r : rep.violations) j["violations"].push_back(violation_to_json(r));
    j["findings"] = ordered_json::array();
    for (const auto& r : rep.findings) j["findings"].push_back(violation_to_json(r));
    j["grazing"] = ordered_json::array();
    for (const auto& r : rep.grazing) j["grazing"].push_back(violation_to_json(r));
    return j;
}

inline ordered_json profile_to_json(const EntropyProfile& profile, const RunManifest& manifest) {
    ordered_json j;
    j["manifest"] = manifest_to_json(manifest);
    j["rows"] = ordered_json::array();
    for (const ProfileRow& r : profile.rows) {
        ordered_json row;
        row["x"] = r.x;
        row["S"] = r.S;
        row["V"] = r.V;
        row["renyi"] = r.renyi;
        row["tsallis"] = r.tsallis;
        row["dS"] = r.dS ? ordered_json(*r.dS) : ordered_json(nullptr);
        row["d2S"] = r.d2S ? ordered_json(*r.d2S) : ordered_json(nullptr);
        row["logconv_margin"] = r.logconv_margin ? ordered_json(*r.logconv_margin) : ordered_json(nullptr);
        j["rows"].push_back(row);
    }
    return j;
}

}  // namespace opentropy
