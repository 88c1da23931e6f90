#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "auxzeta/errors.hpp"
#include "auxzeta/version.hpp"
#include "auxzeta/zeros.hpp"

namespace auxzeta {

// Catalog persists as CSV (beta,gamma,multiplicity,residual; 15 significant
// digits, sorted by gamma) plus a JSON sidecar with the scan metadata.

inline std::string catalog_csv(const ZeroCatalog& cat) {
    std::string out = "beta,gamma,multiplicity,residual\n";
    char line[160];
    for (const auto& r : cat.records) {
        std::snprintf(line, sizeof line, "%.15g,%.15g,%d,%.15g\n", r.beta, r.gamma,
                      r.multiplicity, r.residual);
        out += line;
    }
    return out;
}

inline void write_catalog(const ZeroCatalog& cat, const std::string& csv_path) {
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw missing_input_error("write_catalog: cannot open " + csv_path);
        f << catalog_csv(cat);
    }
    nlohmann::json side;
    side["t_frontier"] = cat.t_frontier;
    side["beta_window"] = {cat.beta_window.first, cat.beta_window.second};
    side["t_floor"] = cat.t_floor;
    side["code_version"] = kVersion;
    std::ofstream j(csv_path + ".json", std::ios::binary);
    j << side.dump(2) << "\n";
}

inline ZeroCatalog read_catalog(const std::string& csv_path) {
    std::ifstream f(csv_path);
    if (!f) throw missing_input_error("read_catalog: missing " + csv_path);
    ZeroCatalog cat;
    std::string line;
    std::getline(f, line);  // header
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        ZeroRecord r;
        std::istringstream is(line);
        char comma;
        is >> r.beta >> comma >> r.gamma >> comma >> r.multiplicity >> comma >> r.residual;
        cat.records.push_back(r);
    }
    std::ifstream j(csv_path + ".json");
    if (j) {
        nlohmann::json side = nlohmann::json::parse(j);
        cat.t_frontier = side.value("t_frontier", 0.0);
        if (side.contains("beta_window"))
            cat.beta_window = {side["beta_window"][0], side["beta_window"][1]};
        cat.t_floor = side.value("t_floor", 0.05);
    }
    return cat;
}

}  // namespace auxzeta
