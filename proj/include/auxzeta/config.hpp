#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "auxzeta/errors.hpp"
#include "auxzeta/parallel.hpp"

namespace auxzeta {

// Constants the source material leaves existential ("there exist A, C ...");
// `auxzeta calibrate` fits them once and pins them in a plain-text file so
// every later run is reproducible.
struct FittedConstants {
    double u_bound_A = 2.0;      // |U(s)| <= A t^(-1/21)
    double mainsum_C = 10.0;     // main-sum remainder constant
    double w_factor_C = 10.0;    // R = zeta (1 + W) decay constant
    double sigma_decay_C = 50.0; // |int log|R|| <= C 2^-sigma
    double omega_count_kappa = 5.0;
    double kappa1 = 10.0;  // right-excess residual / log T
    double kappa2 = 5.0;   // left-excess residual / T^(20/21)
    double kappa3 = 20.0;  // per-mean residual (O(1))
    double kappa4 = 10.0;  // eta-log-mean residual / T^(3/14)
    double kappa5 = 10.0;  // j-log-mean residual / T^(3/7+1/2)
    double kappa6 = 10.0;  // comb-decomposition residual / sqrt(T)
    double kappa7 = 10.0;  // comb-mean-left residual / T^(20/21)
    double kappa8 = 10.0;  // gamma-mean-left residual / sqrt(T)

    std::map<std::string, double*> fields() {
        return {{"u_bound_A", &u_bound_A},
                {"mainsum_C", &mainsum_C},
                {"w_factor_C", &w_factor_C},
                {"sigma_decay_C", &sigma_decay_C},
                {"omega_count_kappa", &omega_count_kappa},
                {"kappa1", &kappa1},
                {"kappa2", &kappa2},
                {"kappa3", &kappa3},
                {"kappa4", &kappa4},
                {"kappa5", &kappa5},
                {"kappa6", &kappa6},
                {"kappa7", &kappa7},
                {"kappa8", &kappa8}};
    }
};

inline FittedConstants load_constants(const std::string& path) {
    FittedConstants c;
    std::ifstream f(path);
    if (!f) return c;  // defaults stand in until calibrate has run
    auto fields = c.fields();
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        auto it = fields.find(key);
        if (it != fields.end()) *it->second = std::stod(val);
    }
    return c;
}

inline void save_constants(FittedConstants& c, const std::string& path,
                           const std::string& note = "") {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw missing_input_error("save_constants: cannot open " + path);
    f << "# fitted constants pinned by `auxzeta calibrate`\n";
    if (!note.empty()) f << "# " << note << "\n";
    f.setf(std::ios::fmtflags(0), std::ios::floatfield);
    f.precision(6);
    for (auto& [k, v] : c.fields()) f << k << " = " << *v << "\n";
}

struct RunConfig {
    double t0 = 101.0;             // above 32 pi
    double quad_target = 1e-12;    // point-evaluation accuracy target
    double line_tol_scale = 1e-6;  // line integrals aim at scale * (T - t0)
    std::string constants_path = "fitted_constants.conf";
    std::string out_dir = ".";
    unsigned threads = 0;  // 0: hardware concurrency
    FittedConstants constants;

    void validate() const {
        if (!(t0 >= 1.0)) throw regime_error("RunConfig: t0 must be >= 1");
        if (!(quad_target > 0.0) || !(line_tol_scale > 0.0))
            throw regime_error("RunConfig: tolerances must be positive");
    }
    unsigned worker_count() const { return threads == 0 ? default_thread_count() : threads; }
};

}  // namespace auxzeta
