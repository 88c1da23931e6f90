#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace auxzeta {

// Exit-code taxonomy used by the CLI: regime violations map to 2,
// scan failures to 3, missing inputs to 4.
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct pole_error : std::domain_error {
    std::complex<double> pole;
    pole_error(const std::string& msg, std::complex<double> where)
        : std::domain_error(msg), pole(where) {}
};

struct near_pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Adaptive refinement hit its budget; carries the best value so far.
struct accuracy_error : std::runtime_error {
    std::complex<double> best_estimate;
    double error_estimate;
    accuracy_error(const std::string& msg, std::complex<double> best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
};

// The function vanished (or nearly so) on a path where a continuous
// argument was requested.
struct zero_on_path_error : std::runtime_error {
    std::complex<double> where;
    zero_on_path_error(const std::string& msg, std::complex<double> at)
        : std::runtime_error(msg), where(at) {}
};

struct boundary_zero_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct refinement_failed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct missing_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct scan_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace auxzeta
