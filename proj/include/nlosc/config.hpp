#pragma once

#include <nlosc/oscillator.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nlosc {

enum class Method { pert, sc_closed, sc_quadrature, oracle, all };

std::string method_name(Method m);
Method parse_method(const std::string& name);

// Effective settings for one CLI run: the oscillator, the method selection,
// grids, tolerances and output paths. Produced by parsing a sectioned
// key-value file and then applying command-line overrides; the canonical
// rendering of the result is what gets hashed into CSV headers, so two runs
// with the same effective settings are byte-identical.
struct RunConfig {
    OscillatorSpec spec = OscillatorSpec::sho();
    Method method = Method::all;
    int n_max = 10;
    std::vector<double> betas = {1.0};
    double tol = 1e-10;
    std::string out;         // empty means stdout
    std::string ladder_out;  // optional second table with the raw ladder
    double e_min = 0.6;
    double e_max = 10.5;
    int e_count = 100;
    double ground_level = 0.0;  // used when has_ground_level
    bool has_ground_level = false;
    bool allow_negative_oracle = false;

    void validate() const;  // throws ConfigError on inconsistent settings
};

// Parses the sectioned key-value format:
//   [oscillator] epsilon0, potential, kappa, l, alpha_sq
//   [run]        method, n_max, beta, tol, out, ladder_out,
//                e_min, e_max, e_count, ground_level, allow_negative_oracle
// Lines starting with '#' are comments. Numeric values accept decimal or
// exact p/q rational notation. Unknown keys are rejected.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Fixed-order rendering of every effective setting; equal configs render
// equal strings.
std::string canonical_string(const RunConfig& cfg);

// FNV-1a, used to stamp a short fingerprint of the settings into output
// headers.
std::uint64_t fnv1a64(const std::string& text);

// Parses "3", "0.25", "1e-3" or "p/q" into a double; throws ConfigError.
double parse_number(const std::string& text);

}  // namespace nlosc
