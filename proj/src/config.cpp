#include <nlosc/config.hpp>

#include <nlosc/errors.hpp>
#include <nlosc/format.hpp>
#include <nlosc/rational.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nlosc {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::pert: return "pert";
        case Method::sc_closed: return "sc-closed";
        case Method::sc_quadrature: return "sc-quadrature";
        case Method::oracle: return "oracle";
        case Method::all: return "all";
    }
    return "all";
}

Method parse_method(const std::string& name) {
    if (name == "pert") return Method::pert;
    if (name == "sc-closed") return Method::sc_closed;
    if (name == "sc-quadrature") return Method::sc_quadrature;
    if (name == "oracle") return Method::oracle;
    if (name == "all") return Method::all;
    throw ConfigError("unknown method '" + name +
                      "' (expected pert, sc-closed, sc-quadrature, oracle or all)");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_bool(const std::string& text) {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    throw ConfigError("expected a boolean, got '" + text + "'");
}

long parse_integer(const std::string& text) {
    if (text.empty()) throw ConfigError("expected an integer, got an empty value");
    char* end = nullptr;
    long v = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size())
        throw ConfigError("expected an integer, got '" + text + "'");
    return v;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("empty entry in list '" + text + "'");
        out.push_back(parse_number(item));
    }
    if (out.empty()) throw ConfigError("expected at least one number in '" + text + "'");
    return out;
}

Potential parse_potential(const std::string& name) {
    if (name == "none" || name == "sho") return Potential::none;
    if (name == "quartic") return Potential::quartic;
    if (name == "monomial") return Potential::monomial;
    if (name == "exponential") return Potential::exponential;
    throw ConfigError("unknown potential '" + name +
                      "' (expected none, quartic, monomial or exponential)");
}

}  // namespace

double parse_number(const std::string& text) {
    if (text.empty()) throw ConfigError("expected a number, got an empty value");
    if (text.find('/') != std::string::npos) return Rational::parse(text).to_double();
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v))
        throw ConfigError("expected a finite number, got '" + text + "'");
    return v;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "oscillator" && section != "run")
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

        try {
            if (section == "oscillator") {
                if (key == "epsilon0") cfg.spec.epsilon0 = parse_number(value);
                else if (key == "potential") cfg.spec.potential = parse_potential(value);
                else if (key == "kappa") cfg.spec.kappa = parse_number(value);
                else if (key == "l") cfg.spec.l = static_cast<int>(parse_integer(value));
                else if (key == "alpha_sq") cfg.spec.alpha_sq = parse_number(value);
                else throw ConfigError("unknown oscillator key '" + key + "'");
            } else if (section == "run") {
                if (key == "method") cfg.method = parse_method(value);
                else if (key == "n_max") cfg.n_max = static_cast<int>(parse_integer(value));
                else if (key == "beta") cfg.betas = parse_number_list(value);
                else if (key == "tol") cfg.tol = parse_number(value);
                else if (key == "out") cfg.out = value;
                else if (key == "ladder_out") cfg.ladder_out = value;
                else if (key == "e_min") cfg.e_min = parse_number(value);
                else if (key == "e_max") cfg.e_max = parse_number(value);
                else if (key == "e_count") cfg.e_count = static_cast<int>(parse_integer(value));
                else if (key == "ground_level") {
                    cfg.ground_level = parse_number(value);
                    cfg.has_ground_level = true;
                } else if (key == "allow_negative_oracle") {
                    cfg.allow_negative_oracle = parse_bool(value);
                } else {
                    throw ConfigError("unknown run key '" + key + "'");
                }
            } else {
                throw ConfigError("key '" + key + "' appears before any [section]");
            }
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void RunConfig::validate() const {
    spec.validate();
    if (n_max < 0) throw ConfigError("n_max must be nonnegative");
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
    if (e_count < 1) throw ConfigError("e_count must be at least 1");
    if (!(e_min < e_max) && e_count > 1) throw ConfigError("e grid needs e_min < e_max");
    for (double b : betas)
        if (!(b > 0.0)) throw ConfigError("beta values must be positive");
    bool wants_oracle = method == Method::oracle;
    if (wants_oracle && spec.potential == Potential::quartic && spec.kappa < 0.0 &&
        !allow_negative_oracle)
        throw ConfigError(
            "the oracle method refuses negative coupling; set allow_negative_oracle "
            "to force the non-physical truncated levels");
    bool quartic_like =
        spec.potential == Potential::none || spec.potential == Potential::quartic;
    if (!quartic_like &&
        (method == Method::pert || method == Method::oracle || method == Method::sc_closed))
        throw ConfigError("method '" + method_name(method) +
                          "' is only available for the quartic oscillator");
}

std::string canonical_string(const RunConfig& cfg) {
    // Output paths are deliberately left out: the fingerprint identifies the
    // computation, not where its bytes land.
    std::ostringstream out;
    out << "epsilon0=" << format_double(cfg.spec.epsilon0) << '\n'
        << "potential=" << cfg.spec.potential_name() << '\n'
        << "kappa=" << format_double(cfg.spec.kappa) << '\n'
        << "l=" << cfg.spec.l << '\n'
        << "alpha_sq=" << format_double(cfg.spec.alpha_sq) << '\n'
        << "method=" << method_name(cfg.method) << '\n'
        << "n_max=" << cfg.n_max << '\n'
        << "beta=";
    for (std::size_t i = 0; i < cfg.betas.size(); ++i) {
        if (i) out << ',';
        out << format_double(cfg.betas[i]);
    }
    out << '\n'
        << "tol=" << format_double(cfg.tol) << '\n'
        << "e_min=" << format_double(cfg.e_min) << '\n'
        << "e_max=" << format_double(cfg.e_max) << '\n'
        << "e_count=" << cfg.e_count << '\n'
        << "ground_level="
        << (cfg.has_ground_level ? format_double(cfg.ground_level) : std::string("auto"))
        << '\n'
        << "allow_negative_oracle=" << (cfg.allow_negative_oracle ? 1 : 0) << '\n';
    return out.str();
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace nlosc
