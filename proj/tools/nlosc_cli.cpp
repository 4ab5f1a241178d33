#include <CLI11.hpp>

#include <nlosc/commands.hpp>
#include <nlosc/config.hpp>
#include <nlosc/errors.hpp>
#include <nlosc/verify.hpp>
#include <nlosc/version.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

void deliver(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw nlosc::Error("cannot open output file '" + path + "'");
    f << text;
}

std::vector<double> split_numbers(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(nlosc::parse_number(item));
    if (out.empty()) throw nlosc::ConfigError("expected at least one value in '" + text + "'");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy ladders, level spacings and thermal sums for bounded "
                 "one-dimensional nonlinear oscillators"};
    app.set_version_flag("--version", nlosc::version_string);
    app.require_subcommand(1);

    std::string config_path, out_path, kappa_text, beta_text, method_text, tol_text;
    int n_max = -1;
    bool allow_negative = false;
    std::string suite = "all";

    CLI::App* sub_spectrum = app.add_subcommand(
        "spectrum", "level table comparing the perturbative, semiclassical and "
                    "diagonalized energies");
    CLI::App* sub_lambda =
        app.add_subcommand("lambda", "level-spacing comparison over an energy grid");
    CLI::App* sub_thermal =
        app.add_subcommand("thermal", "partition function, averages and identity residuals");
    CLI::App* sub_oracle =
        app.add_subcommand("oracle", "converged diagonalization reference levels");
    CLI::App* sub_fdlie =
        app.add_subcommand("fdlie", "shift-calculus identity demonstration table");
    CLI::App* sub_verify = app.add_subcommand("verify", "run a verification suite");
    sub_verify->add_option("suite", suite,
                           "algebra, semiclassical, thermal, fdlie or all");

    for (CLI::App* sub :
         {sub_spectrum, sub_lambda, sub_thermal, sub_oracle, sub_fdlie, sub_verify}) {
        sub->add_option("--config", config_path, "path to a sectioned key-value config");
        sub->add_option("--out", out_path, "write the table here instead of stdout");
        sub->add_option("--kappa", kappa_text, "coupling, decimal or p/q");
        sub->add_option("--n-max", n_max, "highest level index");
        sub->add_option("--beta", beta_text, "comma-separated inverse temperatures");
        sub->add_option("--method", method_text,
                        "pert, sc-closed, sc-quadrature, oracle or all");
        sub->add_option("--tol", tol_text, "tolerance, decimal or p/q");
        sub->add_flag("--allow-negative-oracle", allow_negative,
                      "force diagonalization at negative coupling");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        nlosc::RunConfig cfg;
        if (!config_path.empty()) cfg = nlosc::parse_config_file(config_path);
        if (!kappa_text.empty()) {
            cfg.spec.kappa = nlosc::parse_number(kappa_text);
            if (cfg.spec.potential == nlosc::Potential::none)
                cfg.spec.potential = nlosc::Potential::quartic;
        }
        if (n_max >= 0) cfg.n_max = n_max;
        if (!beta_text.empty()) cfg.betas = split_numbers(beta_text);
        if (!method_text.empty()) cfg.method = nlosc::parse_method(method_text);
        if (!tol_text.empty()) cfg.tol = nlosc::parse_number(tol_text);
        if (!out_path.empty()) cfg.out = out_path;
        if (allow_negative) cfg.allow_negative_oracle = true;

        if (app.got_subcommand(sub_verify)) {
            std::vector<nlosc::CriterionResult> results =
                nlosc::run_criteria(nlosc::suite_criteria(suite));
            deliver(nlosc::format_report(results), cfg.out);
            return nlosc::all_passed(results) ? 0 : 4;
        }

        std::string table;
        if (app.got_subcommand(sub_spectrum)) {
            table = nlosc::cmd_spectrum(cfg);
            if (!cfg.ladder_out.empty())
                deliver(nlosc::ladder_csv(cfg), cfg.ladder_out);
        } else if (app.got_subcommand(sub_lambda)) {
            table = nlosc::cmd_lambda(cfg);
        } else if (app.got_subcommand(sub_thermal)) {
            table = nlosc::cmd_thermal(cfg);
        } else if (app.got_subcommand(sub_oracle)) {
            cfg.method = nlosc::Method::oracle;
            table = nlosc::cmd_oracle(cfg);
        } else if (app.got_subcommand(sub_fdlie)) {
            table = nlosc::cmd_fdlie(cfg);
        }
        deliver(table, cfg.out);
        return 0;
    } catch (const nlosc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
