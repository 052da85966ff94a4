// Command-line front end: runs verification campaigns over the identity
// suite, the exact q-series checks, and the DFT spectral suite, with pinned
// seeds and tolerances. Exit code 0 = every executed check passed,
// 2 = at least one printed identity failed verification, 1 = usage or
// internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "thetadft/thetadft.hpp"

namespace {

void add_common_options(CLI::App* sub, thetadft::RunConfig& cfg) {
    sub->add_option("--identity", cfg.identity_filter,
                    "restrict the identity suite to these registry names")
        ->delimiter(',');
    sub->add_option("--samples", cfg.samples, "sample points per identity")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "relative residual tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "sampling seed")->envname("THETADFT_SEED");
    sub->add_option("--nu", cfg.nu, "theta series exponent parameter nu")
        ->check(CLI::PositiveNumber);
    sub->add_option("--q-order", cfg.q_order, "q-series truncation order")
        ->check(CLI::PositiveNumber);
    sub->add_option("--z-halfwidth", cfg.z_halfwidth,
                    "retained z-degree halfwidth (widened automatically when a "
                    "check needs more)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--im-tau-min", cfg.region.im_tau_min, "sampling box: min Im tau");
    sub->add_option("--im-tau-max", cfg.region.im_tau_max, "sampling box: max Im tau");
    sub->add_option("--re-tau-halfwidth", cfg.region.re_tau_halfwidth,
                    "sampling box: |Re tau| bound");
    sub->add_option("--x-box-halfwidth", cfg.region.x_box_halfwidth,
                    "sampling box: |Re x|, |Im x| bound");
    sub->add_option("-o,--output", cfg.output_path, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta function / DFT eigenvector identity verifier"};
    app.require_subcommand(1);

    thetadft::RunConfig cfg;
    int spectral_n = 0;

    CLI::App* verify = app.add_subcommand("verify", "run the analytic identity suite");
    CLI::App* qcheck = app.add_subcommand("qcheck", "run the exact q-series checks");
    CLI::App* spectral = app.add_subcommand("spectral", "run eigen-residual and multiplicity suites");
    CLI::App* all = app.add_subcommand("all", "run everything");
    for (CLI::App* sub : {verify, qcheck, spectral, all}) add_common_options(sub, cfg);
    spectral->add_option("--n", spectral_n, "restrict to one DFT order")->check(CLI::Range(2, 64));

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (spectral_n > 0) cfg.spectral_n = spectral_n;

    try {
        const thetadft::RunResult result = thetadft::run(cfg);
        const std::string payload =
            cfg.format == "json" ? result.report.dump(2) + "\n" : result.text;
        if (cfg.output_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(cfg.output_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.output_path << "\n";
                return 1;
            }
            out << payload;
        }
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
