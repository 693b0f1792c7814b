// boundent: numerical toolkit around a 3x3 bound entangled state built from
// the Tiles unextendible product basis. Commands verify the construction,
// estimate the best product-state overlap, derive a strictly positive lower
// bound on the entanglement cost, and confirm the distillation ceiling via
// logarithmic negativity.
//
// Exit codes: 0 = all executed checks passed (or were skipped by the size
// budget); 1 = a scientific check failed; 2 = usage error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "boundent/errors.hpp"
#include "boundent/report.hpp"

namespace {

using boundent::ContractViolation;
using boundent::ToleranceConfig;

int write_report(const boundent::RunReport& report, const std::string& out_path) {
    const std::string payload = boundent::to_json(report).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open output file: " << out_path << "\n";
            return 2;
        }
        out << payload;
        if (!out) {
            std::cerr << "error: failed writing output file: " << out_path << "\n";
            return 2;
        }
    }
    return boundent::exit_code(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundent: cost bounds and distillation ceilings for a Tiles-UPB "
                 "bound entangled state"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::size_t restarts = 0;
    double tol = 0.0;
    std::size_t copies = 1;
    std::size_t singlets = 1;
    std::size_t induction_n = 1;
    double beta = 0.9;
    std::string out_path;
    std::string config_path;
    bool skip_n2 = false;

    app.add_option("--seed", seed, "Base seed for the deterministic restart streams");
    app.add_option("--restarts", restarts,
                   "See-saw restarts (overrides both the single- and two-copy counts)");
    app.add_option("--tol", tol, "See-saw objective-gain convergence threshold");
    app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
    app.add_option("--config", config_path,
                   "JSON config file; explicit flags override its values");
    app.add_flag("--skip-n2", skip_n2, "Skip the 729-dimensional two-copy induction check");

    app.add_subcommand("reproduce",
                       "Run every verification and bound in sequence");
    app.add_subcommand("alpha1", "Estimate the best product-state overlap with P_b");
    app.add_subcommand("cost-bound",
                       "Full entanglement-cost pipeline: certificate, alpha_1, bound, induction");
    CLI::App* negativity =
        app.add_subcommand("negativity", "Logarithmic-negativity ceiling for copies + singlets");
    negativity->add_option("--copies", copies, "Bound-entangled copies N")->capture_default_str();
    negativity->add_option("--singlets", singlets, "Padding singlets L")->capture_default_str();
    CLI::App* induction =
        app.add_subcommand("induction", "Operator inequality for one induction step");
    induction->add_option("--n", induction_n, "Induction level N (1 or 2)")->capture_default_str();
    induction->add_option("--beta", beta, "Base of the beta^N ceiling")->capture_default_str();
    app.add_subcommand("certificate",
                       "Product decomposition of 1 + P_b into 13 projectors");
    app.add_subcommand("upb-verify", "Orthogonality and spectrum checks for the Tiles basis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2; // --help exits 0; every parse failure is usage
    }

    try {
        ToleranceConfig config;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot open config file: " << config_path << "\n";
                return 2;
            }
            nlohmann::json j;
            in >> j;
            config = boundent::config_from_json(j);
        }
        if (app.count("--seed") > 0)
            config.seed.value = seed;
        if (app.count("--restarts") > 0) {
            config.restarts_n1 = restarts;
            config.restarts_n2 = restarts;
        }
        if (app.count("--tol") > 0)
            config.seesaw_tol = tol;
        if (app.count("--skip-n2") > 0)
            config.skip_n2 = true;
        config.validate();

        boundent::CommandArgs args;
        args.copies = copies;
        args.singlets = singlets;
        args.induction_n = induction_n;
        args.induction_beta = beta;

        const std::string command = app.get_subcommands().front()->get_name();
        const boundent::RunReport report =
            command == "reproduce" ? boundent::cmd_reproduce(config)
                                   : boundent::cmd_single(command, config, args);
        return write_report(report, out_path);
    } catch (const ContractViolation& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const boundent::SizeLimitError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "usage error: bad config JSON: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1; // convergence/estimate/certificate failures are scientific
    }
}
