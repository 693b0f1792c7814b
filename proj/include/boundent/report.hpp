#pragma once

#include <string>

#include <json.hpp>

#include "boundent/config.hpp"
#include "boundent/cost_bound.hpp"
#include "boundent/negativity.hpp"
#include "boundent/seesaw.hpp"

namespace boundent {

inline constexpr const char* kVersion = "0.1.0";

/// Arguments specific to single-pipeline commands.
struct CommandArgs {
    std::size_t copies = 1;   ///< negativity: N
    std::size_t singlets = 1; ///< negativity: L
    std::size_t induction_n = 1;
    double induction_beta = 0.9;
};

/// Envelope every command returns: the command name, the exact configuration
/// that produced it (replaying config_echo reproduces results bit for bit),
/// the command-specific payload, and bookkeeping.
struct RunReport {
    std::string command;
    ToleranceConfig config_echo;
    nlohmann::json results;
    double wall_time_ms = 0.0;
    std::string version = kVersion;
    bool all_pass = false; ///< every executed check passed (skips don't fail)
};

// JSON conventions: complex numbers as [re, im] pairs; vectors and matrices
// as nested arrays; every skipped check carries skipped=true plus a reason.
nlohmann::json to_json(const ToleranceConfig& config);
nlohmann::json to_json(const ProductState& state);
nlohmann::json to_json(const SeesawOutcome& outcome);
nlohmann::json to_json(const CostBoundReport& report);
nlohmann::json to_json(const NegativityReport& report);
nlohmann::json to_json(const InductionCheck& check);
nlohmann::json to_json(const CeilingCheck& check);
nlohmann::json to_json(const RunReport& report);

/// Parses a ToleranceConfig from its JSON echo. Unknown keys are rejected so
/// config files with typos fail loudly instead of silently running defaults.
ToleranceConfig config_from_json(const nlohmann::json& j);

/// The one-shot reproduction run: Tiles construction checks, separability
/// certificate, the full Theorem-1 pipeline, and the Theorem-2 ceiling grid
/// {(1,0), (1,1), (2,1), (1,2)} plus the two reference states. Checks that
/// exceed the dimension budget are marked skipped, not failed.
RunReport cmd_reproduce(const ToleranceConfig& config);

/// Dispatch for the focused commands: alpha1, cost-bound, negativity,
/// induction, certificate, upb-verify. Unknown names raise ContractViolation
/// (a usage error at the CLI boundary).
RunReport cmd_single(const std::string& command, const ToleranceConfig& config,
                     const CommandArgs& args);

/// Process exit status for a finished report: 0 when everything executed
/// passed, 1 when a scientific check failed.
int exit_code(const RunReport& report);

} // namespace boundent
