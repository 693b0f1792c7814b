#include "boundent/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>

#include "boundent/errors.hpp"
#include "boundent/tiles.hpp"

namespace boundent {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json complex_to_json(const cplx& z) {
    return json::array({z.real(), z.imag()});
}

json vector_to_json(const ComplexVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i)
        arr.push_back(complex_to_json(v[i]));
    return arr;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RunReport finish(std::string command, const ToleranceConfig& config, json results,
                 bool all_pass, Clock::time_point t0) {
    RunReport report;
    report.command = std::move(command);
    report.config_echo = config;
    report.results = std::move(results);
    report.wall_time_ms = elapsed_ms(t0);
    report.all_pass = all_pass;
    return report;
}

/// Tiles construction checks shared by upb-verify and reproduce: UPB Gram
/// matrix, projector trace/rank/idempotency, and the PPT spectrum of rho_b.
json tiles_verification(bool& ok) {
    const auto upb = tiles_upb();
    ComplexMatrix gram(5, 5);
    double gram_defect = 0.0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            gram(i, j) = inner(upb[i].joint(), upb[j].joint());
            const double expected = i == j ? 1.0 : 0.0;
            gram_defect = std::max(gram_defect, std::abs(gram(i, j) - expected));
        }
    const bool gram_ok = gram_defect <= 1e-12;

    const HermitianOperator p = tiles_projector();
    const double trace_p = trace(p.matrix()).real();
    const bool trace_ok = std::abs(trace_p - 4.0) <= 1e-10;
    const double idem = frobenius_norm(p.matrix() * p.matrix() - p.matrix());
    const bool idem_ok = idem <= 1e-10;

    const std::vector<double> evs = hermitian_eigenvalues(p.matrix());
    std::size_t rank = 0;
    for (double ev : evs)
        if (ev > 0.5)
            ++rank;

    const HermitianOperator pt = partial_transpose(rho_b());
    const std::vector<double> pt_evs = hermitian_eigenvalues(pt.matrix());
    const double min_pt = pt_evs.back();
    const bool ppt_ok = min_pt >= -1e-10;

    ok = gram_ok && trace_ok && idem_ok && rank == 4 && ppt_ok;
    return json{{"gram", matrix_to_json(gram)},
                {"gram_max_defect", gram_defect},
                {"gram_ok", gram_ok},
                {"projector_trace", trace_p},
                {"trace_ok", trace_ok},
                {"idempotency_residual", idem},
                {"idempotent_ok", idem_ok},
                {"projector_rank", rank},
                {"rho_b_min_pt_eigenvalue", min_pt},
                {"ppt_ok", ppt_ok}};
}

json certificate_payload(const ToleranceConfig& config, bool& ok) {
    json payload;
    try {
        const SeparabilityCertificate cert = complement_certificate();
        const double residual = cert.residual();
        ok = residual <= config.cert_tol;
        json terms = json::array();
        for (const auto& [weight, state] : cert.terms)
            terms.push_back(json{{"weight", weight},
                                 {"a", vector_to_json(state.a_local)},
                                 {"b", vector_to_json(state.b_local)}});
        payload = json{{"residual", residual},
                       {"ok", ok},
                       {"term_count", cert.terms.size()},
                       {"terms", std::move(terms)}};
    } catch (const CertificateError& err) {
        ok = false;
        payload = json{{"residual", err.residual}, {"ok", false}, {"error", err.what()}};
    }
    return payload;
}

bool cost_bound_all_pass(const CostBoundReport& report) {
    bool pass = report.certificate_ok && report.seesaw_all_converged && report.grid_ok &&
                report.induction_ok && report.ec_lower_bound_bits > 0.0;
    for (const MulticopyCheck& c : report.multicopy_checks)
        pass = pass && c.pass;
    return pass;
}

} // namespace

json to_json(const ToleranceConfig& config) {
    return json{{"eig_tol", config.eig_tol},
                {"psd_tol", config.psd_tol},
                {"cert_tol", config.cert_tol},
                {"seesaw_tol", config.seesaw_tol},
                {"max_sweeps", config.max_sweeps},
                {"max_iter", config.max_iter},
                {"restarts_n1", config.restarts_n1},
                {"restarts_n2", config.restarts_n2},
                {"seed", config.seed.value},
                {"dim_limit", config.dim_limit},
                {"skip_n2", config.skip_n2},
                {"grid_resolution", config.grid_resolution}};
}

ToleranceConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ContractViolation("config JSON must be an object");
    ToleranceConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "eig_tol")
            config.eig_tol = value.get<double>();
        else if (key == "psd_tol")
            config.psd_tol = value.get<double>();
        else if (key == "cert_tol")
            config.cert_tol = value.get<double>();
        else if (key == "seesaw_tol")
            config.seesaw_tol = value.get<double>();
        else if (key == "max_sweeps")
            config.max_sweeps = value.get<std::size_t>();
        else if (key == "max_iter")
            config.max_iter = value.get<std::size_t>();
        else if (key == "restarts_n1")
            config.restarts_n1 = value.get<std::size_t>();
        else if (key == "restarts_n2")
            config.restarts_n2 = value.get<std::size_t>();
        else if (key == "seed")
            config.seed.value = value.get<std::uint64_t>();
        else if (key == "dim_limit")
            config.dim_limit = value.get<std::size_t>();
        else if (key == "skip_n2")
            config.skip_n2 = value.get<bool>();
        else if (key == "grid_resolution")
            config.grid_resolution = value.get<std::size_t>();
        else
            throw ContractViolation("unknown config key: " + key);
    }
    return config;
}

json to_json(const ProductState& state) {
    return json{{"a", vector_to_json(state.a_local)}, {"b", vector_to_json(state.b_local)}};
}

json to_json(const SeesawOutcome& outcome) {
    bool all_converged = true;
    for (bool c : outcome.converged)
        all_converged = all_converged && c;
    return json{{"best_value", outcome.best_value},
                {"best_restart", outcome.best_restart},
                {"restarts", outcome.restarts},
                {"all_converged", all_converged},
                {"iterations_per_restart", outcome.iterations_per_restart},
                {"restart_values", outcome.restart_values},
                {"any_degenerate", outcome.any_degenerate},
                {"monotone_ok", outcome.monotone_ok},
                {"best_state", to_json(outcome.best_state)}};
}

json to_json(const InductionCheck& check) {
    return json{{"n", check.n_copies},
                {"beta", check.beta},
                {"min_eigenvalue", check.min_eigenvalue},
                {"identity_residual", check.identity_residual},
                {"pass", check.pass},
                {"skipped", check.skipped},
                {"skip_reason", check.skip_reason}};
}

json to_json(const CostBoundReport& report) {
    json induction = json::array();
    for (const InductionCheck& c : report.induction_checks)
        induction.push_back(to_json(c));
    json multicopy = json::array();
    for (const MulticopyCheck& c : report.multicopy_checks)
        multicopy.push_back(json{{"n", c.n_copies},
                                 {"alpha_hat", c.alpha_hat},
                                 {"floor", c.floor},
                                 {"ceiling", c.ceiling},
                                 {"pass", c.pass}});
    return json{{"alpha1_hat", report.alpha1_hat},
                {"beta", report.beta},
                {"ec_lower_bound_bits", report.ec_lower_bound_bits},
                {"certificate_checked", report.certificate_checked},
                {"certificate_ok", report.certificate_ok},
                {"certificate_residual", report.certificate_residual},
                {"seesaw_all_converged", report.seesaw_all_converged},
                {"grid_value", report.grid_value},
                {"grid_ok", report.grid_ok},
                {"induction_ok", report.induction_ok},
                {"induction_checks", std::move(induction)},
                {"multicopy_checks", std::move(multicopy)},
                {"note", report.note}};
}

json to_json(const NegativityReport& report) {
    return json{{"value_bits", report.value_bits},
                {"min_pt_eigenvalue", report.min_pt_eigenvalue},
                {"is_ppt", report.is_ppt},
                {"space", report.space_summary}};
}

json to_json(const CeilingCheck& check) {
    return json{{"n_copies", check.n_copies},
                {"n_singlets", check.n_singlets},
                {"e_neg", check.e_neg},
                {"ceiling", check.ceiling},
                {"pass", check.pass},
                {"min_pt_eigenvalue", check.min_pt_eigenvalue},
                {"space", check.space_summary},
                {"skipped", false}};
}

json to_json(const RunReport& report) {
    return json{{"command", report.command},
                {"version", report.version},
                {"config", to_json(report.config_echo)},
                {"results", report.results},
                {"wall_time_ms", report.wall_time_ms},
                {"all_pass", report.all_pass}};
}

RunReport cmd_reproduce(const ToleranceConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    json results;
    bool all_pass = true;

    bool tiles_ok = false;
    results["tiles"] = tiles_verification(tiles_ok);
    all_pass = all_pass && tiles_ok;

    bool cert_ok = false;
    results["certificate"] = certificate_payload(config, cert_ok);
    all_pass = all_pass && cert_ok;

    const CostBoundReport t1 = run_theorem1_pipeline(config);
    results["theorem1"] = to_json(t1);
    all_pass = all_pass && cost_bound_all_pass(t1);

    json cases = json::array();
    const std::pair<std::size_t, std::size_t> grid[] = {{1, 0}, {1, 1}, {2, 1}, {1, 2}};
    for (const auto& [n, l] : grid) {
        std::size_t dim = 1;
        for (std::size_t i = 0; i < n; ++i)
            dim *= 9;
        for (std::size_t i = 0; i < l; ++i)
            dim *= 4;
        if (dim > config.dim_limit) {
            cases.push_back(json{{"n_copies", n},
                                 {"n_singlets", l},
                                 {"skipped", true},
                                 {"reason", "skipped: size limit"}});
            continue;
        }
        const CeilingCheck check = theorem2_ceiling(n, l, config.dim_limit);
        all_pass = all_pass && check.pass;
        cases.push_back(to_json(check));
    }
    const NegativityReport rho_report = log_negativity(rho_b());
    const bool rho_ok = rho_report.is_ppt && std::abs(rho_report.value_bits) <= 1e-9;
    const NegativityReport singlet_report = log_negativity(singlet());
    const bool singlet_ok = std::abs(singlet_report.value_bits - 1.0) <= 1e-9;
    all_pass = all_pass && rho_ok && singlet_ok;
    results["theorem2"] = json{{"cases", std::move(cases)},
                               {"rho_b", to_json(rho_report)},
                               {"rho_b_ok", rho_ok},
                               {"singlet", to_json(singlet_report)},
                               {"singlet_ok", singlet_ok}};

    return finish("reproduce", config, std::move(results), all_pass, t0);
}

RunReport cmd_single(const std::string& command, const ToleranceConfig& config,
                     const CommandArgs& args) {
    config.validate();
    const auto t0 = Clock::now();

    if (command == "alpha1") {
        const SeesawOutcome outcome = multicopy_overlap(
            1, config.restarts_n1, config.seesaw_tol, config.max_iter, config.seed);
        bool all_converged = true;
        for (bool c : outcome.converged)
            all_converged = all_converged && c;
        const bool pass =
            all_converged && outcome.monotone_ok && outcome.best_value < 1.0;
        json results{{"alpha1_hat", outcome.best_value}, {"seesaw", to_json(outcome)}};
        return finish(command, config, std::move(results), pass, t0);
    }
    if (command == "cost-bound") {
        const CostBoundReport report = run_theorem1_pipeline(config);
        return finish(command, config, to_json(report), cost_bound_all_pass(report), t0);
    }
    if (command == "negativity") {
        const CeilingCheck check =
            theorem2_ceiling(args.copies, args.singlets, config.dim_limit);
        return finish(command, config, to_json(check), check.pass, t0);
    }
    if (command == "induction") {
        const InductionCheck check =
            induction_inequality_check(args.induction_n, args.induction_beta);
        return finish(command, config, to_json(check), check.pass, t0);
    }
    if (command == "certificate") {
        bool ok = false;
        json results = certificate_payload(config, ok);
        return finish(command, config, std::move(results), ok, t0);
    }
    if (command == "upb-verify") {
        bool ok = false;
        json results = tiles_verification(ok);
        return finish(command, config, std::move(results), ok, t0);
    }
    throw ContractViolation("unknown command: " + command);
}

int exit_code(const RunReport& report) {
    return report.all_pass ? 0 : 1;
}

} // namespace boundent
