// Command-line front end: reconstruct distributions from moment files,
// compute moments of distribution files, inspect support windows, and
// compare the dual solver against the grid oracle.
//
// Exit codes: 0 success, 1 error, 2 window cap reached (reconstruct) or
// total-variation tolerance exceeded (compare).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "maxent/io.hpp"
#include "maxent/oracle.hpp"
#include "maxent/reconstruction.hpp"

namespace {

using namespace maxent;

struct CommonFlags {
    std::string input_path;
    std::string output_path;
    std::string output_format = "csv";
    bool json_diagnostics = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_input) {
    if (needs_input) {
        cmd->add_option("input", flags.input_path, "Input file")->required();
    }
    cmd->add_option("-o,--output", flags.output_path, "Output path (default: stdout)");
    cmd->add_option("--output-format", flags.output_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--json-diagnostics", flags.json_diagnostics,
                  "Emit machine-readable diagnostics on stderr");
}

void add_solver_flags(CLI::App* cmd, SolverConfig& cfg) {
    cmd->add_option("--delta-lambda", cfg.delta_lambda, "Stopping threshold on the step");
    cmd->add_option("--gamma0", cfg.gamma0, "Initial damping factor");
    cmd->add_option("--max-iters", cfg.max_iters, "Inner iteration cap");
}

void add_support_flags(CLI::App* cmd, SupportConfig& cfg, std::string& strategy) {
    cmd->add_option("--delta-prob", cfg.delta_prob, "Tail-probability threshold");
    cmd->add_option("--xi", cfg.xi, "Chebyshev level");
    cmd->add_option("--strategy", strategy, "incremental or chebyshev")
        ->check(CLI::IsMember({"incremental", "chebyshev"}));
    cmd->add_option("--max-window", cfg.max_window, "Window width cap, in states");
    cmd->add_flag("--both-ends-tail", cfg.both_ends_tail, "Tail-test the left edge too");
    cmd->add_flag("--frozen-left", cfg.frozen_left,
                  "Keep the printed even-step extension that never moves the left edge");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ValidationError("cannot open output file: " + path);
    return file;
}

void emit_distribution(const FiniteDistribution& dist, const CommonFlags& flags) {
    std::ofstream file;
    std::ostream& out = open_output(flags.output_path, file);
    if (flags.output_format == "json") {
        io::write_distribution_json(out, dist);
    } else {
        io::write_distribution_csv(out, dist);
    }
}

int run_reconstruct(const CommonFlags& flags, const SupportConfig& scfg,
                    const SolverConfig& dcfg) {
    const MomentSequence mu = io::read_moments_json_file(flags.input_path);
    const ReconstructionResult result = reconstruct(mu, scfg, dcfg);

    emit_distribution(result.distribution, flags);

    if (flags.json_diagnostics) {
        nlohmann::json diag;
        diag["window"] = {{"left", result.window.left}, {"right", result.window.right}};
        diag["outer_iterations"] = result.outer_iterations;
        diag["inner_iterations"] = result.report.iterations;
        diag["converged"] = result.report.converged;
        diag["window_cap_reached"] = result.status == ReconstructionStatus::window_cap_reached;
        diag["achieved_moments"] = result.achieved_moments.values();
        diag["final_gradient_norm"] = result.report.final_gradient_norm;
        std::cerr << diag.dump(2) << "\n";
    } else {
        std::cerr << "window: {" << result.window.left << ".." << result.window.right << "}\n"
                  << "outer iterations: " << result.outer_iterations << "\n"
                  << "inner iterations (last solve): " << result.report.iterations << "\n"
                  << "converged: " << (result.report.converged ? "yes" : "no") << "\n";
        std::cerr << "achieved moments:";
        for (double v : result.achieved_moments.values()) std::cerr << " " << v;
        std::cerr << "\n";
    }
    return result.status == ReconstructionStatus::window_cap_reached ? 2 : 0;
}

int run_moments(const CommonFlags& flags, int max_order) {
    const FiniteDistribution dist = io::read_distribution_csv_file(flags.input_path);
    const MomentSequence mu = moments_of(dist, max_order);
    std::ofstream file;
    std::ostream& out = open_output(flags.output_path, file);
    io::write_moments_json(out, mu);
    return 0;
}

int run_support(const CommonFlags& flags, const SupportConfig& scfg) {
    const MomentSequence mu = io::read_moments_json_file(flags.input_path);
    std::ofstream file;
    std::ostream& out = open_output(flags.output_path, file);

    try {
        const PolyCoeffs d0 = delta0_polynomial(mu);
        const auto roots = real_simple_roots(d0);
        out << "delta0 roots:";
        for (const auto& r : roots) out << " " << r.value;
        out << "\n";
        if (mu.order() % 2 == 1) {
            const auto d1 = delta1_polynomial(mu, roots.front().value);
            if (d1.degree() < 1) {
                out << "delta1 roots: degenerate (constant polynomial)\n";
            } else {
                const auto eta = real_simple_roots(d1);
                out << "delta1 roots:";
                for (const auto& r : eta) out << " " << r.value;
                out << "\n";
            }
        }
    } catch (const DegeneratePolynomialError& e) {
        out << "determinant roots: degenerate (" << e.what() << ")\n";
    } catch (const InsufficientRealRootsError& e) {
        out << "determinant roots: unavailable (" << e.what() << ")\n";
    }

    const SupportWindow from_roots = initial_window(mu, scfg);
    out << "root window: {" << from_roots.left << ".." << from_roots.right << "}\n";
    const SupportWindow cheb = chebyshev_window(mu, scfg);
    out << "chebyshev window: {" << cheb.left << ".." << cheb.right << "}\n";
    return 0;
}

int run_compare(const CommonFlags& flags, std::int64_t left, std::int64_t right, double tv_tol,
                const SolverConfig& dcfg) {
    const MomentSequence mu = io::read_moments_json_file(flags.input_path);
    const SupportWindow d(left, right);

    const auto [lm, report] = minimize(mu, d, dcfg);
    const FiniteDistribution solver_dist = distribution_from(lm, d);
    const FiniteDistribution oracle_dist = oracle::grid_maxent(mu, d);

    const double tv = total_variation(solver_dist, oracle_dist);
    std::ofstream file;
    std::ostream& out = open_output(flags.output_path, file);
    out << "tv: " << tv << "\n";
    out << "entropy solver: " << entropy(solver_dist) << "\n";
    out << "entropy oracle: " << entropy(oracle_dist) << "\n";
    out << "entropy difference: " << entropy(solver_dist) - entropy(oracle_dist) << "\n";
    const MomentSequence achieved = moments_of(solver_dist, mu.order());
    out << "moment residuals:";
    for (int k = 1; k <= mu.order(); ++k) out << " " << achieved[k] - mu[k];
    out << "\n";
    return tv <= tv_tol ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-entropy reconstruction of discrete distributions from raw moments"};
    app.require_subcommand(1);

    CommonFlags flags;
    SolverConfig dcfg;
    SupportConfig scfg;
    std::string strategy = "incremental";
    int max_order = 2;
    std::int64_t win_left = 0;
    std::int64_t win_right = 0;
    double tv_tol = 1e-3;

    auto* rec = app.add_subcommand("reconstruct", "Reconstruct a distribution from moments");
    add_common(rec, flags, true);
    add_solver_flags(rec, dcfg);
    add_support_flags(rec, scfg, strategy);

    auto* mom = app.add_subcommand("moments", "Compute raw moments of a distribution CSV");
    add_common(mom, flags, true);
    mom->add_option("--max-order", max_order, "Highest moment order to emit");

    auto* sup = app.add_subcommand("support", "Show initial support windows for moments");
    add_common(sup, flags, true);
    add_support_flags(sup, scfg, strategy);

    auto* cmp = app.add_subcommand("compare", "Dual solver vs grid oracle on a fixed window");
    add_common(cmp, flags, true);
    add_solver_flags(cmp, dcfg);
    cmp->add_option("--window-left", win_left, "Window left edge")->required();
    cmp->add_option("--window-right", win_right, "Window right edge")->required();
    cmp->add_option("--tv-tol", tv_tol, "Pass threshold on total-variation distance");

    CLI11_PARSE(app, argc, argv);

    scfg.strategy = (strategy == "chebyshev") ? ExtensionStrategy::chebyshev
                                              : ExtensionStrategy::incremental;

    try {
        if (rec->parsed()) return run_reconstruct(flags, scfg, dcfg);
        if (mom->parsed()) return run_moments(flags, max_order);
        if (sup->parsed()) return run_support(flags, scfg);
        if (cmp->parsed()) return run_compare(flags, win_left, win_right, tv_tol, dcfg);
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
