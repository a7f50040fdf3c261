// concbound: concurrence lower bounds for multipartite states.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "concbound/commands.hpp"
#include "concbound/errors.hpp"

namespace {

using namespace concbound;

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

void add_state_options(CLI::App* cmd, StateRequest& req) {
    cmd->add_option("--state", req.source,
                    "State file, or builtin: ghz<n>, double-bell, isotropic")
        ->required();
    cmd->add_option("--theta", req.theta, "GHZ angle in radians");
    cmd->add_option("--t", req.t, "Mixing weight for isotropic states");
    cmd->add_option("--of", req.of, "Pure builtin mixed by isotropic");
}

void add_roof_options(CLI::App* cmd, RoofOptions& roof, std::optional<std::uint64_t>& seed) {
    cmd->add_option("--ensemble-size", roof.ensemble_size, "Decomposition size (0: twice the rank)");
    cmd->add_option("--iterations", roof.iterations, "Rotations per restart");
    cmd->add_option("--restarts", roof.restarts, "Random restarts");
    cmd->add_option("--seed", seed, "Random seed (default $CONCURRENCE_SEED, else 42)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concurrence lower bounds for multipartite quantum states"};
    app.require_subcommand(1);

    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    bool serial = false;
    std::string output;
    app.add_option("--threads", threads, "Worker threads for sweeps and audits");
    app.add_flag("--serial", serial, "Single-threaded execution");
    app.add_option("-o,--output", output, "Output file (default stdout)");

    int ghz_n = 4;
    int ghz_points = 181;
    auto* ghz = app.add_subcommand("ghz-sweep", "Bounds on the generalized GHZ family over theta");
    ghz->add_option("--n", ghz_n, "Number of qubits (>= 3)");
    ghz->add_option("--points", ghz_points, "Grid points on [0, pi/2]");

    ExampleSweepOptions example;
    std::optional<std::uint64_t> example_seed;
    auto* ex = app.add_subcommand("example-sweep",
                                  "Bounds on (1-t)/16 I + t |phi><phi| over t in [0, 1]");
    ex->add_option("--points", example.points, "Grid points on [0, 1]");
    ex->add_flag("--roof", example.with_roof, "Add the convex-roof upper estimate column");
    add_roof_options(ex, example.roof, example_seed);

    StateRequest bound_state;
    std::vector<std::string> methods;
    std::vector<double> weights;
    auto* bound = app.add_subcommand("bound", "Evaluate lower bounds on one state");
    add_state_options(bound, bound_state);
    bound->add_option("--method", methods,
                      "caf, wang, zhu-fei, tripartite, thm1, thm2, thm3, thm4, thm-general")
        ->required()
        ->delimiter(',');
    bound->add_option("--weights", weights, "thm4 weights (N-2 values summing to 1)")
        ->delimiter(',');

    int part_n = 4;
    int part_m = 3;
    auto* parts = app.add_subcommand("partitions", "List set partitions of {1..n} into m blocks");
    parts->add_option("--n", part_n)->required();
    parts->add_option("--m", part_m)->required();

    AuditOptions audit;
    std::optional<std::uint64_t> audit_seed;
    auto* aud = app.add_subcommand("audit", "Randomized checks of the pure-state inequalities");
    aud->add_option("--trials", audit.trials, "Four-qubit samples (other suites scale from it)");
    aud->add_option("--seed", audit_seed, "Random seed (default $CONCURRENCE_SEED, else 42)");
    aud->add_flag("--corrupt-normalization", audit.corrupt_normalization)
        ->group("");  // test hook, hidden from help

    StateRequest roof_state;
    RoofOptions roof;
    std::optional<std::uint64_t> roof_seed;
    auto* rf = app.add_subcommand("roof", "Upper estimate of the convex-roof concurrence");
    add_state_options(rf, roof_state);
    add_roof_options(rf, roof, roof_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }
    if (serial) threads = 1;

    try {
        if (ghz->parsed()) {
            emit(ghz_sweep_csv(ghz_n, {ghz_points, threads}), output);
        } else if (ex->parsed()) {
            example.threads = threads;
            example.roof.seed = resolve_seed(example_seed);
            const auto result = example_sweep(example);
            emit(result.csv, output);
            if (result.onset) {
                std::fprintf(stderr, "detection onset: t = %.17g\n", *result.onset);
            } else {
                std::fprintf(stderr, "detection onset: none on this grid\n");
            }
            std::fprintf(stderr, "max |thm1 - reference| = %.17g\n", result.max_discrepancy);
        } else if (bound->parsed()) {
            const DensityMatrix rho = as_density(resolve_state(bound_state));
            std::string text;
            for (const auto& name : methods) {
                const auto method = parse_method(name);
                if (!method) throw DomainError("unknown method '" + name + "'");
                text += format_report(compute_bound(rho, *method, weights));
            }
            emit(text, output);
        } else if (parts->parsed()) {
            emit(partitions_text(part_n, part_m), output);
        } else if (aud->parsed()) {
            audit.seed = resolve_seed(audit_seed);
            audit.threads = threads;
            const auto report = run_audit(audit);
            emit(report.summary(), output);
            if (!report.pass) return kExitAuditViolation;
        } else if (rf->parsed()) {
            const DensityMatrix rho = as_density(resolve_state(roof_state));
            roof.seed = resolve_seed(roof_seed);
            roof.threads = threads;
            emit(roof_text(convex_roof_upper(rho, roof)), output);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}
