#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concbound/bounds.hpp"
#include "concbound/roof.hpp"
#include "concbound/state_io.hpp"

namespace concbound {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "CONCURRENCE_SEED";

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitNumerical = 3,
    kExitAuditViolation = 4,
};

// Flag value, else $CONCURRENCE_SEED, else 42.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

// Builtins: "ghz<n>" (uses theta), "double-bell", "isotropic" (mixes the
// builtin named by `of` with weight t). Anything else is read as a state file.
struct StateRequest {
    std::string source;
    double theta = 0.7853981633974483;
    double t = 1.0;
    std::string of = "double-bell";
};

AnyState resolve_state(const StateRequest& request);

std::string format_csv_number(double v);

struct SweepOptions {
    int points = 181;
    unsigned threads = 1;
};

// theta in [0, pi/2]; columns theta, exact, theorem columns (square roots of
// the C^2 bounds), zhu-fei, wang.
std::string ghz_sweep_csv(int n, const SweepOptions& options = {});

struct ExampleSweepOptions {
    int points = 201;
    unsigned threads = 1;
    bool with_roof = false;
    RoofOptions roof;
};

struct ExampleSweep {
    std::string csv;
    // Smallest grid t with a positive computed bound.
    std::optional<double> onset;
    double max_discrepancy = 0.0;  // max |computed - reference|
    std::vector<double> t;
    std::vector<double> computed;
    std::vector<double> reference;
};

// Columns t, thm1 (C^2), reference (C^2), thm1-minus-reference, wang (C),
// zhu-fei (C) and, optionally, roof (C^2).
ExampleSweep example_sweep(const ExampleSweepOptions& options = {});

std::string partitions_text(int n, int m);

BoundReport compute_bound(const DensityMatrix& rho, Method method,
                          const std::vector<double>& weights = {});

std::string format_report(const BoundReport& report);

std::string roof_text(const RoofEstimate& estimate);

struct AuditOptions {
    int trials = 1000;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    // Test hook: halves the exact C_N^2 so the theorem checks must fail.
    bool corrupt_normalization = false;
};

struct AuditProperty {
    std::string name;
    int samples = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct AuditReport {
    std::vector<AuditProperty> properties;
    bool pass = true;
    std::string summary() const;
};

AuditReport run_audit(const AuditOptions& options = {});

// Four-party C^2 written as half the sum of the seven linear entropies
// (singles and pairs with subsystem 1).
double halved_concurrence_sq_n4(const PureState& psi);
// Five-party C^2 as a quarter of the fifteen single and pair entropies.
double halved_concurrence_sq_n5(const PureState& psi);

}  // namespace concbound
