#pragma once

#include <cstdint>
#include <vector>

#include "concbound/bounds.hpp"
#include "concbound/states.hpp"

namespace concbound {

struct RoofOptions {
    // 0 selects twice the numerical rank.
    std::size_t ensemble_size = 0;
    int iterations = 2000;
    int restarts = 20;
    std::uint64_t seed = 42;
    double initial_angle = 0.5;
    double final_angle = 1e-3;
    unsigned threads = 1;
    bool record_trace = false;
};

// Upper bound on the convex-roof concurrence: the ensemble average of the
// best decomposition found.
struct RoofEstimate {
    double value = 0.0;
    int parties = 0;
    std::size_t rank = 0;
    std::size_t ensemble_size = 0;
    int iterations = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    int best_restart = 0;
    bool converged = false;
    // Current objective after each iteration, one list per restart; filled
    // when RoofOptions::record_trace is set.
    std::vector<std::vector<double>> traces;
};

// Searches decompositions rho = sum_i |w_i><w_i| with w_i the columns of
// sqrt(rho) V, V a rank x K isometry, by random restarts and
// accept-on-improvement Givens rotations of V.
RoofEstimate convex_roof_upper(const DensityMatrix& rho, const RoofOptions& options = {});
RoofEstimate convex_roof_upper(const DensityMatrix& rho, std::size_t ensemble_size,
                               int iterations, std::uint64_t seed);

inline constexpr double kSandwichTolerance = 1e-6;

struct SandwichVerdict {
    bool pass = false;
    double lower = 0.0;  // C scale, N-partite normalization
    double upper = 0.0;
    double gap = 0.0;    // upper - lower
};

SandwichVerdict sandwich(const DensityMatrix& rho, const BoundReport& lower,
                         const RoofEstimate& upper);

}  // namespace concbound
