#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "concbound/partitions.hpp"
#include "concbound/states.hpp"

namespace concbound {

enum class Method {
    Caf,
    Wang,
    ZhuFei,
    Tripartite,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    ThmGeneral,
    ReferenceCurve,
};

enum class Quantity { C, CSquared };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::string_view quantity_name(Quantity q);

struct BoundReport {
    Method method = Method::Caf;
    Quantity quantity = Quantity::C;
    double value = 0.0;
    // Number of parties whose pure-state normalization the value refers to
    // (2 for a bipartite cut, N for the N-partite bounds).
    int parties = 0;
    std::vector<int> witness_cut;
    std::vector<Partition> witness_partitions;
    std::map<std::string, std::string> params;

    // Value on the C scale (square root of C-squared reports).
    double concurrence() const;
};

// Excess trace norms below this are rounding, not an entanglement signal.
inline constexpr double kCriterionNoiseFloor = 1e-12;

// Cuts S with 0 in S and S != all, in increasing bitmask order; one per
// unordered bipartition.
std::vector<std::vector<int>> bipartite_cuts(std::size_t n);

// sqrt(2 / (m (m - 1))) (max(||rho^{T_A}||_1, ||R(rho)||_1) - 1), clamped at
// zero, with m the smaller side of the cut.
BoundReport caf_bipartite_lower(const DensityMatrix& rho, std::span<const int> cut);

// Lower bound on the cut concurrence: exact for pure inputs, CAF otherwise.
BoundReport cut_concurrence_lower(const DensityMatrix& rho, std::span<const int> cut);

BoundReport wang_lower(const DensityMatrix& rho);

// 2^{(1-N)/2} sqrt(2^{N-M} + 2^M - 2) for a cut of size M.
double zhu_fei_coefficient(int n, int m);
BoundReport zhu_fei_lower(const DensityMatrix& rho);

BoundReport tripartite_lower(const DensityMatrix& rho);

// thm1/thm2/thm3 for (N, m) = (4, 3), (5, 3), (5, 4); thm-general otherwise.
Method theorem_method(std::size_t n, int m);

BoundReport thm1_lower_sq(const DensityMatrix& rho);
BoundReport thm_general_lower_sq(const DensityMatrix& rho, int m);

// Mean over all bipartitions of the squared, coefficient-scaled cut bound.
BoundReport bipartite_average_sq(const DensityMatrix& rho);

BoundReport thm4_combined(const DensityMatrix& rho, std::span<const double> weights);

struct ReferenceCurves {
    double a = 0.0;         // 12|3|4-type partitions
    double b = 0.0;         // 1|3|24-type partitions
    double combined = 0.0;  // four-party C^2 bound
};

// Piecewise closed forms for (1-t)/16 I + t |phi><phi|, phi the double Bell
// state; thresholds at t = 1/9 and t = 1/5.
ReferenceCurves reference_curves(double t);

}  // namespace concbound
