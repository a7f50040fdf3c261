#pragma once

#include <optional>
#include <vector>

#include "concbound/partitions.hpp"
#include "concbound/states.hpp"

namespace concbound {

enum class Functional { FullN, Partition, BipartiteCut };

struct ConcurrenceValue {
    double value = 0.0;
    double squared = 0.0;
    Functional functional = Functional::FullN;
    std::optional<Partition> partition;
    std::vector<int> cut;
    // Set for single-block partitions, whose concurrence is 0 by definition.
    bool degenerate = false;
};

// Radicands above this negative floor are rounding and clamp to zero.
inline constexpr double kRadicandFloor = -1e-12;

// Evaluates C_N^2 = 2^{2-N} ((2^N - 2) - sum_alpha Tr rho_alpha^2) for pure
// vectors over fixed dims, with the 2^N - 2 subset reshapes precomputed.
class ConcurrenceEvaluator {
  public:
    explicit ConcurrenceEvaluator(SubsystemDims dims);

    const SubsystemDims& dims() const { return dims_; }

    // Sum of Tr rho_alpha^2 over all nonempty proper subsets.
    double purity_sum(const ComplexVector& normalized) const;
    double squared(const ComplexVector& normalized) const;
    double value(const ComplexVector& normalized) const;

  private:
    struct Split {
        std::vector<std::size_t> map;
        Eigen::Index rows = 0;
        Eigen::Index cols = 0;
    };
    SubsystemDims dims_;
    std::vector<Split> splits_;
};

// Tr rho_keep^2 for a pure state.
double reduced_purity(const PureState& psi, std::span<const int> keep);

ConcurrenceValue pure_concurrence_full(const PureState& psi);
ConcurrenceValue pure_concurrence_partition(const PureState& psi, const Partition& p);
ConcurrenceValue pure_bipartite_concurrence(const PureState& psi, std::span<const int> cut);

// Mean of C_M^2 over all partitions into m blocks.
double avg_partition_concurrence_sq(const PureState& psi, int m);

// Two-qubit concurrence max(0, l1 - l2 - l3 - l4) from the spin-flipped
// spectrum.
ConcurrenceValue wootters_concurrence(const DensityMatrix& rho);

}  // namespace concbound
