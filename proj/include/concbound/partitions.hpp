#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "concbound/states.hpp"

namespace concbound {

// A set partition of the subsystems {0..n-1}. Blocks are kept in canonical
// form: each block ascending, blocks ordered by their smallest element.
class Partition {
  public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    // Restricted growth string: rgs[i] is the block of element i.
    static Partition from_restricted_growth(std::span<const int> rgs);

    // Textual form with 1-based labels, e.g. "14|2|3". Labels above 9 are
    // written comma-separated inside a block ("1,10|2").
    static Partition parse(std::string_view text);

    int n() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Concatenation of the blocks; the subsystem order used by coarse_grain.
    std::vector<int> order() const;

    std::string render() const;

    bool operator==(const Partition& other) const = default;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// All partitions of {0..n-1} into exactly m blocks, in lexicographic order
// of their restricted growth strings.
std::vector<Partition> enumerate_partitions(int n, int m);

// Re-factor the state so that each block is one subsystem.
PureState coarse_grain(const PureState& psi, const Partition& p);
DensityMatrix coarse_grain(const DensityMatrix& rho, const Partition& p);

}  // namespace concbound
