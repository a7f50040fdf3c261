#pragma once

// Dense complex linear algebra with multipartite index bookkeeping.
//
// Index convention: subsystem 0 is the most significant tensor factor, so a
// basis state |i_0 i_1 ... i_{N-1}> sits at row  sum_k i_k * prod_{j>k} d_j.
// Subsystem indices in the C++ API are 0-based; textual forms (partition
// strings, CLI) use 1-based labels.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace concbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr std::size_t kDefaultMaxDimension = 4096;
inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-10;

class SubsystemDims {
  public:
    SubsystemDims() = default;
    explicit SubsystemDims(std::vector<int> dims,
                           std::size_t max_total = kDefaultMaxDimension);
    SubsystemDims(std::initializer_list<int> dims)
        : SubsystemDims(std::vector<int>(dims)) {}

    static SubsystemDims qubits(int n);

    std::size_t size() const { return dims_.size(); }
    int operator[](std::size_t i) const { return dims_[i]; }
    std::size_t total() const { return total_; }
    std::span<const int> dims() const { return dims_; }

    // Product of the dimensions of the listed subsystems.
    std::size_t total_of(std::span<const int> indices) const;

    // Dimensions reordered so that new factor k is old factor order[k].
    SubsystemDims permuted(std::span<const int> order) const;

    // Merge consecutive groups of factors into single factors.
    SubsystemDims merged(std::span<const std::vector<int>> groups) const;

    bool operator==(const SubsystemDims& other) const { return dims_ == other.dims_; }

  private:
    std::vector<int> dims_;
    std::size_t total_ = 1;
};

// Sorted, duplicate-free, in-range list of subsystem indices.
std::vector<int> normalize_index_set(std::span<const int> indices, std::size_t n);

// Indices in [0, n) not contained in `indices` (which must be normalized).
std::vector<int> complement(std::span<const int> indices, std::size_t n);

// Maps each linear index under `dims` to its linear index after the factors
// are reordered so that new factor k is old factor order[k].
std::vector<std::size_t> permutation_map(const SubsystemDims& dims,
                                         std::span<const int> order);

ComplexVector permute_subsystems(const ComplexVector& v, const SubsystemDims& dims,
                                 std::span<const int> order);
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemDims& dims,
                                 std::span<const int> order);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_total = kDefaultMaxDimension);

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::span<const int> keep);

// Reduced density matrix of an (unnormalized) pure vector on `keep`.
ComplexMatrix reduced_from_pure(const ComplexVector& psi, const SubsystemDims& dims,
                                std::span<const int> keep);

enum class Side { First, Second };

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemDims& dims,
                                Side side);

// R(rho)_{(i,j),(k,l)} = rho_{(i,k),(j,l)}; shape dA^2 x dB^2.
ComplexMatrix realign(const ComplexMatrix& rho, const SubsystemDims& dims);
ComplexMatrix realign_inverse(const ComplexMatrix& r, const SubsystemDims& dims);

double trace_norm(const ComplexMatrix& m);

// Tr(rho^2); throws HermiticityError when the imaginary part exceeds 1e-9.
double purity(const ComplexMatrix& rho);

// Largest absolute entry of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

// (m + m^dagger) / 2 after checking the defect against kHermitianTolerance.
ComplexMatrix hermitize(const ComplexMatrix& m);

// Full spectrum in descending order.
RealVector hermitian_eigvals(const ComplexMatrix& m);

ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

bool all_finite(const ComplexMatrix& m);

}  // namespace concbound
