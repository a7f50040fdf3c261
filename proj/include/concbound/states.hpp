#pragma once

#include <cstdint>
#include <string_view>

#include <boost/random/mersenne_twister.hpp>

#include "concbound/tensor.hpp"

namespace concbound {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
// Inputs at least this pure are treated as pure states by the bound code.
inline constexpr double kPureThreshold = 1.0 - 1e-10;

class PureState {
  public:
    // Validates length and unit norm (to 1e-10); amplitudes are renormalized
    // exactly afterwards.
    PureState(SubsystemDims dims, ComplexVector amplitudes);

    // Normalizes any nonzero vector.
    static PureState from_unnormalized(SubsystemDims dims, ComplexVector amplitudes);

    const SubsystemDims& dims() const { return dims_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }
    ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

  private:
    SubsystemDims dims_;
    ComplexVector amplitudes_;
};

class DensityMatrix {
  public:
    // Checks Hermiticity (1e-9, then symmetrizes), PSD (eigenvalues >= -1e-10)
    // and unit trace (1e-10). Failures name the violated invariant.
    DensityMatrix(SubsystemDims dims, ComplexMatrix matrix);

    static DensityMatrix from_pure(const PureState& psi);

    const SubsystemDims& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    double purity() const;
    bool is_pure() const { return purity() >= kPureThreshold; }

    // Dominant eigenvector as a pure state; meaningful when is_pure().
    PureState dominant_state() const;

  private:
    SubsystemDims dims_;
    ComplexMatrix matrix_;
};

// Random source shared by every sampler. Boost's distributions are used
// because their output is specified, unlike std::normal_distribution.
using Rng = boost::random::mt19937_64;
inline constexpr std::string_view kRngId = "boost.mt19937_64/boost.normal_distribution";

// (g1 + i g2) / sqrt(2) with g1, g2 standard normal.
Complex complex_gaussian(Rng& rng);
ComplexMatrix complex_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(Rng& rng, Eigen::Index d);

PureState make_generalized_ghz(int n, double theta);
PureState make_double_bell();
DensityMatrix make_isotropic_mixture(const PureState& psi, double t);

PureState random_pure(const SubsystemDims& dims, std::uint64_t seed);
PureState random_pure(const SubsystemDims& dims, Rng& rng);
DensityMatrix random_density(const SubsystemDims& dims, std::size_t rank, std::uint64_t seed);
DensityMatrix random_density(const SubsystemDims& dims, std::size_t rank, Rng& rng);

}  // namespace concbound
