#include "concbound/states.hpp"

#include <cmath>
#include <string>

#include <boost/random/normal_distribution.hpp>

#include "concbound/errors.hpp"

namespace concbound {

PureState::PureState(SubsystemDims dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != dims_.total()) {
        throw ShapeError("PureState: " + std::to_string(amplitudes_.size()) +
                         " amplitudes for total dimension " + std::to_string(dims_.total()));
    }
    if (!all_finite(amplitudes_)) throw DomainError("PureState: non-finite amplitude");
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw DomainError("PureState: norm must be 1 (to 1e-10), got " + std::to_string(norm));
    }
    amplitudes_ /= norm;
}

PureState PureState::from_unnormalized(SubsystemDims dims, ComplexVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("PureState: cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return PureState(std::move(dims), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(SubsystemDims dims, ComplexMatrix matrix)
    : dims_(std::move(dims)) {
    const auto d = static_cast<Eigen::Index>(dims_.total());
    if (matrix.rows() != d || matrix.cols() != d) {
        throw ShapeError("DensityMatrix: expected " + std::to_string(d) + "x" +
                         std::to_string(d) + ", got " + std::to_string(matrix.rows()) + "x" +
                         std::to_string(matrix.cols()));
    }
    if (!all_finite(matrix)) throw DomainError("DensityMatrix: non-finite entry");
    matrix_ = hermitize(matrix);
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw DomainError("DensityMatrix: trace must be 1 (to 1e-10), got " + std::to_string(tr));
    }
    const RealVector ev = hermitian_eigvals(matrix_);
    if (ev(ev.size() - 1) < -kPsdTolerance) {
        throw NotPsdError("DensityMatrix: not positive semidefinite, minimum eigenvalue " +
                          std::to_string(ev(ev.size() - 1)));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.dims(), psi.projector());
}

double DensityMatrix::purity() const { return concbound::purity(matrix_); }

PureState DensityMatrix::dominant_state() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_);
    if (es.info() != Eigen::Success) throw NumericalError("dominant_state: eigensolver failed");
    const Eigen::Index top = matrix_.rows() - 1;
    return PureState::from_unnormalized(dims_, es.eigenvectors().col(top));
}

Complex complex_gaussian(Rng& rng) {
    boost::random::normal_distribution<double> normal;
    const double re = normal(rng);
    const double im = normal(rng);
    return Complex(re, im) / std::sqrt(2.0);
}

ComplexMatrix complex_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix g(rows, cols);
    // Filled row by row so the draw order does not depend on storage order.
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = complex_gaussian(rng);
    }
    return g;
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index d) {
    const ComplexMatrix g = complex_gaussian_matrix(rng, d, d);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return q;
}

PureState make_generalized_ghz(int n, double theta) {
    if (n < 2) throw DomainError("make_generalized_ghz: n must be >= 2");
    auto dims = SubsystemDims::qubits(n);
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(dims.total()));
    amps(0) = std::cos(theta);
    amps(amps.size() - 1) = std::sin(theta);
    return PureState(std::move(dims), std::move(amps));
}

PureState make_double_bell() {
    ComplexVector amps = ComplexVector::Zero(16);
    for (int idx : {0, 3, 12, 15}) amps(idx) = 0.5;
    return PureState(SubsystemDims::qubits(4), std::move(amps));
}

DensityMatrix make_isotropic_mixture(const PureState& psi, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("make_isotropic_mixture: t must lie in [0, 1], got " + std::to_string(t));
    }
    const auto d = static_cast<Eigen::Index>(psi.dims().total());
    ComplexMatrix m = ComplexMatrix::Identity(d, d) * ((1.0 - t) / static_cast<double>(d));
    m += t * psi.projector();
    return DensityMatrix(psi.dims(), std::move(m));
}

PureState random_pure(const SubsystemDims& dims, Rng& rng) {
    const auto d = static_cast<Eigen::Index>(dims.total());
    ComplexVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = complex_gaussian(rng);
    return PureState::from_unnormalized(dims, std::move(v));
}

PureState random_pure(const SubsystemDims& dims, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(dims, rng);
}

DensityMatrix random_density(const SubsystemDims& dims, std::size_t rank, Rng& rng) {
    if (rank < 1 || rank > dims.total()) {
        throw DomainError("random_density: rank must lie in [1, " + std::to_string(dims.total()) +
                          "], got " + std::to_string(rank));
    }
    const auto d = static_cast<Eigen::Index>(dims.total());
    const ComplexMatrix g = complex_gaussian_matrix(rng, d, static_cast<Eigen::Index>(rank));
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(dims, std::move(m));
}

DensityMatrix random_density(const SubsystemDims& dims, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(dims, rank, rng);
}

}  // namespace concbound
