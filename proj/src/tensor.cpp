#include "concbound/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "concbound/errors.hpp"

namespace concbound {

SubsystemDims::SubsystemDims(std::vector<int> dims, std::size_t max_total)
    : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw DomainError("SubsystemDims: at least one subsystem is required");
    }
    for (int d : dims_) {
        if (d < 2) {
            throw DomainError("SubsystemDims: every local dimension must be >= 2, got " +
                              std::to_string(d));
        }
        if (total_ > max_total / static_cast<std::size_t>(d)) {
            throw SizeLimitError("SubsystemDims: total dimension exceeds limit " +
                                 std::to_string(max_total));
        }
        total_ *= static_cast<std::size_t>(d);
    }
}

SubsystemDims SubsystemDims::qubits(int n) {
    if (n < 1) throw DomainError("qubits: n must be >= 1");
    return SubsystemDims(std::vector<int>(static_cast<std::size_t>(n), 2));
}

std::size_t SubsystemDims::total_of(std::span<const int> indices) const {
    std::size_t t = 1;
    for (int i : indices) t *= static_cast<std::size_t>(dims_.at(static_cast<std::size_t>(i)));
    return t;
}

SubsystemDims SubsystemDims::permuted(std::span<const int> order) const {
    if (order.size() != dims_.size()) throw ShapeError("permuted: order has wrong length");
    std::vector<int> out;
    out.reserve(order.size());
    for (int k : order) out.push_back(dims_.at(static_cast<std::size_t>(k)));
    return SubsystemDims(std::move(out), total_);
}

SubsystemDims SubsystemDims::merged(std::span<const std::vector<int>> groups) const {
    std::vector<int> out;
    std::size_t covered = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw DomainError("merged: empty group");
        out.push_back(static_cast<int>(total_of(g)));
        covered += g.size();
    }
    if (covered != dims_.size()) throw ShapeError("merged: groups do not cover all factors");
    return SubsystemDims(std::move(out), total_);
}

std::vector<int> normalize_index_set(std::span<const int> indices, std::size_t n) {
    std::vector<int> out(indices.begin(), indices.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw DomainError("index set contains duplicates");
    }
    for (int i : out) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) {
            throw DomainError("subsystem index " + std::to_string(i) + " out of range");
        }
    }
    return out;
}

std::vector<int> complement(std::span<const int> indices, std::size_t n) {
    std::vector<int> out;
    std::size_t j = 0;
    for (int i = 0; i < static_cast<int>(n); ++i) {
        if (j < indices.size() && indices[j] == i) {
            ++j;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> permutation_map(const SubsystemDims& dims,
                                         std::span<const int> order) {
    const std::size_t n = dims.size();
    if (order.size() != n) throw ShapeError("permutation_map: order has wrong length");
    std::vector<int> seen(n, 0);
    for (int k : order) {
        if (k < 0 || static_cast<std::size_t>(k) >= n || seen[static_cast<std::size_t>(k)]++) {
            throw DomainError("permutation_map: order is not a permutation");
        }
    }
    // Stride of old factor order[k] inside the new layout.
    std::vector<std::size_t> new_stride(n);
    std::size_t s = 1;
    for (std::size_t k = n; k-- > 0;) {
        new_stride[static_cast<std::size_t>(order[k])] = s;
        s *= static_cast<std::size_t>(dims[static_cast<std::size_t>(order[k])]);
    }

    std::vector<std::size_t> map(dims.total());
    std::vector<int> digit(n, 0);
    std::size_t target = 0;
    for (std::size_t idx = 0; idx < map.size(); ++idx) {
        map[idx] = target;
        // Odometer increment, least significant factor last.
        for (std::size_t k = n; k-- > 0;) {
            if (++digit[k] < dims[k]) {
                target += new_stride[k];
                break;
            }
            target -= new_stride[k] * static_cast<std::size_t>(dims[k] - 1);
            digit[k] = 0;
        }
    }
    return map;
}

ComplexVector permute_subsystems(const ComplexVector& v, const SubsystemDims& dims,
                                 std::span<const int> order) {
    if (static_cast<std::size_t>(v.size()) != dims.total()) {
        throw ShapeError("permute_subsystems: vector length does not match dims");
    }
    const auto map = permutation_map(dims, order);
    ComplexVector out(v.size());
    for (std::size_t i = 0; i < map.size(); ++i) out(static_cast<Eigen::Index>(map[i])) = v(static_cast<Eigen::Index>(i));
    return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemDims& dims,
                                 std::span<const int> order) {
    const auto d = static_cast<Eigen::Index>(dims.total());
    if (m.rows() != d || m.cols() != d) {
        throw ShapeError("permute_subsystems: matrix shape does not match dims");
    }
    const auto map = permutation_map(dims, order);
    ComplexMatrix out(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const auto nj = static_cast<Eigen::Index>(map[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < d; ++i) {
            out(static_cast<Eigen::Index>(map[static_cast<std::size_t>(i)]), nj) = m(i, j);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_total) {
    const auto rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    const auto cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
    if (rows > max_total || cols > max_total) {
        throw SizeLimitError("kron: result dimension exceeds limit " + std::to_string(max_total));
    }
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

std::vector<int> keep_then_rest(std::span<const int> keep, std::size_t n) {
    auto sorted = normalize_index_set(keep, n);
    if (sorted.empty()) {
        throw DomainError("partial_trace: keep set is empty (use the trace instead)");
    }
    auto order = sorted;
    for (int r : complement(sorted, n)) order.push_back(r);
    return order;
}

void require_square(const ComplexMatrix& m, std::size_t d, const char* what) {
    const auto di = static_cast<Eigen::Index>(d);
    if (m.rows() != di || m.cols() != di) {
        throw ShapeError(std::string(what) + ": expected a " + std::to_string(d) + "x" +
                         std::to_string(d) + " matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::span<const int> keep) {
    require_square(rho, dims.total(), "partial_trace");
    const auto order = keep_then_rest(keep, dims.size());
    const std::size_t nkeep = normalize_index_set(keep, dims.size()).size();
    const auto dk = static_cast<Eigen::Index>(
        dims.total_of(std::span<const int>(order.data(), nkeep)));
    const auto dr = static_cast<Eigen::Index>(dims.total()) / dk;

    const ComplexMatrix p = permute_subsystems(rho, dims, order);
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index a = 0; a < dk; ++a) {
        for (Eigen::Index b = 0; b < dk; ++b) {
            Complex s = 0.0;
            for (Eigen::Index c = 0; c < dr; ++c) s += p(a * dr + c, b * dr + c);
            out(a, b) = s;
        }
    }
    return out;
}

ComplexMatrix reduced_from_pure(const ComplexVector& psi, const SubsystemDims& dims,
                                std::span<const int> keep) {
    if (static_cast<std::size_t>(psi.size()) != dims.total()) {
        throw ShapeError("reduced_from_pure: vector length does not match dims");
    }
    const auto order = keep_then_rest(keep, dims.size());
    const std::size_t nkeep = normalize_index_set(keep, dims.size()).size();
    const auto dk = static_cast<Eigen::Index>(
        dims.total_of(std::span<const int>(order.data(), nkeep)));
    const auto dr = static_cast<Eigen::Index>(dims.total()) / dk;

    const ComplexVector p = permute_subsystems(psi, dims, order);
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(p.data(), dk, dr);
    return m * m.adjoint();
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemDims& dims,
                                Side side) {
    if (dims.size() != 2) {
        throw DomainError("partial_transpose: exactly two factors required (merge the cut first)");
    }
    require_square(rho, dims.total(), "partial_transpose");
    const Eigen::Index da = dims[0];
    const Eigen::Index db = dims[1];
    ComplexMatrix out(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < db; ++j) {
            for (Eigen::Index k = 0; k < da; ++k) {
                for (Eigen::Index l = 0; l < db; ++l) {
                    const Complex v = side == Side::Second ? rho(i * db + l, k * db + j)
                                                           : rho(k * db + j, i * db + l);
                    out(i * db + j, k * db + l) = v;
                }
            }
        }
    }
    return out;
}

ComplexMatrix realign(const ComplexMatrix& rho, const SubsystemDims& dims) {
    if (dims.size() != 2) throw DomainError("realign: exactly two factors required");
    require_square(rho, dims.total(), "realign");
    const Eigen::Index da = dims[0];
    const Eigen::Index db = dims[1];
    ComplexMatrix out(da * da, db * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            for (Eigen::Index k = 0; k < db; ++k) {
                for (Eigen::Index l = 0; l < db; ++l) {
                    out(i * da + j, k * db + l) = rho(i * db + k, j * db + l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix realign_inverse(const ComplexMatrix& r, const SubsystemDims& dims) {
    if (dims.size() != 2) throw DomainError("realign_inverse: exactly two factors required");
    const Eigen::Index da = dims[0];
    const Eigen::Index db = dims[1];
    if (r.rows() != da * da || r.cols() != db * db) {
        throw ShapeError("realign_inverse: expected a dA^2 x dB^2 matrix");
    }
    ComplexMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            for (Eigen::Index k = 0; k < db; ++k) {
                for (Eigen::Index l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = r(i * da + j, k * db + l);
                }
            }
        }
    }
    return out;
}

double trace_norm(const ComplexMatrix& m) {
    if (!all_finite(m)) throw NumericalError("trace_norm: non-finite input entries");
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("trace_norm: SVD did not converge on a " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    }
    const double s = svd.singularValues().sum();
    if (!std::isfinite(s)) throw NumericalError("trace_norm: non-finite singular values");
    return s;
}

double purity(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) throw ShapeError("purity: matrix is not square");
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) s += rho(i, j) * rho(j, i);
    }
    if (std::abs(s.imag()) > kHermitianTolerance) {
        throw HermiticityError("purity: Tr(rho^2) has imaginary residue " +
                               std::to_string(s.imag()));
    }
    return s.real();
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("hermiticity_defect: matrix is not square");
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
    const double defect = hermiticity_defect(m);
    if (!(defect <= kHermitianTolerance)) {
        throw HermiticityError("matrix is not Hermitian: max |M - M^dagger| = " +
                               std::to_string(defect));
    }
    return (m + m.adjoint()) / 2.0;
}

RealVector hermitian_eigvals(const ComplexMatrix& m) {
    const ComplexMatrix h = hermitize(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigvals: eigensolver did not converge");
    }
    return es.eigenvalues().reverse();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
    const ComplexMatrix h = hermitize(rho);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success) throw NumericalError("psd_sqrt: eigensolver did not converge");
    RealVector ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -kPsdTolerance) {
            throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(ev(i)) +
                              " is below -1e-10");
        }
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    const ComplexMatrix& v = es.eigenvectors();
    return v * ev.cast<Complex>().asDiagonal() * v.adjoint();
}

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

}  // namespace concbound
