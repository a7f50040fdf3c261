#include "concbound/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "concbound/errors.hpp"

namespace concbound {
namespace {

double checked_sqrt(double radicand, const char* what) {
    if (radicand < 0.0) {
        if (radicand < kRadicandFloor) {
            throw NumericalError(std::string(what) + ": negative radicand " + std::to_string(radicand));
        }
        return 0.0;
    }
    return std::sqrt(radicand);
}

ConcurrenceValue make_value(double squared, Functional f, const char* what) {
    ConcurrenceValue out;
    out.value = checked_sqrt(squared, what);
    out.squared = out.value * out.value;
    out.functional = f;
    return out;
}

}  // namespace

ConcurrenceEvaluator::ConcurrenceEvaluator(SubsystemDims dims) : dims_(std::move(dims)) {
    const std::size_t n = dims_.size();
    if (n < 2) throw DomainError("concurrence: at least two subsystems are required");
    if (n > 20) throw SizeLimitError("concurrence: too many subsystems for subset enumeration");
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<int> order;
        std::vector<int> rest;
        for (std::size_t k = 0; k < n; ++k) {
            ((mask >> k) & 1U ? order : rest).push_back(static_cast<int>(k));
        }
        const auto rows = static_cast<Eigen::Index>(dims_.total_of(order));
        order.insert(order.end(), rest.begin(), rest.end());
        Split s;
        s.map = permutation_map(dims_, order);
        s.rows = rows;
        s.cols = static_cast<Eigen::Index>(dims_.total()) / rows;
        splits_.push_back(std::move(s));
    }
}

double ConcurrenceEvaluator::purity_sum(const ComplexVector& v) const {
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    ComplexVector buf(v.size());
    double total = 0.0;
    for (const auto& s : splits_) {
        for (std::size_t i = 0; i < s.map.size(); ++i) {
            buf(static_cast<Eigen::Index>(s.map[i])) = v(static_cast<Eigen::Index>(i));
        }
        Eigen::Map<const RowMajor> m(buf.data(), s.rows, s.cols);
        // The smaller Gram matrix carries the same nonzero spectrum.
        total += s.rows <= s.cols ? (m * m.adjoint()).squaredNorm()
                                  : (m.adjoint() * m).squaredNorm();
    }
    return total;
}

double ConcurrenceEvaluator::squared(const ComplexVector& v) const {
    const double n = static_cast<double>(dims_.size());
    const double terms = std::exp2(n) - 2.0;
    return std::exp2(2.0 - n) * (terms - purity_sum(v));
}

double ConcurrenceEvaluator::value(const ComplexVector& v) const {
    return checked_sqrt(squared(v), "pure concurrence");
}

double reduced_purity(const PureState& psi, std::span<const int> keep) {
    const auto r = reduced_from_pure(psi.amplitudes(), psi.dims(), keep);
    return r.squaredNorm();
}

ConcurrenceValue pure_concurrence_full(const PureState& psi) {
    const ConcurrenceEvaluator eval(psi.dims());
    return make_value(eval.squared(psi.amplitudes()), Functional::FullN, "pure_concurrence_full");
}

ConcurrenceValue pure_concurrence_partition(const PureState& psi, const Partition& p) {
    if (static_cast<std::size_t>(p.n()) != psi.dims().size()) {
        throw DomainError("pure_concurrence_partition: partition size does not match the state");
    }
    ConcurrenceValue out;
    if (p.size() == 1) {
        out.functional = Functional::Partition;
        out.partition = p;
        out.degenerate = true;
        return out;
    }
    const PureState cg = coarse_grain(psi, p);
    out = make_value(ConcurrenceEvaluator(cg.dims()).squared(cg.amplitudes()),
                     Functional::Partition, "pure_concurrence_partition");
    out.partition = p;

    if (p.size() == 3) {
        double tri = 3.0;
        for (const auto& block : p.blocks()) tri -= reduced_purity(psi, block);
        if (std::abs(tri - out.squared) > 1e-10) {
            throw NumericalError("pure_concurrence_partition: tripartite identity violated for " +
                                 p.render());
        }
    }
    return out;
}

ConcurrenceValue pure_bipartite_concurrence(const PureState& psi, std::span<const int> cut) {
    const auto sorted = normalize_index_set(cut, psi.dims().size());
    if (sorted.empty() || sorted.size() == psi.dims().size()) {
        throw DomainError("pure_bipartite_concurrence: cut must be a nonempty proper subset");
    }
    auto out = make_value(2.0 * (1.0 - reduced_purity(psi, sorted)), Functional::BipartiteCut,
                          "pure_bipartite_concurrence");
    out.cut = sorted;
    return out;
}

double avg_partition_concurrence_sq(const PureState& psi, int m) {
    const int n = static_cast<int>(psi.dims().size());
    if (m < 2 || m > n) {
        throw DomainError("avg_partition_concurrence_sq: need 2 <= m <= N, got m=" + std::to_string(m));
    }
    const auto parts = enumerate_partitions(n, m);
    double sum = 0.0;
    for (const auto& p : parts) sum += pure_concurrence_partition(psi, p).squared;
    return sum / static_cast<double>(parts.size());
}

ConcurrenceValue wootters_concurrence(const DensityMatrix& rho) {
    if (!(rho.dims() == SubsystemDims{2, 2})) {
        throw DomainError("wootters_concurrence: requires dims (2, 2)");
    }
    ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    // sqrt(rho) rho~ sqrt(rho) is Hermitian with the same spectrum as rho rho~.
    const ComplexMatrix h = root * flipped * root;
    const RealVector ev = hermitian_eigvals((h + h.adjoint()) / 2.0);
    double lambda[4];
    for (int i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(ev(i), 0.0));
    ConcurrenceValue out;
    out.value = std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
    out.squared = out.value * out.value;
    out.functional = Functional::BipartiteCut;
    out.cut = {0};
    return out;
}

}  // namespace concbound
