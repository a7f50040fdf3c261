#include "concbound/roof.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include "concbound/concurrence.hpp"
#include "concbound/errors.hpp"
#include "concbound/parallel.hpp"

namespace concbound {
namespace {

constexpr double kRankThreshold = 1e-12;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct RestartResult {
    double value = 0.0;
    double value_at_90_percent = 0.0;
    std::vector<double> trace;
};

double weighted_concurrence(const ConcurrenceEvaluator& eval, const ComplexVector& w) {
    const double p = w.squaredNorm();
    if (p <= 0.0) return 0.0;
    return p * eval.value(w / std::sqrt(p));
}

// Columns of `factor` span the support of rho with factor factor^dagger = rho.
RestartResult run_restart(const ConcurrenceEvaluator& eval, const ComplexMatrix& factor,
                          std::size_t ensemble, const RoofOptions& opt, std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::Index rank = factor.cols();
    const auto k = static_cast<Eigen::Index>(ensemble);

    // Random isometry: thin Q of a K x rank Ginibre matrix, V = Q^dagger.
    const ComplexMatrix g = complex_gaussian_matrix(rng, k, rank);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(k, rank);
    ComplexMatrix w = factor * q.adjoint();

    std::vector<double> f(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = weighted_concurrence(eval, w.col(i));

    RestartResult out;
    if (opt.record_trace) out.trace.reserve(static_cast<std::size_t>(opt.iterations));

    double current = 0.0;
    for (double v : f) current += v;
    out.value_at_90_percent = current;

    boost::random::uniform_int_distribution<Eigen::Index> pick(0, k - 1);
    boost::random::uniform_real_distribution<double> unit(0.0, 1.0);
    const double decay = opt.iterations > 1
                             ? std::log(opt.final_angle / opt.initial_angle) / (opt.iterations - 1)
                             : 0.0;
    const int mark = opt.iterations - opt.iterations / 10;

    ComplexVector wj(w.rows());
    ComplexVector wk(w.rows());
    for (int it = 0; it < opt.iterations; ++it) {
        if (it == mark) out.value_at_90_percent = current;
        if (k >= 2) {
            const Eigen::Index j = pick(rng);
            Eigen::Index l = pick(rng);
            while (l == j) l = pick(rng);
            const double max_angle = opt.initial_angle * std::exp(decay * it);
            const double theta = (2.0 * unit(rng) - 1.0) * max_angle;
            const double phi = 2.0 * std::numbers::pi * unit(rng);
            const Complex phase = std::polar(1.0, phi);
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            wj = c * w.col(j) - s * phase * w.col(l);
            wk = s * std::conj(phase) * w.col(j) + c * w.col(l);
            const double fj = weighted_concurrence(eval, wj);
            const double fk = weighted_concurrence(eval, wk);
            const auto uj = static_cast<std::size_t>(j);
            const auto ul = static_cast<std::size_t>(l);
            if (fj + fk < f[uj] + f[ul]) {
                current += (fj + fk) - (f[uj] + f[ul]);
                w.col(j) = wj;
                w.col(l) = wk;
                f[uj] = fj;
                f[ul] = fk;
            }
        }
        if (opt.record_trace) out.trace.push_back(current);
    }
    // Re-sum to drop the drift of incremental updates.
    out.value = 0.0;
    for (double v : f) out.value += v;
    return out;
}

}  // namespace

RoofEstimate convex_roof_upper(const DensityMatrix& rho, const RoofOptions& opt) {
    if (opt.iterations < 0 || opt.restarts < 1) {
        throw DomainError("convex_roof_upper: need iterations >= 0 and restarts >= 1");
    }
    if (!(opt.initial_angle > 0.0) || !(opt.final_angle > 0.0)) {
        throw DomainError("convex_roof_upper: rotation angles must be positive");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
    if (es.info() != Eigen::Success) throw NumericalError("convex_roof_upper: eigensolver failed");
    const RealVector& ev = es.eigenvalues();
    const double top = ev(ev.size() - 1);

    std::vector<Eigen::Index> support;
    for (Eigen::Index i = ev.size(); i-- > 0;) {
        if (ev(i) > kRankThreshold * std::max(1.0, top)) support.push_back(i);
    }
    const std::size_t rank = support.size();
    const std::size_t ensemble = opt.ensemble_size == 0 ? 2 * rank : opt.ensemble_size;
    if (ensemble < rank) {
        throw DomainError("convex_roof_upper: ensemble size " + std::to_string(ensemble) +
                          " is below the numerical rank " + std::to_string(rank));
    }

    ComplexMatrix factor(rho.matrix().rows(), static_cast<Eigen::Index>(rank));
    for (std::size_t c = 0; c < rank; ++c) {
        const Eigen::Index i = support[c];
        factor.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(i) * std::sqrt(ev(i));
    }

    const ConcurrenceEvaluator eval(rho.dims());
    std::vector<RestartResult> results(static_cast<std::size_t>(opt.restarts));
    parallel_for(results.size(), opt.threads, [&](std::size_t r) {
        // r-th output of the splitmix64 stream seeded with opt.seed; nearby
        // seeds do not share restarts.
        results[r] = run_restart(eval, factor, ensemble, opt, splitmix64(opt.seed + r * kGolden));
    });

    RoofEstimate est;
    est.parties = static_cast<int>(rho.dims().size());
    est.rank = rank;
    est.ensemble_size = ensemble;
    est.iterations = opt.iterations;
    est.restarts = opt.restarts;
    est.seed = opt.seed;
    // Strict comparison keeps the lowest restart index on ties.
    for (std::size_t r = 0; r < results.size(); ++r) {
        if (r == 0 || results[r].value < est.value) {
            est.value = results[r].value;
            est.best_restart = static_cast<int>(r);
        }
    }
    const auto& best = results[static_cast<std::size_t>(est.best_restart)];
    est.converged = best.value_at_90_percent - best.value <= 1e-4 * std::max(best.value, 1e-12);
    if (opt.record_trace) {
        for (auto& r : results) est.traces.push_back(std::move(r.trace));
    }
    return est;
}

RoofEstimate convex_roof_upper(const DensityMatrix& rho, std::size_t ensemble_size,
                               int iterations, std::uint64_t seed) {
    RoofOptions opt;
    opt.ensemble_size = ensemble_size;
    opt.iterations = iterations;
    opt.seed = seed;
    return convex_roof_upper(rho, opt);
}

SandwichVerdict sandwich(const DensityMatrix& rho, const BoundReport& lower,
                         const RoofEstimate& upper) {
    const int n = static_cast<int>(rho.dims().size());
    if (lower.parties != n || upper.parties != n) {
        throw ContractError("sandwich: bound normalized for " + std::to_string(lower.parties) +
                            " parties and estimate for " + std::to_string(upper.parties) +
                            " cannot be compared on a " + std::to_string(n) + "-party state");
    }
    SandwichVerdict v;
    v.lower = lower.concurrence();
    v.upper = upper.value;
    v.gap = v.upper - v.lower;
    v.pass = v.lower <= v.upper + kSandwichTolerance;
    return v;
}

}  // namespace concbound
