#include <numeric>

#include "doctest.h"
#include "oracle.hpp"

#include "concbound/errors.hpp"
#include "concbound/states.hpp"
#include "concbound/tensor.hpp"

using namespace concbound;

namespace {

ComplexMatrix random_matrix(Rng& rng, Eigen::Index d) {
    return complex_gaussian_matrix(rng, d, d);
}

}  // namespace

TEST_CASE("dims validation") {
    CHECK_THROWS_AS(SubsystemDims({2, 0}), DomainError);
    CHECK_THROWS_AS(SubsystemDims(std::vector<int>{}), DomainError);
    CHECK_THROWS_AS(SubsystemDims({64, 128}), SizeLimitError);
    CHECK(SubsystemDims::qubits(5).total() == 32);
    const SubsystemDims d{2, 3, 4};
    const std::vector<int> idx{0, 2};
    CHECK(d.total_of(idx) == 8);
    const std::vector<int> order{2, 0, 1};
    CHECK(d.permuted(order) == SubsystemDims{4, 2, 3});
}

TEST_CASE("index sets") {
    const std::vector<int> raw{3, 1};
    CHECK(normalize_index_set(raw, 4) == std::vector<int>{1, 3});
    const std::vector<int> dup{1, 1};
    CHECK_THROWS_AS(normalize_index_set(dup, 4), DomainError);
    const std::vector<int> bad{4};
    CHECK_THROWS_AS(normalize_index_set(bad, 4), DomainError);
    const std::vector<int> s{1, 3};
    CHECK(complement(s, 5) == std::vector<int>{0, 2, 4});
}

TEST_CASE("partial trace matches brute force on mixed dims") {
    Rng rng(7);
    const std::vector<int> dv{2, 3, 2};
    const SubsystemDims dims(dv);
    const ComplexMatrix rho = random_matrix(rng, 12);
    for (const std::vector<int>& keep :
         {std::vector<int>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}) {
        const ComplexMatrix got = partial_trace(rho, dims, keep);
        const ComplexMatrix want = oracle::partial_trace(rho, dv, keep);
        CHECK((got - want).norm() < 1e-12);
    }
}

TEST_CASE("reduced_from_pure agrees with partial trace") {
    Rng rng(11);
    const SubsystemDims dims{2, 2, 3, 2};
    const auto psi = random_pure(dims, rng);
    const ComplexMatrix rho = psi.projector();
    const std::vector<int> keep{1, 3};
    CHECK((reduced_from_pure(psi.amplitudes(), dims, keep) - partial_trace(rho, dims, keep)).norm() <
          1e-12);
}

TEST_CASE("permutation round trip") {
    Rng rng(3);
    const SubsystemDims dims{2, 3, 2};
    const ComplexMatrix m = random_matrix(rng, 12);
    const std::vector<int> order{2, 0, 1};
    const std::vector<int> inverse{1, 2, 0};
    const ComplexMatrix p = permute_subsystems(m, dims, order);
    CHECK((permute_subsystems(p, dims.permuted(order), inverse) - m).norm() < 1e-12);
    // Permuting and then tracing the new first factor equals tracing factor 2.
    const std::vector<int> keep_new{1, 2};
    const std::vector<int> keep_old{0, 1};
    CHECK((partial_trace(p, dims.permuted(order), keep_new) - partial_trace(m, dims, keep_old)).norm() <
          1e-12);
}

TEST_CASE("partial transpose matches brute force and is an involution") {
    Rng rng(5);
    const std::vector<int> dv{2, 3};
    const SubsystemDims dims(dv);
    const ComplexMatrix m = random_matrix(rng, 6);
    CHECK((partial_transpose(m, dims, Side::First) - oracle::partial_transpose(m, dv, {0})).norm() <
          1e-12);
    CHECK((partial_transpose(m, dims, Side::Second) - oracle::partial_transpose(m, dv, {1})).norm() <
          1e-12);
    CHECK((partial_transpose(partial_transpose(m, dims, Side::Second), dims, Side::Second) - m).norm() <
          1e-12);
    CHECK_THROWS_AS(partial_transpose(m, SubsystemDims{6}, Side::First), DomainError);
}

TEST_CASE("Bell state criteria") {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const ComplexMatrix rho = bell * bell.adjoint();
    const SubsystemDims dims{2, 2};
    const RealVector ev = hermitian_eigvals(partial_transpose(rho, dims, Side::Second));
    CHECK(ev(0) == doctest::Approx(0.5));
    CHECK(ev(3) == doctest::Approx(-0.5));
    CHECK(trace_norm(partial_transpose(rho, dims, Side::Second)) == doctest::Approx(2.0));
    CHECK(trace_norm(realign(rho, dims)) == doctest::Approx(2.0));
    CHECK(trace_norm(realign(ComplexMatrix::Identity(4, 4) / 4.0, dims)) == doctest::Approx(0.5));
}

TEST_CASE("realignment is invertible on rectangular cuts") {
    Rng rng(9);
    const SubsystemDims dims{2, 3};
    const ComplexMatrix m = random_matrix(rng, 6);
    const ComplexMatrix r = realign(m, dims);
    CHECK(r.rows() == 4);
    CHECK(r.cols() == 9);
    CHECK((realign_inverse(r, dims) - m).norm() < 1e-12);
    // Product operators realign to rank one.
    const ComplexMatrix a = random_matrix(rng, 2);
    const ComplexMatrix b = random_matrix(rng, 3);
    Eigen::JacobiSVD<ComplexMatrix> svd(realign(kron(a, b), dims));
    CHECK(svd.singularValues()(1) < 1e-10);
    CHECK(svd.singularValues()(0) == doctest::Approx(a.norm() * b.norm()));
}

TEST_CASE("trace norm and purity") {
    Rng rng(13);
    const ComplexMatrix g = random_matrix(rng, 5);
    const ComplexMatrix h = (g + g.adjoint()) / 2.0;
    CHECK(trace_norm(h) == doctest::Approx(hermitian_eigvals(h).cwiseAbs().sum()));
    const ComplexMatrix rho = random_density(SubsystemDims{5}, 3, rng).matrix();
    CHECK(purity(rho) == doctest::Approx((rho * rho).trace().real()));
    CHECK(purity(rho) <= 1.0 + 1e-12);
    const ComplexMatrix s = psd_sqrt(rho);
    CHECK((s * s - rho).norm() < 1e-10);
    CHECK(hermiticity_defect(h) < 1e-15);
    ComplexMatrix bad = h;
    bad(0, 1) += 0.1;
    CHECK(hermiticity_defect(bad) > 1e-3);
    CHECK_THROWS_AS(hermitize(bad), HermiticityError);
}

TEST_CASE("kron respects size limit") {
    const ComplexMatrix a = ComplexMatrix::Identity(64, 64);
    CHECK_THROWS_AS(kron(a, a, 1024), SizeLimitError);
    CHECK(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)).rows() == 6);
}

TEST_CASE("non-finite entries detected") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    CHECK(all_finite(m));
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(all_finite(m));
}
