#include <cmath>

#include "doctest.h"

#include "concbound/bounds.hpp"
#include "concbound/concurrence.hpp"
#include "concbound/errors.hpp"

using namespace concbound;

namespace {

DensityMatrix example(double t) { return make_isotropic_mixture(make_double_bell(), t); }

DensityMatrix two_qubit_isotropic(double t) {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    return make_isotropic_mixture(PureState(SubsystemDims{2, 2}, bell), t);
}

}  // namespace

TEST_CASE("method names round trip") {
    for (Method m : {Method::Caf, Method::Wang, Method::ZhuFei, Method::Tripartite, Method::Thm1,
                     Method::Thm2, Method::Thm3, Method::Thm4, Method::ThmGeneral,
                     Method::ReferenceCurve}) {
        CHECK(parse_method(method_name(m)) == m);
    }
    CHECK_FALSE(parse_method("bogus").has_value());
}

TEST_CASE("bipartite cuts cover each bipartition once") {
    CHECK(bipartite_cuts(4).size() == 7);
    CHECK(bipartite_cuts(5).size() == 15);
    for (const auto& c : bipartite_cuts(5)) CHECK(c.front() == 0);
}

TEST_CASE("caf values on the example state") {
    // Reference numbers from tests/oracles/compute_fixtures.py.
    const auto rho = example(0.5);
    CHECK(caf_bipartite_lower(rho, std::vector<int>{0}).value == doctest::Approx(0.4375).epsilon(1e-12));
    CHECK(caf_bipartite_lower(rho, std::vector<int>{0, 1}).value == 0.0);
    CHECK(caf_bipartite_lower(rho, std::vector<int>{0, 2}).value ==
          doctest::Approx(0.459279326771846).epsilon(1e-12));
    CHECK(caf_bipartite_lower(rho, std::vector<int>{0, 3}).value ==
          doctest::Approx(0.459279326771846).epsilon(1e-12));
    const auto r = caf_bipartite_lower(rho, std::vector<int>{2});
    CHECK(std::stod(r.params.at("ppt_norm")) == doctest::Approx(1.4375));
    CHECK(std::stod(r.params.at("realignment_norm")) == doctest::Approx(1.080718913883074));
    CHECK(r.params.at("criterion") == "ppt");

    const auto pure = example(1.0);
    CHECK(caf_bipartite_lower(pure, std::vector<int>{0}).value == doctest::Approx(1.0));
    CHECK(caf_bipartite_lower(pure, std::vector<int>{0, 2}).value ==
          doctest::Approx(1.224744871391589).epsilon(1e-12));
}

TEST_CASE("ppt norm on a single-qubit cut is piecewise linear in t") {
    for (double t : {0.05, 0.15, 0.2, 0.5, 0.8}) {
        const auto r = caf_bipartite_lower(example(t), std::vector<int>{2});
        CHECK(std::stod(r.params.at("ppt_norm")) ==
              doctest::Approx(1.0 + std::max(0.0, (9 * t - 1) / 8)).epsilon(1e-12));
    }
}

TEST_CASE("caf agrees with Wootters on two-qubit isotropic states") {
    for (int k = 0; k <= 20; ++k) {
        const auto rho = two_qubit_isotropic(k / 20.0);
        CHECK(caf_bipartite_lower(rho, std::vector<int>{0}).value ==
              doctest::Approx(wootters_concurrence(rho).value).epsilon(1e-10));
    }
}

TEST_CASE("caf is bounded by the exact value on pure states") {
    Rng rng(10);
    for (int s = 0; s < 30; ++s) {
        const auto psi = random_pure(SubsystemDims{2, 3, 2}, rng);
        const auto rho = DensityMatrix::from_pure(psi);
        for (const auto& cut : bipartite_cuts(3)) {
            CHECK(caf_bipartite_lower(rho, cut).value <=
                  pure_bipartite_concurrence(psi, cut).value + 1e-9);
        }
    }
}

TEST_CASE("GHZ bound chain") {
    for (double theta : {0.05, 0.3, M_PI / 4, 1.0, 1.5}) {
        const double sc = std::sin(theta) * std::cos(theta);
        const auto rho = DensityMatrix::from_pure(make_generalized_ghz(4, theta));
        CHECK(thm1_lower_sq(rho).value == doctest::Approx(6 * sc * sc));
        CHECK(zhu_fei_lower(rho).value == doctest::Approx(2 * std::abs(sc)));
        CHECK(wang_lower(rho).value == doctest::Approx(std::sqrt(2.0) * std::abs(sc)));
        CHECK(thm1_lower_sq(rho).params.at("route") == "exact");
    }
}

TEST_CASE("zhu-fei coefficients") {
    CHECK(zhu_fei_coefficient(4, 1) == doctest::Approx(1.0));
    CHECK(zhu_fei_coefficient(4, 2) == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(zhu_fei_coefficient(4, 3) == doctest::Approx(1.0));
    CHECK(zhu_fei_coefficient(3, 1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(zhu_fei_coefficient(4, 4), DomainError);
}

TEST_CASE("detection onset of the computed bound") {
    CHECK(thm1_lower_sq(example(1.0 / 9.0 - 1e-6)).value == 0.0);
    CHECK(thm1_lower_sq(example(0.1)).value == 0.0);
    CHECK(thm1_lower_sq(example(1.0 / 9.0 + 1e-3)).value > 0.0);
    // Bisection lands on 1/9.
    double lo = 0.05;
    double hi = 0.2;
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        (thm1_lower_sq(example(mid)).value > 0.0 ? hi : lo) = mid;
    }
    CHECK(hi == doctest::Approx(1.0 / 9.0).epsilon(1e-6));
}

TEST_CASE("mixed bounds stay below the pure-state value they approach") {
    const auto r = thm1_lower_sq(example(0.999));
    CHECK(r.params.at("route") == "criterion");
    CHECK(r.value <= avg_partition_concurrence_sq(make_double_bell(), 3) + 1e-9);
    CHECK(r.params.at("recursion") == "m=3");
}

TEST_CASE("bounds vanish on separable states") {
    const auto mixed = DensityMatrix(SubsystemDims::qubits(4), ComplexMatrix::Identity(16, 16) / 16.0);
    CHECK(wang_lower(mixed).value == 0.0);
    CHECK(zhu_fei_lower(mixed).value == 0.0);
    CHECK(thm1_lower_sq(mixed).value == 0.0);
    const std::vector<double> w{0.5, 0.5};
    CHECK(thm4_combined(mixed, w).value == 0.0);
}

TEST_CASE("five-party theorems and recursion") {
    const auto psi = random_pure(SubsystemDims::qubits(5), 3);
    const auto rho = DensityMatrix::from_pure(psi);
    CHECK(thm_general_lower_sq(rho, 3).method == Method::Thm2);
    CHECK(thm_general_lower_sq(rho, 4).method == Method::Thm3);
    CHECK(thm_general_lower_sq(rho, 3).witness_partitions.size() == 25);
    CHECK(thm_general_lower_sq(rho, 4).witness_partitions.size() == 10);
    const double c5 = pure_concurrence_full(psi).squared;
    CHECK(thm_general_lower_sq(rho, 3).value <= c5 + 1e-12);
    CHECK(thm_general_lower_sq(rho, 4).value <= c5 + 1e-12);

    const auto mixed = make_isotropic_mixture(psi, 0.9);
    const auto r = thm_general_lower_sq(mixed, 4);
    CHECK(r.params.at("recursion") == "m=4>3");
    CHECK(r.value >= 0.0);
    CHECK(theorem_method(6, 3) == Method::ThmGeneral);
    CHECK_THROWS_AS(thm_general_lower_sq(rho, 5), DomainError);
    CHECK_THROWS_AS(thm1_lower_sq(rho), DomainError);
}

TEST_CASE("thm4 is the weighted sum of its components") {
    const auto rho = example(0.6);
    const double t3 = thm1_lower_sq(rho).value;
    const double t2 = bipartite_average_sq(rho).value;
    for (double w : {0.0, 0.25, 1.0}) {
        const std::vector<double> weights{w, 1 - w};
        CHECK(thm4_combined(rho, weights).value == doctest::Approx(w * t3 + (1 - w) * t2));
    }
    const std::vector<double> bad{0.6, 0.6};
    CHECK_THROWS_AS(thm4_combined(rho, bad), DomainError);
    const std::vector<double> short_w{1.0};
    CHECK_THROWS_AS(thm4_combined(rho, short_w), DomainError);
}

TEST_CASE("tripartite bound requires three factors") {
    CHECK_THROWS_AS(tripartite_lower(example(0.5)), DomainError);
    const auto cg = coarse_grain(example(0.5), Partition::parse("12|3|4"));
    const auto r = tripartite_lower(cg);
    CHECK(r.value >= 0.0);
    CHECK(r.parties == 3);
}

TEST_CASE("reference curves") {
    for (int k = 0; k <= 200; ++k) {
        const double t = k / 200.0;
        const auto c = reference_curves(t);
        CHECK(std::abs(c.combined - (2 * c.a + 4 * c.b) / 6) < 1e-15);
    }
    CHECK(reference_curves(1.0).combined == doctest::Approx(11.0 / 18.0));
    CHECK(reference_curves(0.1).combined == 0.0);
    CHECK_THROWS_AS(reference_curves(1.5), DomainError);
}
