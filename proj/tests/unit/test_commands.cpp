#include <cstdlib>
#include <sstream>

#include "doctest.h"

#include "concbound/commands.hpp"
#include "concbound/errors.hpp"

using namespace concbound;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("seed precedence") {
    ::unsetenv(kSeedEnvVar);
    CHECK(resolve_seed(std::nullopt) == 42);
    ::setenv(kSeedEnvVar, "7", 1);
    CHECK(resolve_seed(std::nullopt) == 7);
    CHECK(resolve_seed(9) == 9);
    ::setenv(kSeedEnvVar, "seven", 1);
    CHECK_THROWS_AS(resolve_seed(std::nullopt), DomainError);
    ::unsetenv(kSeedEnvVar);
}

TEST_CASE("ghz sweep layout") {
    const auto rows = lines(ghz_sweep_csv(4));
    REQUIRE(rows.size() == 182);
    CHECK(rows[0] == "theta,exact,thm1,zhu-fei,wang");
    CHECK(lines(ghz_sweep_csv(5, {11, 1}))[0] == "theta,exact,thm2,thm3,zhu-fei,wang");
    CHECK(lines(ghz_sweep_csv(3, {11, 1}))[0] == "theta,exact,thm4,zhu-fei,wang");
    CHECK_THROWS_AS(ghz_sweep_csv(4, {1, 1}), DomainError);
}

TEST_CASE("sweeps are identical serial and parallel") {
    CHECK(ghz_sweep_csv(4, {181, 1}) == ghz_sweep_csv(4, {181, 4}));
    ExampleSweepOptions opt;
    opt.points = 41;
    const auto serial = example_sweep(opt);
    opt.threads = 3;
    CHECK(example_sweep(opt).csv == serial.csv);
    CHECK(lines(serial.csv).size() == 42);
    REQUIRE(serial.onset.has_value());
    CHECK(*serial.onset > 1.0 / 9.0);
}

TEST_CASE("csv numbers round trip") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678}) CHECK(std::stod(format_csv_number(v)) == v);
}

TEST_CASE("builtin states") {
    StateRequest req;
    req.source = "ghz5";
    req.theta = 0.2;
    CHECK(as_density(resolve_state(req)).dims().size() == 5);
    req.source = "isotropic";
    req.t = 0.5;
    CHECK_FALSE(as_density(resolve_state(req)).is_pure());
    req.source = "ghz1";
    CHECK_THROWS_AS(resolve_state(req), DomainError);
}

TEST_CASE("compute_bound dispatch") {
    const auto rho = as_density(resolve_state({"isotropic", 0.0, 0.5, "double-bell"}));
    CHECK(compute_bound(rho, Method::Thm1).value > 0.0);
    CHECK(compute_bound(rho, Method::Thm4).params.at("weights") == "0.5,0.5");
    CHECK_THROWS_AS(compute_bound(rho, Method::Caf), DomainError);
    CHECK_THROWS_AS(compute_bound(rho, Method::Thm2), DomainError);
    CHECK_THROWS_AS(compute_bound(rho, Method::ReferenceCurve), DomainError);
    const auto text = format_report(compute_bound(rho, Method::Wang));
    CHECK(text.find("[wang]") == 0);
    CHECK(text.find("witness_cut = 1,3") != std::string::npos);
}

TEST_CASE("partitions text") {
    const auto rows = lines(partitions_text(5, 4));
    CHECK(rows.size() == 10);
    CHECK(rows.front() == "12|3|4|5");
}

TEST_CASE("audit passes and its corruption hook fails") {
    AuditOptions opt;
    opt.trials = 40;
    const auto ok = run_audit(opt);
    CHECK(ok.pass);
    for (const auto& p : ok.properties) CHECK(p.samples > 0);
    opt.corrupt_normalization = true;
    CHECK_FALSE(run_audit(opt).pass);
}
