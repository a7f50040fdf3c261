#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"

#include "concbound/errors.hpp"
#include "concbound/partitions.hpp"
#include "concbound/tensor.hpp"

using namespace concbound;

namespace {

std::set<std::string> rendered(int n, int m) {
    std::set<std::string> out;
    for (const auto& p : enumerate_partitions(n, m)) out.insert(p.render());
    return out;
}

std::set<std::string> split_list(const std::string& text) {
    std::set<std::string> out;
    std::istringstream in(text);
    std::string s;
    while (in >> s) out.insert(Partition::parse(s).render());
    return out;
}

}  // namespace

TEST_CASE("parse and render") {
    const auto p = Partition::parse("14|2|3");
    CHECK(p.n() == 4);
    CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 3}, {1}, {2}});
    CHECK(Partition::parse("3|41|2").render() == "14|2|3");
    CHECK(p.order() == std::vector<int>{0, 3, 1, 2});
    CHECK(Partition::parse("1,10|2,3,4,5,6,7,8,9").n() == 10);
    CHECK(Partition::parse("1,10|2,3,4,5,6,7,8,9").render() == "1,10|2,3,4,5,6,7,8,9");
    CHECK_THROWS_AS(Partition::parse("12|2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("12||3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("13|4"), ParseError);
    CHECK_THROWS_AS(Partition::parse("1a|2"), ParseError);
    CHECK_THROWS_AS(Partition(3, {{0}, {1}}), DomainError);
}

TEST_CASE("restricted growth strings") {
    const std::vector<int> rgs{0, 1, 0, 2};
    CHECK(Partition::from_restricted_growth(rgs).render() == "13|2|4");
    const std::vector<int> bad{0, 2, 1};
    CHECK_THROWS_AS(Partition::from_restricted_growth(bad), DomainError);
}

TEST_CASE("counts follow the Stirling recurrence") {
    for (int n = 1; n <= 8; ++n) {
        for (int m = 1; m <= n; ++m) {
            const auto parts = enumerate_partitions(n, m);
            CHECK(static_cast<long long>(parts.size()) == oracle::stirling2(n, m));
            std::set<std::string> unique;
            for (const auto& p : parts) {
                CHECK(static_cast<int>(p.size()) == m);
                unique.insert(p.render());
            }
            CHECK(unique.size() == parts.size());
        }
    }
    CHECK_THROWS_AS(enumerate_partitions(4, 5), DomainError);
    CHECK_THROWS_AS(enumerate_partitions(4, 0), DomainError);
}

TEST_CASE("printed lists") {
    CHECK(rendered(4, 3) == split_list("1|2|34 1|3|24 1|4|23 12|3|4 13|2|4 14|2|3"));
    CHECK(rendered(5, 4) == split_list("1|2|3|45 1|2|4|35 1|2|5|34 1|23|4|5 1|24|3|5 1|25|3|4 "
                                       "12|3|4|5 13|2|4|5 14|2|3|5 15|2|3|4"));
    CHECK(rendered(5, 3) ==
          split_list("1|2|345 1|3|245 1|4|235 1|5|234 1|23|45 1|24|35 1|25|34 12|3|45 12|34|5 "
                     "12|4|35 13|2|45 13|24|5 13|4|25 14|2|35 14|23|5 14|3|25 15|2|34 15|23|4 "
                     "15|3|24 123|4|5 134|2|5 124|3|5 135|2|4 125|3|4 145|2|3"));
}

TEST_CASE("lexicographic order is stable") {
    const auto parts = enumerate_partitions(4, 2);
    CHECK(parts.front().render() == "123|4");
    CHECK(parts.back().render() == "1|234");
}

TEST_CASE("coarse graining merges factors") {
    const auto p = Partition::parse("13|2|4");
    const auto psi = random_pure(SubsystemDims{2, 3, 2, 2}, 17);
    const auto cg = coarse_grain(psi, p);
    CHECK(cg.dims() == SubsystemDims{4, 3, 2});
    // The reduced state of the merged block equals the two-factor marginal.
    const std::vector<int> block{0};
    const std::vector<int> orig{0, 2};
    CHECK((reduced_from_pure(cg.amplitudes(), cg.dims(), block) -
           reduced_from_pure(psi.amplitudes(), psi.dims(), orig))
              .norm() < 1e-12);
    const auto rho = coarse_grain(DensityMatrix::from_pure(psi), p);
    CHECK((rho.matrix() - cg.projector()).norm() < 1e-12);
    CHECK_THROWS_AS(coarse_grain(psi, Partition::parse("12|3")), DomainError);
}
