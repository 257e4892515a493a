#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherncr/family.hpp"
#include "cherncr/invariants.hpp"
#include "test_util.hpp"

using namespace cherncr;

namespace {

std::vector<int> random_degrees(int n) {
    std::vector<int> d(n);
    for (auto& di : d) di = testutil::random_int(1, 7);
    return d;
}

}  // namespace

TEST_CASE("family_I_varsigma at n=1 is (3-s1)^2/4 times E") {
    FamilyPoly f = family_I_varsigma(1, Partition({1}, 1));
    RingPtr ring = power_sum_ring(1);
    Poly expected = rat(1, 4) * (Poly::constant(ring, 3) - power_sum(ring, 1)).pow(2);
    CHECK(f.q == expected);
    CHECK(f.specialize({4}) == 1);  // 4 * (3-4)^2 / 4
}

TEST_CASE("family_mu at n=1 is -(3-s1)^2/4 times E") {
    FamilyPoly f = family_mu(1);
    RingPtr ring = power_sum_ring(1);
    Poly expected = rat(-1, 4) * (Poly::constant(ring, 3) - power_sum(ring, 1)).pow(2);
    CHECK(f.q == expected);
    CHECK(f.specialize({1}) == -1);
}

TEST_CASE("specialization agrees with the pointwise computation") {
    for (int n = 1; n <= 4; ++n) {
        auto parts = partitions(n);
        FamilyPoly mu = family_mu(n);
        std::vector<FamilyPoly> fams;
        for (const Partition& varsigma : parts) fams.push_back(family_I_varsigma(n, varsigma));
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<int> d = random_degrees(n);
            KEBase base = complete_intersection_base(n, d);
            for (std::size_t i = 0; i < parts.size(); ++i)
                CHECK(fams[i].specialize(d) == I_varsigma(base, parts[i]));
            CHECK(mu.specialize(d) == burns_epstein(base));
        }
    }
}

TEST_CASE("leading term of q_varsigma is (s1/(n+1)) p_varsigma") {
    for (int n = 1; n <= 5; ++n) {
        auto report = leading_term_check(n);
        CHECK(report.size() == partitions(n).size());
        for (const auto& entry : report) {
            CHECK(entry.pass);
            CHECK(entry.actual == entry.expected);
            CHECK_FALSE(entry.actual.is_zero());
        }
    }
}

TEST_CASE("family polynomials are linearly independent") {
    for (int n = 1; n <= 6; ++n) {
        IndependenceReport report = independence_check(n);
        CHECK(report.partition_count == partitions(n).size());
        CHECK(report.full_rank());
    }
}

TEST_CASE("conjecture coefficients") {
    SUBCASE("n=1: C_(1) = -1") {
        ConjectureResult r = conjecture_coefficients(1);
        REQUIRE(r.kind == LinearSolveResult::Kind::Unique);
        CHECK(r.coefficients.at(Partition({1}, 1)) == -1);
    }
    SUBCASE("n=2: C_(2,0) = 1, C_(0,1) = -1") {
        ConjectureResult r = conjecture_coefficients(2);
        REQUIRE(r.kind == LinearSolveResult::Kind::Unique);
        CHECK(r.coefficients.at(Partition({2, 0}, 2)) == 1);
        CHECK(r.coefficients.at(Partition({0, 1}, 2)) == -1);
    }
    SUBCASE("n=3: -1, 1, 2") {
        ConjectureResult r = conjecture_coefficients(3);
        REQUIRE(r.kind == LinearSolveResult::Kind::Unique);
        CHECK(r.coefficients.at(Partition({3, 0, 0}, 3)) == -1);
        CHECK(r.coefficients.at(Partition({1, 1, 0}, 3)) == 1);
        CHECK(r.coefficients.at(Partition({0, 0, 1}, 3)) == 2);
    }
    SUBCASE("n=4: 1, -1, -2, 1/2, -6") {
        ConjectureResult r = conjecture_coefficients(4);
        REQUIRE(r.kind == LinearSolveResult::Kind::Unique);
        CHECK(r.coefficients.at(Partition({4, 0, 0, 0}, 4)) == 1);
        CHECK(r.coefficients.at(Partition({2, 1, 0, 0}, 4)) == -1);
        CHECK(r.coefficients.at(Partition({1, 0, 1, 0}, 4)) == -2);
        CHECK(r.coefficients.at(Partition({0, 2, 0, 0}, 4)) == rat(1, 2));
        CHECK(r.coefficients.at(Partition({0, 0, 0, 1}, 4)) == -6);
    }
    SUBCASE("the solved relation reproduces mu pointwise") {
        for (int n = 1; n <= 4; ++n) {
            ConjectureResult r = conjecture_coefficients(n);
            REQUIRE(r.kind == LinearSolveResult::Kind::Unique);
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<int> d = random_degrees(n);
                KEBase base = complete_intersection_base(n, d);
                Rational combined = 0;
                for (const auto& [varsigma, c] : r.coefficients)
                    combined += c * I_varsigma(base, varsigma);
                CHECK(combined == burns_epstein(base));
            }
        }
    }
}
