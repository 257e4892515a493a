#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherncr/matrix.hpp"
#include "test_util.hpp"

using namespace cherncr;

namespace {

RatMatrix random_matrix(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = testutil::random_rational(8);
    return m;
}

}  // namespace

TEST_CASE("solve_linear classification") {
    SUBCASE("identity gives back the right-hand side") {
        auto result = solve_linear(RatMatrix::identity(2), {rat(1, 2), rat(-3)});
        REQUIRE(result.kind == LinearSolveResult::Kind::Unique);
        CHECK(result.solution == std::vector<Rational>{rat(1, 2), rat(-3)});
    }
    SUBCASE("inconsistent rows") {
        RatMatrix a(2, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 1;
        a.at(1, 0) = 2; a.at(1, 1) = 2;
        auto result = solve_linear(a, {rat(1), rat(3)});
        CHECK(result.kind == LinearSolveResult::Kind::NoSolution);
    }
    SUBCASE("rank-deficient but consistent") {
        RatMatrix a(2, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 1;
        a.at(1, 0) = 2; a.at(1, 1) = 2;
        auto result = solve_linear(a, {rat(1), rat(2)});
        CHECK(result.kind == LinearSolveResult::Kind::NonUnique);
    }
    SUBCASE("dimension mismatch throws") {
        CHECK_THROWS_AS(solve_linear(RatMatrix::identity(2), {rat(1)}), std::invalid_argument);
    }
    SUBCASE("overdetermined consistent system") {
        RatMatrix a(3, 2);
        a.at(0, 0) = 1; a.at(1, 1) = 1;
        a.at(2, 0) = 1; a.at(2, 1) = 1;
        auto result = solve_linear(a, {rat(2), rat(3), rat(5)});
        REQUIRE(result.kind == LinearSolveResult::Kind::Unique);
        CHECK(result.solution == std::vector<Rational>{rat(2), rat(3)});
    }
}

TEST_CASE("determinant and rank are exact") {
    RatMatrix a(2, 2);
    a.at(0, 0) = rat(1, 9);  a.at(0, 1) = 0;
    a.at(1, 0) = rat(-1, 6); a.at(1, 1) = -1;
    CHECK(a.determinant() == rat(-1, 9));
    CHECK(a.rank() == 2);

    RatMatrix singular(2, 2);
    singular.at(0, 0) = 1; singular.at(0, 1) = 2;
    singular.at(1, 0) = 2; singular.at(1, 1) = 4;
    CHECK(singular.determinant() == 0);
    CHECK(singular.rank() == 1);
}

TEST_CASE("det(A) * det(A^-1) = 1 when columns solve uniquely") {
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a = random_matrix(4);
        if (a.determinant() == 0) continue;
        // build A^-1 by solving against unit vectors
        RatMatrix inv(4, 4);
        for (std::size_t col = 0; col < 4; ++col) {
            std::vector<Rational> e(4, Rational(0));
            e[col] = 1;
            auto result = solve_linear(a, e);
            REQUIRE(result.kind == LinearSolveResult::Kind::Unique);
            for (std::size_t r = 0; r < 4; ++r) inv.at(r, col) = result.solution[r];
        }
        CHECK(a.determinant() * inv.determinant() == 1);
    }
}
