#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherncr/poly.hpp"
#include "cherncr/symfunc.hpp"
#include "test_util.hpp"

using namespace cherncr;

namespace {

Poly random_poly(const RingPtr& ring, int max_terms = 6, int max_exp = 3) {
    Poly p(ring);
    int terms = testutil::random_int(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exp(ring->size());
        for (auto& e : exp) e = testutil::random_int(0, max_exp);
        Poly mono(ring);
        mono.add_term(std::move(exp), testutil::random_rational(10));
        p += mono;
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    RingPtr ring = power_sum_ring(2);
    Poly s1 = power_sum(ring, 1);
    Poly s2 = power_sum(ring, 2);

    CHECK(s1 + s1 == rat(2) * s1);
    CHECK((s1 * s1) * Poly(ring) == Poly(ring));  // multiplication by zero
    CHECK((s1 - s2) * (s1 + s2) == s1 * s1 - s2 * s2);
    CHECK((s1 - s1).is_zero());
}

TEST_CASE("ring compatibility is enforced") {
    Poly a = power_sum(power_sum_ring(2), 1);
    Poly b = power_sum(power_sum_ring(3), 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("homogeneous part extraction by weighted degree") {
    RingPtr ring = power_sum_ring(2);  // weights s1 -> 1, s2 -> 2
    Poly s1 = power_sum(ring, 1);
    Poly s2 = power_sum(ring, 2);
    Poly p = s1 * s1 + s2 + s1;

    CHECK(p.homogeneous_part(2) == s1 * s1 + s2);
    CHECK(p.homogeneous_part(1) == s1);
    CHECK(p.homogeneous_part(5).is_zero());
    CHECK(Poly(ring).homogeneous_part(5).is_zero());
}

TEST_CASE("homogeneous parts partition the polynomial") {
    RingPtr ring = power_sum_ring(3);
    for (int i = 0; i < 50; ++i) {
        Poly p = random_poly(ring);
        Poly sum(ring);
        for (int deg = 0; deg <= std::max(p.degree(), 0); ++deg) {
            Poly part = p.homogeneous_part(deg);
            for (const auto& [m, c] : part.terms()) CHECK(m.degree == deg);
            sum += part;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("canonical printing uses descending graded-lex order") {
    RingPtr ring = power_sum_ring(2);
    Poly s1 = power_sum(ring, 1);
    Poly s2 = power_sum(ring, 2);

    CHECK(Poly(ring).str() == "0");
    CHECK((rat(-1, 6) * s1 * s1 - s2).str() == "-1/6*s1^2 - s2");
    CHECK((s2 + s1 + s1 * s1).str() == "s1^2 + s2 + s1");
    CHECK((s1 * s2 + Poly::constant(ring, rat(3, 2))).str() == "s1*s2 + 3/2");
    CHECK(Poly::constant(ring, rat(-7)).str() == "-7");
}

TEST_CASE("evaluation and substitution") {
    RingPtr ring = power_sum_ring(2);
    Poly s1 = power_sum(ring, 1);
    Poly s2 = power_sum(ring, 2);
    Poly p = s1 * s1 - rat(2) * s2;

    std::vector<Rational> vals = {rat(3), rat(5)};
    CHECK(p.evaluate(vals) == rat(-1));

    // substitute s1 -> u + v, s2 -> u*v in a different ring
    RingPtr uv = make_ring({{"u", 1}, {"v", 1}});
    Poly u = Poly::variable(uv, "u");
    Poly v = Poly::variable(uv, "v");
    std::vector<Poly> images = {u + v, u * v};
    CHECK(p.substitute(images) == u * u + v * v + rat(2) * u * v - rat(2) * u * v);
}

TEST_CASE("pow and degree") {
    RingPtr ring = power_sum_ring(3);
    Poly s3 = power_sum(ring, 3);
    CHECK(s3.pow(0) == Poly::constant(ring, 1));
    CHECK(s3.pow(2).degree() == 6);
    CHECK(Poly(ring).degree() == -1);
    CHECK_THROWS_AS(s3.pow(-1), std::invalid_argument);
}
