#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherncr/partitions.hpp"

using namespace cherncr;

TEST_CASE("partition counts match A000041") {
    const std::size_t expected[] = {1, 2, 3, 5, 7, 11};
    for (int n = 1; n <= 6; ++n) CHECK(partitions(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(partitions(0), std::invalid_argument);
}

TEST_CASE("descending graded-lex order on multiplicity tuples") {
    auto p1 = partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].str() == "1");

    auto p2 = partitions(2);
    CHECK(p2[0].str() == "2,0");
    CHECK(p2[1].str() == "0,1");

    auto p3 = partitions(3);
    CHECK(p3[0].str() == "3,0,0");
    CHECK(p3[1].str() == "1,1,0");
    CHECK(p3[2].str() == "0,0,1");

    auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].str() == "4,0,0,0");
    CHECK(p4[1].str() == "2,1,0,0");
    CHECK(p4[2].str() == "1,0,1,0");
    CHECK(p4[3].str() == "0,2,0,0");
    CHECK(p4[4].str() == "0,0,0,1");

    for (std::size_t i = 1; i < p4.size(); ++i) CHECK(p4[i] < p4[i - 1]);
}

TEST_CASE("construction validates the weight identity") {
    CHECK_NOTHROW(Partition({1, 1, 0}, 3));
    CHECK_THROWS_AS(Partition({1, 1, 1}, 3), std::invalid_argument);  // 1+2+3 = 6 != 3
    CHECK_THROWS_AS(Partition({1, 1}, 3), std::invalid_argument);     // wrong length
    CHECK_THROWS_AS(Partition({-1, 2}, 2), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& p : partitions(n)) CHECK(Partition::parse(p.str()) == p);
    CHECK_THROWS_AS(Partition::parse("1,,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,1"), std::invalid_argument);  // weight 4 != length 2
}
