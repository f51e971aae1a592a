#include "chromatica/partition.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <set>

using namespace chromatica;

TEST_CASE("partitions_of small cases") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(p0[0].sum() == 0);

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});

    CHECK(partitions_of(7).size() == 15);
}

TEST_CASE("partition counts match the recurrence oracle up to n = 20") {
    for (int n = 0; n <= 20; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == oracles::partition_count(n));
}

TEST_CASE("output order is strictly decreasing in descending lex") {
    for (int n = 0; n <= 12; ++n) {
        auto ps = partitions_of(n);
        for (size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i - 1].parts() > ps[i].parts());
    }
}

TEST_CASE("conjugate") {
    CHECK(Partition({5}).conjugate().parts() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Partition({3, 1}).conjugate().parts() == std::vector<int>{2, 1, 1});
    CHECK(Partition({3, 2, 1, 1, 1}).conjugate().parts() == std::vector<int>{5, 2, 1});
    CHECK(Partition().conjugate().empty());
}

TEST_CASE("conjugate is an involution up to n = 20") {
    for (int n = 0; n <= 20; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("multiplicities") {
    auto m = Partition({2, 2, 1}).multiplicities();
    CHECK(m.size() == 2);
    CHECK(m[2] == 2);
    CHECK(m[1] == 1);

    auto m2 = Partition({1, 1, 1, 1, 1}).multiplicities();
    CHECK(m2.size() == 1);
    CHECK(m2[1] == 5);

    auto m3 = Partition({4, 3, 3, 1}).multiplicities();
    CHECK(m3[4] == 1);
    CHECK(m3[3] == 2);
    CHECK(m3[1] == 1);
    int total = 0;
    for (auto [v, c] : m3)
        total += c;
    CHECK(total == Partition({4, 3, 3, 1}).length());
}

TEST_CASE("constructor rejects unsorted or nonpositive input") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
}

TEST_CASE("parsing with caret exponents") {
    CHECK(Partition::parse("3,2,1^3").parts() == std::vector<int>{3, 2, 1, 1, 1});
    CHECK(Partition::parse("2^2").parts() == std::vector<int>{2, 2});
    CHECK(Partition::parse("5").parts() == std::vector<int>{5});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("4,1^0").parts() == std::vector<int>{4});
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_CASE("string forms") {
    Partition p({3, 2, 1, 1, 1});
    CHECK(p.to_string() == "3,2,1,1,1");
    CHECK(p.to_compact_string() == "3,2,1^3");
    CHECK(Partition().to_string() == "");
}

TEST_CASE("canonical order comparator works as a map key") {
    std::set<Partition, DescLex> s;
    for (const auto& p : partitions_of(6))
        s.insert(p);
    CHECK(s.size() == partitions_of(6).size());
    CHECK(s.begin()->parts() == std::vector<int>{6});
    CHECK(std::prev(s.end())->parts() == std::vector<int>(6, 1));
}
