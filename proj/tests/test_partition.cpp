#include <doctest.h>

#include "lr/errors.hpp"
#include "lr/partition.hpp"

using namespace lr;

TEST_CASE("partition basics") {
    Partition p{4, 4, 2, 1};
    CHECK(p.length() == 4);
    CHECK(p.sum() == 11);
    CHECK(p.at(0) == 4);
    CHECK(p.at(7) == 0);
    CHECK(Partition{4, 4, 2, 1, 0, 0} == p);  // trailing zeros are not stored
    CHECK(Partition{} == Partition{0, 0});
    CHECK_THROWS_AS(Partition({1, 2}), parse_error);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{4, 4, 2, 1}) == Partition{4, 3, 2, 2});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
    CHECK(conjugate(conjugate(Partition{6, 5, 4, 3, 3, 1})) == Partition{6, 5, 4, 3, 3, 1});
}

TEST_CASE("add, union, scale") {
    CHECK(add(Partition{4, 4, 2, 1}, Partition{3, 2, 1, 1}) == Partition{7, 6, 3, 2});
    CHECK(add(Partition{4, 4, 2, 1}, Partition{}) == Partition{4, 4, 2, 1});
    CHECK(add(Partition{2, 1}, Partition{2, 1}) == Partition{4, 2});

    CHECK(union_of(Partition{4, 3, 2, 2}, Partition{4, 2, 1}) ==
          Partition{4, 4, 3, 2, 2, 2, 1});
    CHECK(union_of(Partition{3, 1}, Partition{}) == Partition{3, 1});
    CHECK(union_of(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2, 2, 1});

    CHECK(scale(3, Partition{2, 1}) == Partition{6, 3});
    CHECK(scale(1, Partition{7, 4}) == Partition{7, 4});
    CHECK(scale(2, Partition{6, 5, 4, 3, 3, 1}) == Partition{12, 10, 8, 6, 6, 2});
    CHECK(scale(0, Partition{5, 2}) == Partition{});
}

TEST_CASE("conjugate exchanges add and union") {
    Partition p{4, 4, 2, 1}, q{3, 2, 1, 1};
    CHECK(conjugate(add(p, q)) == union_of(conjugate(p), conjugate(q)));
}

TEST_CASE("subtract") {
    CHECK(subtract(Partition{4, 2}, Partition{2, 1}) == Partition{2, 1});
    CHECK(subtract(Partition{3, 1}, Partition{2, 2}) == std::nullopt);   // negative entry
    CHECK(subtract(Partition{3, 3}, Partition{3, 1}) == std::nullopt);   // not decreasing
    CHECK(subtract(Partition{3, 2}, Partition{2, 2}) == Partition{1});  // trailing zero dropped
    CHECK(subtract(Partition{2, 1}, Partition{2, 1}) == Partition{});
}

TEST_CASE("text round trip") {
    CHECK(parse_partition("6,5,4,3,3,1") == Partition{6, 5, 4, 3, 3, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("0") == Partition{});
    CHECK(parse_partition("1^5") == Partition{1, 1, 1, 1, 1});
    CHECK(parse_partition("9^3,7,3^4,2,1") == Partition{9, 9, 9, 7, 3, 3, 3, 3, 2, 1});
    CHECK(Partition{6, 5, 4, 3, 3, 1}.to_string() == "6,5,4,3,3,1");
    CHECK(Partition{}.to_string() == "0");
    CHECK_THROWS_AS(parse_partition("2,a"), parse_error);
    CHECK_THROWS_AS(parse_partition("1,,2"), parse_error);
}
