#include <doctest.h>

#include "lr/errors.hpp"
#include "lr/skew.hpp"

using namespace lr;

namespace {
SkewDiagram sd(Partition outer, Partition inner) { return SkewDiagram(outer, inner); }
}  // namespace

TEST_CASE("skew diagram invariants") {
    SkewDiagram d = sd(Partition{4, 2}, Partition{1});
    CHECK(d.row_count() == 2);
    CHECK(d.row_length(0) == 3);
    CHECK(d.box_count() == 5);
    CHECK_THROWS_AS(sd(Partition{2, 2}, Partition{3}), invalid_shape);
    CHECK(parse_skew("4,2/1") == d);
    CHECK(parse_skew("4,2/0") == sd(Partition{4, 2}, Partition{}));
    CHECK(d.to_string() == "4,2/1");
}

TEST_CASE("make_basic") {
    // The proof example: one empty column.
    CHECK(make_basic(sd(Partition{15, 12, 7, 3}, Partition{12, 5, 4})) ==
          sd(Partition{14, 11, 6, 3}, Partition{11, 4, 3}));
    // Already basic.
    SkewDiagram basic = sd(Partition{14, 11, 6, 3}, Partition{11, 4, 3});
    CHECK(make_basic(basic) == basic);
    // Empty row and empty column both removed.
    CHECK(make_basic(sd(Partition{3, 3}, Partition{3, 1})) == sd(Partition{2}, Partition{}));
    CHECK(make_basic(sd(Partition{2, 2}, Partition{2, 2})) == SkewDiagram());
}

TEST_CASE("rotate180") {
    CHECK(rotate180(sd(Partition{2, 1}, Partition{1})) == sd(Partition{2, 1}, Partition{1}));
    CHECK(rotate180(sd(Partition{3, 1}, Partition{})) == sd(Partition{3, 3}, Partition{2}));
    // Box-set rotation of (2,2)/(1) gives the straight shape (2,1).
    CHECK(rotate180(sd(Partition{2, 2}, Partition{1})) == sd(Partition{2, 1}, Partition{}));
    CHECK(rotate180(SkewDiagram()) == SkewDiagram());
}

TEST_CASE("connected components") {
    // Composite from three pieces sharing no row or column.
    SkewDiagram d = sd(Partition{8, 8, 4, 3, 3, 1, 1}, Partition{5, 3, 3, 2, 1});
    auto parts = connected_components(d);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == sd(Partition{5, 5, 1}, Partition{2}));
    CHECK(parts[1] == sd(Partition{2, 2}, Partition{1}));
    CHECK(parts[2] == sd(Partition{1, 1}, Partition{}));

    // Anti-diagonal boxes share no row or column, so they all split.
    CHECK(connected_components(sd(Partition{3, 2, 1}, Partition{2, 1})).size() == 3);
    CHECK(connected_components(sd(Partition{2, 1}, Partition{1})).size() == 2);

    // A connected basic diagram comes back unchanged.
    SkewDiagram conn = sd(Partition{3, 2}, Partition{1});
    auto same = connected_components(conn);
    REQUIRE(same.size() == 1);
    CHECK(same[0] == conn);
}

TEST_CASE("classify") {
    CHECK(classify(sd(Partition{1, 1, 1, 1, 1}, Partition{1, 1})) == SkewClass::PartitionShape);
    CHECK(classify(sd(Partition{2, 1}, Partition{1})) == SkewClass::Proper);
    CHECK(classify(sd(Partition{2, 2}, Partition{1})) == SkewClass::RotatedPartition);
    CHECK(classify(SkewDiagram()) == SkewClass::PartitionShape);
    // A rectangle is both a partition and a rotated partition; the partition
    // tag wins.
    CHECK(classify(sd(Partition{2, 2}, Partition{})) == SkewClass::PartitionShape);
}
