#pragma once

#include <string>
#include <vector>

#include "lr/partition.hpp"

namespace lr {

enum class SkewClass { PartitionShape, RotatedPartition, Proper };

// Skew diagram outer/inner with inner contained in outer.  The box set is
// { (i,j) : inner[i] < j <= outer[i] } in matrix coordinates.
class SkewDiagram {
public:
    SkewDiagram() = default;
    SkewDiagram(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    std::size_t row_count() const { return outer_.length(); }
    Int row_length(std::size_t i) const { return outer_.at(i) - inner_.at(i); }
    Int box_count() const;

    bool operator==(const SkewDiagram&) const = default;

    // "outer/inner" in partition text form.
    std::string to_string() const;

private:
    Partition outer_, inner_;
};

// Deletes empty rows and empty columns; the skew character is unchanged.
SkewDiagram make_basic(const SkewDiagram& d);

// 180-degree rotation, normalized to basic form (rotation is only defined up
// to translation).  rotate180(rotate180(d)) == make_basic(d).
SkewDiagram rotate180(const SkewDiagram& d);

// Maximal groups of boxes sharing no row or column with the rest, top to
// bottom, each in basic form.
std::vector<SkewDiagram> connected_components(const SkewDiagram& d);

bool is_partition_shape(const SkewDiagram& d);
bool is_rotated_partition(const SkewDiagram& d);
SkewClass classify(const SkewDiagram& d);

SkewDiagram parse_skew(const std::string& text);

}  // namespace lr
