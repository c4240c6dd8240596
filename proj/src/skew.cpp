#include "lr/skew.hpp"

#include <algorithm>

#include "lr/errors.hpp"

namespace lr {

SkewDiagram::SkewDiagram(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw invalid_shape("inner " + inner_.to_string() + " not contained in outer " +
                            outer_.to_string());
}

Int SkewDiagram::box_count() const { return outer_.sum() - inner_.sum(); }

std::string SkewDiagram::to_string() const {
    return outer_.to_string() + "/" + inner_.to_string();
}

namespace {

// Sorted union of the column intervals (inner_i, outer_i] of the non-empty
// rows; used to delete empty columns exactly, without enumerating columns.
struct ColumnCover {
    std::vector<std::pair<Int, Int>> runs;  // disjoint (lo, hi], increasing

    explicit ColumnCover(const SkewDiagram& d) {
        std::vector<std::pair<Int, Int>> iv;
        for (std::size_t i = 0; i < d.row_count(); ++i)
            if (d.row_length(i) > 0) iv.emplace_back(d.inner().at(i), d.outer().at(i));
        std::sort(iv.begin(), iv.end());
        for (auto& r : iv) {
            if (!runs.empty() && r.first <= runs.back().second)
                runs.back().second = std::max(runs.back().second, r.second);
            else
                runs.push_back(r);
        }
    }

    // Number of covered columns <= v.
    Int rank(const Int& v) const {
        Int total = 0;
        for (const auto& [lo, hi] : runs) {
            if (lo >= v) break;
            total += std::min(hi, v) - lo;
        }
        return total;
    }
};

}  // namespace

SkewDiagram make_basic(const SkewDiagram& d) {
    ColumnCover cover(d);
    std::vector<Int> outer, inner;
    for (std::size_t i = 0; i < d.row_count(); ++i) {
        if (d.row_length(i) == 0) continue;
        outer.push_back(cover.rank(d.outer().at(i)));
        inner.push_back(cover.rank(d.inner().at(i)));
    }
    return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewDiagram rotate180(const SkewDiagram& d) {
    std::size_t rows = d.row_count();
    if (rows == 0) return {};
    const Int width = d.outer().at(0);
    std::vector<Int> outer(rows), inner(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        outer[i] = width - d.inner().at(rows - 1 - i);
        inner[i] = width - d.outer().at(rows - 1 - i);
    }
    return make_basic(SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner))));
}

std::vector<SkewDiagram> connected_components(const SkewDiagram& d) {
    std::vector<SkewDiagram> out;
    std::size_t rows = d.row_count();
    std::size_t i = 0;
    while (i < rows) {
        if (d.row_length(i) == 0) {
            ++i;
            continue;
        }
        // Extend the run while consecutive rows share a column.
        std::size_t j = i;
        while (j + 1 < rows && d.row_length(j + 1) > 0 && d.inner().at(j) < d.outer().at(j + 1))
            ++j;
        std::vector<Int> outer(d.outer().parts().begin() + i, d.outer().parts().begin() + j + 1);
        std::vector<Int> inner;
        for (std::size_t k = i; k <= j; ++k) inner.push_back(d.inner().at(k));
        out.push_back(
            make_basic(SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)))));
        i = j + 1;
    }
    return out;
}

bool is_partition_shape(const SkewDiagram& d) { return make_basic(d).inner().empty(); }

bool is_rotated_partition(const SkewDiagram& d) {
    return !is_partition_shape(d) && make_basic(rotate180(d)).inner().empty();
}

SkewClass classify(const SkewDiagram& d) {
    if (is_partition_shape(d)) return SkewClass::PartitionShape;
    if (is_rotated_partition(d)) return SkewClass::RotatedPartition;
    return SkewClass::Proper;
}

SkewDiagram parse_skew(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewDiagram(parse_partition(text), Partition());
    return SkewDiagram(parse_partition(text.substr(0, slash)),
                       parse_partition(text.substr(slash + 1)));
}

}  // namespace lr
