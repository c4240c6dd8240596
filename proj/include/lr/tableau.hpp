#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lr/skew.hpp"

namespace lr {

// An LR tableau is a semistandard filling of a skew shape whose reverse row
// word is a lattice word.  Such a filling is determined by the multiset of
// entries in each row, so we store the row-content matrix: mult(i, e) is the
// number of entries e in row i.
class LRTableau {
public:
    LRTableau() = default;
    LRTableau(SkewDiagram shape, std::vector<std::vector<long>> row_mult);

    const SkewDiagram& shape() const { return shape_; }
    const std::vector<std::vector<long>>& rows() const { return row_mult_; }
    long mult(std::size_t row, std::size_t entry) const;  // entry is 1-based

    Partition content() const;
    bool is_valid() const;

    bool operator==(const LRTableau&) const = default;

private:
    SkewDiagram shape_;
    std::vector<std::vector<long>> row_mult_;  // row_mult_[i][e-1]
};

// The expansion of a skew shape into contents: maps nu to the number of LR
// tableaux of the shape with content nu.
class CharacterExpansion {
public:
    using Terms = std::map<Partition, Int>;

    CharacterExpansion() = default;
    explicit CharacterExpansion(Terms terms);

    const Terms& terms() const { return terms_; }
    Int total() const;
    Int multiplicity(const Partition& nu) const;
    std::size_t distinct() const { return terms_.size(); }

    bool operator==(const CharacterExpansion&) const = default;

private:
    Terms terms_;
};

// Number of LR tableaux of shape lam/mu with content nu.  Zero when mu is not
// contained in lam or the sizes do not match.
Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Number of LR tableaux of the shape with arbitrary content, computed by a
// memoized row DP that never materializes tableaux.
Int count_all(const SkewDiagram& shape);

CharacterExpansion skew_character(const SkewDiagram& shape);

// Visits each LR tableau of the shape (restricted to the given content when
// supplied) exactly once, in row-major order, lexicographically smallest
// row-content vector first.  Stops early when the visitor returns false.
void enumerate(const SkewDiagram& shape, const std::optional<Partition>& content,
               const std::function<bool(const LRTableau&)>& visit);

std::vector<LRTableau> enumerate_all(const SkewDiagram& shape,
                                     const std::optional<Partition>& content = std::nullopt);

// Row-wise merge of two LR tableaux: row j of the result holds the entries of
// row j of both inputs.  The result is a valid LR tableau on the summed shape
// with the summed content, and for fixed first argument the map is injective
// in the second.
LRTableau tableau_sum(const LRTableau& a, const LRTableau& c);

}  // namespace lr
