#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lr {

using Int = mpz_class;

// A partition: weakly decreasing sequence of positive integers.  Trailing
// zeros are never stored, so two paddings of the same partition compare
// equal.  Reads past the stored length yield 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);
    Partition(std::initializer_list<long> parts);

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // 0-based, zero-padded access.
    const Int& at(std::size_t i) const;

    Int sum() const;

    // this[i] >= q[i] for all i.
    bool contains(const Partition& q) const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on parts; used for canonical orderings and map keys.
    std::strong_ordering operator<=>(const Partition& rhs) const;

    std::string to_string() const;

private:
    std::vector<Int> parts_;
};

Partition conjugate(const Partition& p);
Partition add(const Partition& p, const Partition& q);
Partition union_of(const Partition& p, const Partition& q);
Partition scale(const Int& n, const Partition& p);

// Componentwise difference; nullopt when the result has a negative entry or
// is not weakly decreasing.  Callers computing LR coefficients treat nullopt
// as coefficient 0.
std::optional<Partition> subtract(const Partition& p, const Partition& q);

// Text form: comma-separated decreasing parts, e.g. "6,5,4,3,3,1".  The empty
// partition reads as "" or "0" and prints as "0".  Exponent sugar "1^5" for
// repeated parts is accepted on input.
Partition parse_partition(const std::string& text);

}  // namespace lr
