#pragma once

// Test-only oracle: counts LR tableaux by filling the skew diagram cell by
// cell in reverse-reading order.  Completely independent of the row-content
// engine in the library; used to pin expected values.

#include <map>
#include <optional>

#include "lr/partition.hpp"
#include "lr/skew.hpp"

namespace lr::oracle {

// Number of LR fillings of the shape; content restricted when given.
long count_fillings(const SkewDiagram& shape, const std::optional<Partition>& content);

// Content -> count over all LR fillings.
std::map<Partition, long> content_counts(const SkewDiagram& shape);

long coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace lr::oracle
