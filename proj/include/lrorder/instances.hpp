#pragma once

#include <functional>
#include <vector>

#include "lrorder/partition.hpp"

namespace lrorder {

/// Limits for exhaustive sweeps: 1 <= |alpha| <= max_n, beta inside a
/// max_rows x max_cols rectangle.
struct SweepBounds {
    int max_n = 7;
    int max_rows = 8;
    int max_cols = 8;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

using ShapeVisitor = std::function<void(const Partition& beta, const Partition& gamma)>;

/// Every rook strip beta \ gamma in bounds: gamma runs over all partitions in
/// the rectangle, beta adds a nonempty set of addable corners of gamma.
void for_each_rook_shape(const SweepBounds& bounds, const ShapeVisitor& visit);

/// Every horizontal or vertical strip beta \ gamma in bounds (rook strips included).
void for_each_strip_shape(const SweepBounds& bounds, const ShapeVisitor& visit);

} // namespace lrorder
