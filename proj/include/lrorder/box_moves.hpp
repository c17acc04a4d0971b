#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrorder/filling.hpp"

namespace lrorder {

/// One exchange of a decreasing box move, described before re-sorting:
/// `smaller` sat in `upper`, `larger` sat in `lower` (strictly lower row).
struct MoveRecord {
    Box upper;
    Box lower;
    int smaller = 0;
    int larger = 0;

    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

std::string to_string(const MoveRecord& m);

/// Every distinct filling reachable from X by one decreasing box move, in
/// canonical order, each with the first exchange producing it. Swaps whose
/// re-sorted result is not an LR-filling are dropped. Throws ShapeError
/// ("box moves undefined") unless the shape is a horizontal or vertical strip.
std::vector<std::pair<LRFilling, MoveRecord>> decreasing_box_moves(const LRFilling& x);

/// Z reachable from X by a possibly empty sequence of decreasing box moves.
bool box_leq(const LRFilling& z, const LRFilling& x);

/// For two fillings of a rook strip that differ in exactly two boxes by a
/// decreasing exchange, the exchange; nullopt otherwise.
std::optional<MoveRecord> single_exchange(const LRFilling& from, const LRFilling& to);

/// Throws ShapeError("box moves undefined ...") for non-strip shapes.
void require_strip(const FillingType& type);

} // namespace lrorder
