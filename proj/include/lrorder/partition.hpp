#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrorder {

/// A weakly decreasing sequence of positive integers. Stored without
/// trailing zeros; indexed access past the last part returns 0.
class Partition {
  public:
    Partition() = default;

    /// Throws ParseError unless parts is weakly decreasing and non-negative.
    /// Trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;
    std::span<const int> parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

/// alpha'_j = #{i : alpha_i >= j}.
Partition transpose(const Partition& p);

/// Prefix-sum comparison over every index; weights need not agree.
bool dominance_leq(const Partition& a, const Partition& b);

/// inner_i <= outer_i for every i.
bool contains(const Partition& inner, const Partition& outer);

/// "4,3,3,2,1"; the empty partition prints as "".
std::string to_string(const Partition& p);

/// Accepts comma-separated parts; "" and "0" are the empty partition.
Partition parse_partition(std::string_view text);

struct Box {
    int row = 0; // 0-based
    int col = 0; // 0-based

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

enum class StripKind { none, horizontal, vertical, rook };

std::string_view to_string(StripKind kind);

/// The skew diagram outer \ inner. The constructor rejects non-nested pairs.
class SkewShape {
  public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int box_count() const { return outer_.weight() - inner_.weight(); }
    int column_count() const { return outer_[0]; }

    /// Skew boxes in row-major order.
    std::vector<Box> boxes() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

  private:
    Partition outer_;
    Partition inner_;
};

StripKind strip_kind(const SkewShape& s);

inline bool is_strip(StripKind k) { return k != StripKind::none; }

} // namespace lrorder
