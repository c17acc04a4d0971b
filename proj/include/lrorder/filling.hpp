#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrorder/partition.hpp"

namespace lrorder {

/// The type (alpha, beta, gamma) of a filling together with the box layout
/// shared by every filling of that type.
class FillingType {
  public:
    /// Throws ShapeError if gamma is not inside beta and WeightMismatch if
    /// |beta| - |gamma| != |alpha|.
    static std::shared_ptr<const FillingType> make(Partition alpha, Partition beta, Partition gamma);

    const Partition& content() const { return alpha_; }
    const SkewShape& shape() const { return shape_; }
    const Partition& outer() const { return shape_.outer(); }
    const Partition& inner() const { return shape_.inner(); }
    StripKind strip() const { return strip_; }
    bool is_rook_strip() const { return strip_ == StripKind::rook; }

    /// s, the number of distinct labels.
    int labels() const { return static_cast<int>(alpha_.length()); }
    int box_count() const { return static_cast<int>(boxes_.size()); }
    int column_count() const { return shape_.column_count(); }

    /// Skew boxes in row-major order; entry vectors are indexed the same way.
    std::span<const Box> boxes() const { return boxes_; }
    /// Box indices in column-word order: columns left to right, each bottom-up.
    std::span<const int> column_order() const { return column_order_; }
    /// Box indices of one column, top to bottom.
    std::span<const int> column(int c) const { return columns_[c]; }
    /// Half-open range of box indices in row r.
    std::pair<int, int> row_range(int r) const { return {row_start_[r], row_start_[r + 1]}; }
    int row_count() const { return static_cast<int>(outer().length()); }
    /// Index of the skew box directly above box k, or -1.
    int above(int k) const { return above_[k]; }
    /// Index of a skew box, or -1 if (row, col) is not in the skew diagram.
    int index_of(Box b) const;

    std::string describe() const;

    friend bool operator==(const FillingType& a, const FillingType& b) {
        return a.alpha_ == b.alpha_ && a.shape_ == b.shape_;
    }

  private:
    FillingType(Partition alpha, SkewShape shape);

    Partition alpha_;
    SkewShape shape_;
    StripKind strip_ = StripKind::none;
    std::vector<Box> boxes_;
    std::vector<int> row_start_;
    std::vector<int> column_order_;
    std::vector<std::vector<int>> columns_;
    std::vector<int> above_;
};

using TypePtr = std::shared_ptr<const FillingType>;

bool same_type(const FillingType& a, const FillingType& b);

/// Checks a candidate entry vector (row-major) against the LR conditions:
/// content alpha, rows weakly increasing, columns strictly increasing and,
/// for each u > 1 and each column c, at least as many (u-1)'s as u's in the
/// columns strictly right of c.
bool is_lr_filling(const FillingType& type, std::span<const int> entries);

/// Validated LR-filling. Entries follow FillingType::boxes() order.
class LRFilling {
  public:
    struct trusted_t {};

    /// Throws InvalidFilling if entries do not form an LR-filling of type.
    LRFilling(TypePtr type, std::vector<int> entries);
    /// No validation; for producers that already established validity.
    LRFilling(TypePtr type, std::vector<int> entries, trusted_t) : type_(std::move(type)), entries_(std::move(entries)) {}

    /// rows[r] lists the skew entries of row r left to right.
    static LRFilling from_rows(TypePtr type, const std::vector<std::vector<int>>& rows);

    const FillingType& type() const { return *type_; }
    const TypePtr& type_ptr() const { return type_; }
    std::span<const int> entries() const { return entries_; }
    int entry(Box b) const;
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const LRFilling& a, const LRFilling& b) {
        return a.entries_ == b.entries_ && same_type(*a.type_, *b.type_);
    }

  private:
    TypePtr type_;
    std::vector<int> entries_;
};

/// Throws TypeMismatch unless both fillings share a type.
void require_same_type(const LRFilling& a, const LRFilling& b);

using PartitionSequence = std::vector<Partition>;
using ColumnWord = std::vector<int>;

/// [gamma^(0), ..., gamma^(s)] with gamma^(i) the region of blanks and entries <= i.
PartitionSequence to_partition_sequence(const LRFilling& f);

/// Inverse of to_partition_sequence. Throws InvalidFilling on broken nesting,
/// a non-partition content or a result that is not an LR-filling.
LRFilling from_partition_sequence(const PartitionSequence& seq);

/// Entries column by column from the left, each column read bottom-up.
ColumnWord column_word(const LRFilling& f);

/// Rebuilds a filling from its column word. Throws InvalidFilling on length
/// mismatch or when the result is not an LR-filling.
LRFilling filling_from_word(TypePtr type, std::span<const int> word);

/// Compact label: digits concatenated when every entry is below 10,
/// comma-separated otherwise.
std::string word_label(std::span<const int> word);
std::string word_label(const LRFilling& f);

/// raw[c][u] = number of entries <= u in the first c columns (c = 0..columns,
/// u = 0..s); empty[c] = gamma'_1 + ... + gamma'_c.
struct CountMatrix {
    std::vector<std::vector<int>> raw;
    std::vector<int> empty;

    int at(int c, int u) const { return raw[c][u]; }
};

CountMatrix count_matrix(const LRFilling& f);

/// delta^(i) <=_dom gamma^(i) for every i of the partition sequences.
bool dom_leq(const LRFilling& z, const LRFilling& x);

/// Count-matrix criterion: #omega(Z)^{<=u}_{<=c} >= #omega(X)^{<=u}_{<=c}.
bool dom_leq_by_counts(const LRFilling& z, const LRFilling& x);

struct CountCell {
    int column = 0; // number of leading columns
    int label = 0;  // entries <= label
    int z_count = 0;
    int x_count = 0;
};

/// The first (column-major) cell where the count criterion for Z <=_dom X fails.
std::optional<CountCell> first_count_violation(const LRFilling& z, const LRFilling& x);

} // namespace lrorder
