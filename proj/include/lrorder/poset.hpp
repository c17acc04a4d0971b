#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrorder/filling.hpp"

namespace lrorder {

enum class Relation { dom, box };

std::string_view to_string(Relation r);

/// Fillings of one type under the dominance or box order, with the full
/// relation, its cover edges and a rank function.
class PosetGraph {
  public:
    PosetGraph() = default;

    const std::vector<LRFilling>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    Relation relation() const { return relation_; }

    /// node i <= node j
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
    /// (upper, lower) pairs of the transitive reduction, sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    /// Length of the longest cover path from a maximal element down to the node.
    const std::vector<int>& ranks() const { return ranks_; }

    std::vector<int> maximal() const;
    std::vector<int> minimal() const;
    /// Index of a node, or -1.
    int index_of(const LRFilling& f) const;

  private:
    friend PosetGraph build_poset(std::vector<LRFilling> fillings, Relation relation);

    std::vector<LRFilling> nodes_;
    Relation relation_ = Relation::dom;
    std::vector<std::vector<char>> leq_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> ranks_;
};

/// Nodes are sorted into canonical (row-major lexicographic) order. Throws
/// TypeMismatch for mixed types and ShapeError for the box order on a
/// non-strip shape.
PosetGraph build_poset(std::vector<LRFilling> fillings, Relation relation);

struct GradedReport {
    bool graded = true;
    int length = 0;                // common length when graded, else the shortest
    std::vector<int> shortest;     // witness maximal chains, top to bottom
    std::vector<int> longest;
};

/// Whether every maximal saturated chain has the same length.
GradedReport is_graded(const PosetGraph& p);

/// Every pair of nodes has a join and a meet. False for the empty poset.
bool is_lattice_order(const PosetGraph& p);

/// The filling whose column word is weakly decreasing. Rook strips only.
LRFilling maximal_filling(const TypePtr& type);

/// The filling built right to left from the largest lattice-feasible letter
/// at each position. Rook strips only.
LRFilling minimal_filling(const TypePtr& type);

} // namespace lrorder
