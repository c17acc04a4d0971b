#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrorder/filling.hpp"

namespace lrorder {

/// How the exchange position l is picked among the admissible ones.
struct TieRule {
    enum class Kind { max_l, min_l, explicit_l };

    Kind kind = Kind::max_l;
    int position = 0; // 1-based, used by explicit_l

    static TieRule max() { return {Kind::max_l, 0}; }
    static TieRule min() { return {Kind::min_l, 0}; }
    static TieRule at(int l) { return {Kind::explicit_l, l}; }
};

std::string to_string(const TieRule& tie);

/// Positions (1-based) and values chosen by one step of the column-word algorithm.
struct MoveChoice {
    int k = 0; // first position where the words of X and Z differ
    int a = 0; // omega(Z)_k
    int m = 0; // first position after k holding a in omega(X)
    int b = 0; // smallest value above a among omega(X)_k .. omega(X)_{m-1}
    int l = 0; // chosen position of b, k <= l < m

    friend bool operator==(const MoveChoice&, const MoveChoice&) = default;
};

std::string to_string(const MoveChoice& c);

struct WordStep {
    LRFilling y;
    MoveChoice choice;
};

/// Splits one decreasing box move off X toward Z: Y is X with the letters in
/// positions l and m of the column word exchanged. Requires a rook strip and
/// Z <_dom X. Throws OrderError for Z = X, Z not below X, or an inadmissible
/// explicit position.
WordStep word_step(const LRFilling& x, const LRFilling& z, TieRule tie = TieRule::max());

struct WordChain {
    std::vector<LRFilling> fillings; // X, ..., Z
    std::vector<MoveChoice> choices;
};

/// Repeats word_step until Z is reached. An explicit position applies to the
/// first step only; later steps use max_l.
WordChain word_chain(const LRFilling& x, const LRFilling& z, TieRule tie = TieRule::max());

} // namespace lrorder
