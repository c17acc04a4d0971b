#include "lrorder/word_chain.hpp"

#include <stdexcept>

#include "lrorder/bruhat.hpp"
#include "lrorder/errors.hpp"

namespace lrorder {

std::string to_string(const TieRule& tie) {
    switch (tie.kind) {
    case TieRule::Kind::max_l: return "max";
    case TieRule::Kind::min_l: return "min";
    case TieRule::Kind::explicit_l: return std::to_string(tie.position);
    }
    return "max";
}

std::string to_string(const MoveChoice& c) {
    return "k=" + std::to_string(c.k) + " a=" + std::to_string(c.a) + " m=" + std::to_string(c.m) +
           " b=" + std::to_string(c.b) + " l=" + std::to_string(c.l);
}

WordStep word_step(const LRFilling& x, const LRFilling& z, TieRule tie) {
    require_same_type(x, z);
    require_rook_strip(x.type());
    if (x == z)
        throw OrderError("Z equals X; there is no move to split off");
    require_dom_leq(z, x);

    ColumnWord wx = column_word(x), wz = column_word(z);
    const int n = static_cast<int>(wx.size());
    MoveChoice c;
    c.k = 1;
    while (wx[c.k - 1] == wz[c.k - 1])
        ++c.k;
    c.a = wz[c.k - 1];
    if (c.a >= wx[c.k - 1])
        throw std::logic_error("column words are not lexicographically ordered although Z <_dom X");

    c.m = c.k + 1;
    while (c.m <= n && wx[c.m - 1] != c.a)
        ++c.m;
    if (c.m > n)
        throw std::logic_error("letter " + std::to_string(c.a) + " does not recur in the column word of X");

    c.b = 0;
    for (int i = c.k; i < c.m; ++i)
        if (wx[i - 1] > c.a && (c.b == 0 || wx[i - 1] < c.b))
            c.b = wx[i - 1];

    auto admissible = [&](int l) { return l >= c.k && l < c.m && wx[l - 1] == c.b; };
    switch (tie.kind) {
    case TieRule::Kind::max_l:
        for (c.l = c.m - 1; !admissible(c.l); --c.l) {
        }
        break;
    case TieRule::Kind::min_l:
        for (c.l = c.k; !admissible(c.l); ++c.l) {
        }
        break;
    case TieRule::Kind::explicit_l:
        if (!admissible(tie.position))
            throw OrderError("position l=" + std::to_string(tie.position) + " is not admissible: need " +
                             std::to_string(c.k) + " <= l < " + std::to_string(c.m) + " holding " +
                             std::to_string(c.b));
        c.l = tie.position;
        break;
    }

    ColumnWord wy = wx;
    std::swap(wy[c.l - 1], wy[c.m - 1]);
    return WordStep{filling_from_word(x.type_ptr(), wy), c};
}

WordChain word_chain(const LRFilling& x, const LRFilling& z, TieRule tie) {
    require_same_type(x, z);
    require_rook_strip(x.type());
    require_dom_leq(z, x);

    WordChain chain;
    chain.fillings.push_back(x);
    while (!(chain.fillings.back() == z)) {
        WordStep step = word_step(chain.fillings.back(), z, tie);
        tie = TieRule::max();
        chain.choices.push_back(step.choice);
        chain.fillings.push_back(std::move(step.y));
    }
    return chain;
}

} // namespace lrorder
