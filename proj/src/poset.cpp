#include "lrorder/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lrorder/box_moves.hpp"
#include "lrorder/bruhat.hpp"
#include "lrorder/errors.hpp"

namespace lrorder {

std::string_view to_string(Relation r) { return r == Relation::box ? "box" : "dom"; }

std::vector<int> PosetGraph::maximal() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i) {
        bool top = true;
        for (std::size_t j = 0; j < size() && top; ++j)
            top = i == j || !leq_[i][j];
        if (top)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> PosetGraph::minimal() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i) {
        bool bottom = true;
        for (std::size_t j = 0; j < size() && bottom; ++j)
            bottom = i == j || !leq_[j][i];
        if (bottom)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

int PosetGraph::index_of(const LRFilling& f) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), f);
    return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
}

PosetGraph build_poset(std::vector<LRFilling> fillings, Relation relation) {
    for (const auto& f : fillings)
        require_same_type(f, fillings.front());
    if (relation == Relation::box && !fillings.empty())
        require_strip(fillings.front().type());

    std::sort(fillings.begin(), fillings.end(), [](const LRFilling& a, const LRFilling& b) {
        return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                            b.entries().end());
    });
    fillings.erase(std::unique(fillings.begin(), fillings.end()), fillings.end());

    PosetGraph p;
    p.relation_ = relation;
    p.nodes_ = std::move(fillings);
    const std::size_t n = p.nodes_.size();
    p.leq_.assign(n, std::vector<char>(n, 0));

    if (relation == Relation::dom) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p.leq_[i][j] = dom_leq(p.nodes_[i], p.nodes_[j]);
    } else {
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < n; ++i)
            index.emplace(std::vector<int>(p.nodes_[i].entries().begin(), p.nodes_[i].entries().end()),
                          static_cast<int>(i));
        std::vector<std::vector<int>> below(n);
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [next, move] : decreasing_box_moves(p.nodes_[j])) {
                auto it = index.find(std::vector<int>(next.entries().begin(), next.entries().end()));
                if (it != index.end())
                    below[j].push_back(it->second);
            }
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> stack{static_cast<int>(j)};
            p.leq_[j][j] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : below[v])
                    if (!p.leq_[w][j]) {
                        p.leq_[w][j] = 1;
                        stack.push_back(w);
                    }
            }
        }
    }

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || !p.leq_[i][j])
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (k != i && k != j && p.leq_[i][k] && p.leq_[k][j])
                    cover = false;
            if (cover)
                p.covers_.emplace_back(static_cast<int>(j), static_cast<int>(i));
        }
    std::sort(p.covers_.begin(), p.covers_.end());

    std::vector<std::vector<int>> uppers(n);
    for (auto [upper, lower] : p.covers_)
        uppers[lower].push_back(upper);
    p.ranks_.assign(n, -1);
    std::function<int(int)> rank = [&](int v) {
        if (p.ranks_[v] >= 0)
            return p.ranks_[v];
        int r = 0;
        for (int u : uppers[v])
            r = std::max(r, rank(u) + 1);
        return p.ranks_[v] = r;
    };
    for (std::size_t v = 0; v < n; ++v)
        rank(static_cast<int>(v));
    return p;
}

GradedReport is_graded(const PosetGraph& p) {
    const int n = static_cast<int>(p.size());
    GradedReport report;
    if (n == 0)
        return report;

    std::vector<std::vector<int>> lowers(n);
    for (auto [upper, lower] : p.covers())
        lowers[upper].push_back(lower);
    // shortest/longest cover path from each node down to a minimal element
    std::vector<int> lo(n, -1), hi(n, -1), lo_next(n, -1), hi_next(n, -1);
    std::function<void(int)> visit = [&](int v) {
        if (lo[v] >= 0)
            return;
        lo[v] = hi[v] = 0;
        bool first = true;
        for (int w : lowers[v]) {
            visit(w);
            if (first || lo[w] + 1 < lo[v]) {
                lo[v] = lo[w] + 1;
                lo_next[v] = w;
            }
            if (first || hi[w] + 1 > hi[v]) {
                hi[v] = hi[w] + 1;
                hi_next[v] = w;
            }
            first = false;
        }
    };
    int lo_top = -1, hi_top = -1;
    for (int v : p.maximal()) {
        visit(v);
        if (lo_top < 0 || lo[v] < lo[lo_top])
            lo_top = v;
        if (hi_top < 0 || hi[v] > hi[hi_top])
            hi_top = v;
    }
    for (int v = lo_top; v >= 0; v = lo_next[v])
        report.shortest.push_back(v);
    for (int v = hi_top; v >= 0; v = hi_next[v])
        report.longest.push_back(v);
    report.graded = lo[lo_top] == hi[hi_top];
    report.length = lo[lo_top];
    return report;
}

bool is_lattice_order(const PosetGraph& p) {
    const std::size_t n = p.size();
    if (n == 0)
        return false;
    auto has_extreme = [&](const std::vector<std::size_t>& bounds, bool least) {
        for (std::size_t c : bounds) {
            bool extreme = true;
            for (std::size_t d : bounds)
                if (least ? !p.leq(c, d) : !p.leq(d, c)) {
                    extreme = false;
                    break;
                }
            if (extreme)
                return true;
        }
        return false;
    };
    std::vector<std::size_t> upper, lower;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            upper.clear();
            lower.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (p.leq(i, k) && p.leq(j, k))
                    upper.push_back(k);
                if (p.leq(k, i) && p.leq(k, j))
                    lower.push_back(k);
            }
            if (!has_extreme(upper, true) || !has_extreme(lower, false))
                return false;
        }
    return true;
}

LRFilling maximal_filling(const TypePtr& type) {
    require_rook_strip(*type);
    ColumnWord w;
    for (int u = type->labels(); u >= 1; --u)
        w.insert(w.end(), type->content()[u - 1], u);
    return filling_from_word(type, w);
}

LRFilling minimal_filling(const TypePtr& type) {
    require_rook_strip(*type);
    const int n = type->box_count(), s = type->labels();
    std::vector<int> remaining(s + 1, 0), used(s + 1, 0);
    for (int u = 1; u <= s; ++u)
        remaining[u] = type->content()[u - 1];
    ColumnWord w(n);
    for (int pos = n - 1; pos >= 0; --pos) {
        int pick = 0;
        for (int u = s; u >= 1 && pick == 0; --u)
            if (remaining[u] > 0 && (u == 1 || used[u] + 1 <= used[u - 1]))
                pick = u;
        if (pick == 0)
            throw InvalidFilling("no lattice word of content (" + to_string(type->content()) + ")");
        w[pos] = pick;
        --remaining[pick];
        ++used[pick];
    }
    return filling_from_word(type, w);
}

} // namespace lrorder
