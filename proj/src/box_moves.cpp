#include "lrorder/box_moves.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lrorder/errors.hpp"

namespace lrorder {

namespace {

// Sort rows, then columns, ascending until nothing moves.
void resort(const FillingType& t, std::vector<int>& e) {
    std::vector<int> buffer;
    for (bool changed = true; changed;) {
        changed = false;
        for (int r = 0; r < t.row_count(); ++r) {
            auto [begin, end] = t.row_range(r);
            if (!std::is_sorted(e.begin() + begin, e.begin() + end)) {
                std::sort(e.begin() + begin, e.begin() + end);
                changed = true;
            }
        }
        for (int c = 0; c < t.column_count(); ++c) {
            auto col = t.column(c);
            buffer.clear();
            for (int k : col)
                buffer.push_back(e[k]);
            if (std::is_sorted(buffer.begin(), buffer.end()))
                continue;
            std::sort(buffer.begin(), buffer.end());
            for (std::size_t i = 0; i < col.size(); ++i)
                e[col[i]] = buffer[i];
            changed = true;
        }
    }
}

} // namespace

std::string to_string(const MoveRecord& m) {
    auto box = [](Box b) { return "(" + std::to_string(b.row + 1) + "," + std::to_string(b.col + 1) + ")"; };
    return "exchange " + std::to_string(m.smaller) + "@" + box(m.upper) + " with " + std::to_string(m.larger) + "@" +
           box(m.lower);
}

void require_strip(const FillingType& type) {
    if (!is_strip(type.strip()))
        throw ShapeError("box moves undefined: shape " + type.describe() +
                         " is neither a horizontal nor a vertical strip");
}

std::vector<std::pair<LRFilling, MoveRecord>> decreasing_box_moves(const LRFilling& x) {
    const FillingType& t = x.type();
    require_strip(t);
    auto e = x.entries();
    const int n = t.box_count();

    std::vector<std::pair<std::vector<int>, MoveRecord>> found;
    std::set<std::vector<int>> seen;
    std::vector<int> candidate;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (t.boxes()[p].row == t.boxes()[q].row || e[p] >= e[q])
                continue;
            candidate.assign(e.begin(), e.end());
            std::swap(candidate[p], candidate[q]);
            resort(t, candidate);
            if (std::equal(candidate.begin(), candidate.end(), e.begin()) || !is_lr_filling(t, candidate))
                continue;
            if (seen.insert(candidate).second)
                found.emplace_back(candidate, MoveRecord{t.boxes()[p], t.boxes()[q], e[p], e[q]});
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::pair<LRFilling, MoveRecord>> out;
    out.reserve(found.size());
    for (auto& [entries, record] : found)
        out.emplace_back(LRFilling(x.type_ptr(), std::move(entries), LRFilling::trusted_t{}), record);
    return out;
}

bool box_leq(const LRFilling& z, const LRFilling& x) {
    require_same_type(z, x);
    require_strip(x.type());
    if (z == x)
        return true;
    std::set<std::vector<int>> visited{std::vector<int>(x.entries().begin(), x.entries().end())};
    std::deque<LRFilling> queue{x};
    while (!queue.empty()) {
        LRFilling current = std::move(queue.front());
        queue.pop_front();
        for (auto& [next, move] : decreasing_box_moves(current)) {
            if (next == z)
                return true;
            if (visited.emplace(next.entries().begin(), next.entries().end()).second)
                queue.push_back(std::move(next));
        }
    }
    return false;
}

std::optional<MoveRecord> single_exchange(const LRFilling& from, const LRFilling& to) {
    require_same_type(from, to);
    std::vector<int> diff;
    for (int k = 0; k < from.type().box_count(); ++k)
        if (from.entries()[k] != to.entries()[k])
            diff.push_back(k);
    if (diff.size() != 2)
        return std::nullopt;
    int p = diff[0], q = diff[1];
    const auto& boxes = from.type().boxes();
    if (boxes[p].row == boxes[q].row || from.entries()[p] != to.entries()[q] ||
        from.entries()[q] != to.entries()[p] || from.entries()[p] >= from.entries()[q])
        return std::nullopt;
    return MoveRecord{boxes[p], boxes[q], from.entries()[p], from.entries()[q]};
}

} // namespace lrorder
