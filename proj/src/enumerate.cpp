#include "lrorder/enumerate.hpp"

namespace lrorder {

namespace {

struct Search {
    const TypePtr& type;
    std::vector<int> entries;
    std::vector<int> remaining;
    std::vector<LRFilling> out;

    void run(int k) {
        const FillingType& t = *type;
        if (k == t.box_count()) {
            if (is_lr_filling(t, entries))
                out.emplace_back(type, entries, LRFilling::trusted_t{});
            return;
        }
        const Box& b = t.boxes()[k];
        int low = 1;
        if (b.col > t.inner()[b.row])
            low = entries[k - 1];
        if (int up = t.above(k); up >= 0)
            low = std::max(low, entries[up] + 1);
        for (int v = low; v <= t.labels(); ++v) {
            if (remaining[v] == 0)
                continue;
            --remaining[v];
            entries[k] = v;
            run(k + 1);
            ++remaining[v];
        }
    }
};

} // namespace

std::vector<LRFilling> enumerate_fillings(const TypePtr& type) {
    Search search{type, std::vector<int>(type->box_count(), 0), std::vector<int>(type->labels() + 1, 0), {}};
    for (int u = 1; u <= type->labels(); ++u)
        search.remaining[u] = type->content()[u - 1];
    search.run(0);
    return std::move(search.out);
}

std::vector<LRFilling> enumerate_fillings(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    return enumerate_fillings(FillingType::make(alpha, beta, gamma));
}

} // namespace lrorder
