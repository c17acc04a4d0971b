#include "lrorder/instances.hpp"

#include <bit>

namespace lrorder {

namespace {

void partitions_in_box(std::vector<int>& prefix, int max_rows, int max_part,
                       const std::function<void(const Partition&)>& visit) {
    visit(Partition(prefix));
    if (static_cast<int>(prefix.size()) == max_rows)
        return;
    for (int p = 1; p <= max_part; ++p) {
        prefix.push_back(p);
        partitions_in_box(prefix, max_rows, p, visit);
        prefix.pop_back();
    }
}

void for_each_gamma(const SweepBounds& b, const std::function<void(const Partition&)>& visit) {
    std::vector<int> prefix;
    partitions_in_box(prefix, b.max_rows, b.max_cols, visit);
}

// Upper bound on row r of a horizontal strip over gamma.
int horizontal_cap(const Partition& gamma, int r, const SweepBounds& b) {
    return r == 0 ? b.max_cols : gamma[r - 1];
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            prefix.push_back(p);
            rec(remaining - p, p);
            prefix.pop_back();
        }
    };
    if (n > 0)
        rec(n, n);
    return out;
}

void for_each_rook_shape(const SweepBounds& b, const ShapeVisitor& visit) {
    if (b.max_n < 1)
        return;
    for_each_gamma(b, [&](const Partition& gamma) {
        std::vector<int> corner_rows;
        for (int r = 0; r < b.max_rows; ++r) {
            if (gamma[r] >= b.max_cols)
                continue;
            if (r == 0 || gamma[r - 1] > gamma[r])
                corner_rows.push_back(r);
        }
        const unsigned count = static_cast<unsigned>(corner_rows.size());
        for (unsigned mask = 1; mask < (1u << count); ++mask) {
            if (std::popcount(mask) > b.max_n)
                continue;
            std::vector<int> beta(b.max_rows);
            for (int r = 0; r < b.max_rows; ++r)
                beta[r] = gamma[r];
            for (unsigned i = 0; i < count; ++i)
                if (mask & (1u << i))
                    ++beta[corner_rows[i]];
            visit(Partition(beta), gamma);
        }
    });
}

void for_each_strip_shape(const SweepBounds& b, const ShapeVisitor& visit) {
    if (b.max_n < 1)
        return;
    for_each_gamma(b, [&](const Partition& gamma) {
        std::vector<int> beta(b.max_rows);
        // Horizontal strips: gamma_r <= beta_r <= gamma_{r-1}.
        std::function<void(int, int)> horizontal = [&](int r, int added) {
            if (r == b.max_rows) {
                if (added > 0)
                    visit(Partition(beta), gamma);
                return;
            }
            for (int v = gamma[r]; v <= horizontal_cap(gamma, r, b) && added + v - gamma[r] <= b.max_n; ++v) {
                beta[r] = v;
                horizontal(r + 1, added + v - gamma[r]);
            }
        };
        horizontal(0, 0);

        // Vertical strips that are not horizontal: beta_r in {gamma_r, gamma_r + 1}.
        std::function<void(int, int, bool)> vertical = [&](int r, int added, bool horiz) {
            if (r == b.max_rows) {
                if (added > 0 && !horiz)
                    visit(Partition(beta), gamma);
                return;
            }
            for (int d = 0; d <= 1; ++d) {
                int v = gamma[r] + d;
                if (v > b.max_cols || (r > 0 && v > beta[r - 1]) || added + d > b.max_n)
                    continue;
                beta[r] = v;
                vertical(r + 1, added + d, horiz && v <= horizontal_cap(gamma, r, b));
            }
        };
        vertical(0, 0, true);
    });
}

} // namespace lrorder
