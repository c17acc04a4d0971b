#include "lrorder/bruhat.hpp"

#include <stdexcept>

#include "lrorder/errors.hpp"

namespace lrorder {

void require_rook_strip(const FillingType& type) {
    if (!type.is_rook_strip())
        throw ShapeError("shape of " + type.describe() + " is not a rook strip");
}

void require_dom_leq(const LRFilling& z, const LRFilling& x) {
    if (auto cell = first_count_violation(z, x))
        throw OrderError("Z is not below X in dominance order: among the first " + std::to_string(cell->column) +
                         " columns Z has " + std::to_string(cell->z_count) + " entries <= " +
                         std::to_string(cell->label) + " but X has " + std::to_string(cell->x_count));
}

Permutation standardize(const LRFilling& x) {
    const FillingType& t = x.type();
    require_rook_strip(t);
    std::vector<int> next(t.labels() + 1, 1);
    for (int u = 2; u <= t.labels(); ++u)
        next[u] = next[u - 1] + t.content()[u - 2];
    auto order = t.column_order();
    std::vector<int> line;
    line.reserve(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        line.push_back(next[x.entries()[*it]]++);
    return Permutation(std::move(line));
}

std::vector<int> destandardized_entries(const Permutation& x, const FillingType& type) {
    require_rook_strip(type);
    if (x.size() != type.box_count())
        throw PermutationError("permutation of size " + std::to_string(x.size()) + " for a shape with " +
                               std::to_string(type.box_count()) + " boxes");
    if (!is_in_parabolic_quotient(x, type.content()))
        throw PermutationError(to_string(x) + " is not a minimal coset representative for content (" +
                               to_string(type.content()) + ")");
    std::vector<int> block_of(x.size() + 1);
    int value = 1;
    for (int u = 1; u <= type.labels(); ++u)
        for (int j = 0; j < type.content()[u - 1]; ++j)
            block_of[value++] = u;

    auto order = type.column_order();
    std::vector<int> entries(type.box_count());
    const int n = x.size();
    for (int k = 1; k <= n; ++k)
        entries[order[n - k]] = block_of[x(k)];
    return entries;
}

LRFilling destandardize(const Permutation& x, const TypePtr& type) {
    return LRFilling(type, destandardized_entries(x, *type));
}

CoverStep cover_step(const Permutation& x, const Permutation& z, const ReducedWord& word_z, const Partition& alpha) {
    const int n = x.size();
    if (z.size() != n)
        throw PermutationError("x and z lie in different symmetric groups");
    if (word_product(word_z, n) != z || static_cast<int>(word_z.size()) != length(z))
        throw PermutationError("'" + word_to_string(word_z) + "' is not a reduced word for " + to_string(z));
    if (!is_lattice_permutation(x, alpha) || !is_lattice_permutation(z, alpha))
        throw PermutationError("cover step needs lattice permutations of content (" + to_string(alpha) + ")");
    if (x == z || !bruhat_leq(x, z))
        throw OrderError(to_string(x) + " is not strictly below " + to_string(z) + " in Bruhat order");

    const int p = static_cast<int>(word_z.size());
    const int lx = length(x);
    // stripped[j] = (s_{i_1}...s_{i_{j-1}})^{-1} x, suffix[j] = s_{i_{j+1}}...s_{i_p} (1-based j).
    std::vector<Permutation> stripped(p + 1), suffix(p + 1);
    stripped[1] = x;
    for (int j = 1; j < p; ++j)
        stripped[j + 1] = Permutation(stripped[j]).swap_values(word_z[j - 1], word_z[j - 1] + 1);
    suffix[p] = Permutation::identity(n);
    for (int j = p; j > 1; --j)
        suffix[j - 1] = Permutation(suffix[j]).swap_values(word_z[j - 1], word_z[j - 1] + 1);

    int j1 = 0;
    for (int j = p; j >= 1; --j) {
        if (length(stripped[j]) == lx - (j - 1) && bruhat_leq(stripped[j], suffix[j])) {
            j1 = j;
            break;
        }
    }
    if (j1 == 0)
        throw std::logic_error("no subword of '" + word_to_string(word_z) + "' represents " + to_string(x));

    Permutation prefix = word_product(std::span<const int>(word_z).first(j1 - 1), n);
    int i = word_z[j1 - 1];
    Transposition t{prefix(i), prefix(i + 1)};
    if (t.a > t.b)
        std::swap(t.a, t.b);
    Permutation y = x;
    y.swap_values(t.a, t.b);

    if (length(y) != lx + 1 || !bruhat_leq(y, z) || !is_lattice_permutation(y, alpha))
        throw std::logic_error("cover step from " + to_string(x) + " toward " + to_string(z) + " produced " +
                               to_string(y) + ", which is not a lattice cover below z");
    return CoverStep{std::move(y), t, j1};
}

BruhatChain bruhat_chain(const LRFilling& x, const LRFilling& z) {
    require_same_type(x, z);
    require_rook_strip(x.type());
    require_dom_leq(z, x);

    BruhatChain chain;
    Permutation current = standardize(x);
    const Permutation target = standardize(z);
    chain.word = bubble_reduced_word(target);
    chain.fillings.push_back(x);
    chain.perms.push_back(current);
    while (current != target) {
        CoverStep step = cover_step(current, target, chain.word, x.type().content());
        current = step.y;
        chain.fillings.push_back(destandardize(current, x.type_ptr()));
        chain.perms.push_back(current);
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

} // namespace lrorder
