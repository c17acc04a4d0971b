#pragma once

#include <vector>

#include "lrorder/filling.hpp"
#include "lrorder/permutation.hpp"

namespace lrorder {

/// Standardization of a rook-strip filling: read the column word backwards
/// (top right to bottom left) and relabel the 1's as 1..alpha_1, the 2's as
/// alpha_1+1..alpha_1+alpha_2, and so on. Throws ShapeError off rook strips.
Permutation standardize(const LRFilling& x);

/// Candidate row-major entries whose standardization is x: the k-th box in
/// reading order receives the block index of x(k). Not checked for the LR
/// conditions. Throws PermutationError if x is not in S^alpha or the sizes differ.
std::vector<int> destandardized_entries(const Permutation& x, const FillingType& type);

/// Inverse of standardize on lattice permutations. Throws InvalidFilling
/// when the candidate is not an LR-filling.
LRFilling destandardize(const Permutation& x, const TypePtr& type);

struct Transposition {
    int a = 0;
    int b = 0;

    friend bool operator==(const Transposition&, const Transposition&) = default;
};

struct CoverStep {
    Permutation y;
    Transposition t; // y = t * x, a < b
    int j1 = 0;      // 1-based position in the word of z
};

/// One Bruhat cover x < y <= z inside the lattice permutations of content
/// alpha. j1 is the largest j such that x = s_{i_1}...s_{i_{j-1}} * w with w
/// a subword of the suffix after j (reduced); t conjugates s_{i_{j1}} by that
/// prefix. Throws OrderError unless x < z, PermutationError if x or z is not
/// lattice or word_z is not a reduced word for z.
CoverStep cover_step(const Permutation& x, const Permutation& z, const ReducedWord& word_z, const Partition& alpha);

struct BruhatChain {
    ReducedWord word;                  // bubble-sort word of the standardization of Z
    std::vector<LRFilling> fillings;   // X, ..., Z
    std::vector<Permutation> perms;    // their standardizations
    std::vector<CoverStep> steps;
};

/// Chain of decreasing box moves from X down to Z obtained by repeated
/// cover_step toward the standardization of Z. Requires a rook strip and Z <=_dom X.
BruhatChain bruhat_chain(const LRFilling& x, const LRFilling& z);

/// Throws ShapeError unless the type is a rook strip.
void require_rook_strip(const FillingType& type);

/// Throws OrderError naming the first failing count-matrix cell unless Z <=_dom X.
void require_dom_leq(const LRFilling& z, const LRFilling& x);

} // namespace lrorder
