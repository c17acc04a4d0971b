#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrorder/partition.hpp"

namespace lrorder {

/// An element of S_n in one-line notation; positions and values are 1-based.
class Permutation {
  public:
    Permutation() = default;
    /// Throws PermutationError unless one_line is a bijection on {1..n}.
    explicit Permutation(std::vector<int> one_line);
    Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

    static Permutation identity(int n);

    int size() const { return static_cast<int>(one_line_.size()); }
    /// x(k), the value in position k.
    int operator()(int position) const { return one_line_[position - 1]; }
    /// x^{-1}(v), the position holding value v.
    int position_of(int value) const;
    std::span<const int> one_line() const { return one_line_; }

    Permutation inverse() const;

    /// Left multiplication by the transposition (a b): exchanges the values a and b.
    Permutation& swap_values(int a, int b);
    /// Right multiplication by (i j): exchanges the entries in positions i and j.
    Permutation& swap_positions(int i, int j);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> one_line_;
};

/// (u * v)(k) = u(v(k)).
Permutation operator*(const Permutation& u, const Permutation& v);

/// Value pairs (a, b), a < b, with b left of a.
std::vector<std::pair<int, int>> inversions(const Permutation& x);
int length(const Permutation& x);

/// Tableau criterion: for every i the sorted first i letters of x are
/// componentwise <= those of z. Throws PermutationError on a size mismatch.
bool bruhat_leq(const Permutation& x, const Permutation& z);

/// Indices (i_1, ..., i_p) of s_{i_1} ... s_{i_p}; s_i exchanges the values i, i+1.
using ReducedWord = std::vector<int>;

/// s_{i_1} * ... * s_{i_p} in S_n.
Permutation word_product(std::span<const int> word, int n);
bool is_reduced(std::span<const int> word, int n);

/// Row i lists the positions x^{-1} of the i-th block of values (sizes alpha).
struct RecordingTableau {
    std::vector<std::vector<int>> rows;

    /// Rows increase left to right and columns increase downwards.
    bool is_standard() const;
};

RecordingTableau recording_tableau(const Permutation& x, const Partition& alpha);

/// x in S^alpha: within each alpha-block the values occur left to right in
/// increasing order. False when |alpha| != n.
bool is_in_parabolic_quotient(const Permutation& x, const Partition& alpha);

/// x corresponds to an LR-filling of content alpha: its recording tableau is standard.
bool is_lattice_permutation(const Permutation& x, const Partition& alpha);

/// Left bubble sort: raise the value in position n to n, then position n-1
/// to n-1, and so on, by adjacent left multiplications. The result is the
/// concatenation of the ascending runs (u, u+1, ..., k-1) for k = n, n-1, ..., 2.
ReducedWord bubble_reduced_word(const Permutation& z);

std::string to_string(const Permutation& x);
Permutation parse_permutation(std::string_view text);

/// "s4 s2 s3"; the empty word prints as "e".
std::string word_to_string(std::span<const int> word);
/// Accepts "s4 s2 s3", "4,2,3" or "4 2 3".
ReducedWord parse_reduced_word(std::string_view text);

} // namespace lrorder
