#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrorder/instances.hpp"

namespace lrorder {

enum class Check {
    box_equals_dom,    // rook strips: box order and dominance order coincide
    box_implies_dom,   // strips: every decreasing box move strictly lowers dominance
    dom_equals_bruhat, // rook strips: Z <=_dom X iff pi(X) <= pi(Z) in Bruhat order
    dom_equals_counts, // dominance via partition sequences agrees with the count matrix
    lex_order,         // Z <_dom X implies omega(Z) < omega(X) lexicographically
    unique_extremes,   // rook strips: one maximal and one minimal filling, as constructed
    graded,            // rook strips: box poset graded, ranks equal lengths of pi
    chain_length,      // rook strips: both chain algorithms take l(pi(Z)) - l(pi(X)) valid steps
};

std::string_view to_string(Check c);
std::vector<Check> all_checks();

struct CheckResult {
    Check check{};
    std::size_t instances = 0; // types examined
    std::size_t cases = 0;     // pairs, moves or posets examined
    std::size_t failures = 0;
    std::optional<std::string> counterexample; // first failure in canonical order

    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    SweepBounds bounds;
    std::vector<Check> checks = all_checks();
    int jobs = 1;
};

/// Exhaustive sweep over generated instances. Results follow options.checks
/// and do not depend on jobs.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

} // namespace lrorder
