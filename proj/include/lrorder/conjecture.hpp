#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "lrorder/filling.hpp"
#include "lrorder/instances.hpp"

namespace lrorder {

/// Side-by-side run of the Bruhat-cover chain (bubble-sort word) and the
/// column-word chain (max_l) from X down to Z. Reports, never asserts.
struct ConjectureReport {
    std::vector<LRFilling> bruhat;
    std::vector<LRFilling> word;
    bool agree = true;
    /// Chain index (0 is X itself) of the first position where the chains differ.
    std::optional<int> first_divergence;
};

/// Requires a rook strip and Z <=_dom X; Z = X agrees vacuously.
ConjectureReport conjecture_probe(const LRFilling& x, const LRFilling& z);

nlohmann::json conjecture_record(const LRFilling& x, const LRFilling& z, const ConjectureReport& report,
                                 bool with_chains);

struct ConjectureSummary {
    std::size_t instances = 0;
    std::size_t pairs = 0;
    std::size_t agree = 0;
    std::size_t diverge = 0;
    std::size_t first_step_disagree = 0;
};

nlohmann::json summary_to_json(const ConjectureSummary& s);

/// One JSON line per pair Z <_dom X of every rook-strip type in bounds, in
/// canonical instance order regardless of jobs, followed by a summary line.
ConjectureSummary run_conjecture_sweep(const SweepBounds& bounds, int jobs, bool with_chains, std::ostream& out);

} // namespace lrorder
