#pragma once

#include <vector>

#include "lrorder/filling.hpp"

namespace lrorder {

/// All LR-fillings of the type, in lexicographic order of the row-major
/// entry string. Throws WeightMismatch / ShapeError for an inconsistent triple;
/// an empty result is not an error.
std::vector<LRFilling> enumerate_fillings(const TypePtr& type);
std::vector<LRFilling> enumerate_fillings(const Partition& alpha, const Partition& beta, const Partition& gamma);

} // namespace lrorder
