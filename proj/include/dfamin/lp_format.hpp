#pragma once

#include <string>

#include "dfamin/ilp_model.hpp"

namespace dfamin {

/// Renders the model in the standard LP text format (Minimize / Subject To /
/// Bounds / Binary / General / End), one constraint per line, byte
/// deterministic for a given model. A model without an objective (a pure
/// feasibility query) gets an empty objective line.
std::string emit_lp(const IlpModel& model);

} // namespace dfamin
