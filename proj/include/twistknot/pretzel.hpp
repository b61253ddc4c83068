#pragma once

#include <vector>

#include "twistknot/presentation.hpp"

namespace tk {

// Wirtinger presentation of the pretzel knot P(a_1, ..., a_m): m vertical
// twist regions of |a_i| half-twists side by side, joined in a cycle at top
// and bottom. Needs a single component (e.g. m odd and every a_i odd).
// Orientation: the strand through the top crossing of the first region runs
// from its bottom-right port up to its top-left port.
Presentation pretzel_presentation(const std::vector<int>& twists);

}  // namespace tk
