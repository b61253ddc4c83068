#pragma once

#include <array>
#include <string>
#include <vector>

#include "twistknot/presentation.hpp"

namespace tk {

// Planar diagram code: one 4-tuple per crossing, edge labels listed
// counterclockwise starting from the incoming under-strand.
using PDCode = std::vector<std::array<int, 4>>;

PDCode parse_pd(const std::string& text);  // "[[a,b,c,d],...]" or "X[a,b,c,d] X[...]"

// Wirtinger presentation: one generator per over-arc, numbered by first
// appearance along the orientation; one conjugation relator per crossing
// x_out = x_over^s x_in x_over^-s with s the crossing sign.
// Rejects codes that are empty, malformed, or describe more than one component.
Presentation wirtinger_from_pd(const PDCode& pd);

// Crossing signs in PD order, derived from the traversal orientation.
std::vector<int> crossing_signs(const PDCode& pd);

}  // namespace tk
