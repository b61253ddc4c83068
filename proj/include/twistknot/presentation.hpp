#pragma once

#include <string>
#include <vector>

#include "twistknot/words.hpp"

namespace tk {

// Knot group presentation. Generators are meridians (each maps to t under
// abelianization); `labels[i]` is the index of generator i in the diagram's
// Wirtinger presentation, so simplified presentations keep their names.
struct Presentation {
  int n = 0;
  std::vector<Word> relators;
  int base = -1;  // gauge-fixed meridian; defaults to the last generator
  std::vector<int> labels;

  int base_index() const { return base < 0 ? n - 1 : base; }
  std::string str() const;
};

Presentation make_presentation(int n, std::vector<Word> relators);
// One relation per line or ';'-separated, e.g. "x1 = x8^-1 x2 x8".
Presentation parse_presentation(const std::string& text);

// Checks: relators use only x1..xn, every relator has exponent sum 0, and the
// abelianization is Z. Throws ParseError describing the first failure.
void validate_knot_presentation(const Presentation& p);

// Tietze elimination of generators (never the base meridian) using relators in
// which a generator occurs exactly once. The deficiency stays 0.
Presentation simplify(const Presentation& p);

}  // namespace tk
