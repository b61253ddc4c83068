#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tk {

// x_gen^exp with exp = +-1; generators are 0-based internally, printed 1-based.
struct Letter {
  int gen;
  int exp;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(int gen, int e);  // x_gen^e, |e| letters
int exponent_sum(const Word& w);
int occurrences(const Word& w, int gen);

// "x3^-1 x2 x3" or "x1^2"; generators named x<k>, k >= 1.
Word parse_word(const std::string& s);
// "x1 = x8^-1 x2 x8" -> relator lhs^-1 ... as rhs * lhs^-1
Word parse_relation(const std::string& s);
std::string format_word(const Word& w);

}  // namespace tk
