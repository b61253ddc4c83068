#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistknot/presentation.hpp"

namespace tk {

// Element of Z[F_n]: finitely supported map from freely reduced words to integers.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const Word& w, long c = 1);

  const std::map<Word, long>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Word& w, long c);

  GroupRingElem& operator+=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

  // Augmentation-free integer image under x_i -> 1.
  long augmentation() const;
  std::string str() const;

 private:
  std::map<Word, long> t_;
};

// Fox derivative d w / d x_gen.
GroupRingElem fox_derivative(const Word& w, int gen);

// relators x generators matrix of Fox derivatives.
struct FoxMatrix {
  int rows = 0, cols = 0;
  std::vector<GroupRingElem> entries;  // row-major
  const GroupRingElem& operator()(int i, int j) const { return entries[i * cols + j]; }
};

FoxMatrix fox_matrix(const Presentation& p);

// Drops the last relator and the base meridian's column.
FoxMatrix reduced_fox_matrix(const Presentation& p);

}  // namespace tk
