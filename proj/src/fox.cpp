#include "twistknot/fox.hpp"

#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

GroupRingElem::GroupRingElem(const Word& w, long c) { add(w, c); }

void GroupRingElem::add(const Word& w, long c) {
  if (c == 0) return;
  Word r = free_reduce(w);
  auto it = t_.find(r);
  if (it == t_.end()) {
    t_.emplace(std::move(r), c);
  } else if ((it->second += c) == 0) {
    t_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (auto& [w, c] : o.t_) add(w, c);
  return *this;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem r = a;
  for (auto& [w, c] : b.t_) r.add(w, -c);
  return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem r;
  for (auto& [u, c] : a.t_)
    for (auto& [v, d] : b.t_) r.add(concat(u, v), c * d);
  return r;
}

long GroupRingElem::augmentation() const {
  long s = 0;
  for (auto& [w, c] : t_) s += c;
  return s;
}

std::string GroupRingElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : t_) {
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    long a = c < 0 ? -c : c;
    if (a != 1 || w.empty()) os << a;
    if (!w.empty()) os << (a != 1 ? " " : "") << format_word(w);
    first = false;
  }
  return os.str();
}

GroupRingElem fox_derivative(const Word& w, int gen) {
  GroupRingElem r;
  Word prefix;
  for (const auto& l : w) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        r.add(prefix, 1);
      } else {
        Word p = prefix;
        p.push_back(l);
        r.add(p, -1);
      }
    }
    prefix.push_back(l);
  }
  return r;
}

FoxMatrix fox_matrix(const Presentation& p) {
  FoxMatrix m;
  m.rows = static_cast<int>(p.relators.size());
  m.cols = p.n;
  for (const auto& r : p.relators)
    for (int j = 0; j < p.n; ++j) m.entries.push_back(fox_derivative(r, j));
  return m;
}

FoxMatrix reduced_fox_matrix(const Presentation& p) {
  if (p.relators.empty()) {
    if (p.n != 1) throw DomainError("presentation has no relators");
    return {};
  }
  FoxMatrix full = fox_matrix(p);
  FoxMatrix m;
  m.rows = full.rows - 1;
  m.cols = full.cols - 1;
  const int base = p.base_index();
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < full.cols; ++j)
      if (j != base) m.entries.push_back(full(i, j));
  return m;
}

}  // namespace tk
