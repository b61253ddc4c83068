#include "twistknot/words.hpp"

#include <cctype>
#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.exp = -l.exp;
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (const auto& l : w) {
    if (!r.empty() && r.back().gen == l.gen && r.back().exp == -l.exp)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i].gen == r[j - 1].gen && r[i].exp == -r[j - 1].exp) {
    ++i;
    --j;
  }
  return Word(r.begin() + i, r.begin() + j);
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word power(int gen, int e) {
  Word r;
  for (int i = 0; i < std::abs(e); ++i) r.push_back({gen, e > 0 ? 1 : -1});
  return r;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (auto& l : w) s += l.exp;
  return s;
}

int occurrences(const Word& w, int gen) {
  int n = 0;
  for (auto& l : w) n += l.gen == gen;
  return n;
}

Word parse_word(const std::string& s) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
  };
  skip();
  while (i < s.size()) {
    if (s[i] != 'x') throw ParseError("expected generator 'x<k>' in \"" + s + "\"");
    ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("generator without index in \"" + s + "\"");
    int g = std::stoi(s.substr(start, i - start));
    if (g < 1) throw ParseError("generator indices start at 1");
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t es = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      try {
        e = std::stoi(s.substr(es, i - es));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in \"" + s + "\"");
      }
    }
    Word p = power(g - 1, e);
    w.insert(w.end(), p.begin(), p.end());
    skip();
  }
  return w;
}

Word parse_relation(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) return parse_word(s);
  Word lhs = parse_word(s.substr(0, eq));
  Word rhs = parse_word(s.substr(eq + 1));
  return free_reduce(concat(rhs, inverse(lhs)));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int e = static_cast<int>(j - i) * w[i].exp;
    if (i) os << ' ';
    os << 'x' << w[i].gen + 1;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

}  // namespace tk
