#include "twistknot/presentation.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

std::string Presentation::str() const {
  std::ostringstream os;
  os << "< ";
  for (int i = 0; i < n; ++i) os << (i ? ", " : "") << 'x' << (labels.empty() ? i : labels[i]) + 1;
  os << " |";
  for (std::size_t k = 0; k < relators.size(); ++k) {
    os << (k ? ", " : " ");
    Word w = relators[k];
    if (!labels.empty())
      for (auto& l : w) l.gen = labels[l.gen];
    os << format_word(w);
  }
  os << " >";
  return os.str();
}

Presentation make_presentation(int n, std::vector<Word> relators) {
  Presentation p;
  p.n = n;
  p.relators = std::move(relators);
  p.labels.resize(n);
  std::iota(p.labels.begin(), p.labels.end(), 0);
  return p;
}

Presentation parse_presentation(const std::string& text) {
  std::vector<Word> rels;
  int n = 0;
  std::string item;
  std::istringstream is(text);
  auto take = [&](const std::string& s) {
    if (s.find_first_not_of(" \t\r") == std::string::npos) return;
    Word w = parse_relation(s);
    for (auto& l : w) n = std::max(n, l.gen + 1);
    rels.push_back(w);
  };
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    while (std::getline(ls, item, ';')) take(item);
  }
  if (n == 0) throw ParseError("presentation mentions no generators");
  return make_presentation(n, std::move(rels));
}

namespace {

// Elementary divisors of an integer matrix (rows x cols) via Smith reduction.
std::vector<mpz_class> elementary_divisors(std::vector<std::vector<mpz_class>> a, int cols) {
  std::vector<mpz_class> d;
  int rows = static_cast<int>(a.size());
  int r0 = 0;
  for (int c0 = 0; c0 < cols && r0 < rows; ++c0) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the remaining block
      int pr = -1, pc = -1;
      for (int i = r0; i < rows; ++i)
        for (int j = c0; j < cols; ++j)
          if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return d;
      std::swap(a[r0], a[pr]);
      for (auto& row : a) std::swap(row[c0], row[pc]);
      bool clean = true;
      for (int i = r0 + 1; i < rows; ++i) {
        mpz_class f = a[i][c0] / a[r0][c0];
        for (int j = c0; j < cols; ++j) a[i][j] -= f * a[r0][j];
        if (a[i][c0] != 0) clean = false;
      }
      for (int j = c0 + 1; j < cols; ++j) {
        mpz_class f = a[r0][j] / a[r0][c0];
        for (int i = r0; i < rows; ++i) a[i][j] -= f * a[i][c0];
        if (a[r0][j] != 0) clean = false;
      }
      if (clean) break;
    }
    d.push_back(abs(a[r0][c0]));
    ++r0;
  }
  return d;
}

}  // namespace

void validate_knot_presentation(const Presentation& p) {
  if (p.n < 1) throw ParseError("presentation needs at least one generator");
  if (p.base_index() < 0 || p.base_index() >= p.n) throw ParseError("base meridian out of range");
  std::vector<std::vector<mpz_class>> ab;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    std::vector<mpz_class> row(p.n);
    for (auto& l : p.relators[k]) {
      if (l.gen < 0 || l.gen >= p.n) throw ParseError("relator uses an undeclared generator");
      row[l.gen] += l.exp;
    }
    if (exponent_sum(p.relators[k]) != 0)
      throw ParseError("relator " + std::to_string(k + 1) + " has nonzero exponent sum");
    ab.push_back(row);
  }
  auto d = elementary_divisors(ab, p.n);
  if (static_cast<int>(d.size()) != p.n - 1) throw ParseError("abelianization is not Z");
  for (auto& e : d)
    if (e != 1) throw ParseError("abelianization has torsion");
}

namespace {

Word substitute(const Word& w, int gen, const Word& repl) {
  Word out;
  Word inv = inverse(repl);
  for (auto& l : w) {
    if (l.gen == gen) {
      const Word& r = l.exp > 0 ? repl : inv;
      out.insert(out.end(), r.begin(), r.end());
    } else {
      out.push_back(l);
    }
  }
  return cyclic_reduce(out);
}

}  // namespace

Presentation simplify(const Presentation& p) {
  std::vector<Word> rels;
  for (auto& r : p.relators) rels.push_back(cyclic_reduce(r));
  std::vector<bool> alive(p.n, true);
  const int base = p.base_index();
  for (;;) {
    // choose the elimination that keeps the total relator length smallest
    long best_cost = std::numeric_limits<long>::max();
    int best_rel = -1, best_gen = -1;
    Word best_repl;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const Word& r = rels[k];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        int g = r[pos].gen;
        if (g == base || occurrences(r, g) != 1) continue;
        // r = U g^e V  =>  g^e = U^-1 V^-1
        Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
        Word repl = free_reduce(concat(inverse(u), inverse(v)));
        if (r[pos].exp < 0) repl = inverse(repl);
        long uses = 0;
        for (std::size_t j = 0; j < rels.size(); ++j)
          if (j != k) uses += occurrences(rels[j], g);
        long cost = uses * (static_cast<long>(repl.size()) - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_rel = static_cast<int>(k);
          best_gen = g;
          best_repl = repl;
        }
      }
    }
    if (best_rel < 0) break;
    rels.erase(rels.begin() + best_rel);
    for (auto& r : rels) r = substitute(r, best_gen, best_repl);
    alive[best_gen] = false;
  }
  std::vector<int> newidx(p.n, -1);
  Presentation out;
  for (int g = 0; g < p.n; ++g) {
    if (!alive[g]) continue;
    newidx[g] = out.n++;
    out.labels.push_back(p.labels.empty() ? g : p.labels[g]);
  }
  for (auto& r : rels) {
    Word w = r;
    for (auto& l : w) l.gen = newidx[l.gen];
    out.relators.push_back(w);
  }
  // keep a trivial relator (if any) last, it is the one the Fox matrix drops
  std::stable_partition(out.relators.begin(), out.relators.end(), [](const Word& w) { return !w.empty(); });
  out.base = newidx[base];
  return out;
}

}  // namespace tk
