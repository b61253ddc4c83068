#include "twistknot/obstruction.hpp"

#include <algorithm>
#include <sstream>

#include "twistknot/error.hpp"
#include "twistknot/linalg_fq.hpp"

namespace tk {

namespace {

// Elements of R_f in a fixed order: index -> base-q digits.
ModElem element_at(const ModuleRing& R, u64 index) {
  ModElem v(R.n(), 0);
  for (int i = 0; i < R.n(); ++i) {
    v[i] = index % R.q();
    index /= R.q();
  }
  return v;
}

u64 ring_size(const ModuleRing& R) {
  u64 s = 1;
  for (int i = 0; i < R.n(); ++i) s *= R.q();
  return s;
}

std::vector<u64> flatten(const MetabelianRep& r) {
  std::vector<u64> out;
  for (auto& v : r.v) out.insert(out.end(), v.begin(), v.end());
  return out;
}

int rank_of(const std::vector<std::vector<u64>>& rows, u64 q) {
  if (rows.empty()) return 0;
  MatrixFq m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return static_cast<int>(rref_mod(m, q).size());
}

LaurentCyc as_plain_integers(const LaurentCyc& d) {
  std::vector<mpz_class> c;
  for (auto& x : d.coeffs()) {
    if (!x.is_rational()) throw DomainError("expected an integer polynomial");
    c.push_back(x.rational_value());
  }
  return LaurentCyc::from_mpz(c, d.low());
}

std::string rep_key(const MetabelianRep& r) {
  std::ostringstream os;
  for (auto& v : r.v) {
    for (auto c : v) os << c << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace

std::string InvariantSubmodule::str(const ModuleDecomposition& dec) const {
  const auto& pc = dec.pieces.at(piece);
  std::ostringstream os;
  if (pc.multiplicity == 1) {
    os << "0 in " << pc.ring.label();
  } else {
    os << "ker(";
    for (std::size_t k = 0; k < lambda.size(); ++k) os << (k ? ", " : "") << pc.ring.str(lambda[k]);
    os << ") in " << pc.ring.label() << "^" << pc.multiplicity;
  }
  for (std::size_t i = 0; i < dec.pieces.size(); ++i)
    if (static_cast<int>(i) != piece) {
      os << " + " << dec.pieces[i].ring.label();
      if (dec.pieces[i].multiplicity > 1) os << "^" << dec.pieces[i].multiplicity;
    }
  return os.str();
}

std::vector<MetabelianRep> module_basis(const IsotypicPiece& piece) {
  const ModuleRing& R = piece.ring;
  std::vector<MetabelianRep> out;
  std::vector<std::vector<u64>> span;
  for (const auto& b : piece.basis) {
    if (static_cast<int>(out.size()) == piece.multiplicity) break;
    auto trial = span;
    trial.push_back(flatten(b));
    if (rank_of(trial, R.q()) == static_cast<int>(span.size())) continue;
    out.push_back(b);
    for (int k = 0; k < R.n(); ++k) {
      MetabelianRep s = b;
      for (auto& v : s.v) v = R.mul(R.x_pow(k), v);
      span.push_back(flatten(s));
    }
  }
  if (static_cast<int>(out.size()) != piece.multiplicity) throw DomainError("could not extract a module basis");
  return out;
}

std::vector<InvariantSubmodule> enumerate_maximal_submodules(const ModuleDecomposition& dec) {
  std::vector<InvariantSubmodule> out;
  for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
    const auto& pc = dec.pieces[i];
    const ModuleRing& R = pc.ring;
    int m = pc.multiplicity;
    u64 Q = ring_size(R);
    for (int lead = 0; lead < m; ++lead) {
      u64 count = 1;
      for (int j = lead + 1; j < m; ++j) count *= Q;
      for (u64 idx = 0; idx < count; ++idx) {
        InvariantSubmodule A;
        A.piece = static_cast<int>(i);
        A.lambda.assign(m, R.zero());
        A.lambda[lead] = R.one();
        u64 rest = idx;
        for (int j = lead + 1; j < m; ++j) {
          A.lambda[j] = element_at(R, rest % Q);
          rest /= Q;
        }
        out.push_back(std::move(A));
      }
    }
  }
  return out;
}

std::vector<RepCharacter> characters_vanishing_on(const InvariantSubmodule& A, const ModuleDecomposition& dec) {
  const auto& pc = dec.pieces.at(A.piece);
  bool any = false;
  for (auto& l : A.lambda) any = any || !pc.ring.is_zero(l);
  if (!any) throw DomainError("submodule is not proper");
  MetabelianRep rho = combine(module_basis(pc), A.lambda);
  std::vector<RepCharacter> out;
  for (auto& chi : enumerate_characters(pc.ring, true)) out.push_back({rho, chi});
  return out;
}

LaurentCyc cached_reduced_twisted(const Presentation& pres, const MetabelianRep& rho, const Character& chi,
                                  const ObstructionOptions& opt, LaurentCyc* unreduced) {
  std::string key;
  if (opt.cache) {
    key = ResultCache::make_key({kCodeVersion, "twisted", pres.str(), std::to_string(rho.ring.p()),
                                 std::to_string(rho.ring.q()), rho.ring.label(), rep_key(rho), chi.str()});
    if (auto hit = opt.cache->get_polynomial(key)) {
      if (unreduced) *unreduced = *hit;
      return reduced_twisted(*hit, chi);
    }
  }
  LaurentCyc delta = twisted_alexander(pres, rho, chi, opt.twisted);
  if (opt.cache) opt.cache->put_polynomial(key, delta);
  if (unreduced) *unreduced = delta;
  return reduced_twisted(delta, chi);
}

ObstructionReport slice_obstruction(const std::string& knot, const Presentation& pres, u64 p, u64 q,
                                    const ObstructionOptions& opt) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw DomainError("p and q must be distinct primes");
  if (q == 2) throw DomainError("q = 2 is not allowed");
  ObstructionReport rep;
  rep.knot = knot;
  rep.p = p;
  rep.q = q;
  if (p == 2) rep.notes.push_back("p = 2: allowed, the 2-fold cover is used as for odd p");
  rep.decomposition = decompose_branched_homology(pres, p, q);
  if (rep.decomposition.pieces.empty()) {
    rep.notes.push_back("H_1(B_" + std::to_string(p) + "; Z_" + std::to_string(q) +
                        ") has no nontrivial pieces: no nontrivial representations");
    return rep;
  }
  rep.submodules = enumerate_maximal_submodules(rep.decomposition);
  rep.certified.assign(rep.submodules.size(), false);
  for (std::size_t i = 0; i < rep.submodules.size(); ++i) {
    for (auto& rc : characters_vanishing_on(rep.submodules[i], rep.decomposition)) {
      Word mp;
      int base = pres.base_index();
      for (u64 k = 0; k < p; ++k) mp.push_back({base, 1});
      if (!rc.rep.ring.is_zero(rc.rep.evaluate(mp, pres.labels).v))
        throw DomainError("representation does not kill the p-th power of the meridian");
      CharacterResult cr;
      cr.submodule = static_cast<int>(i);
      cr.rep = rc.rep;
      cr.chi = rc.chi;
      try {
        cr.reduced = cached_reduced_twisted(pres, rc.rep, rc.chi, opt, &cr.delta);
      } catch (const DomainError& e) {
        rep.notes.push_back(std::string("character ") + rc.chi.str() + ": " + e.what());
        continue;
      }
      cr.norm = norm_test({cr.reduced}, opt.norm);
      bool cert = cr.norm.not_norm();
      rep.results.push_back(std::move(cr));
      if (cert) {
        rep.certified[i] = true;
        if (!opt.exhaustive) break;
      }
    }
  }
  bool all = std::all_of(rep.certified.begin(), rep.certified.end(), [](bool b) { return b; });
  rep.verdict = all ? SliceVerdict::NotSlice : SliceVerdict::Inconclusive;
  if (!all) {
    std::ostringstream os;
    os << "split-prime budget: " << opt.norm.prime_count << " primes below " << opt.norm.max_r;
    rep.notes.push_back(os.str());
  }
  return rep;
}

KnotPieces twisted_pieces(const std::string& knot, const Presentation& pres, u64 p, u64 q,
                          const ObstructionOptions& opt) {
  KnotPieces k;
  k.knot = knot;
  k.p = p;
  k.q = q;
  k.decomposition = decompose_branched_homology(pres, p, q);
  const auto& ps = k.decomposition.pieces;
  bool ok = ps.size() == 2;
  for (auto& pc : ps) ok = ok && pc.multiplicity == 1 && pc.ring.n() == 1;
  if (!ok) {
    k.diagnostic = "H_1(B_p; Z_q) = " + k.decomposition.str() + " is not a sum of two one-dimensional pieces";
    return k;
  }
  k.shape_ok = true;
  auto root = [&](const IsotypicPiece& pc) { return (q - pc.ring.f()[0]) % q; };
  k.root_a = root(ps[0]);
  k.root_b = root(ps[1]);
  Character chi{{1}, q};
  k.da = cached_reduced_twisted(pres, ps[0].basis[0], chi, opt);
  k.db = cached_reduced_twisted(pres, ps[1].basis[0], chi, opt);
  k.d0 = as_plain_integers(cover_alexander(pres, static_cast<int>(p), opt.twisted));
  return k;
}

namespace {

std::vector<LineCheck> check_lines(const LaurentCyc& d1, const LaurentCyc& d10, const LaurentCyc& d2,
                                   const LaurentCyc& d20, u64 q, const NormOptions& opt) {
  std::vector<std::pair<u64, u64>> lines{{0, 1}};
  for (u64 b = 0; b < q; ++b) lines.push_back({1, b});
  std::vector<LineCheck> out;
  for (auto [a, b] : lines) {
    // character (-b, a) kills the line spanned by (a, b)
    LaurentCyc f1 = b ? d1.map_coeffs(static_cast<long>(q - b)) : d10;
    LaurentCyc f2 = a ? d2.map_coeffs(static_cast<long>(a)) : d20;
    NormVerdict v = norm_test({f1, f2}, opt);
    LineCheck lc{a, b, v.not_norm(), ""};
    lc.detail = v.witnesses.empty() ? (v.notes.empty() ? std::string("no certificate") : v.notes.back())
                                    : v.witnesses[0].method + ": " + v.witnesses[0].detail;
    out.push_back(std::move(lc));
  }
  return out;
}

}  // namespace

MutantComparison mutant_comparison(const KnotPieces& k1, const KnotPieces& k2, const NormOptions& opt) {
  MutantComparison mc;
  mc.knot1 = k1.knot;
  mc.knot2 = k2.knot;
  mc.p = k1.p;
  mc.q = k1.q;
  if (!k1.shape_ok || !k2.shape_ok) {
    mc.notes.push_back("shape mismatch: " + (k1.shape_ok ? k2.diagnostic : k1.diagnostic));
    return mc;
  }
  if (k1.p != k2.p || k1.q != k2.q || k1.root_a != k2.root_a || k1.root_b != k2.root_b) {
    mc.notes.push_back("shape mismatch: the knots were analysed with different (p, q) or pieces");
    return mc;
  }
  mc.a_lines = check_lines(k1.da, k1.d0, k2.da, k2.d0, k1.q, opt);
  mc.b_lines = check_lines(k1.db, k1.d0, k2.db, k2.d0, k1.q, opt);
  auto any = [](const std::vector<LineCheck>& ls) {
    return std::any_of(ls.begin(), ls.end(), [](const LineCheck& l) { return l.certified; });
  };
  auto all = [](const std::vector<LineCheck>& ls) {
    return std::all_of(ls.begin(), ls.end(), [](const LineCheck& l) { return l.certified; });
  };
  // Image of a metabolizer: L_a + L_b with dim L_a + dim L_b = 2.
  bool case_a0 = any(mc.a_lines);  // L_a = 0: some character on the R_a side
  bool case_b0 = any(mc.b_lines);  // L_b = 0
  bool case_lines = all(mc.a_lines) || all(mc.b_lines);
  if (!case_a0) mc.notes.push_back("image with zero R_a part is not obstructed");
  if (!case_b0) mc.notes.push_back("image with zero R_b part is not obstructed");
  if (!case_lines) mc.notes.push_back("some pair of lines (L_a, L_b) is not obstructed");
  mc.verdict = case_a0 && case_b0 && case_lines ? MutantVerdict::Distinct : MutantVerdict::Inconclusive;
  return mc;
}

std::string to_string(SliceVerdict v) { return v == SliceVerdict::NotSlice ? "NOT_SLICE" : "INCONCLUSIVE"; }
std::string to_string(MutantVerdict v) { return v == MutantVerdict::Distinct ? "DISTINCT" : "INCONCLUSIVE"; }

}  // namespace tk
