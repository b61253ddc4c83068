#include "twistknot/norm.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

namespace {

using Poly = std::vector<CycInt>;  // ascending, exponent 0 first

Poly as_poly(const LaurentCyc& d) { return d.coeffs(); }

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::string degrees_str(const std::vector<int>& ds) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i];
  os << '}';
  return os.str();
}

std::vector<int> image_degrees(const std::vector<u64>& img, u64 r, std::uint64_t seed) {
  return factor_degrees(factor_over_fq(PolyFq(r, img), nullptr, seed));
}

std::set<int> reachable_sums(const std::vector<int>& ds) {
  int total = 0;
  for (int d : ds) total += d;
  std::vector<char> can(total + 1, 0);
  can[0] = 1;
  for (int d : ds)
    for (int s = total; s >= d; --s)
      if (can[s - d]) can[s] = 1;
  std::set<int> out;
  for (int s = 0; s <= total; ++s)
    if (can[s]) out.insert(s);
  return out;
}

// Sign of a real element under zeta -> exp(2 pi i / q).
int real_sign(const CycInt& a) {
  if (a.is_zero()) return 0;
  int q = a.modulus();
  if (q <= 2 || a.is_rational()) return sgn(a.rational_value());
  long double v = a.embed(1).real();
  long double l1 = a.abs_l1();
  if (std::fabs(v) > l1 * 1e-15L) return v > 0 ? 1 : -1;
  // |a| >= l1^-(q-2) for a nonzero algebraic integer of degree q-1.
  double digits_needed = (q - 2) * std::log10(std::max<long double>(l1, 2.0L)) + 30;
  using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<600>>;
  if (digits_needed > 550) throw DomainError("real sign: precision bound exceeded");
  Big pi = boost::math::constants::pi<Big>();
  Big acc = 0;
  for (int k = 0; k < q - 1; ++k) {
    const mpz_class& c = a.coeffs()[k];
    if (c == 0) continue;
    Big ck(c.get_str());
    acc += ck * cos(2 * pi * k / q);
  }
  if (acc == 0) throw DomainError("real sign: ambiguous");
  return acc > 0 ? 1 : -1;
}

mpz_class poly_content(const Poly& p) {
  mpz_class g = 0;
  for (auto& c : p) g = gcd(g, c.content());
  return g;
}

// Pseudo-remainder of a by b, scaled so that it is a positive multiple of the true remainder.
Poly signed_prem(Poly a, const Poly& b) {
  const CycInt& lb = b.back();
  int slb = real_sign(lb);
  int steps = 0;
  while (!a.empty() && deg(a) >= deg(b)) {
    CycInt la = a.back();
    int shift = deg(a) - deg(b);
    for (auto& c : a) c = lb * c;
    for (int j = 0; j <= deg(b); ++j) a[shift + j] -= la * b[j];
    trim(a);
    ++steps;
  }
  if (slb < 0 && steps % 2 == 1)
    for (auto& c : a) c = -c;
  mpz_class g = poly_content(a);
  if (g > 1)
    for (auto& c : a) c = c.divide_exact(g);
  return a;
}

int sign_changes(const std::vector<int>& s) {
  int n = 0, prev = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (prev != 0 && x != prev) ++n;
    prev = x;
  }
  return n;
}

}  // namespace

bool subset_sum_reaches(const std::vector<int>& degrees, int k) {
  if (k < 0) return false;
  return reachable_sums(degrees).count(k) > 0;
}

NormVerdict modular_norm_test(const LaurentCyc& d, const std::vector<SplitPrime>& primes, std::uint64_t seed) {
  NormVerdict out;
  if (d.is_zero()) throw DomainError("norm test of the zero polynomial");
  long n = d.span();
  if (n % 2 != 0) {
    out.status = NormStatus::NotNorm;
    out.witnesses.push_back({"odd-degree", "degree " + std::to_string(n) + " is odd", {}, {}, {}});
    return out;
  }
  for (const auto& sp : primes) {
    std::vector<u64> img = reduce_mod(d, sp.r, sp.b);
    if (img.back() == 0) {
      out.notes.push_back("r=" + std::to_string(sp.r) + ": leading coefficient vanishes, skipped");
      continue;
    }
    std::vector<int> ds = image_degrees(img, sp.r, seed);
    if (!subset_sum_reaches(ds, static_cast<int>(n / 2))) {
      out.status = NormStatus::NotNorm;
      std::ostringstream os;
      os << "image mod " << sp.r << " (zeta -> " << sp.b << ") is " << PolyFq(sp.r, img).str('t')
         << " with factor degrees " << degrees_str(ds) << "; no sub-multiset sums to " << n / 2;
      out.witnesses.push_back({"modular", os.str(), sp, ds, img});
      return out;
    }
  }
  return out;
}

LaurentCyc norm_construction(const LaurentCyc& f) { return laurent_normalize(f * laurent_involution(f)); }

RootPairing root_pairing_check(const LaurentCyc& d, double tol) {
  RootPairing out;
  int n = static_cast<int>(d.span());
  if (n <= 0) {
    out.converged = true;
    out.paired = n == 0;
    out.real_roots_distinct = true;
    return out;
  }
  std::vector<std::complex<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    auto z = d.coeffs()[i].embed(1);
    c[i] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) return out;
  out.converged = true;
  for (int i = 0; i < n; ++i) out.roots.push_back(es.eigenvalues()[i]);
  std::vector<char> used(n, 0);
  out.paired = true;
  for (int i = 0; i < n && out.paired; ++i) {
    if (used[i]) continue;
    std::complex<double> target = 1.0 / std::conj(out.roots[i]);
    int best = -1;
    double bestd = tol * std::max(1.0, std::abs(target));
    for (int j = 0; j < n; ++j) {
      if (j == i || used[j]) continue;
      double dist = std::abs(out.roots[j] - target);
      if (dist <= bestd) {
        bestd = dist;
        best = j;
      }
    }
    if (best < 0) {
      out.paired = false;
      break;
    }
    used[i] = used[best] = 1;
  }
  std::vector<double> reals;
  for (auto& z : out.roots)
    if (std::abs(z.imag()) < tol * std::max(1.0, std::abs(z))) reals.push_back(z.real());
  out.real_roots = static_cast<int>(reals.size());
  std::sort(reals.begin(), reals.end());
  out.real_roots_distinct = true;
  for (std::size_t i = 1; i < reals.size(); ++i)
    if (reals[i] - reals[i - 1] < tol * std::max(1.0, std::fabs(reals[i]))) out.real_roots_distinct = false;
  return out;
}

RealSubfield::RealSubfield(int q_) : q(q_) {
  if (q < 3 || !is_prime(static_cast<u64>(q))) throw DomainError("real subfield needs an odd prime q");
  int h = (q - 1) / 2;
  // T_k(theta) = zeta^k + zeta^-k as integer polynomials in theta.
  std::vector<std::vector<mpz_class>> T(h + 1);
  T[0] = {2};
  T[1] = {0, 1};
  for (int k = 1; k < h; ++k) {
    std::vector<mpz_class> nx(k + 2, 0);
    for (int i = 0; i <= k; ++i) nx[i + 1] += T[k][i];
    for (std::size_t i = 0; i < T[k - 1].size(); ++i) nx[i] -= T[k - 1][i];
    T[k + 1] = nx;
  }
  min_poly.assign(h + 1, 0);
  min_poly[0] = 1;
  for (int k = 1; k <= h; ++k)
    for (std::size_t i = 0; i < T[k].size(); ++i) min_poly[i] += T[k][i];
  cheb_ = std::move(T);
}

std::vector<mpz_class> RealSubfield::coordinates(const CycInt& a) const {
  int h = degree();
  CycInt x = a.modulus() == 0 ? a.bound(q) : a;
  if (x.modulus() != q) throw DomainError("real subfield: modulus mismatch");
  auto b = x.redundant();
  for (int k = 1; k < q; ++k)
    if (b[k] != b[q - k]) throw DomainError("real subfield: element is not real");
  std::vector<mpz_class> p(h + 1, 0);
  p[0] = b[0];
  for (int k = 1; k <= h; ++k)
    for (std::size_t i = 0; i < cheb_[k].size(); ++i) p[i] += b[k] * cheb_[k][i];
  // reduce modulo the monic minimal polynomial
  for (int i = h; i >= h && p[i] != 0; --i) {
    mpz_class c = p[i];
    for (int j = 0; j <= h; ++j) p[i - h + j] -= c * min_poly[j];
  }
  p.resize(h);
  return p;
}

std::vector<u64> RealSubfield::roots_mod(u64 r) const {
  std::vector<u64> out;
  std::vector<u64> m;
  for (auto& c : min_poly) {
    mpz_class v = c % static_cast<unsigned long>(r);
    if (v < 0) v += static_cast<unsigned long>(r);
    m.push_back(v.get_ui());
  }
  for (u64 x = 0; x < r; ++x) {
    u64 acc = 0;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) acc = add_mod(mul_mod(acc, x, r), m[i], r);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

u64 RealSubfield::reduce(const CycInt& a, u64 r, u64 theta) const {
  auto p = coordinates(a);
  u64 acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    mpz_class v = p[i] % static_cast<unsigned long>(r);
    if (v < 0) v += static_cast<unsigned long>(r);
    acc = add_mod(mul_mod(acc, theta, r), v.get_ui(), r);
  }
  return acc;
}

int sturm_real_roots(const LaurentCyc& d, bool* squarefree) {
  Poly p0 = as_poly(d);
  if (p0.empty()) throw DomainError("Sturm sequence of the zero polynomial");
  for (auto& c : p0)
    if (!c.is_real()) throw DomainError("Sturm sequence needs real coefficients");
  if (deg(p0) == 0) {
    if (squarefree) *squarefree = true;
    return 0;
  }
  Poly p1;
  for (int i = 1; i <= deg(p0); ++i) p1.push_back(CycInt(i) * p0[i]);
  std::vector<Poly> seq{p0, p1};
  while (true) {
    Poly r = signed_prem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  if (squarefree) *squarefree = deg(seq.back()) == 0;
  std::vector<int> at_pos, at_neg;
  for (auto& s : seq) {
    int sl = real_sign(s.back());
    at_pos.push_back(sl);
    at_neg.push_back(deg(s) % 2 == 0 ? sl : -sl);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

std::optional<LaurentCyc> real_form(const LaurentCyc& d) {
  if (d.is_zero()) return std::nullopt;
  int q = d.modulus();
  if (q == 0 || q == 2) return d;
  auto all_real = [](const LaurentCyc& f) {
    for (auto& c : f.coeffs())
      if (!c.is_real()) return false;
    return true;
  };
  for (long a = 0; a < q; ++a) {
    LaurentCyc f = d.scaled(CycInt::zeta(q, a));
    if (all_real(f)) return f;
  }
  LaurentCyc f = d.scaled(d.coeffs().front().conjugate());
  if (all_real(f)) return laurent_normalize(f);
  return std::nullopt;
}

namespace {

struct IrreducibilityProof {
  bool proven = false;
  std::string method;  // modular | real-subfield
  std::string detail;
  std::optional<SplitPrime> prime;
  std::vector<u64> image;
};

// Irreducibility over Q(zeta) from an image of full degree that is irreducible mod a split prime.
IrreducibilityProof irreducible_mod_split(const LaurentCyc& d, const std::vector<SplitPrime>& primes) {
  IrreducibilityProof pr;
  for (const auto& sp : primes) {
    auto img = reduce_mod(d, sp.r, sp.b);
    if (img.back() == 0) continue;
    PolyFq f(sp.r, img);
    if (is_irreducible(f)) {
      pr.proven = true;
      pr.method = "modular";
      pr.prime = sp;
      pr.image = img;
      pr.detail = "irreducible mod " + std::to_string(sp.r) + ": " + f.str('t');
      return pr;
    }
  }
  return pr;
}

// Degree sets of factorizations over Q(theta), intersected over degree-one primes of Z[theta].
struct RealSubfieldAnalysis {
  bool real = false;
  bool irreducible_plus = false;
  int real_roots = -1;
  bool squarefree = false;
  std::optional<SplitPrime> prime;  // r, q, and theta image in b
  std::vector<int> degrees;
  std::vector<u64> image;
  std::string detail;
};

RealSubfieldAnalysis analyse_real(const LaurentCyc& d, std::size_t prime_count, u64 max_r, std::uint64_t seed) {
  RealSubfieldAnalysis an;
  int q = d.modulus();
  if (q < 3) return an;
  auto rf = real_form(d);
  if (!rf) return an;
  an.real = true;
  RealSubfield K(q);
  int n = static_cast<int>(rf->span());
  int h = K.degree();
  std::set<int> possible;
  for (int k = 1; k < n; ++k) possible.insert(k);
  std::size_t used = 0;
  for (u64 r = 3; r < max_r && used < prime_count && !possible.empty(); r += 2) {
    if (!is_prime(r) || r == static_cast<u64>(q)) continue;
    auto roots = K.roots_mod(r);
    if (static_cast<int>(roots.size()) != h) continue;
    bool any = false;
    for (u64 th : roots) {
      std::vector<u64> img;
      for (auto& c : rf->coeffs()) img.push_back(K.reduce(c, r, th));
      if (img.back() == 0) continue;
      any = true;
      auto ds = image_degrees(img, r, seed);
      auto sums = reachable_sums(ds);
      std::set<int> keep;
      for (int k : possible)
        if (sums.count(k)) keep.insert(k);
      if (keep.size() < possible.size() || !an.prime) {
        an.prime = SplitPrime{r, static_cast<u64>(q), th};
        an.degrees = ds;
        an.image = img;
      }
      possible = std::move(keep);
      if (possible.empty()) break;
    }
    if (any) ++used;
  }
  an.irreducible_plus = possible.empty() && n >= 1;
  if (!an.irreducible_plus) return an;
  an.real_roots = sturm_real_roots(*rf, &an.squarefree);
  std::ostringstream os;
  os << "coefficients lie in Z[zeta+zeta^-1] after scaling; irreducible over the real subfield";
  if (an.prime) os << " (image mod " << an.prime->r << " with theta -> " << an.prime->b << " has factor degrees "
                   << degrees_str(an.degrees) << ")";
  os << "; " << an.real_roots << " distinct real root(s)" << (an.squarefree ? ", squarefree" : "");
  an.detail = os.str();
  return an;
}

IrreducibilityProof certify_irreducible(const LaurentCyc& d, const std::vector<SplitPrime>& primes,
                                        const NormOptions& opt) {
  if (d.span() == 1) {
    IrreducibilityProof pr;
    pr.proven = true;
    pr.method = "linear";
    pr.detail = "degree one";
    return pr;
  }
  auto pr = irreducible_mod_split(d, primes);
  if (pr.proven || !opt.real_subfield) return pr;
  auto an = analyse_real(d, opt.prime_count, opt.max_r, opt.seed);
  if (an.irreducible_plus && an.squarefree && an.real_roots > 0) {
    pr.proven = true;
    pr.method = "real-subfield";
    pr.detail = an.detail;
    pr.prime = an.prime;
    pr.image = an.image;
  }
  return pr;
}

}  // namespace

NormVerdict real_subfield_test(const LaurentCyc& d, std::size_t prime_count, u64 max_r, std::uint64_t seed) {
  NormVerdict out;
  if (d.modulus() < 3 || !real_form(d)) throw DomainError("real subfield test: coefficients are not real up to a constant");
  auto an = analyse_real(d, prime_count, max_r, seed);
  if (!an.irreducible_plus) {
    out.notes.push_back("real subfield: irreducibility over Q(zeta+zeta^-1) not established");
    return out;
  }
  if (an.real_roots > 0 && an.squarefree) {
    out.status = NormStatus::NotNorm;
    out.witnesses.push_back({"real-subfield", an.detail, an.prime, an.degrees, an.image});
  } else {
    out.notes.push_back("real subfield: " + an.detail);
  }
  return out;
}

NormVerdict norm_test(const std::vector<LaurentCyc>& factors, const NormOptions& opt) {
  NormVerdict out;
  if (factors.empty()) throw DomainError("norm test of an empty product");
  int q = 0;
  for (auto& f : factors) {
    if (f.is_zero()) throw DomainError("norm test of the zero polynomial");
    q = std::max(q, f.modulus());
  }
  // +-1 roots pair with themselves.
  int m1 = 0, mm1 = 0;
  std::vector<LaurentCyc> stripped;
  for (auto& f : factors) {
    LaurentCyc rest;
    m1 += root_multiplicity(f, 1, &rest);
    mm1 += root_multiplicity(rest, -1, &rest);
    if (rest.span() > 0) stripped.push_back(laurent_normalize(rest));
  }
  for (auto [root, m] : {std::pair{1, m1}, std::pair{-1, mm1}}) {
    if (m % 2 != 0) {
      out.status = NormStatus::NotNorm;
      out.witnesses.push_back({"root-multiplicity",
                               "t" + std::string(root == 1 ? "-" : "+") + "1 divides with odd multiplicity " +
                                   std::to_string(m),
                               {}, {}, {}});
      return out;
    }
  }
  if (stripped.empty()) {
    out.certified_norm = true;
    out.notes.push_back("only even powers of t-1 and t+1 remain; this is a norm");
    return out;
  }
  LaurentCyc prod = stripped[0];
  for (std::size_t i = 1; i < stripped.size(); ++i) prod *= stripped[i];
  std::vector<SplitPrime> primes;
  if (q >= 3) primes = find_split_primes(static_cast<u64>(q), opt.prime_count, 2, opt.max_r);
  {
    // integer polynomials: treat as q = 2 with primes of any residue
    NormVerdict mod;
    if (q < 3) {
      std::vector<SplitPrime> ps;
      for (u64 r = 3; r < opt.max_r && ps.size() < opt.prime_count; r += 2)
        if (is_prime(r)) ps.push_back({r, 2, r - 1});
      primes = ps;
    }
    mod = modular_norm_test(prod, primes, opt.seed);
    for (auto& n : mod.notes) out.notes.push_back(n);
    if (mod.not_norm()) {
      out.status = NormStatus::NotNorm;
      out.witnesses = mod.witnesses;
      return out;
    }
  }
  if (opt.real_subfield && q >= 3 && stripped.size() == 1 && real_form(stripped[0])) {
    auto rs = real_subfield_test(stripped[0], opt.prime_count, opt.max_r, opt.seed);
    for (auto& n : rs.notes) out.notes.push_back(n);
    if (rs.not_norm()) {
      out.status = NormStatus::NotNorm;
      out.witnesses = rs.witnesses;
      return out;
    }
  }
  // Unique factorization: with every factor irreducible, a norm pairs each
  // class P with bar(P), and classes with P ~ bar(P) occur an even number of times.
  std::vector<IrreducibilityProof> proofs;
  for (auto& f : stripped) {
    auto pr = certify_irreducible(f, primes, opt);
    if (!pr.proven) {
      out.notes.push_back("irreducibility of factor " + f.str() + " not established");
      return out;
    }
    proofs.push_back(pr);
  }
  std::vector<int> cls(stripped.size(), -1);
  std::vector<LaurentCyc> reps;
  std::vector<int> mult;
  for (std::size_t i = 0; i < stripped.size(); ++i) {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (proportional_up_to_unit(stripped[i], reps[k])) cls[i] = static_cast<int>(k);
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(stripped[i]);
      mult.push_back(0);
    }
    ++mult[cls[i]];
  }
  std::ostringstream why;
  bool fails = false;
  for (std::size_t k = 0; k < reps.size() && !fails; ++k) {
    LaurentCyc bar = laurent_involution(reps[k]);
    int partner = -1;
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (proportional_up_to_unit(bar, reps[j])) partner = static_cast<int>(j);
    if (partner == static_cast<int>(k)) {
      if (mult[k] % 2 != 0) {
        fails = true;
        why << "factor " << reps[k].str() << " is self-conjugate with odd multiplicity " << mult[k];
      }
    } else if (partner < 0 || mult[partner] != mult[k]) {
      fails = true;
      why << "factor " << reps[k].str() << " occurs " << mult[k] << " time(s) but its conjugate "
          << (partner < 0 ? 0 : mult[partner]) << " time(s)";
    }
  }
  std::ostringstream proofs_str;
  bool via_real = false;
  for (std::size_t i = 0; i < stripped.size(); ++i) {
    proofs_str << (i ? "; " : "") << stripped[i].str() << ": " << proofs[i].detail;
    via_real = via_real || proofs[i].method == "real-subfield";
  }
  if (fails) {
    out.status = NormStatus::NotNorm;
    NormWitness w{"irreducible-pairing", why.str() + " [" + proofs_str.str() + "]", {}, {}, {}};
    for (auto& p : proofs)
      if (p.prime) {
        w.prime = p.prime;
        w.image = p.image;
        break;
      }
    if (via_real) w.method = "real-subfield";
    out.witnesses.push_back(std::move(w));
  } else {
    out.certified_norm = true;
    out.notes.push_back("irreducible factors pair under the involution: this is a norm [" + proofs_str.str() + "]");
  }
  return out;
}

std::string to_string(NormStatus s) { return s == NormStatus::NotNorm ? "NOT_NORM" : "INCONCLUSIVE"; }

}  // namespace tk
