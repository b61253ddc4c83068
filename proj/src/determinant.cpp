#include "twistknot/determinant.hpp"

#include <cmath>

#include "twistknot/error.hpp"
#include "twistknot/linalg_fq.hpp"
#include "twistknot/modular.hpp"

namespace tk {

namespace {

struct EntryData {
  Eigen::Index i, j;
  long shift;  // exponent offset inside the shifted row
  const LaurentCyc* value;
};

u64 root_of_order(u64 k, u64 r) {
  for (u64 g = 2;; ++g) {
    u64 b = pow_mod(g, (r - 1) / k, r);
    if (b != 1) return b;
  }
}

// Coefficients of the interpolating polynomial through (x_i, y_i), x_i = i.
std::vector<u64> interpolate(const std::vector<u64>& y, u64 r) {
  const std::size_t n = y.size();
  std::vector<u64> dd(y);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      u64 num = sub_mod(dd[i], dd[i - 1], r);
      dd[i] = mul_mod(num, inv_mod(k, r), r);
    }
  // Newton form -> monomial basis
  std::vector<u64> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // c = c * (x - k) + dd[k]
    std::vector<u64> nc(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      nc[i + 1] = add_mod(nc[i + 1], c[i], r);
      nc[i] = sub_mod(nc[i], mul_mod(c[i], k % r, r), r);
    }
    nc[0] = add_mod(nc[0], dd[k], r);
    c.swap(nc);
  }
  return c;
}

class Evaluator {
 public:
  Evaluator(const std::vector<EntryData>& entries, Eigen::Index n, int q) : entries_(entries), n_(n), q_(q) {}

  // Entry polynomials in t after zeta -> root, modulo r.
  void prepare(u64 r, u64 root) {
    r_ = r;
    polys_.clear();
    for (auto& e : entries_) {
      std::vector<u64> pol(e.shift + e.value->coeffs().size(), 0);
      for (std::size_t k = 0; k < e.value->coeffs().size(); ++k) pol[e.shift + k] = e.value->coeffs()[k].reduce(r, root);
      polys_.push_back(std::move(pol));
    }
  }

  u64 det_at(u64 t0) const {
    MatrixFq a = MatrixFq::Zero(n_, n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      const auto& pol = polys_[k];
      u64 v = 0;
      for (std::size_t i = pol.size(); i-- > 0;) v = add_mod(mul_mod(v, t0, r_), pol[i], r_);
      a(entries_[k].i, entries_[k].j) = v;
    }
    return det_mod(a, r_);
  }

 private:
  const std::vector<EntryData>& entries_;
  Eigen::Index n_;
  int q_;
  u64 r_ = 0;
  std::vector<std::vector<u64>> polys_;
};

}  // namespace

LaurentCyc exact_determinant(const LaurentMatrix& m, int q, DeterminantStats* stats) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return LaurentCyc(1L);
  const bool integral = q <= 2;
  const int nroots = integral ? 1 : q - 1;

  std::vector<long> lo(n), hi(n);
  std::vector<EntryData> entries;
  long D = 0, L = 0;
  long double log_h = 0;  // log2 of the Hadamard bound over |t| = 1
  for (Eigen::Index i = 0; i < n; ++i) {
    bool any = false;
    long double row2 = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const LaurentCyc& e = m(i, j);
      if (e.is_zero()) continue;
      if (e.modulus() != 0 && e.modulus() != q && !(integral && e.modulus() <= 2))
        throw DomainError("matrix entry over a different cyclotomic ring");
      lo[i] = any ? std::min(lo[i], e.low()) : e.low();
      hi[i] = any ? std::max(hi[i], e.high()) : e.high();
      any = true;
      long double l1 = 0;
      for (auto& c : e.coeffs()) l1 += c.abs_l1();
      row2 += l1 * l1;
    }
    if (!any) return LaurentCyc();
    D += hi[i] - lo[i];
    L += lo[i];
    log_h += 0.5L * std::log2(row2);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) entries.push_back({i, j, m(i, j).low() - lo[i], &m(i, j)});

  // basis coefficients are bounded by 2H; keep a margin for the sign
  const double need_bits = static_cast<double>(log_h) + 4.0;
  std::vector<u64> primes;
  double have_bits = 0;
  const u64 step = integral ? 2 : static_cast<u64>(q);
  for (u64 r = (1ull << 31) - 1; have_bits <= need_bits + 31; r -= 2) {
    if ((r - 1) % step != 0 || !is_prime(r) || r == static_cast<u64>(q)) continue;
    primes.push_back(r);
    have_bits += std::log2(static_cast<double>(r));
  }
  // the last prime is kept back for the verification step
  const u64 check_prime = primes.back();
  primes.pop_back();

  const std::size_t ncoef = static_cast<std::size_t>(D) + 1;
  const int basis = integral ? 1 : q - 1;
  std::vector<std::vector<mpz_class>> value(ncoef, std::vector<mpz_class>(basis, 0));
  mpz_class modulus = 1;
  Evaluator ev(entries, n, q);
  for (u64 r : primes) {
    const u64 b = integral ? r - 1 : root_of_order(static_cast<u64>(q), r);
    // per root: interpolated coefficients
    std::vector<std::vector<u64>> at_root(nroots);
    for (int k = 0; k < nroots; ++k) {
      ev.prepare(r, pow_mod(b, k + 1, r));
      std::vector<u64> ys(ncoef);
      for (std::size_t t0 = 0; t0 < ncoef; ++t0) ys[t0] = ev.det_at(t0);
      at_root[k] = interpolate(ys, r);
    }
    const u64 qinv = integral ? 1 : inv_mod(static_cast<u64>(q) % r, r);
    mpz_class minv;
    mpz_class rr = static_cast<unsigned long>(r);
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), rr.get_mpz_t());
    for (std::size_t c = 0; c < ncoef; ++c) {
      std::vector<u64> a(basis);
      if (integral) {
        a[0] = at_root[0][c];
      } else {
        // q a_l = Tr(alpha zeta^-l) - Tr(alpha zeta)
        u64 tr1 = 0;
        for (int k = 0; k < nroots; ++k) tr1 = add_mod(tr1, mul_mod(at_root[k][c], pow_mod(b, k + 1, r), r), r);
        for (int l = 0; l < basis; ++l) {
          u64 tr = 0;
          for (int k = 0; k < nroots; ++k) {
            u64 e = ((static_cast<u64>(q) - static_cast<u64>(l) % q) * static_cast<u64>(k + 1)) % q;
            tr = add_mod(tr, mul_mod(at_root[k][c], pow_mod(b, e, r), r), r);
          }
          a[l] = mul_mod(sub_mod(tr, tr1, r), qinv, r);
        }
      }
      for (int l = 0; l < basis; ++l) {
        // CRT: x = x0 + M ((a - x0) M^-1 mod r)
        mpz_class x0 = value[c][l];
        mpz_class x0r = x0 % rr;
        if (x0r < 0) x0r += rr;
        mpz_class diff = mpz_class(static_cast<unsigned long>(a[l])) - x0r;
        mpz_class t = (diff * minv) % rr;
        if (t < 0) t += rr;
        value[c][l] = x0 + modulus * t;
      }
    }
    modulus *= rr;
  }
  mpz_class half = modulus / 2;
  std::vector<CycInt> coeffs;
  for (std::size_t c = 0; c < ncoef; ++c) {
    std::vector<mpz_class> v = value[c];
    for (auto& x : v)
      if (x > half) x -= modulus;
    coeffs.push_back(integral ? CycInt(v[0]) : CycInt(q, v));
  }
  LaurentCyc det(L, coeffs);

  // verification at a fresh prime and a point outside the interpolation grid
  {
    const u64 r = check_prime;
    const u64 b = integral ? r - 1 : root_of_order(static_cast<u64>(q), r);
    ev.prepare(r, b);
    const u64 t0 = static_cast<u64>(D) + 7;
    u64 expect = ev.det_at(t0);
    u64 got = 0;
    const auto& dc = det.coeffs();
    // det = t^L * sum coeffs; compare the shifted polynomial
    for (long e = det.is_zero() ? -1 : det.high(); !det.is_zero() && e >= det.low(); --e) {
      got = add_mod(mul_mod(got, t0, r), dc[e - det.low()].reduce(r, b), r);
    }
    if (!det.is_zero()) got = mul_mod(got, pow_mod(t0, static_cast<u64>(det.low() - L), r), r);
    if (got != expect) throw DomainError("determinant verification failed");
  }
  if (stats) {
    stats->degree_bound = D;
    stats->coefficient_bits = static_cast<double>(log_h);
    stats->primes = static_cast<int>(primes.size());
  }
  return det;
}

}  // namespace tk
