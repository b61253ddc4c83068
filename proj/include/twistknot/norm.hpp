#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistknot/fq.hpp"
#include "twistknot/laurent.hpp"
#include "twistknot/split_prime.hpp"

namespace tk {

enum class NormStatus { NotNorm, Inconclusive };

struct NormWitness {
  std::string method;  // odd-degree | root-multiplicity | modular | irreducible-pairing | real-subfield
  std::string detail;
  std::optional<SplitPrime> prime;
  std::vector<int> degrees;  // irreducible factor degrees of the image
  std::vector<u64> image;    // image coefficients, ascending
};

struct NormVerdict {
  NormStatus status = NormStatus::Inconclusive;
  bool certified_norm = false;  // exact proof that the input IS a norm
  std::vector<NormWitness> witnesses;
  std::vector<std::string> notes;
  bool not_norm() const { return status == NormStatus::NotNorm; }
};

// Factor the image of d at each prime; a degree multiset without a sub-multiset
// summing to deg(d)/2 proves d is not a norm.
NormVerdict modular_norm_test(const LaurentCyc& d, const std::vector<SplitPrime>& primes,
                              std::uint64_t seed = 0x5eed);

// Does some sub-multiset of `degrees` sum to k?
bool subset_sum_reaches(const std::vector<int>& degrees, int k);

// f * bar(f), normalized.
LaurentCyc norm_construction(const LaurentCyc& f);

struct RootPairing {
  bool converged = false;
  bool paired = false;  // roots invariant under z -> 1/conj(z) within tolerance
  std::vector<std::complex<double>> roots;
  int real_roots = 0;
  bool real_roots_distinct = false;
};

// Numerical evidence only: roots of d under zeta -> exp(2 pi i / q).
RootPairing root_pairing_check(const LaurentCyc& d, double tolerance = 1e-6);

// Maximal real subfield Q(theta), theta = zeta + zeta^-1.
struct RealSubfield {
  int q = 0;
  std::vector<mpz_class> min_poly;  // ascending, monic, degree (q-1)/2

  explicit RealSubfield(int q);
  int degree() const { return static_cast<int>(min_poly.size()) - 1; }
  // Coordinates of a real element on 1, theta, ..., theta^(h-1); throws DomainError if not real.
  std::vector<mpz_class> coordinates(const CycInt& a) const;
  // Roots of the minimal polynomial modulo r (all of them when r = +-1 mod q).
  std::vector<u64> roots_mod(u64 r) const;
  u64 reduce(const CycInt& a, u64 r, u64 theta) const;

 private:
  std::vector<std::vector<mpz_class>> cheb_;  // zeta^k + zeta^-k in theta
};

// Number of distinct real roots of a polynomial with real coefficients under
// zeta -> exp(2 pi i/q), by an exact Sturm sequence; `squarefree` reports gcd(d, d') = 1.
int sturm_real_roots(const LaurentCyc& d, bool* squarefree = nullptr);

// For d with coefficients in the real subfield (up to a constant factor):
// irreducibility over Q(theta) by reduction at primes where the minimal
// polynomial splits, then a simple real root; together these rule out a
// factorization g * g^c over Q(zeta), hence d is not a norm.
// Throws DomainError when no constant multiple of d has real coefficients.
NormVerdict real_subfield_test(const LaurentCyc& d, std::size_t prime_count = 8, u64 max_r = 10000,
                               std::uint64_t seed = 0x5eed);

// Constant multiple of d with all coefficients real, if one exists.
std::optional<LaurentCyc> real_form(const LaurentCyc& d);

struct NormOptions {
  std::size_t prime_count = 8;
  u64 max_r = 10000;
  bool real_subfield = true;
  std::uint64_t seed = 0x5eed;  // equal-degree splitting
};

// Full test for a product of factors: +-1 root multiplicities, modular degree
// patterns, real-subfield certificates and, when every factor is certified
// irreducible over Q(zeta), the exact pairing criterion of unique factorization.
NormVerdict norm_test(const std::vector<LaurentCyc>& factors, const NormOptions& opt = {});

std::string to_string(NormStatus s);

}  // namespace tk
