#include <complex>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "twistknot/error.hpp"
#include "twistknot/fq.hpp"
#include "twistknot/split_prime.hpp"

using namespace tk;
using tktest::cyc;
using tktest::poly;

TEST_SUITE("algebra-core") {
  TEST_CASE("modular arithmetic against trial division") {
    for (u64 n = 0; n < 3000; ++n) {
      bool trial = n >= 2;
      for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) trial = false;
      CHECK(is_prime(n) == trial);
    }
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(2147483647ULL * 3));
    CHECK(mul_mod(inv_mod(17, 101), 17, 101) == 1);
    CHECK_THROWS_AS(inv_mod(5, 25), DomainError);
    CHECK(pow_mod(10, 5, 41) == 1);
    u64 b = smallest_root_of_order(5, 41);
    CHECK(pow_mod(b, 5, 41) == 1);
    CHECK(b != 1);
    CHECK(symmetric_lift(40, 41) == -1);
    for (auto r : descending_primes_1_mod(5, 1u << 31, 4)) {
      CHECK(is_prime(r));
      CHECK(r % 5 == 1);
    }
  }

  TEST_CASE("split primes") {
    auto ps = find_split_primes(5, 8);
    REQUIRE(ps.size() == 8);
    CHECK(ps[0].r == 11);
    for (auto& sp : ps) {
      CHECK(sp.r % 5 == 1);
      CHECK(pow_mod(sp.b, 5, sp.r) == 1);
      CHECK(sp.b != 1);
    }
  }

  TEST_CASE("factorization over F_q multiplies back and yields irreducibles") {
    std::mt19937_64 rng(11);
    for (u64 q : {2, 3, 5, 7, 31, 41}) {
      for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<u64> d(0, q - 1);
        std::vector<u64> c(2 + rng() % 9);
        for (auto& x : c) x = d(rng);
        if (c.back() == 0) c.back() = 1;
        PolyFq f(q, c);
        u64 lead = 0;
        auto fs = factor_over_fq(f, &lead);
        PolyFq prod(q, {lead});
        for (auto& fp : fs) {
          CHECK(is_irreducible(fp.factor));
          CHECK(fp.factor.lead() == 1);
          for (int k = 0; k < fp.multiplicity; ++k) prod = prod * fp.factor;
        }
        CHECK(prod == f);
      }
    }
  }

  TEST_CASE("irreducibility of small polynomials against root search") {
    // over F_5, a polynomial of degree 2 or 3 is irreducible iff it has no root
    u64 q = 5;
    for (u64 a = 0; a < q; ++a)
      for (u64 b = 0; b < q; ++b)
        for (u64 c = 0; c < q; ++c) {
          PolyFq f(q, {a, b, c, 1});
          bool root = false;
          for (u64 x = 0; x < q; ++x) root = root || f.eval(x) == 0;
          CHECK(is_irreducible(f) == !root);
        }
  }

  TEST_CASE("cyclotomic factors") {
    auto f35 = cyclotomic_factors(3, 5);
    REQUIRE(f35.size() == 2);
    CHECK(f35[0] == PolyFq(5, {4, 1}));
    CHECK(f35[1] == PolyFq(5, {1, 1, 1}));
    auto f37 = cyclotomic_factors(3, 7);
    CHECK(f37.size() == 3);
    CHECK(factor_label(f37[1]) == "x-4");  // x + 3 sorts first
    CHECK(factor_label(f37[2]) == "x-2");
    auto f511 = cyclotomic_factors(5, 11);
    CHECK(f511.size() == 5);
    CHECK(factor_label(cyclotomic_factors(2, 5)[1]) == "x-4");
  }

  TEST_CASE("cyclotomic integers form a ring and the norm is multiplicative") {
    std::mt19937_64 rng(5);
    for (int q : {3, 5, 7, 13}) {
      for (int trial = 0; trial < 30; ++trial) {
        CycInt a = tktest::random_cyc(rng, q, 4), b = tktest::random_cyc(rng, q, 4), c = tktest::random_cyc(rng, q, 4);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK(a.conjugate() == a.galois(q - 1));
        CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
        if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
        auto za = a.embed(1), zb = b.embed(1), zab = (a * b).embed(1);
        CHECK(std::abs(za * zb - zab) < 1e-9L * (1 + std::abs(zab)));
        auto sp = find_split_primes(q, 1)[0];
        CHECK((a * b).reduce(sp.r, sp.b) == mul_mod(a.reduce(sp.r, sp.b), b.reduce(sp.r, sp.b), sp.r));
      }
    }
  }

  TEST_CASE("zeta relations and unbound integers") {
    CycInt z = CycInt::zeta(5);
    CycInt sum = CycInt::zero(5);
    for (int k = 0; k < 5; ++k) sum += CycInt::zeta(5, k);
    CHECK(sum.is_zero());
    CHECK(z * z * z * z * z == CycInt::one(5));
    CHECK(CycInt(3L) * z == z + z + z);
    CHECK((z + CycInt(1L)).modulus() == 5);
    CHECK(CycInt::zeta(5, -1) == z.conjugate());
    CHECK(CycInt(7L).bound(5).norm() == 7 * 7 * 7 * 7);
    CHECK_THROWS_AS(CycInt(2L).bound(5).divide_exact(CycInt(3L).bound(5)), NonExactDivision);
    CHECK_THROWS_AS(CycInt::zeta(5) + CycInt::zeta(7), DomainError);
    // q = 2 is the integers
    CHECK(CycInt::zeta(2) == CycInt(-1L).bound(2));
    CHECK((z.conjugate() + z).is_real());
    CHECK_FALSE((z - z.conjugate()).is_real());
    CHECK((z * z + z * z * z).str() == "z^3+z^2");
  }

  TEST_CASE("Laurent polynomials") {
    CycInt z = CycInt::zeta(5);
    LaurentCyc t = LaurentCyc::t();
    LaurentCyc d = poly({CycInt(4L), z * z * z + z * z + CycInt(5L), CycInt(4L)});
    CHECK(laurent_normalize(d.shifted(-3).scaled(CycInt(-3L))) == laurent_normalize(d));
    CHECK(proportional_up_to_unit(d, -d.shifted(5)));
    CHECK(proportional_up_to_unit(d, d.scaled(z + CycInt(1L))));
    CHECK_FALSE(proportional_up_to_unit(LaurentCyc::from_integers({1, 24, 1}),
                                        LaurentCyc::from_integers({-8000, 12519, -8000})));
    CHECK(laurent_involution(laurent_involution(d)) == d);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      LaurentCyc a = tktest::random_laurent(rng, 5, 3, 3), b = tktest::random_laurent(rng, 5, 3, 3);
      CHECK(laurent_involution(a * b) == laurent_involution(a) * laurent_involution(b));
      CHECK(laurent_divide_exact(a * b, b) == a);
      CHECK((a * b).map_coeffs(3) == a.map_coeffs(3) * b.map_coeffs(3));
    }
    LaurentCyc lin = LaurentCyc::from_integers({-1, 1});
    LaurentCyc rest;
    CHECK(root_multiplicity(d * lin * lin, 1, &rest) == 2);
    CHECK(rest == d);
    CHECK(root_multiplicity(d * (t + LaurentCyc(1L)), -1) == 1);
    CHECK_THROWS_AS(laurent_divide_exact(d, lin), NonExactDivision);
    // 4t^2 + (z^3 + z^2 + 5) t + 4 at (41, zeta -> 10): 10^3 + 10^2 + 5 = 39 mod 41
    CHECK(reduce_mod(d, 41, 10) == std::vector<u64>{4, 39, 4});
  }
}
