#include <random>

#include "doctest.h"
#include "support.hpp"
#include "twistknot/determinant.hpp"
#include "twistknot/equivariant.hpp"
#include "twistknot/error.hpp"
#include "twistknot/fox.hpp"
#include "twistknot/induced.hpp"
#include "twistknot/presentation.hpp"
#include "twistknot/twisted.hpp"

using namespace tk;
using tktest::cyc;

namespace {

MetabelianRep rep_12a169() {
  ModuleRing R(3, PolyFq(5, {1, 1, 1}));
  const std::vector<std::vector<u64>> v = {{4, 2}, {2, 1}, {0, 0}, {3, 4}, {2, 3}, {4, 4},
                                          {1, 0}, {3, 1}, {0, 2}, {2, 0}, {1, 0}, {0, 0}};
  MetabelianRep rho{R, {}, 11};
  for (auto& c : v) rho.v.push_back(c);
  return rho;
}

bool galois_equivalent(const LaurentCyc& a, const LaurentCyc& b, int q) {
  for (int e = 1; e < q; ++e)
    if (proportional_up_to_unit(a.map_coeffs(e), b)) return true;
  return false;
}

LaurentMatrix random_matrix(std::mt19937_64& rng, int n, int q) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng() % 3 == 0 ? LaurentCyc() : tktest::random_laurent(rng, q, 2, 3);
  return m;
}

}  // namespace

TEST_SUITE("twisted-poly") {
  TEST_CASE("exact determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + static_cast<int>(rng() % 6);
      CAPTURE(trial);
      LaurentMatrix m = random_matrix(rng, n, 5);
      CHECK(exact_determinant(m, 5) == tktest::cofactor_det(m));
    }
    // integer entries
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 5);
      LaurentMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m(i, j) = LaurentCyc::from_integers({static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 5) - 2},
                                              static_cast<long>(rng() % 3) - 1);
      CHECK(exact_determinant(m, 0) == tktest::cofactor_det(m));
    }
  }

  TEST_CASE("determinant special cases") {
    CHECK(exact_determinant(LaurentMatrix::Identity(7, 7), 5) == LaurentCyc(1L));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      LaurentMatrix a = random_matrix(rng, 3, 7), b = random_matrix(rng, 2, 7);
      LaurentMatrix m = LaurentMatrix::Zero(5, 5);
      m.block(0, 0, 3, 3) = a;
      m.block(3, 3, 2, 2) = b;
      CHECK(exact_determinant(m, 7) == tktest::cofactor_det(a) * tktest::cofactor_det(b));
    }
    LaurentMatrix singular = LaurentMatrix::Zero(3, 3);
    singular(0, 0) = LaurentCyc(1L);
    CHECK(exact_determinant(singular, 3).is_zero());
  }

  TEST_CASE("substitution") {
    Presentation pres = tktest::knot("12a169");
    MetabelianRep rho = rep_12a169();
    Character chi{{1, 0}, 5};
    auto images = generator_images(pres, rho, chi);
    LaurentMatrix direct = substituted_reduced_fox(pres, images);
    LaurentMatrix via_fox = substitute(reduced_fox_matrix(pres), images);
    CHECK(direct == via_fox);
    CHECK(direct.rows() == 33);
    // the word x1 x2 maps to the product of the generator images
    FoxMatrix one_entry;
    one_entry.rows = one_entry.cols = 1;
    one_entry.entries.push_back(GroupRingElem(parse_word("x1 x2")));
    LaurentMatrix prod = substitute(one_entry, images);
    CHECK(prod == images[0].dense() * images[1].dense());
    FoxMatrix zero;
    zero.rows = zero.cols = 1;
    zero.entries.resize(1);
    CHECK(substitute(zero, images) == LaurentMatrix::Zero(3, 3));
    for (Eigen::Index i = 0; i < direct.rows(); ++i)
      for (Eigen::Index j = 0; j < direct.cols(); ++j) {
        if (direct(i, j).is_zero()) continue;
        // +-1 or +-t^k zeta^r
        const LaurentCyc& e = direct(i, j);
        CHECK(e.span() == 0);
        CHECK(e.coeffs()[0].norm() == 1);
      }
  }

  TEST_CASE("12a169 twisted polynomial") {
    Presentation pres = tktest::knot("12a169");
    MetabelianRep rho = rep_12a169();
    Character chi{{1, 0}, 5};
    LaurentCyc det = exact_determinant(substituted_reduced_fox(pres, generator_images(pres, rho, chi)), 5);
    LaurentCyc quad = tktest::poly({cyc(5, {4}), cyc(5, {5, 0, 1, 1}), cyc(5, {4})});
    LaurentCyc one_minus_t = LaurentCyc::from_integers({1, -1});
    CHECK(proportional_up_to_unit(det, quad * one_minus_t.pow(2)));
    LaurentCyc delta = twisted_alexander(pres, rho, chi, {false});
    CHECK(proportional_up_to_unit(delta, quad * one_minus_t));
    CHECK(reduced_twisted(delta, chi) == laurent_normalize(quad));
    CHECK(twisted_alexander(pres, rho, chi) == delta);  // Tietze-simplified route
    CHECK(reduce_mod(laurent_normalize(quad), 41, 10) == std::vector<u64>{4, 39, 4});
  }

  TEST_CASE("untwisted and cover polynomials") {
    CHECK(alexander_polynomial(tktest::knot("unknot")) == LaurentCyc(1L));
    CHECK(cover_alexander(tktest::knot("unknot"), 3) == LaurentCyc(1L));
    CHECK(alexander_polynomial(tktest::knot("3_1")) == LaurentCyc::from_integers({1, -1, 1}));
    CHECK(cover_alexander(tktest::knot("3_1"), 2) == LaurentCyc::from_integers({1, 1, 1}));
    CHECK(alexander_polynomial(tktest::knot("12a169")) == LaurentCyc::from_integers({2, -3, 2}).pow(2));
    Presentation pz = tktest::knot("P(3,7,9,11,15)");
    CHECK(alexander_polynomial(pz) == LaurentCyc::from_integers({1500, -5807, 8615, -5807, 1500}));
    LaurentCyc cover = cover_alexander(pz, 3);
    LaurentCyc want = LaurentCyc::from_mpz({mpz_class("3375000000"), mpz_class("-9893670443"), mpz_class("13204318970"),
                                            mpz_class("-9893670443"), mpz_class("3375000000")});
    CHECK(cover == want);
    CHECK(corpoly_product_check(alexander_polynomial(pz), cover, 3));
  }

  TEST_CASE("the zero character gives the cover polynomial") {
    for (auto name : {"3_1", "12n813", "12a169"}) {
      CAPTURE(name);
      Presentation pres = tktest::knot(name);
      for (u64 p : {2, 3}) {
        ModuleRing R(p, PolyFq(7, {p == 2 ? 1ull : 5ull, 1}));  // x+1, x+5 divide x^p - 1 mod 7
        MetabelianRep zero_rep{R, std::vector<ModElem>(pres.n, R.zero()), pres.base_index()};
        Character zero{{0}, 7};
        LaurentCyc delta = twisted_alexander(pres, zero_rep, zero);
        CHECK(delta == cover_alexander(pres, static_cast<int>(p)));
        CHECK(reduced_twisted(delta, zero) == delta);
      }
    }
  }

  TEST_CASE("cover product identity for every bundled knot") {
    for (auto& k : tktest::bundled()) {
      Presentation pres = knot_presentation(k);
      LaurentCyc a = alexander_polynomial(pres);
      for (int p : {2, 3, 5}) {
        CAPTURE(k.name);
        CAPTURE(p);
        LaurentCyc cover = cover_alexander(pres, p);
        CHECK(cover.is_integral());
        CHECK(corpoly_product_check(a, cover, p));
      }
    }
    CHECK_FALSE(corpoly_product_check(LaurentCyc::from_integers({1, -1, 1}), LaurentCyc::from_integers({1, -1, 1}), 2));
  }

  TEST_CASE("Galois conjugacy under character scaling") {
    Presentation pres = tktest::knot("12a169");
    MetabelianRep rho = rep_12a169();
    Character chi{{1, 0}, 5};
    LaurentCyc base = reduced_twisted(twisted_alexander(pres, rho, chi), chi);
    for (u64 a = 1; a < 5; ++a) {
      Character sc = scaled(chi, a);
      LaurentCyc d = reduced_twisted(twisted_alexander(pres, rho, sc), sc);
      CHECK(d == laurent_normalize(base.map_coeffs(static_cast<long>(a))));
    }
    Presentation k813 = tktest::knot("12n813");
    auto dec = decompose_branched_homology(k813, 3, 7);
    for (auto& piece : dec.pieces) {
      const MetabelianRep& r = piece.basis.at(0);
      Character c1{{1}, 7}, c3{{3}, 7};
      LaurentCyc d1 = reduced_twisted(twisted_alexander(k813, r, c1), c1);
      LaurentCyc d3 = reduced_twisted(twisted_alexander(k813, r, c3), c3);
      CHECK(d3 == laurent_normalize(d1.map_coeffs(3)));
      CHECK(galois_equivalent(d1, d3, 7));
    }
  }

  TEST_CASE("simplified presentations give the same polynomials") {
    for (auto name : {"12n813", "12n132", "12n681"}) {
      CAPTURE(name);
      Presentation pres = tktest::knot(name);
      for (auto [p, q] : {std::pair<u64, u64>{3, 7}, {3, 5}, {2, 5}}) {
        auto dec = decompose_branched_homology(pres, p, q);
        for (auto& piece : dec.pieces) {
          auto chars = enumerate_characters(piece.ring, true);
          const MetabelianRep& r = piece.basis.at(0);
          CHECK(twisted_alexander(pres, r, chars[0], {false}) == twisted_alexander(pres, r, chars[0], {true}));
        }
      }
    }
  }

  TEST_CASE("reduced polynomials are self-conjugate up to Galois action") {
    for (auto [name, p, q] : {std::tuple<const char*, u64, u64>{"12a169", 3, 5},
                              {"12n132", 3, 5},
                              {"12n813", 3, 7},
                              {"12n224", 3, 7},
                              {"12n681", 2, 5},
                              {"11n45", 3, 13}}) {
      CAPTURE(name);
      Presentation pres = tktest::knot(name);
      auto dec = decompose_branched_homology(pres, p, q);
      for (auto& piece : dec.pieces)
        for (auto& chi : enumerate_characters(piece.ring, true)) {
          LaurentCyc d = reduced_twisted(twisted_alexander(pres, piece.basis.at(0), chi), chi);
          CHECK(galois_equivalent(laurent_involution(d), d, static_cast<int>(q)));
        }
    }
  }

  TEST_CASE("a non-torsion module is reported") {
    // the trivial representation of a two-generator free group
    Presentation free2 = make_presentation(2, {Word{}, Word{}});
    CHECK_THROWS_AS(alexander_polynomial(free2), DomainError);
  }
}
