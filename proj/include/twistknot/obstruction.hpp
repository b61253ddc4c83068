#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistknot/cache.hpp"
#include "twistknot/equivariant.hpp"
#include "twistknot/norm.hpp"
#include "twistknot/twisted.hpp"

namespace tk {

// Maximal proper invariant submodule: the kernel of sum_k lambda_k pi_k on one
// isotypic piece R_f^m (pi_k the coordinate projections), plus every other piece.
// lambda is a point of P^(m-1)(F_{q^n}), first nonzero coordinate 1.
struct InvariantSubmodule {
  int piece = 0;
  std::vector<ModElem> lambda;
  std::string str(const ModuleDecomposition& dec) const;
};

std::vector<InvariantSubmodule> enumerate_maximal_submodules(const ModuleDecomposition& dec);

// R_f-basis of the solution space of one isotypic piece (m representations).
std::vector<MetabelianRep> module_basis(const IsotypicPiece& piece);

struct RepCharacter {
  MetabelianRep rep;
  Character chi;
};

// Representation/character pairs whose characters kill the submodule, one per
// class up to F_q^* (scaling by F_q^* only applies a Galois automorphism).
std::vector<RepCharacter> characters_vanishing_on(const InvariantSubmodule& A, const ModuleDecomposition& dec);

enum class SliceVerdict { NotSlice, Inconclusive };
enum class MutantVerdict { Distinct, Inconclusive };

struct ObstructionOptions {
  NormOptions norm;
  TwistedOptions twisted;
  bool exhaustive = false;  // evaluate every character even after a certificate
  const ResultCache* cache = nullptr;
};

struct CharacterResult {
  int submodule = 0;
  MetabelianRep rep;
  Character chi;
  LaurentCyc delta;
  LaurentCyc reduced;
  NormVerdict norm;
};

struct ObstructionReport {
  std::string knot;
  u64 p = 0, q = 0;
  ModuleDecomposition decomposition;
  std::vector<InvariantSubmodule> submodules;
  std::vector<bool> certified;  // per submodule
  std::vector<CharacterResult> results;
  SliceVerdict verdict = SliceVerdict::Inconclusive;
  std::vector<std::string> notes;
};

// Slice obstruction for one (p, q). NOT_SLICE when every maximal proper
// invariant submodule of H_1(B_p; Z_q) is killed by a character whose reduced
// twisted polynomial is certified not to be a norm.
ObstructionReport slice_obstruction(const std::string& knot, const Presentation& pres, u64 p, u64 q,
                                    const ObstructionOptions& opt = {});

// Reduced twisted polynomial for one representation/character pair, through the cache when present.
LaurentCyc cached_reduced_twisted(const Presentation& pres, const MetabelianRep& rho, const Character& chi,
                                  const ObstructionOptions& opt, LaurentCyc* unreduced = nullptr);

// Per-knot data for the connected-sum analysis: H_1(B_p; Z_q) = R_a + R_b with
// one-dimensional pieces, reduced polynomials for a nonzero character on each
// piece and for the zero character.
struct KnotPieces {
  std::string knot;
  u64 p = 0, q = 0;
  bool shape_ok = false;
  std::string diagnostic;
  ModuleDecomposition decomposition;
  u64 root_a = 0, root_b = 0;  // R_{x-a}, R_{x-b}
  LaurentCyc da, db, d0;
};

KnotPieces twisted_pieces(const std::string& knot, const Presentation& pres, u64 p, u64 q,
                          const ObstructionOptions& opt = {});

struct LineCheck {
  u64 alpha = 0, beta = 0;  // line spanned by (alpha, beta) in R_a(K1) + R_a(K2)
  bool certified = false;
  std::string detail;
};

struct MutantComparison {
  std::string knot1, knot2;
  u64 p = 0, q = 0;
  MutantVerdict verdict = MutantVerdict::Inconclusive;
  std::vector<LineCheck> a_lines, b_lines;
  std::vector<std::string> notes;
};

// Concordance test for K1 and K2 via metabolizers of K1 # -K2. The image of a
// metabolizer is L_a + L_b with subspaces of R_a^2 and R_b^2; characters supported
// on one side give products D1 * D2 of the summands' polynomials (Galois twisted
// by the character's coordinates). DISTINCT when every admissible image is killed
// by a character with a certified non-norm product.
MutantComparison mutant_comparison(const KnotPieces& k1, const KnotPieces& k2, const NormOptions& opt = {});

std::string to_string(SliceVerdict v);
std::string to_string(MutantVerdict v);

}  // namespace tk
