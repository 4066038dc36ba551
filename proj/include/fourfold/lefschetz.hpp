#pragma once

#include "fourfold/manifold.hpp"

namespace fourfold {

// Reducible singular fiber, split into its two components: F + G = Sigma,
// F^2 = G^2 = -1, F.G = 1. Component genera are not homological data; they
// ride along as parameters where needed (g(G) = g - g(F) is forced).
struct ReducibleFiber {
  H2Class f;
  H2Class g;
};

struct SectionRecord {
  H2Class e;
  std::int64_t self_int = -1;
};

// A Lefschetz fibration presented homologically: the total space record plus
// fiber class, fiber genus, the reducible fibers and sections that have been
// identified. Constructor enforces every structural identity (fiber square
// zero and primitive, component relations, section pairings, K.Sigma = 2g-2
// when the canonical class is declared).
class LefschetzFibration {
 public:
  LefschetzFibration(Manifold manifold, H2Class fiber, int genus,
                     std::vector<ReducibleFiber> reducible, std::vector<SectionRecord> sections,
                     bool relatively_minimal, bool h1_generated);

  const Manifold& manifold() const { return manifold_; }
  const H2Class& fiber() const { return fiber_; }
  int genus() const { return genus_; }
  const std::vector<ReducibleFiber>& reducible() const { return reducible_; }
  const std::vector<SectionRecord>& sections() const { return sections_; }
  bool relatively_minimal() const { return relatively_minimal_; }
  bool h1_generated() const { return h1_generated_; }

  std::int64_t pairing(const H2Class& a, const H2Class& b) const {
    return manifold_.lattice.pairing(a, b);
  }

 private:
  Manifold manifold_;
  H2Class fiber_;
  int genus_;
  std::vector<ReducibleFiber> reducible_;
  std::vector<SectionRecord> sections_;
  bool relatively_minimal_;
  bool h1_generated_;
};

enum class DecompFailure { none, outside_span, non_integral, negative_n };

struct DecompositionResult {
  bool valid = false;
  DecompFailure reason = DecompFailure::none;
  std::vector<Rational> raw;   // rational solution (n, c_1, ..., c_k) when in span
  std::int64_t n = 0;          // filled when valid
  std::vector<std::int64_t> c;
};

const char* decomp_failure_str(DecompFailure f);

// Solves PD(K_X - K) = n*Sigma + sum c_i F_i over the rationals and demands
// integrality and n >= 0 for validity. Requires a declared canonical class and
// K.Sigma = 2g-2.
DecompositionResult decompose_canonical_difference(const LefschetzFibration& f, const H2Class& k);

struct BoundResult {
  std::int64_t value = 0;  // K_X^2 - K^2
  bool equality = false;   // value == 0, iff n = 0 and every c_i = 0
  std::int64_t n = 0;      // normalized decomposition (all c_i >= 0)
  std::vector<std::int64_t> c;
  std::vector<int> genera;  // component genus used for each c_i after flips
};

// Rewrites negative coefficients via c_i F_i = c_i Sigma + (-c_i) G_i and
// evaluates K_X^2 - K^2 = 2n(2g-2) + sum [2 c_i (2 g(F_i) - 1) + c_i^2] >= 0.
// fiber_genera lists g(F_i) per reducible fiber (1 <= g(F_i) <= g-1); when the
// canonical class is present, K_X.F_i = 2 g(F_i) - 1 is enforced against it.
BoundResult normalize_and_bound(const LefschetzFibration& f, const DecompositionResult& dec,
                                const std::vector<int>& fiber_genera);

struct Verdict {
  bool holds = false;
  std::string witness;  // what failed, when !holds
};

// Checks the stored Seiberg-Witten data against the uniqueness package for
// relatively minimal fibrations with b+ > 1: the canonical class is an SW
// class, it is the only one with K.Sigma = 2g-2, no class exceeds that pairing,
// and every class satisfies K^2 = K_X^2 = 3 sigma + 2 chi.
Verdict sw_max_uniqueness(const LefschetzFibration& f);

// K.E = -1 for every section of square -1 (needs at least one such section;
// K.Sigma = 2g-2 required).
bool section_pairing_check(const LefschetzFibration& f, const H2Class& k);

enum class UniquenessKind { equals_canonical, ruled_out, inconclusive };

struct UniquenessVerdict {
  UniquenessKind kind = UniquenessKind::inconclusive;
  std::string reason;
};

// Verifier for the nonminimal uniqueness argument. Hypotheses (relatively
// minimal, g >= 2, b1 = 0, b+ > 1, every fiber component meets a (-1)-section)
// missing => inconclusive. Otherwise K either decomposes to the zero
// difference (=> equals_canonical) or trips one of the forced equalities
// (subspace membership, c_i = 0, n = 0 via section pairing) => ruled_out.
UniquenessVerdict nonminimal_uniqueness(const LefschetzFibration& f, const H2Class& k);

// Blows up the base points of a degree-k pencil on X: 2g-2 = k^2 w^2 + k K.w
// determines the fiber genus, n = (k w)^2 exceptional classes are introduced,
// the proper transform kw - sum E_i becomes the fiber, and every E_i becomes a
// (-1)-section. Requires w^2 > 0, a canonical class, and resulting g >= 2.
LefschetzFibration pencil_to_fibration(const Manifold& x, const H2Class& omega, int k,
                                       bool relatively_minimal = true);

}  // namespace fourfold
