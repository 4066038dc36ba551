#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/check.hpp"
#include "fourfold/manifold.hpp"
#include "fourfold/moves.hpp"

namespace fourfold {

// A Lefschetz fibration reduced to the data the fiber-sum bookkeeping needs.
struct FibrationProfile {
  std::string name;
  int b1 = 0;
  int b_plus = 0;
  int b_minus = 0;
  int genus = 2;
  bool relatively_minimal = true;

  BettiTriple betti() const { return {b1, b_plus, b_minus}; }
  int n_plus() const { return b_plus - b1 + 2 * genus - 1; }
  int n_minus() const { return b_minus - b1 + 2 * genus - 1; }
};

// The two Stipsicz fibrations of fiber genus g >= 2. Betti triples
// (b1, b+, b-) are (g,1,5) and (g-2,1,13) for even g, (g-1,1,9) and
// (g-3,1,17) for odd g; the n+ values come out as (g, g+2) resp.
// (g+1, g+3), always with gcd exactly 2.
std::pair<FibrationProfile, FibrationProfile> stipsicz_profiles(int g);

struct ObstructionVerdict {
  bool feasible = false;
  std::string note;
};

// Genus-2 fibrations satisfy 3 sigma + e <= -6 (equivalently
// c1^2 <= 6 chi_h - 3). A profile asking for 3 sigma + e >= -4 -- which is
// what a summand ratio n-/n+ <= 2 amounts to in genus 2 -- can never exist.
ObstructionVerdict ozbagci_obstruction(std::int64_t sigma, std::int64_t euler);

struct ComboSearchResult {
  bool found = false;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  // Every even m >= m0 is representable; verified exhaustively below the
  // Frobenius-style cutoff and by the coprime remainder argument above it.
  std::int64_t m0 = 0;
};

// Smallest-k2 representation m = k1*n1 + k2*n2 with 0 <= k2 < n1 and
// k1 >= min_k1. Requires positive even n1, n2 with gcd(n1, n2) = 2, even m
// and min_k1 >= 0; violations throw std::invalid_argument.
ComboSearchResult linear_combo_search(std::int64_t n1, std::int64_t n2, std::int64_t m,
                                      std::int64_t min_k1);

struct HypersurfaceInvariants {
  std::int64_t degree = 0;
  std::int64_t euler = 0;
  std::int64_t sigma = 0;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
};

// Simply connected degree-d hypersurface: e = d^3 - 4d^2 + 6d,
// sigma = d(4 - d^2)/3 (always integral), b+- = (e +- sigma)/2 - 1.
// d = 4 reproduces the K3 surface (24, -16, 3, 19).
HypersurfaceInvariants hypersurface_invariants(std::int64_t d);

struct KnotSurgeryProfile {
  std::int64_t knot_genus = 0;
  std::int64_t n = 0;        // the E(2n) parameter
  std::int64_t c1_sq = 0;    // 8(g + n - 1)
  std::int64_t chi_h = 0;    // 3n + g - 1
  std::int64_t b_plus = 0;   // 2 chi_h - 1
  std::int64_t b_minus = 0;  // 10 chi_h - c1^2 - 1
  bool spin = true;

  // c1^2 + (2r-10) chi_h = (6r-22) n + (2r-2)(g-1). For fixed g this is
  // strictly decreasing in n whenever r < 11/3, and b-/b+ > r holds exactly
  // when the value drops below r - 1.
  Rational ratio_test(const Rational& r) const;
};

// Fiber sum of E(2n) surgered along a fibered knot of genus g; only (g, n)
// enter any of the formulas. chi_h is even exactly when n + g is odd
// (equivalently b+ = 3 mod 4), which is the parity the constructions insist
// on.
KnotSurgeryProfile knot_surgery_profile(std::int64_t g, std::int64_t n);

// Catalog-quality record of the elliptic surface E(n): b1 = 0, e = 12n,
// sigma = -8n. Even n get the even form (2n-1)H + n(-E8) together with the
// canonical class (n-2)f and the full Seiberg-Witten / series data; odd n get
// the diagonal form and stay skeletons. A tight surface of genus 2 (and with
// it simple type) is certified from n >= 2.
Manifold elliptic_profile(int n);

enum class PlanMode { ratio_lt_2_hypersurface, ratio_lt_7_2_knot_surgery };

struct TargetDescriptor {
  std::string kind;             // "hypersurface" | "knot_surgery"
  std::int64_t degree = 0;      // hypersurface mode
  std::int64_t knot_genus = 0;  // knot-surgery mode
  std::int64_t n = 0;           // knot-surgery mode
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
};

struct ConstructionCertificate {
  bool success = false;
  std::string failure;  // which bound failed, when no target exists
  FibrationProfile start;
  std::vector<std::pair<FibrationProfile, std::int64_t>> summands;
  FiberSumNumerics resulting;
  TargetDescriptor target;
  std::vector<CheckLine> checks;

  bool all_pass() const { return success && fourfold::all_pass(checks); }
};

// End-to-end planner for "same b+, strictly smaller b-": fiber-sum k1 >= 2
// copies of V1 and k2 < n+(V1) copies of V2 onto the start until b+ matches
// an even-degree hypersurface resp. a knot-surgery profile, then verify
// b-(W) < b-(W_*). Genus-2 starts are rejected up front in hypersurface mode
// (the 3 sigma + e obstruction); other infeasible starts terminate against a
// computed degree bound beyond which the ratio inequality provably fails.
// Every check in the certificate is recomputable from the stored fields.
ConstructionCertificate plan_fiber_sum(const FibrationProfile& start, PlanMode mode);

}  // namespace fourfold
