#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourfold/expsum.hpp"
#include "fourfold/lattice.hpp"

namespace fourfold {

// One basic class. beta is the Donaldson-series coefficient, sw the
// Seiberg-Witten invariant; either may be absent when only half the story is
// known for a manifold. order > 0 marks non-simple-type (finite type) classes.
struct BasicClassEntry {
  H2Class klass;
  std::optional<Rational> beta;
  std::optional<std::int64_t> sw;
  int order = 0;
};

// Declared fibration structure on a manifold record, the input tight-surface
// certification needs: fiber genus and whether the fibration is nontrivial
// (has at least one critical point / is not a trivial bundle).
struct FibrationFlag {
  int fiber_genus = 0;
  bool nontrivial = false;
};

struct Manifold {
  std::string name;
  int b1 = 0;
  int b_plus = 0;
  int b_minus = 0;
  Lattice lattice;
  std::optional<H2Class> canonical;
  std::vector<BasicClassEntry> basic_classes;
  bool simple_type = false;
  int finite_type_order = 0;
  bool spin = false;
  std::optional<int> tight_surface_genus;
  int orientation_sign = 1;
  std::optional<FibrationFlag> fibration;

  std::int64_t pairing(const H2Class& a, const H2Class& b) const { return lattice.pairing(a, b); }
};

// Structural invariants: rank = b+ + b-, signature matches, orientation_sign
// is +-1, class/canonical coordinate sizes fit, no duplicate classes, orders
// consistent with the type flags, and (when every entry carries beta) the
// class set is closed under negation. Throws std::invalid_argument.
void validate_manifold(const Manifold& m);

struct EvalRequest {
  H2Class w;  // the bundle class entering the sign exponents
  H2Class h;  // the evaluation direction
};

// exp(Q(h)/2) * sum_r (-1)^{(w^2 + K_r.w)/2} beta_r e^{K_r.h}; terms with equal
// pairing K.h merge. Requires simple type, b1 = 0, b+ > 1 odd, and every sign
// exponent integral.
QuadExpSeries donaldson_series(const Manifold& x, const EvalRequest& req);

struct CongruenceResult {
  bool allowed;  // n is in the nonvanishing residue class
  int d0;        // the residue itself, in [0, 4)
};

// Degree congruence for the point-free pairing sequence: nonzero values can
// occur only for n = -w^2 - (3/2)(b+ - b1 + 1) (mod 4). Requires
// b+ - b1 + 1 even (otherwise the residue is not an integer and the input is
// rejected).
CongruenceResult degree_congruence(std::int64_t w_sq, int b_plus, int b1, std::int64_t n);

// |K.S| + S.S + 2*order <= 2*genus - 2 for a surface S of positive
// self-intersection (or zero self-intersection and odd pairing with some
// class, which the caller certifies via odd_class). genus >= 1 required.
bool adjunction_check(const Manifold& x, const BasicClassEntry& k, const H2Class& s, int genus,
                      bool odd_class);

struct WittenResult {
  bool ok = false;
  Rational c;           // beta_r = c * sw_r for every class, when ok
  std::string witness;  // offending class / reason, when not
};

// Solves for the single constant c with beta_r = c * SW(K_r) across all
// classes; never assumes the conjectural closed form for c.
WittenResult witten_consistency(const Manifold& x);

struct SimpleTypeInference {
  bool simple_type = false;
  std::string rule;  // which hypothesis fired
};

// The two sufficient conditions the engine knows: a tight surface of genus
// >= 2, or a declared genus-2 tight surface produced by the self-fiber-sum
// certification. Everything else is "no inference".
SimpleTypeInference simple_type_inference(const Manifold& x);

}  // namespace fourfold
