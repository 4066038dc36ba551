#pragma once

#include "fourfold/manifold.hpp"

namespace fourfold {

// X -> X # CP^2-bar. The lattice gains an orthogonal <-1> summand labeled E<n>
// (fresh), every basic class K splits into K+E and K-E with beta halved and sw
// kept, the canonical class becomes K+E, and b- goes up by one. The new
// exceptional direction is always the LAST basis vector of the result.
Manifold blowup(const Manifold& x);

// Inverse of blowup along the exceptional class e, which must be +- a basis
// vector spanning an orthogonal <-1> summand. Every basic class must occur in
// a pair {K+E, K-E} with equal beta, sw and order; beta doubles on the way
// down. Violations throw std::invalid_argument naming the offending class.
Manifold blowdown(const Manifold& xt, const H2Class& e);

struct BettiTriple {
  int b1 = 0;
  int b_plus = 0;
  int b_minus = 0;
};

struct FiberSumNumerics {
  int b1 = 0;
  int b_plus = 0;
  int b_minus = 0;
  int sigma = 0;
  int euler = 0;
};

// Betti numbers of W #_Sigma V along a genus-g fiber: each summand glued onto
// W contributes n+- = b+-(V) - b1(V) + 2g - 1. Tracked case is b1(W) = 0 (the
// sums are arranged to kill H1). Cross-checked internally against signature
// and Euler characteristic additivity for the Gompf sum.
FiberSumNumerics fiber_sum_numerics(const BettiTriple& w, const BettiTriple& v, int g);

int n_plus(const BettiTriple& v, int g);
int n_minus(const BettiTriple& v, int g);

// One basic class of a summand entering the gluing formula, reduced to the
// pairings the formula consumes.
struct GluingClass {
  Rational coeff;                  // a_j resp. b_k
  std::int64_t fiber_pairing = 0;  // K_j . Sigma
  std::int64_t d_pairing = 0;      // K_j . D_X resp. L_k . D_Z
};

struct GluingInput {
  int genus = 2;
  std::vector<GluingClass> x_classes;  // side X: coefficients a_j
  std::vector<GluingClass> z_classes;  // side Z: coefficients b_k
  // Declared squares of the three bundle classes (mod 4 is all that matters)
  // and their pairings with the fiber (all three must be odd).
  std::int64_t w_w_sq = 0, w_x_sq = 0, w_z_sq = 0;
  std::int64_t w_w_dot_sigma = 1, w_x_dot_sigma = 1, w_z_dot_sigma = 1;
  // Evaluation direction D = D_X + D_Z with declared split of the square.
  std::int64_t sigma_dot_d = 0;
  std::int64_t d_sq = 0, d_x_sq = 0, d_z_sq = 0;
};

void validate_gluing_input(const GluingInput& in);

// (-1)^{(g-1)(w_W^2 - w_X^2 - w_Z^2)/2}: +1 whenever the compatibility
// congruence w_W^2 = w_X^2 + w_Z^2 (mod 4) has been arranged.
int epsilon_sign(const GluingInput& in);

// The fiber-sum gluing formula: only classes with K.Sigma = +-(2g-2) on BOTH
// sides contribute, with coefficients -+ 2^{7g-9} (sign (-1)^g on the negative
// side) times epsilon. Returns exp(D^2/2 t^2) * sum of the paired terms.
QuadExpSeries munoz_glue(const GluingInput& in);

struct LeadingFactorization {
  Rational lhs;    // top coefficient of the glued series, normalized
  Rational rhs_x;  // sum of a_j over K_j.Sigma = 2g-2
  Rational rhs_z;  // sum of b_k over L_k.Sigma = 2g-2
  int epsilon = 1;
  bool identity_holds = false;  // lhs == rhs_x * rhs_z
  bool nonvanishing = false;    // lhs != 0
};

// Reads the e^{2g-2} coefficient of the glued series evaluated along the
// fiber direction (K.D_X := K.Sigma, L.D_Z := 0, Sigma.D := 0, so the
// Gaussian e-factor stays outside the exponential sum), divides out
// -epsilon * 2^{7g-9}, and checks it against the product of the one-sided
// extremal coefficient sums.
LeadingFactorization leading_factorization(const GluingInput& in);

struct TightSurfaceCert {
  std::string subject;  // the self-fiber-sum the certificate speaks about
  int tight_surface_genus = 2;
  bool disjoint_from_fiber = true;
  std::string rule;
};

// A nontrivial genus >= 1 fibration V produces, in V #_Sigma V, an embedded
// tight surface of genus exactly 2 disjoint from a fiber. Trivial bundles and
// manifolds without a declared fibration are rejected.
TightSurfaceCert tight_surface_cert(const Manifold& v);

// Applies a certification to the (caller-assembled) self-fiber-sum record.
Manifold with_tight_surface(Manifold m, const TightSurfaceCert& cert);

}  // namespace fourfold
