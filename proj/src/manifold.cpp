#include "fourfold/manifold.hpp"

#include <set>
#include <stdexcept>

namespace fourfold {

void validate_manifold(const Manifold& m) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("manifold '" + m.name + "': " + why);
  };
  if (m.b1 < 0 || m.b_plus < 0 || m.b_minus < 0) fail("negative Betti number");
  if (m.lattice.rank() != m.b_plus + m.b_minus) fail("lattice rank != b+ + b-");
  SignatureInfo sig = m.lattice.signature();
  if (sig.positive != m.b_plus || sig.negative != m.b_minus)
    fail("lattice signature does not match (b+, b-)");
  if (m.orientation_sign != 1 && m.orientation_sign != -1) fail("orientation_sign must be +-1");
  if (m.finite_type_order < 0) fail("negative finite_type_order");
  if (m.simple_type && m.finite_type_order != 0) fail("simple type demands finite_type_order 0");
  if (m.canonical && static_cast<int>(m.canonical->size()) != m.lattice.rank())
    fail("canonical class size does not match lattice rank");
  if (m.tight_surface_genus && *m.tight_surface_genus < 1) fail("tight surface genus < 1");
  if (m.fibration && m.fibration->fiber_genus < 0) fail("negative fiber genus");

  std::set<H2Class> seen;
  bool full_donaldson = !m.basic_classes.empty();
  for (const auto& e : m.basic_classes) {
    if (static_cast<int>(e.klass.size()) != m.lattice.rank())
      fail("basic class size does not match lattice rank");
    if (!seen.insert(e.klass).second) fail("duplicate basic class");
    if (e.beta && e.beta->is_zero()) fail("basic class with beta = 0 listed");
    if (e.order < 0) fail("negative class order");
    if (m.simple_type && e.order != 0) fail("simple type demands order-0 classes");
    if (e.order > m.finite_type_order) fail("class order exceeds finite_type_order");
    if (!e.beta) full_donaldson = false;
  }
  if (full_donaldson) {
    for (const auto& e : m.basic_classes)
      if (!seen.count(neg(e.klass))) fail("Donaldson class set not closed under negation");
  }
}

QuadExpSeries donaldson_series(const Manifold& x, const EvalRequest& req) {
  if (!x.simple_type)
    throw std::invalid_argument("donaldson_series: simple type required; use asymptotics for "
                                "non-simple-type fibrations");
  if (x.b1 != 0) throw std::invalid_argument("donaldson_series: b1 = 0 required");
  if (x.b_plus <= 1 || x.b_plus % 2 == 0)
    throw std::invalid_argument("donaldson_series: b+ > 1 odd required");
  std::int64_t w_sq = x.pairing(req.w, req.w);

  QuadExpSeries out;
  out.gauss = Rational(x.pairing(req.h, req.h), 2);
  for (const auto& e : x.basic_classes) {
    if (!e.beta) throw std::invalid_argument("donaldson_series: class without beta coefficient");
    std::int64_t sign_exp = w_sq + x.pairing(e.klass, req.w);
    if (sign_exp % 2 != 0)
      throw std::invalid_argument("donaldson_series: (w^2 + K.w)/2 is not an integer; "
                                  "w is not admissible for this class set");
    // (-1)^{(w^2+K.w)/2}; careful with C++ remainder sign on negatives.
    bool negative = ((sign_exp / 2) % 2 + 2) % 2 == 1;
    Rational coeff = negative ? -*e.beta : *e.beta;
    out.sum.add_term(GaussianRational(Rational(x.pairing(e.klass, req.h))),
                     GaussianRational(coeff));
  }
  return out;
}

CongruenceResult degree_congruence(std::int64_t w_sq, int b_plus, int b1, std::int64_t n) {
  std::int64_t b_term = b_plus - b1 + 1;
  if (b_term % 2 != 0)
    throw std::invalid_argument("degree_congruence: b+ - b1 + 1 must be even "
                                "(otherwise the residue is a half-integer)");
  std::int64_t d0 = -w_sq - 3 * (b_term / 2);
  d0 = ((d0 % 4) + 4) % 4;
  std::int64_t nr = ((n % 4) + 4) % 4;
  return {nr == d0, static_cast<int>(d0)};
}

bool adjunction_check(const Manifold& x, const BasicClassEntry& k, const H2Class& s, int genus,
                      bool odd_class) {
  if (genus < 1) throw std::invalid_argument("adjunction_check: genus >= 1 required");
  std::int64_t s_sq = x.pairing(s, s);
  if (s_sq <= 0 && !(s_sq == 0 && odd_class))
    throw std::invalid_argument("adjunction_check: needs S.S > 0, or S.S = 0 with an odd class");
  std::int64_t ks = x.pairing(k.klass, s);
  if (ks < 0) ks = -ks;
  return ks + s_sq + 2 * k.order <= 2 * genus - 2;
}

WittenResult witten_consistency(const Manifold& x) {
  if (x.basic_classes.empty())
    throw std::invalid_argument("witten_consistency: empty basic class list");
  WittenResult res;
  bool have_c = false;
  for (const auto& e : x.basic_classes) {
    if (!e.beta || !e.sw)
      throw std::invalid_argument("witten_consistency: every class needs both beta and sw");
    if (*e.sw == 0) {
      // beta is nonzero by the manifold invariant, so no constant can work.
      res.witness = "class with sw = 0 but beta != 0";
      return res;
    }
    Rational c = *e.beta / Rational(*e.sw);
    if (!have_c) {
      res.c = c;
      have_c = true;
    } else if (c != res.c) {
      res.witness = "classes demand conflicting constants " + res.c.str() + " and " + c.str();
      return res;
    }
  }
  res.ok = true;
  return res;
}

SimpleTypeInference simple_type_inference(const Manifold& x) {
  if (x.tight_surface_genus && *x.tight_surface_genus >= 2) {
    return {true, "tight surface of genus " + std::to_string(*x.tight_surface_genus) +
                      " (positive self-intersection 2g-2)"};
  }
  return {false, "no applicable hypothesis"};
}

}  // namespace fourfold
