#include "fourfold/lefschetz.hpp"

#include <numeric>
#include <stdexcept>

#include "fourfold/moves.hpp"

namespace fourfold {

namespace {

bool primitive(const H2Class& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

std::string coords_str(const H2Class& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

LefschetzFibration::LefschetzFibration(Manifold manifold, H2Class fiber, int genus,
                                       std::vector<ReducibleFiber> reducible,
                                       std::vector<SectionRecord> sections,
                                       bool relatively_minimal, bool h1_generated)
    : manifold_(std::move(manifold)),
      fiber_(std::move(fiber)),
      genus_(genus),
      reducible_(std::move(reducible)),
      sections_(std::move(sections)),
      relatively_minimal_(relatively_minimal),
      h1_generated_(h1_generated) {
  validate_manifold(manifold_);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("fibration on '" + manifold_.name + "': " + why);
  };
  int rank = manifold_.lattice.rank();
  if (static_cast<int>(fiber_.size()) != rank) fail("fiber class size does not match lattice");
  if (genus_ < 1) fail("fiber genus >= 1 required");
  if (pairing(fiber_, fiber_) != 0) fail("fiber has nonzero self-intersection");
  if (!primitive(fiber_)) fail("fiber class is not primitive");
  for (const auto& rf : reducible_) {
    if (static_cast<int>(rf.f.size()) != rank || static_cast<int>(rf.g.size()) != rank)
      fail("reducible fiber component size does not match lattice");
    if (add(rf.f, rf.g) != fiber_) fail("reducible fiber components do not sum to the fiber");
    if (pairing(rf.f, rf.f) != -1 || pairing(rf.g, rf.g) != -1)
      fail("reducible fiber component with square != -1");
    if (pairing(rf.f, rf.g) != 1) fail("reducible fiber components must meet once");
    if (!primitive(rf.f) || !primitive(rf.g)) fail("reducible fiber component not primitive");
  }
  for (const auto& s : sections_) {
    if (static_cast<int>(s.e.size()) != rank) fail("section class size does not match lattice");
    if (pairing(s.e, fiber_) != 1) fail("section does not meet the fiber once");
    if (pairing(s.e, s.e) != s.self_int) fail("section self-intersection mismatch");
  }
  if (manifold_.canonical &&
      pairing(*manifold_.canonical, fiber_) != 2 * static_cast<std::int64_t>(genus_) - 2)
    fail("canonical class fails K.Sigma = 2g-2");
}

const char* decomp_failure_str(DecompFailure f) {
  switch (f) {
    case DecompFailure::none: return "none";
    case DecompFailure::outside_span: return "outside_span";
    case DecompFailure::non_integral: return "non_integral";
    default: return "negative_n";
  }
}

DecompositionResult decompose_canonical_difference(const LefschetzFibration& f, const H2Class& k) {
  const Manifold& m = f.manifold();
  if (!m.canonical)
    throw std::invalid_argument("decompose_canonical_difference: no canonical class declared");
  if (static_cast<int>(k.size()) != m.lattice.rank())
    throw std::invalid_argument("decompose_canonical_difference: class size mismatch");
  if (f.pairing(k, f.fiber()) != 2 * static_cast<std::int64_t>(f.genus()) - 2)
    throw std::invalid_argument("decompose_canonical_difference: K.Sigma != 2g-2");

  std::vector<H2Class> spanning{f.fiber()};
  for (const auto& rf : f.reducible()) spanning.push_back(rf.f);
  SpanSolution sol = solve_in_span(m.lattice, sub(*m.canonical, k), spanning);

  DecompositionResult out;
  if (!sol.in_span) {
    out.reason = DecompFailure::outside_span;
    return out;
  }
  out.raw = sol.coeffs;
  if (!sol.all_integral) {
    out.reason = DecompFailure::non_integral;
    return out;
  }
  if (sol.coeffs[0].sign() < 0) {
    out.reason = DecompFailure::negative_n;
    return out;
  }
  out.valid = true;
  out.n = sol.coeffs[0].num().get_si();
  for (size_t i = 1; i < sol.coeffs.size(); ++i) out.c.push_back(sol.coeffs[i].num().get_si());
  return out;
}

BoundResult normalize_and_bound(const LefschetzFibration& f, const DecompositionResult& dec,
                                const std::vector<int>& fiber_genera) {
  if (!f.relatively_minimal())
    throw std::invalid_argument("normalize_and_bound: relatively minimal fibration required");
  if (f.genus() < 2) throw std::invalid_argument("normalize_and_bound: fiber genus >= 2 required");
  if (!dec.valid) throw std::invalid_argument("normalize_and_bound: decomposition is not valid");
  if (fiber_genera.size() != f.reducible().size())
    throw std::invalid_argument("normalize_and_bound: one component genus per reducible fiber "
                                "required");
  int g = f.genus();
  for (size_t i = 0; i < fiber_genera.size(); ++i) {
    if (fiber_genera[i] < 1 || fiber_genera[i] > g - 1)
      throw std::invalid_argument("normalize_and_bound: component genus must lie in [1, g-1] "
                                  "(a sphere component would contradict relative minimality)");
    if (f.manifold().canonical &&
        f.pairing(*f.manifold().canonical, f.reducible()[i].f) != 2 * fiber_genera[i] - 1)
      throw std::invalid_argument("normalize_and_bound: K_X.F_i != 2 g(F_i) - 1 for fiber " +
                                  std::to_string(i + 1));
  }

  BoundResult out;
  out.n = dec.n;
  out.c = dec.c;
  out.genera = fiber_genera;
  // c_i F_i = c_i Sigma + (-c_i) G_i turns a negative coefficient positive at
  // the cost of lowering n and switching to the complementary component.
  for (size_t i = 0; i < out.c.size(); ++i) {
    if (out.c[i] < 0) {
      out.n += out.c[i];
      out.c[i] = -out.c[i];
      out.genera[i] = g - out.genera[i];
    }
  }
  if (out.n < 0)
    throw std::domain_error("normalize_and_bound: normalization drove n below zero; the input "
                            "decomposition does not come from a basic class");

  out.value = 2 * out.n * (2 * g - 2);
  for (size_t i = 0; i < out.c.size(); ++i)
    out.value += 2 * out.c[i] * (2 * out.genera[i] - 1) + out.c[i] * out.c[i];

  bool all_zero = out.n == 0;
  for (auto ci : out.c) all_zero = all_zero && ci == 0;
  out.equality = out.value == 0;
  if (out.equality != all_zero)
    throw std::logic_error("normalize_and_bound: equality characterization violated");
  return out;
}

Verdict sw_max_uniqueness(const LefschetzFibration& f) {
  const Manifold& m = f.manifold();
  if (!f.relatively_minimal())
    throw std::invalid_argument("sw_max_uniqueness: relatively minimal fibration required");
  if (f.genus() < 2) throw std::invalid_argument("sw_max_uniqueness: fiber genus >= 2 required");
  if (m.b_plus <= 1) throw std::invalid_argument("sw_max_uniqueness: b+ > 1 required");
  if (!m.canonical) throw std::invalid_argument("sw_max_uniqueness: no canonical class declared");

  std::int64_t top = 2 * static_cast<std::int64_t>(f.genus()) - 2;
  std::int64_t sigma = m.b_plus - m.b_minus;
  std::int64_t chi = 2 - 2 * m.b1 + m.b_plus + m.b_minus;
  std::int64_t kx_sq = f.pairing(*m.canonical, *m.canonical);

  Verdict v;
  if (kx_sq != 3 * sigma + 2 * chi) {
    v.witness = "K_X^2 = " + std::to_string(kx_sq) + " differs from 3 sigma + 2 chi = " +
                std::to_string(3 * sigma + 2 * chi);
    return v;
  }
  bool canonical_listed = false;
  for (const auto& e : m.basic_classes) {
    if (!e.sw || *e.sw == 0) continue;
    std::int64_t ks = f.pairing(e.klass, f.fiber());
    if (ks > top || ks < -top) {
      v.witness = "SW class " + coords_str(e.klass) + " violates the adjunction bound on K.Sigma";
      return v;
    }
    if (ks == top) {
      if (e.klass == *m.canonical)
        canonical_listed = true;
      else {
        v.witness = "SW class " + coords_str(e.klass) +
                    " attains K.Sigma = 2g-2 but is not the canonical class";
        return v;
      }
    }
    if (f.pairing(e.klass, e.klass) != kx_sq) {
      v.witness = "SW class " + coords_str(e.klass) + " has K^2 != K_X^2 (simple type violated)";
      return v;
    }
  }
  if (!canonical_listed) {
    v.witness = "canonical class is not listed among the SW basic classes";
    return v;
  }
  v.holds = true;
  return v;
}

bool section_pairing_check(const LefschetzFibration& f, const H2Class& k) {
  if (f.pairing(k, f.fiber()) != 2 * static_cast<std::int64_t>(f.genus()) - 2)
    throw std::invalid_argument("section_pairing_check: K.Sigma != 2g-2");
  bool saw_one = false;
  for (const auto& s : f.sections()) {
    if (s.self_int != -1) continue;
    saw_one = true;
    if (f.pairing(k, s.e) != -1) return false;
  }
  if (!saw_one) throw std::invalid_argument("section_pairing_check: no (-1)-sections recorded");
  return true;
}

UniquenessVerdict nonminimal_uniqueness(const LefschetzFibration& f, const H2Class& k) {
  const Manifold& m = f.manifold();
  if (f.pairing(k, f.fiber()) != 2 * static_cast<std::int64_t>(f.genus()) - 2)
    throw std::invalid_argument("nonminimal_uniqueness: K.Sigma != 2g-2");

  UniquenessVerdict v;
  auto inconclusive = [&](const std::string& why) {
    v.kind = UniquenessKind::inconclusive;
    v.reason = why;
    return v;
  };
  if (!f.relatively_minimal()) return inconclusive("fibration not relatively minimal");
  if (f.genus() < 2) return inconclusive("fiber genus < 2");
  if (m.b1 != 0) return inconclusive("b1 != 0");
  if (m.b_plus <= 1) return inconclusive("b+ <= 1");
  if (!m.canonical) return inconclusive("no canonical class declared");

  bool any_neg_section = false;
  for (const auto& s : f.sections()) any_neg_section = any_neg_section || s.self_int == -1;
  if (!any_neg_section) return inconclusive("no (-1)-sections recorded");
  // Every component of every fiber must meet a (-1)-section; the generic fiber
  // meets each section once by definition, so only reducible components can fail.
  for (size_t i = 0; i < f.reducible().size(); ++i) {
    for (const H2Class* comp : {&f.reducible()[i].f, &f.reducible()[i].g}) {
      bool met = false;
      for (const auto& s : f.sections())
        met = met || (s.self_int == -1 && f.pairing(*comp, s.e) >= 1);
      if (!met)
        return inconclusive("component of reducible fiber " + std::to_string(i + 1) +
                            " meets no (-1)-section");
    }
  }

  DecompositionResult dec = decompose_canonical_difference(f, k);
  if (!dec.valid) {
    v.kind = UniquenessKind::ruled_out;
    v.reason = std::string("PD(K_X - K) must be an integral combination n Sigma + sum c_i F_i "
                           "with n >= 0; here it is ") +
               decomp_failure_str(dec.reason);
    return v;
  }
  for (size_t i = 0; i < dec.c.size(); ++i) {
    if (dec.c[i] != 0) {
      v.kind = UniquenessKind::ruled_out;
      v.reason = "smoothing a component with a (-1)-section forces K.F_" + std::to_string(i + 1) +
                 " = K_X.F_" + std::to_string(i + 1) + ", i.e. c_" + std::to_string(i + 1) +
                 " = 0; got " + std::to_string(dec.c[i]);
      return v;
    }
  }
  if (dec.n != 0) {
    v.kind = UniquenessKind::ruled_out;
    v.reason = "pairing PD(K_X - K) = n Sigma with a (-1)-section forces n = 0 "
               "(K.E = K_X.E = -1); got n = " +
               std::to_string(dec.n);
    return v;
  }
  if (sub(*m.canonical, k) != H2Class(k.size(), 0))
    throw std::logic_error("nonminimal_uniqueness: zero decomposition but K != K_X");
  v.kind = UniquenessKind::equals_canonical;
  v.reason = "K = K_X";
  return v;
}

LefschetzFibration pencil_to_fibration(const Manifold& x, const H2Class& omega, int k,
                                       bool relatively_minimal) {
  validate_manifold(x);
  if (!x.canonical) throw std::invalid_argument("pencil_to_fibration: no canonical class");
  if (k < 1) throw std::invalid_argument("pencil_to_fibration: k >= 1 required");
  std::int64_t w_sq = x.pairing(omega, omega);
  if (w_sq <= 0) throw std::invalid_argument("pencil_to_fibration: omega^2 > 0 required");
  std::int64_t kw = x.pairing(*x.canonical, omega);
  std::int64_t two_g_minus_2 = static_cast<std::int64_t>(k) * k * w_sq + k * kw;
  if (two_g_minus_2 % 2 != 0)
    throw std::logic_error("pencil_to_fibration: k^2 w^2 + k K.w is odd");  // w char => never
  std::int64_t g = (two_g_minus_2 + 2) / 2;
  if (g < 2)
    throw std::invalid_argument("pencil_to_fibration: resulting fiber genus " + std::to_string(g) +
                                " < 2");

  std::int64_t n = static_cast<std::int64_t>(k) * k * w_sq;  // base points = (k omega)^2
  Manifold xt = x;
  for (std::int64_t i = 0; i < n; ++i) xt = blowup(xt);

  size_t base_rank = static_cast<size_t>(x.lattice.rank());
  H2Class fiber(static_cast<size_t>(xt.lattice.rank()), 0);
  for (size_t i = 0; i < base_rank; ++i) fiber[i] = k * omega[i];
  for (size_t i = base_rank; i < fiber.size(); ++i) fiber[i] = -1;

  std::vector<SectionRecord> sections;
  for (size_t i = base_rank; i < fiber.size(); ++i) {
    SectionRecord s;
    s.e = H2Class(fiber.size(), 0);
    s.e[i] = 1;
    s.self_int = -1;
    sections.push_back(std::move(s));
  }

  return LefschetzFibration(std::move(xt), std::move(fiber), static_cast<int>(g), {},
                            std::move(sections), relatively_minimal,
                            /*h1_generated=*/false);
}

}  // namespace fourfold
