#include "fourfold/moves.hpp"

#include <map>
#include <stdexcept>

namespace fourfold {

namespace {

std::string coords_str(const H2Class& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string fresh_exceptional_label(const Lattice& l) {
  for (int i = 1;; ++i) {
    std::string cand = "E" + std::to_string(i);
    if (l.index_of(cand) < 0) return cand;
  }
}

bool lattice_even(const GramMatrix& g) {
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i][i] % 2 != 0) return false;
  return true;
}

}  // namespace

Manifold blowup(const Manifold& x) {
  validate_manifold(x);
  Manifold out = x;
  out.name = x.name + "~";
  out.b_minus = x.b_minus + 1;
  std::string label = fresh_exceptional_label(x.lattice);
  out.lattice = Lattice::direct_sum(x.lattice, Lattice::diagonal({-1}, {label}));
  out.spin = false;  // the new <-1> summand makes the form odd

  out.basic_classes.clear();
  for (const auto& e : x.basic_classes) {
    BasicClassEntry up = e;
    if (up.beta) up.beta = *up.beta / Rational(2);
    up.klass.push_back(1);
    out.basic_classes.push_back(up);
    up.klass.back() = -1;
    out.basic_classes.push_back(up);
  }
  if (out.canonical) out.canonical->push_back(1);

  validate_manifold(out);
  return out;
}

Manifold blowdown(const Manifold& xt, const H2Class& e) {
  validate_manifold(xt);
  size_t n = e.size();
  if (static_cast<int>(n) != xt.lattice.rank())
    throw std::invalid_argument("blowdown: class size does not match lattice rank");

  // e must be +- a basis vector spanning an orthogonal <-1> summand.
  int idx = -1;
  for (size_t i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (idx >= 0 || (e[i] != 1 && e[i] != -1))
      throw std::invalid_argument("blowdown: E is not +- a basis vector");
    idx = static_cast<int>(i);
  }
  if (idx < 0) throw std::invalid_argument("blowdown: E is zero");
  const GramMatrix& g = xt.lattice.gram();
  if (g[idx][idx] != -1)
    throw std::invalid_argument("blowdown: E^2 != -1");
  for (size_t j = 0; j < n; ++j)
    if (j != static_cast<size_t>(idx) && g[idx][j] != 0)
      throw std::invalid_argument("blowdown: E does not span an orthogonal summand");
  std::int64_t sign = e[static_cast<size_t>(idx)];

  auto drop = [&](const H2Class& v) {
    H2Class r;
    r.reserve(n - 1);
    for (size_t i = 0; i < n; ++i)
      if (i != static_cast<size_t>(idx)) r.push_back(v[i]);
    return r;
  };

  // Pair classes {K+E, K-E} by their projection away from E.
  struct Pair {
    const BasicClassEntry* plus = nullptr;
    const BasicClassEntry* minus = nullptr;
  };
  std::map<H2Class, Pair> pairs;
  for (const auto& entry : xt.basic_classes) {
    std::int64_t ecoord = sign * entry.klass[static_cast<size_t>(idx)];
    if (ecoord != 1 && ecoord != -1)
      throw std::invalid_argument("blowdown: class " + coords_str(entry.klass) +
                                  " is not of the form K +- E");
    Pair& p = pairs[drop(entry.klass)];
    (ecoord == 1 ? p.plus : p.minus) = &entry;
  }

  Manifold out = xt;
  if (out.name.size() > 1 && out.name.back() == '~')
    out.name.pop_back();
  else
    out.name += "_blowdown";
  out.b_minus = xt.b_minus - 1;

  GramMatrix gram(n - 1, std::vector<std::int64_t>(n - 1, 0));
  std::vector<std::string> labels;
  {
    size_t r = 0;
    for (size_t i = 0; i < n; ++i) {
      if (i == static_cast<size_t>(idx)) continue;
      labels.push_back(xt.lattice.labels()[i]);
      size_t c = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == static_cast<size_t>(idx)) continue;
        gram[r][c++] = g[i][j];
      }
      ++r;
    }
  }
  out.lattice = Lattice(std::move(gram), std::move(labels));
  out.spin = lattice_even(out.lattice.gram());

  out.basic_classes.clear();
  for (const auto& [k, p] : pairs) {
    if (!p.plus || !p.minus)
      throw std::invalid_argument("blowdown: unpaired class K" +
                                  std::string(p.plus ? "+E" : "-E") + " with K = " + coords_str(k));
    if (p.plus->beta.has_value() != p.minus->beta.has_value() ||
        (p.plus->beta && *p.plus->beta != *p.minus->beta) || p.plus->sw != p.minus->sw ||
        p.plus->order != p.minus->order)
      throw std::invalid_argument("blowdown: pair at K = " + coords_str(k) +
                                  " carries mismatched (beta, sw, order) data");
    BasicClassEntry down;
    down.klass = k;
    down.beta = p.plus->beta ? std::optional<Rational>(*p.plus->beta * Rational(2)) : std::nullopt;
    down.sw = p.plus->sw;
    down.order = p.plus->order;
    out.basic_classes.push_back(std::move(down));
  }

  if (xt.canonical) {
    if (sign * (*xt.canonical)[static_cast<size_t>(idx)] != 1)
      throw std::invalid_argument("blowdown: canonical class is not of the form K+E");
    out.canonical = drop(*xt.canonical);
  }

  validate_manifold(out);
  return out;
}

int n_plus(const BettiTriple& v, int g) { return v.b_plus - v.b1 + 2 * g - 1; }
int n_minus(const BettiTriple& v, int g) { return v.b_minus - v.b1 + 2 * g - 1; }

FiberSumNumerics fiber_sum_numerics(const BettiTriple& w, const BettiTriple& v, int g) {
  if (g < 2) throw std::invalid_argument("fiber_sum_numerics: fiber genus >= 2 required");
  if (w.b1 != 0)
    throw std::invalid_argument("fiber_sum_numerics: tracked case is b1(W) = 0 "
                                "(kill H1 before summing)");
  if (w.b_plus < 0 || w.b_minus < 0 || v.b1 < 0 || v.b_plus < 0 || v.b_minus < 0)
    throw std::invalid_argument("fiber_sum_numerics: negative Betti number");

  FiberSumNumerics out;
  out.b1 = 0;
  out.b_plus = w.b_plus + n_plus(v, g);
  out.b_minus = w.b_minus + n_minus(v, g);
  out.sigma = out.b_plus - out.b_minus;
  out.euler = 2 - 2 * out.b1 + out.b_plus + out.b_minus;

  // The formula is equivalent to signature and Euler additivity of the Gompf
  // sum (chi(W) + chi(V) - 2*chi(Sigma)); keep both routes honest.
  int sigma_w = w.b_plus - w.b_minus, sigma_v = v.b_plus - v.b_minus;
  int euler_w = 2 - 2 * w.b1 + w.b_plus + w.b_minus;
  int euler_v = 2 - 2 * v.b1 + v.b_plus + v.b_minus;
  if (out.sigma != sigma_w + sigma_v || out.euler != euler_w + euler_v - 2 * (2 - 2 * g))
    throw std::logic_error("fiber_sum_numerics: additivity cross-check failed");
  return out;
}

void validate_gluing_input(const GluingInput& in) {
  if (in.genus < 2) throw std::invalid_argument("gluing: fiber genus >= 2 required");
  if ((in.w_w_dot_sigma % 2 == 0) || (in.w_x_dot_sigma % 2 == 0) || (in.w_z_dot_sigma % 2 == 0))
    throw std::invalid_argument("gluing: all three w classes must be odd on the fiber");
  if ((in.w_w_sq - in.w_x_sq - in.w_z_sq) % 2 != 0)
    throw std::invalid_argument("gluing: w_W^2 - w_X^2 - w_Z^2 must be even");
  if (in.d_sq != in.d_x_sq + in.d_z_sq)
    throw std::invalid_argument("gluing: D^2 != D_X^2 + D_Z^2 as declared");
}

int epsilon_sign(const GluingInput& in) {
  std::int64_t half = (in.w_w_sq - in.w_x_sq - in.w_z_sq) / 2;
  std::int64_t e = static_cast<std::int64_t>(in.genus - 1) * half;
  return (((e % 2) + 2) % 2 == 0) ? 1 : -1;
}

namespace {

QuadExpSeries glue_along(const GluingInput& in, bool fiber_direction) {
  validate_gluing_input(in);
  std::int64_t top = 2 * (in.genus - 1);
  Rational factor = Rational(2).pow(7 * in.genus - 9);
  Rational eps(epsilon_sign(in));

  QuadExpSeries out;
  out.gauss = fiber_direction ? Rational(0) : Rational(in.d_sq, 2);
  for (const auto& xc : in.x_classes) {
    for (const auto& zc : in.z_classes) {
      bool pos = xc.fiber_pairing == top && zc.fiber_pairing == top;
      bool negext = xc.fiber_pairing == -top && zc.fiber_pairing == -top;
      if (!pos && !negext) continue;  // only extremal pairings survive the gluing
      std::int64_t dx = fiber_direction ? xc.fiber_pairing : xc.d_pairing;
      std::int64_t dz = fiber_direction ? 0 : zc.d_pairing;
      std::int64_t sd = fiber_direction ? 0 : in.sigma_dot_d;
      Rational c = eps * factor * xc.coeff * zc.coeff;
      std::int64_t expo;
      if (pos) {
        c = -c;
        expo = dx + dz + 2 * sd;
      } else {
        if (in.genus % 2 != 0) c = -c;  // (-1)^g
        expo = dx + dz - 2 * sd;
      }
      out.sum.add_term(GaussianRational(Rational(expo)), GaussianRational(c));
    }
  }
  return out;
}

}  // namespace

QuadExpSeries munoz_glue(const GluingInput& in) { return glue_along(in, /*fiber_direction=*/false); }

LeadingFactorization leading_factorization(const GluingInput& in) {
  std::int64_t top = 2 * (in.genus - 1);
  QuadExpSeries glued = glue_along(in, /*fiber_direction=*/true);

  LeadingFactorization f;
  f.epsilon = epsilon_sign(in);
  GaussianRational coeff = glued.sum.coeff(GaussianRational(Rational(top)));
  if (!coeff.is_real()) throw std::logic_error("leading_factorization: non-real coefficient");
  Rational denom = Rational(-f.epsilon) * Rational(2).pow(7 * in.genus - 9);
  f.lhs = coeff.re / denom;
  for (const auto& xc : in.x_classes)
    if (xc.fiber_pairing == top) f.rhs_x += xc.coeff;
  for (const auto& zc : in.z_classes)
    if (zc.fiber_pairing == top) f.rhs_z += zc.coeff;
  f.identity_holds = f.lhs == f.rhs_x * f.rhs_z;
  f.nonvanishing = !f.lhs.is_zero();
  return f;
}

TightSurfaceCert tight_surface_cert(const Manifold& v) {
  if (!v.fibration)
    throw std::invalid_argument("tight_surface_cert: '" + v.name + "' has no fibration record");
  if (v.fibration->fiber_genus < 1)
    throw std::invalid_argument("tight_surface_cert: fiber genus >= 1 required");
  if (!v.fibration->nontrivial)
    throw std::invalid_argument("tight_surface_cert: trivial fibration (product bundle) "
                                "produces no tight surface");
  TightSurfaceCert cert;
  cert.subject = v.name + " #_Sigma " + v.name;
  cert.rule = "self fiber sum of a nontrivial genus-" +
              std::to_string(v.fibration->fiber_genus) +
              " fibration contains a tight surface of genus 2 disjoint from a fiber";
  return cert;
}

Manifold with_tight_surface(Manifold m, const TightSurfaceCert& cert) {
  m.tight_surface_genus = cert.tight_surface_genus;
  return m;
}

}  // namespace fourfold
