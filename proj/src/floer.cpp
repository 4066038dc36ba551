#include "fourfold/floer.hpp"

#include <algorithm>
#include <stdexcept>

namespace fourfold {

GMatrix GMatrix::identity(int n) {
  GMatrix m(n);
  for (int i = 0; i < n; ++i) m.a[i][i] = GaussianRational(1);
  return m;
}

bool GMatrix::is_zero() const {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

GaussianRational GMatrix::trace() const {
  GaussianRational t;
  for (int i = 0; i < dim(); ++i) t += a[i][i];
  return t;
}

namespace {

void check_dims(const GMatrix& x, const GMatrix& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("GMatrix: dimension mismatch");
}

}  // namespace

GMatrix operator+(const GMatrix& x, const GMatrix& y) {
  check_dims(x, y);
  GMatrix r = x;
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) r.a[i][j] += y.a[i][j];
  return r;
}

GMatrix operator-(const GMatrix& x, const GMatrix& y) {
  check_dims(x, y);
  GMatrix r = x;
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) r.a[i][j] -= y.a[i][j];
  return r;
}

GMatrix operator*(const GMatrix& x, const GMatrix& y) {
  check_dims(x, y);
  int n = x.dim();
  GMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x.a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) r.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return r;
}

GMatrix operator*(const GaussianRational& c, const GMatrix& x) {
  GMatrix r = x;
  for (auto& row : r.a)
    for (auto& v : row) v = c * v;
  return r;
}

std::vector<GaussianRational> GMatrix::apply(const std::vector<GaussianRational>& v) const {
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("GMatrix: vector size mismatch");
  std::vector<GaussianRational> r(v.size());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (a[i][j].is_zero()) continue;
      r[i] += a[i][j] * v[j];
    }
  return r;
}

Polynomial char_poly(const GMatrix& m) {
  int n = m.dim();
  std::vector<GaussianRational> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = GaussianRational(1);
  GMatrix mk(n);  // zero
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<size_t>(n - k + 1)] * GMatrix::identity(n);
    c[static_cast<size_t>(n - k)] = -((m * mk).trace() / GaussianRational(k));
  }
  return Polynomial(std::move(c));
}

GMatrix eval_poly(const Polynomial& p, const GMatrix& m) {
  int n = m.dim();
  GMatrix r(n);
  for (int i = p.degree(); i >= 0; --i)
    r = m * r + p.at(static_cast<unsigned>(i)) * GMatrix::identity(n);
  return r;
}

void validate_floer_model(const FloerModel& m) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("FloerModel '" + m.name + "': " + why);
  };
  if (m.genus < 2) fail("genus >= 2 required");
  if (m.dim < 1) fail("dim >= 1 required");
  if (m.action.dim() != m.dim) fail("action matrix is not dim x dim");
  for (const auto& row : m.action.a)
    if (static_cast<int>(row.size()) != m.dim) fail("action matrix is not square");
  if (static_cast<int>(m.left.size()) != m.dim || static_cast<int>(m.right.size()) != m.dim)
    fail("left/right vectors must have length dim");
  if (static_cast<int>(m.mults.size()) != m.genus - 1)
    fail("one annihilation exponent per |eigenvalue| 2k, k = 0..g-2, required");
  for (int mk : m.mults)
    if (mk < 0) fail("negative annihilation exponent");
  if (m.top_dim < 1) fail("top_dim >= 1 required");
}

SpectrumCert certify_spectrum(const FloerModel& m) {
  validate_floer_model(m);
  int n = m.dim;
  GMatrix a4 = m.action * m.action;
  a4 = a4 * a4;
  GMatrix prod = GMatrix::identity(n);
  for (int k = 0; k <= m.genus - 1; ++k) {
    long ev = 2L * k;
    prod = prod * (a4 - GaussianRational(Rational(ev).pow(4)) * GMatrix::identity(n));
  }
  GMatrix pw = GMatrix::identity(n);
  for (int i = 0; i < n; ++i) pw = pw * prod;
  SpectrumCert cert;
  if (pw.is_zero()) {
    cert.ok = true;
    return cert;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!pw.a[i][j].is_zero()) {
        cert.witness = "residual entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") = " + pw.a[i][j].str();
        return cert;
      }
  return cert;  // unreachable
}

Polynomial build_f0(int g) {
  if (g < 2) throw std::invalid_argument("build_f0: g >= 2 required");
  long lambda = 2L * g - 2;
  Polynomial f({GaussianRational(lambda), GaussianRational(1)});
  f = f * Polynomial({GaussianRational(lambda * lambda), GaussianRational(0), GaussianRational(1)});
  for (int k = 0; k <= g - 2; ++k) {
    long c4 = (2L * k) * (2L * k) * (2L * k) * (2L * k);
    f = f * Polynomial({GaussianRational(-c4), GaussianRational(0), GaussianRational(0),
                        GaussianRational(0), GaussianRational(1)});
  }
  return f;
}

namespace {

Polynomial annihilator_from(int g, const std::vector<int>& mults) {
  if (g < 2) throw std::invalid_argument("annihilator: g >= 2 required");
  if (static_cast<int>(mults.size()) != g - 1)
    throw std::invalid_argument("annihilator: one multiplicity per |eigenvalue| 2k, k = 0..g-2");
  Polynomial u = Polynomial::one();
  for (int k = 0; k <= g - 2; ++k) {
    if (mults[static_cast<size_t>(k)] < 0)
      throw std::invalid_argument("annihilator: negative multiplicity");
    long c4 = (2L * k) * (2L * k) * (2L * k) * (2L * k);
    Polynomial factor({GaussianRational(-c4), GaussianRational(0), GaussianRational(0),
                       GaussianRational(0), GaussianRational(1)});
    u = u * factor.pow(static_cast<unsigned>(mults[static_cast<size_t>(k)]));
  }
  GaussianRational val = u.eval(GaussianRational(2L * g - 2));
  return (GaussianRational(1) / val) * u;
}

GaussianRational dot(const std::vector<GaussianRational>& x,
                     const std::vector<GaussianRational>& y) {
  GaussianRational s;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// p(A) must keep only the four top rotations i^r (2g-2); anything else means
// the declared multiplicities undercut the model's Jordan structure.
GMatrix top_projection(const FloerModel& m, const Polynomial& p) {
  GMatrix b = eval_poly(p, m.action);
  GMatrix a4 = m.action * m.action;
  a4 = a4 * a4;
  GaussianRational l4(Rational(2L * m.genus - 2).pow(4));
  if (!(b * (a4 - l4 * GMatrix::identity(m.dim))).is_zero())
    throw std::invalid_argument(
        "insufficient annihilation exponents: p(action) leaves residual low-eigenvalue content");
  return b;
}

}  // namespace

Polynomial annihilator_p(const FloerModel& m) {
  validate_floer_model(m);
  return annihilator_from(m.genus, m.mults);
}

Polynomial f1_cofactor(const FloerModel& m) {
  validate_floer_model(m);
  GaussianRational lambda(2L * m.genus - 2);
  Polynomial cp = char_poly(m.action);
  Polynomial divisor = Polynomial::from_roots(
      std::vector<GaussianRational>(static_cast<size_t>(m.top_dim), lambda));
  auto [q, r] = cp.divmod(divisor);
  if (!r.is_zero())
    throw std::invalid_argument(
        "f1_cofactor: characteristic polynomial is not divisible by (t - (2g-2))^" +
        std::to_string(m.top_dim));
  if (q.eval(lambda).is_zero())
    throw std::invalid_argument(
        "f1_cofactor: declared top-eigenspace dimension is below the actual multiplicity");
  return q;
}

GaussianRational simulate_pairing(const FloerModel& m, int n) {
  validate_floer_model(m);
  if (n < 0) throw std::invalid_argument("simulate_pairing: n >= 0 required");
  std::vector<GaussianRational> v = m.right;
  for (int i = 0; i < n; ++i) v = m.action.apply(v);
  return dot(m.left, v);
}

std::vector<GaussianRational> pairing_sequence(const FloerModel& m, int n_max) {
  validate_floer_model(m);
  if (n_max < 0) throw std::invalid_argument("pairing_sequence: n_max >= 0 required");
  std::vector<GaussianRational> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  std::vector<GaussianRational> v = m.right;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(dot(m.left, v));
    if (n < n_max) v = m.action.apply(v);
  }
  return out;
}

std::vector<GaussianRational> projected_sequence(const FloerModel& m, const Polynomial& p,
                                                 int n_max) {
  validate_floer_model(m);
  if (n_max < 0) throw std::invalid_argument("projected_sequence: n_max >= 0 required");
  GMatrix b = top_projection(m, p);
  std::vector<GaussianRational> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  std::vector<GaussianRational> v = b.apply(m.right);
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(dot(m.left, v));
    if (n < n_max) v = m.action.apply(v);
  }
  return out;
}

std::array<GaussianRational, 4> projector_constants(const FloerModel& m) {
  validate_floer_model(m);
  GMatrix b = top_projection(m, annihilator_p(m));
  GaussianRational lambda(2L * m.genus - 2);
  std::vector<GaussianRational> w = b.apply(m.right);
  std::array<GaussianRational, 4> out;
  for (long r = 0; r < 4; ++r) {
    std::vector<GaussianRational> roots;
    for (long s = 0; s < 4; ++s)
      if (s != r) roots.push_back(i_power(s) * lambda);
    Polynomial fr = Polynomial::from_roots(roots);
    GaussianRational den = fr.eval(i_power(r) * lambda);
    Polynomial er = (GaussianRational(1) / den) * fr;
    std::vector<GaussianRational> v(w.size());
    for (int i = er.degree(); i >= 0; --i) {
      v = m.action.apply(v);
      for (size_t j = 0; j < v.size(); ++j) v[j] += er.at(static_cast<unsigned>(i)) * w[j];
    }
    out[static_cast<size_t>(r)] = dot(m.left, v);
  }
  return out;
}

GMatrix vandermonde_matrix() {
  GMatrix v(4);
  for (long n = 0; n < 4; ++n)
    for (long r = 0; r < 4; ++r) v.a[static_cast<size_t>(n)][static_cast<size_t>(r)] = i_power(r * n);
  return v;
}

std::array<GaussianRational, 4> vandermonde_recover(const std::array<GaussianRational, 4>& vals,
                                                    int g) {
  if (g < 2) throw std::invalid_argument("vandermonde_recover: g >= 2 required");
  Rational lambda(2L * g - 2);
  std::array<GaussianRational, 4> c;
  for (long r = 0; r < 4; ++r) {
    GaussianRational acc;
    for (long n = 0; n < 4; ++n)
      acc += i_power(-r * n) * vals[static_cast<size_t>(n)] * GaussianRational(lambda.pow(-n));
    c[static_cast<size_t>(r)] = GaussianRational(Rational(1, 4)) * acc;
  }
  return c;
}

AsymptoticReport generating_asymptotics(const std::vector<GaussianRational>& d_seq, int g,
                                        const std::vector<int>& mults, int d0) {
  if (d0 < 0 || d0 > 3)
    throw std::invalid_argument("generating_asymptotics: d0 must be a residue mod 4");
  Polynomial p = annihilator_from(g, mults);
  int d = p.degree();
  size_t need = static_cast<size_t>(2 * d + 8);
  if (d_seq.size() < need)
    throw std::invalid_argument("generating_asymptotics: sequence too short; need at least 2*deg(p)+8 = " +
                                std::to_string(need) + " entries, got " +
                                std::to_string(d_seq.size()));

  Rational lambda(2L * g - 2);
  GaussianRational l4(lambda.pow(4));

  // (1 - lambda^4 t^4) * t^d * p(1/t): reverse p, then fold in the 4-shift.
  // Descending order keeps the untouched low entries available as the
  // original reversed coefficients.
  std::vector<GaussianRational> gpoly(static_cast<size_t>(d) + 5);
  for (int i = 0; i <= d; ++i)
    gpoly[static_cast<size_t>(i)] = p.at(static_cast<unsigned>(d - i));
  for (int i = d + 4; i >= 4; --i)
    gpoly[static_cast<size_t>(i)] -= l4 * gpoly[static_cast<size_t>(i - 4)];

  AsymptoticReport rep;
  rep.d0 = d0;
  rep.growth = 2 * g - 2;

  std::vector<GaussianRational> q(d_seq.size());
  for (size_t j = 0; j < d_seq.size(); ++j) {
    size_t top = std::min(j, static_cast<size_t>(d) + 4);
    for (size_t i = 0; i <= top; ++i) q[j] += gpoly[i] * d_seq[j - i];
  }
  for (size_t j = static_cast<size_t>(d) + 4; j < q.size(); ++j)
    if (!q[j].is_zero())
      throw std::domain_error("generating_asymptotics: product does not truncate (q[" +
                              std::to_string(j) + "] = " + q[j].str() +
                              "); the sequence is not a grid-spectrum pairing with these "
                              "multiplicities");
  rep.checks.push_back({"polynomial_truncation", true,
                        "q(t) has degree < d + 4 = " + std::to_string(d + 4)});
  rep.checks.push_back({"sequence_length", true,
                        std::to_string(d_seq.size()) + " >= " + std::to_string(need)});

  Polynomial qp(std::vector<GaussianRational>(q.begin(), q.begin() + (d + 4)));
  for (long r = 0; r < 4; ++r) {
    GaussianRational top_ev = i_power(r) * GaussianRational(lambda);
    GaussianRational cr =
        qp.eval(GaussianRational(1) / top_ev) * top_ev.pow(static_cast<unsigned long>(d)) /
        GaussianRational(4);
    rep.c_r[static_cast<size_t>(r)] = cr;
  }
  for (long j = 0; j < 4; ++j) {
    GaussianRational aj;
    for (long r = 0; r < 4; ++r) aj += rep.c_r[static_cast<size_t>(r)] * i_power(r * j);
    rep.a[static_cast<size_t>(j)] = aj;
  }
  rep.leading = rep.a[static_cast<size_t>(d0)];
  rep.contradiction_branch = rep.leading.is_zero();
  rep.checks.push_back({"leading_nonzero", !rep.contradiction_branch,
                        "a_{d0} = " + rep.leading.str()});
  return rep;
}

}  // namespace fourfold
