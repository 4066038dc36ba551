#include "fourfold/catalog.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace fourfold {

using ojson = nlohmann::ordered_json;

const Manifold* CatalogDocument::find_manifold(const std::string& name) const {
  for (const auto& m : manifolds)
    if (m.name == name) return &m;
  return nullptr;
}

const FibrationRecord* CatalogDocument::find_fibration(const std::string& name) const {
  for (const auto& f : fibrations)
    if (f.name == name) return &f;
  return nullptr;
}

const FloerModel* CatalogDocument::find_floer(const std::string& name) const {
  for (const auto& m : floer_models)
    if (m.name == name) return &m;
  return nullptr;
}

LefschetzFibration realize_fibration(const CatalogDocument& doc, const FibrationRecord& rec) {
  const Manifold* total = doc.find_manifold(rec.manifold);
  if (!total)
    throw std::invalid_argument("fibration '" + rec.name + "': unknown total space '" +
                                rec.manifold + "'");
  return LefschetzFibration(*total, rec.fiber, rec.genus, rec.reducible, rec.sections,
                            rec.relatively_minimal, rec.h1_generated);
}

void validate_catalog(const CatalogDocument& doc) {
  if (doc.schema_version != "1")
    throw std::invalid_argument("catalog: unsupported schema_version '" + doc.schema_version +
                                "'");
  std::set<std::string> seen;
  for (const auto& m : doc.manifolds) {
    if (!seen.insert("manifold:" + m.name).second)
      throw std::invalid_argument("catalog: duplicate manifold '" + m.name + "'");
    validate_manifold(m);
  }
  for (const auto& f : doc.fibrations) {
    if (!seen.insert("fibration:" + f.name).second)
      throw std::invalid_argument("catalog: duplicate fibration '" + f.name + "'");
    if (f.fiber_genera.size() != f.reducible.size())
      throw std::invalid_argument("fibration '" + f.name +
                                  "': fiber_genera must list one genus per reducible fiber");
    realize_fibration(doc, f);  // the constructor is the validator
  }
  for (const auto& m : doc.floer_models) {
    if (!seen.insert("floer:" + m.name).second)
      throw std::invalid_argument("catalog: duplicate floer model '" + m.name + "'");
    validate_floer_model(m);
  }
}

// ---------------------------------------------------------------------------
// JSON fragments

ojson rational_json(const Rational& r) { return r.str(); }

ojson gaussian_json(const GaussianRational& z) {
  return ojson{{"re", z.re.str()}, {"im", z.im.str()}};
}

ojson h2_json(const H2Class& v) {
  ojson a = ojson::array();
  for (std::int64_t x : v) a.push_back(x);
  return a;
}

ojson check_lines_json(const std::vector<CheckLine>& checks) {
  ojson a = ojson::array();
  for (const auto& c : checks)
    a.push_back(ojson{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

namespace {

Rational rational_from(const ojson& j) { return Rational::parse(j.get<std::string>()); }

GaussianRational gaussian_from(const ojson& j) {
  return {Rational::parse(j.at("re").get<std::string>()),
          Rational::parse(j.at("im").get<std::string>())};
}

H2Class h2_from(const ojson& j) {
  H2Class v;
  for (const auto& x : j) v.push_back(x.get<std::int64_t>());
  return v;
}

ojson lattice_json(const Lattice& l) {
  ojson entries = ojson::array();
  const GramMatrix& g = l.gram();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i; j < g.size(); ++j)
      if (g[i][j] != 0) entries.push_back(ojson::array({i, j, g[i][j]}));
  return ojson{{"rank", l.rank()}, {"labels", l.labels()}, {"entries", entries}};
}

Lattice lattice_from(const ojson& j) {
  size_t n = j.at("rank").get<size_t>();
  GramMatrix g(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : j.at("entries")) {
    size_t r = e.at(0).get<size_t>(), c = e.at(1).get<size_t>();
    if (r >= n || c >= n) throw std::invalid_argument("catalog: gram entry out of range");
    g[r][c] = g[c][r] = e.at(2).get<std::int64_t>();
  }
  return Lattice(std::move(g), j.at("labels").get<std::vector<std::string>>());
}

ojson manifold_json(const Manifold& m) {
  ojson j{{"name", m.name},
          {"b1", m.b1},
          {"b_plus", m.b_plus},
          {"b_minus", m.b_minus},
          {"spin", m.spin},
          {"simple_type", m.simple_type},
          {"finite_type_order", m.finite_type_order},
          {"orientation_sign", m.orientation_sign}};
  j["tight_surface_genus"] = m.tight_surface_genus ? ojson(*m.tight_surface_genus) : ojson(nullptr);
  j["fibration"] = m.fibration ? ojson{{"fiber_genus", m.fibration->fiber_genus},
                                       {"nontrivial", m.fibration->nontrivial}}
                               : ojson(nullptr);
  j["lattice"] = lattice_json(m.lattice);
  j["canonical"] = m.canonical ? h2_json(*m.canonical) : ojson(nullptr);
  ojson classes = ojson::array();
  for (const auto& e : m.basic_classes) {
    ojson c{{"class", h2_json(e.klass)}};
    c["beta"] = e.beta ? rational_json(*e.beta) : ojson(nullptr);
    c["sw"] = e.sw ? ojson(*e.sw) : ojson(nullptr);
    c["order"] = e.order;
    classes.push_back(std::move(c));
  }
  j["basic_classes"] = std::move(classes);
  return j;
}

Manifold manifold_from(const ojson& j) {
  Manifold m;
  m.name = j.at("name").get<std::string>();
  m.b1 = j.at("b1").get<int>();
  m.b_plus = j.at("b_plus").get<int>();
  m.b_minus = j.at("b_minus").get<int>();
  m.spin = j.at("spin").get<bool>();
  m.simple_type = j.at("simple_type").get<bool>();
  m.finite_type_order = j.at("finite_type_order").get<int>();
  m.orientation_sign = j.at("orientation_sign").get<int>();
  if (!j.at("tight_surface_genus").is_null())
    m.tight_surface_genus = j.at("tight_surface_genus").get<int>();
  if (!j.at("fibration").is_null())
    m.fibration = FibrationFlag{j.at("fibration").at("fiber_genus").get<int>(),
                                j.at("fibration").at("nontrivial").get<bool>()};
  m.lattice = lattice_from(j.at("lattice"));
  if (!j.at("canonical").is_null()) m.canonical = h2_from(j.at("canonical"));
  for (const auto& c : j.at("basic_classes")) {
    BasicClassEntry e;
    e.klass = h2_from(c.at("class"));
    if (!c.at("beta").is_null()) e.beta = rational_from(c.at("beta"));
    if (!c.at("sw").is_null()) e.sw = c.at("sw").get<std::int64_t>();
    e.order = c.at("order").get<int>();
    m.basic_classes.push_back(std::move(e));
  }
  return m;
}

ojson fibration_json(const FibrationRecord& f) {
  ojson red = ojson::array();
  for (const auto& r : f.reducible)
    red.push_back(ojson{{"f", h2_json(r.f)}, {"g", h2_json(r.g)}});
  ojson secs = ojson::array();
  for (const auto& s : f.sections)
    secs.push_back(ojson{{"e", h2_json(s.e)}, {"self_int", s.self_int}});
  return ojson{{"name", f.name},
               {"manifold", f.manifold},
               {"fiber", h2_json(f.fiber)},
               {"genus", f.genus},
               {"reducible", red},
               {"fiber_genera", f.fiber_genera},
               {"sections", secs},
               {"relatively_minimal", f.relatively_minimal},
               {"h1_generated", f.h1_generated}};
}

FibrationRecord fibration_from(const ojson& j) {
  FibrationRecord f;
  f.name = j.at("name").get<std::string>();
  f.manifold = j.at("manifold").get<std::string>();
  f.fiber = h2_from(j.at("fiber"));
  f.genus = j.at("genus").get<int>();
  for (const auto& r : j.at("reducible"))
    f.reducible.push_back({h2_from(r.at("f")), h2_from(r.at("g"))});
  f.fiber_genera = j.at("fiber_genera").get<std::vector<int>>();
  for (const auto& s : j.at("sections"))
    f.sections.push_back({h2_from(s.at("e")), s.at("self_int").get<std::int64_t>()});
  f.relatively_minimal = j.at("relatively_minimal").get<bool>();
  f.h1_generated = j.at("h1_generated").get<bool>();
  return f;
}

ojson floer_json(const FloerModel& m) {
  ojson rows = ojson::array();
  for (const auto& row : m.action.a) {
    ojson r = ojson::array();
    for (const auto& z : row) r.push_back(gaussian_json(z));
    rows.push_back(std::move(r));
  }
  ojson left = ojson::array(), right = ojson::array();
  for (const auto& z : m.left) left.push_back(gaussian_json(z));
  for (const auto& z : m.right) right.push_back(gaussian_json(z));
  return ojson{{"name", m.name},   {"genus", m.genus},     {"dim", m.dim},
               {"action", rows},   {"left", left},         {"right", right},
               {"mults", m.mults}, {"top_dim", m.top_dim}, {"w_sq", m.w_sq},
               {"b_plus", m.b_plus}, {"b1", m.b1}};
}

FloerModel floer_from(const ojson& j) {
  FloerModel m;
  m.name = j.at("name").get<std::string>();
  m.genus = j.at("genus").get<int>();
  m.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("action")) {
    std::vector<GaussianRational> r;
    for (const auto& z : row) r.push_back(gaussian_from(z));
    m.action.a.push_back(std::move(r));
  }
  for (const auto& z : j.at("left")) m.left.push_back(gaussian_from(z));
  for (const auto& z : j.at("right")) m.right.push_back(gaussian_from(z));
  m.mults = j.at("mults").get<std::vector<int>>();
  m.top_dim = j.at("top_dim").get<int>();
  m.w_sq = j.at("w_sq").get<std::int64_t>();
  m.b_plus = j.at("b_plus").get<int>();
  m.b1 = j.at("b1").get<int>();
  return m;
}

}  // namespace

std::string save_catalog(const CatalogDocument& doc) {
  ojson j{{"schema_version", doc.schema_version}};
  ojson ms = ojson::array(), fs = ojson::array(), fls = ojson::array();
  for (const auto& m : doc.manifolds) ms.push_back(manifold_json(m));
  for (const auto& f : doc.fibrations) fs.push_back(fibration_json(f));
  for (const auto& m : doc.floer_models) fls.push_back(floer_json(m));
  j["manifolds"] = std::move(ms);
  j["fibrations"] = std::move(fs);
  j["floer_models"] = std::move(fls);
  return j.dump(2) + "\n";
}

CatalogDocument load_catalog(const std::string& text) {
  CatalogDocument doc;
  try {
    ojson j = ojson::parse(text);
    doc.schema_version = j.at("schema_version").get<std::string>();
    for (const auto& m : j.at("manifolds")) doc.manifolds.push_back(manifold_from(m));
    for (const auto& f : j.at("fibrations")) doc.fibrations.push_back(fibration_from(f));
    for (const auto& m : j.at("floer_models")) doc.floer_models.push_back(floer_from(m));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("catalog: malformed document: ") + e.what());
  }
  validate_catalog(doc);
  return doc;
}

GluingInput gluing_input_from_json(const std::string& text) {
  GluingInput in;
  try {
    ojson j = ojson::parse(text);
    in.genus = j.at("genus").get<int>();
    auto classes = [](const ojson& arr) {
      std::vector<GluingClass> out;
      for (const auto& c : arr)
        out.push_back({Rational::parse(c.at("coeff").get<std::string>()),
                       c.at("fiber_pairing").get<std::int64_t>(),
                       c.at("d_pairing").get<std::int64_t>()});
      return out;
    };
    in.x_classes = classes(j.at("x_classes"));
    in.z_classes = classes(j.at("z_classes"));
    in.w_w_sq = j.at("w_w_sq").get<std::int64_t>();
    in.w_x_sq = j.at("w_x_sq").get<std::int64_t>();
    in.w_z_sq = j.at("w_z_sq").get<std::int64_t>();
    in.w_w_dot_sigma = j.at("w_w_dot_sigma").get<std::int64_t>();
    in.w_x_dot_sigma = j.at("w_x_dot_sigma").get<std::int64_t>();
    in.w_z_dot_sigma = j.at("w_z_dot_sigma").get<std::int64_t>();
    in.sigma_dot_d = j.at("sigma_dot_d").get<std::int64_t>();
    in.d_sq = j.at("d_sq").get<std::int64_t>();
    in.d_x_sq = j.at("d_x_sq").get<std::int64_t>();
    in.d_z_sq = j.at("d_z_sq").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("gluing input: malformed document: ") + e.what());
  }
  validate_gluing_input(in);
  return in;
}

// ---------------------------------------------------------------------------
// Built-in records

namespace {

Manifold hypersurface_skeleton(int d) {
  HypersurfaceInvariants inv = hypersurface_invariants(d);
  Manifold m;
  m.name = "H(" + std::to_string(d) + ")";
  m.b_plus = static_cast<int>(inv.b_plus);
  m.b_minus = static_cast<int>(inv.b_minus);
  if (d % 2 == 0) {
    // Spin: the intersection form is the even one, b+ planes and |sigma|/8
    // copies of -E8.
    m.spin = true;
    Lattice l = Lattice::hyperbolic_block("f1", "s1");
    for (int k = 2; k <= m.b_plus; ++k)
      l = Lattice::direct_sum(
          l, Lattice::hyperbolic_block("f" + std::to_string(k), "s" + std::to_string(k)));
    for (std::int64_t k = 1; k <= -inv.sigma / 8; ++k)
      l = Lattice::direct_sum(l, Lattice::neg_e8_block("r" + std::to_string(k) + "_"));
    m.lattice = std::move(l);
  } else {
    std::vector<std::int64_t> entries(static_cast<size_t>(m.b_plus + m.b_minus), -1);
    for (int i = 0; i < m.b_plus; ++i) entries[static_cast<size_t>(i)] = 1;
    m.lattice = Lattice::diagonal(entries);
  }
  validate_manifold(m);
  return m;
}

// Carrier record for a fibration profile: b1 rides along as a number, the
// lattice realizes (b+, b-) as H + <-1>^(b- - 1).
Manifold profile_space(const FibrationProfile& p) {
  Manifold m;
  m.name = p.name + "_space";
  m.b1 = p.b1;
  m.b_plus = p.b_plus;
  m.b_minus = p.b_minus;
  std::vector<std::int64_t> entries(static_cast<size_t>(p.b_minus - 1), -1);
  std::vector<std::string> labels;
  for (int i = 1; i < p.b_minus; ++i) labels.push_back("c" + std::to_string(i));
  m.lattice = Lattice::direct_sum(Lattice::hyperbolic_block("f1", "s1"),
                                  Lattice::diagonal(entries, std::move(labels)));
  m.fibration = FibrationFlag{p.genus, true};
  validate_manifold(m);
  return m;
}

FibrationRecord fiber_first_record(const std::string& name, const Manifold& total, int genus,
                                   bool h1_generated) {
  H2Class fiber(static_cast<size_t>(total.lattice.rank()), 0);
  fiber[0] = 1;
  return {name, total.name, std::move(fiber), genus, {}, {}, {}, true, h1_generated};
}

GMatrix diag_matrix(const std::vector<GaussianRational>& d) {
  GMatrix m(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.a[i][i] = d[i];
  return m;
}

// Conjugate by the transvection E = I + c e_i e_j^T, transforming the vectors
// the same way so every pairing left^T A^n right is unchanged.
void conjugate(GMatrix& a, std::vector<GaussianRational>& left,
               std::vector<GaussianRational>& right, int i, int j, long c) {
  GMatrix e = GMatrix::identity(a.dim());
  GMatrix einv = GMatrix::identity(a.dim());
  e.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = GaussianRational(c);
  einv.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = GaussianRational(-c);
  a = e * a * einv;
  right = e.apply(right);
  left[static_cast<size_t>(j)] -= GaussianRational(c) * left[static_cast<size_t>(i)];
}

FloerModel floer_top1x1() {
  FloerModel m;
  m.name = "top1x1";
  m.genus = 2;
  m.dim = 1;
  m.action = diag_matrix({GaussianRational(2)});
  m.left = {GaussianRational(Rational(3, 2))};
  m.right = {GaussianRational(1)};
  m.mults = {0};
  return m;  // defaults: top_dim 1, w_sq 0, b+ 3, b1 0, hence d0 = 2
}

// Spectrum {2, -2, 2i, -2i, 0 (Jordan 2-block), 0, 0, 0} hidden behind an
// integer change of basis. Residues in the diagonal basis: c_0 = 1,
// c_1 = 0, c_2 = 1/2, c_3 = 1/4.
FloerModel floer_grid8x8() {
  FloerModel m;
  m.name = "grid8x8";
  m.genus = 2;
  m.dim = 8;
  GaussianRational two_i(Rational(0), Rational(2));
  GMatrix a = diag_matrix({GaussianRational(2), GaussianRational(-2), two_i, -two_i,
                           GaussianRational(0), GaussianRational(0), GaussianRational(0),
                           GaussianRational(0)});
  a.a[4][5] = GaussianRational(1);
  m.right.assign(8, GaussianRational(1));
  m.left = {GaussianRational(1), GaussianRational(Rational(1, 2)), GaussianRational(0),
            GaussianRational(Rational(1, 4)), GaussianRational(1), GaussianRational(1),
            GaussianRational(1), GaussianRational(1)};
  conjugate(a, m.left, m.right, 1, 0, 1);
  conjugate(a, m.left, m.right, 3, 2, -1);
  conjugate(a, m.left, m.right, 5, 4, 1);
  conjugate(a, m.left, m.right, 0, 7, 1);
  conjugate(a, m.left, m.right, 2, 6, -1);
  m.action = std::move(a);
  m.mults = {1};  // t^4 clears the nilpotent 2-block at 0
  return m;
}

// Genus 3 (growth 4), eigenvalues {4, -4, 4i, 0, 2, -2}: residues c_0 = 2,
// c_1 = 1, c_2 = 1, c_3 = 0. w^2 = -1 puts the nonvanishing degrees at
// d0 = 3, where a_3 = 1 - i.
FloerModel floer_g3tall() {
  FloerModel m;
  m.name = "g3tall";
  m.genus = 3;
  m.dim = 6;
  GaussianRational four_i(Rational(0), Rational(4));
  GMatrix a = diag_matrix({GaussianRational(4), GaussianRational(-4), four_i, GaussianRational(0),
                           GaussianRational(2), GaussianRational(-2)});
  m.right.assign(6, GaussianRational(1));
  m.left = {GaussianRational(2), GaussianRational(1), GaussianRational(1), GaussianRational(1),
            GaussianRational(1), GaussianRational(1)};
  conjugate(a, m.left, m.right, 1, 0, 1);
  conjugate(a, m.left, m.right, 2, 1, -1);
  conjugate(a, m.left, m.right, 4, 3, 1);
  conjugate(a, m.left, m.right, 0, 5, 1);
  m.action = std::move(a);
  m.mults = {1, 1};
  m.w_sq = -1;
  return m;
}

}  // namespace

CatalogDocument builtin_catalog() {
  CatalogDocument doc;

  // Trivial simple-type seed: one basic class K = 0, the input every blowup
  // chain starts from.
  Manifold seed;
  seed.name = "seed";
  seed.b_plus = 3;
  seed.b_minus = 1;
  seed.lattice = Lattice::diagonal({1, 1, 1, -1}, {"p1", "p2", "p3", "q1"});
  seed.basic_classes.push_back({H2Class{0, 0, 0, 0}, Rational(1), 1, 0});
  seed.simple_type = true;
  doc.manifolds.push_back(std::move(seed));

  // Base of the degree-3 pencil fixture and its blowup.
  Manifold pencil_base;
  pencil_base.name = "pencil_base";
  pencil_base.b_plus = 3;
  pencil_base.b_minus = 1;
  pencil_base.lattice = Lattice::diagonal({1, 1, 1, -1}, {"p1", "p2", "p3", "q1"});
  pencil_base.canonical = H2Class{1, 1, 1, 1};
  validate_manifold(pencil_base);
  LefschetzFibration pencil = pencil_to_fibration(pencil_base, {1, 0, 0, 0}, 3);
  Manifold pencil_total = pencil.manifold();
  pencil_total.name = "P7";
  doc.manifolds.push_back(std::move(pencil_base));
  doc.manifolds.push_back(std::move(pencil_total));
  doc.fibrations.push_back({"pencil7", "P7", pencil.fiber(), pencil.genus(), pencil.reducible(),
                            {}, pencil.sections(), pencil.relatively_minimal(),
                            pencil.h1_generated()});

  for (int n = 1; n <= 6; ++n) doc.manifolds.push_back(elliptic_profile(n));
  for (int d = 1; d <= 12; ++d) doc.manifolds.push_back(hypersurface_skeleton(d));

  // Fiber-sum start profile (0, 3, 19) carrying a genus-10 and a genus-2
  // fibration, the two planner entry points.
  Manifold w0;
  w0.name = "W0";
  w0.b_plus = 3;
  w0.b_minus = 19;
  w0.spin = true;
  {
    Lattice l = Lattice::hyperbolic_block("f1", "s1");
    l = Lattice::direct_sum(l, Lattice::hyperbolic_block("f2", "s2"));
    l = Lattice::direct_sum(l, Lattice::hyperbolic_block("f3", "s3"));
    l = Lattice::direct_sum(l, Lattice::neg_e8_block("r1_"));
    l = Lattice::direct_sum(l, Lattice::neg_e8_block("r2_"));
    w0.lattice = std::move(l);
  }
  validate_manifold(w0);
  doc.fibrations.push_back(fiber_first_record("start_g10", w0, 10, true));
  doc.fibrations.push_back(fiber_first_record("start_g2", w0, 2, true));
  doc.manifolds.push_back(std::move(w0));

  for (int g = 2; g <= 20; ++g) {
    auto [v1, v2] = stipsicz_profiles(g);
    for (const FibrationProfile& p : {v1, v2}) {
      Manifold space = profile_space(p);
      doc.fibrations.push_back(fiber_first_record(p.name, space, p.genus, true));
      doc.manifolds.push_back(std::move(space));
    }
  }

  doc.floer_models.push_back(floer_top1x1());
  doc.floer_models.push_back(floer_grid8x8());
  doc.floer_models.push_back(floer_g3tall());

  validate_catalog(doc);
  return doc;
}

}  // namespace fourfold
