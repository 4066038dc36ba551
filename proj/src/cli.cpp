#include "fourfold/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fourfold/catalog.hpp"
#include "json.hpp"

namespace fourfold {

namespace {

using ojson = nlohmann::ordered_json;

struct GlobalOpts {
  std::string catalog_path;  // empty: the built-in catalog
  std::string out_path;      // empty: stdout
  std::string format = "json";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CatalogDocument active_catalog(const GlobalOpts& g) {
  if (g.catalog_path.empty()) return builtin_catalog();
  return load_catalog(read_file(g.catalog_path));
}

void write_output(const std::string& body, const GlobalOpts& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + g.out_path + "'");
  f << body;
}

// The text format is the JSON report flattened to "path: value" lines; it
// exists for eyeballs, the JSON is the contract.
void render_text(const ojson& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    if (j.empty()) os << prefix << ": []\n";
    size_t i = 0;
    for (const auto& v : j) render_text(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit_report(const ojson& rep, const GlobalOpts& g, std::ostream& out) {
  if (g.format == "text") {
    std::ostringstream ss;
    render_text(rep, "", ss);
    write_output(ss.str(), g, out);
  } else {
    write_output(rep.dump(2) + "\n", g, out);
  }
}

H2Class parse_coords(const std::string& s) {
  H2Class v;
  std::stringstream ss(s);
  std::string cur;
  while (std::getline(ss, cur, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoll(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coordinate '" + cur + "' in '" + s + "'");
    }
  }
  if (v.empty()) throw std::invalid_argument("empty coordinate list '" + s + "'");
  return v;
}

BettiTriple parse_betti(const std::string& s) {
  H2Class v = parse_coords(s);
  if (v.size() != 3)
    throw std::invalid_argument("expected b1,b+,b- but got '" + s + "'");
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
}

const Manifold& manifold_or_fail(const CatalogDocument& cat, const std::string& name) {
  const Manifold* m = cat.find_manifold(name);
  if (!m) throw std::invalid_argument("unknown manifold '" + name + "'");
  return *m;
}

ojson series_json(const QuadExpSeries& s) {
  ojson terms = ojson::array();
  for (const auto& [e, c] : s.sum.terms())
    terms.push_back(ojson{{"exponent", gaussian_json(e)}, {"coeff", gaussian_json(c)}});
  ojson j{{"gauss", s.gauss.str()}, {"zero", s.sum.is_zero()}, {"terms", terms}};
  if (s.sum.is_zero()) {
    j["leading"] = nullptr;
    j["note"] = "zero series";
  } else {
    auto [e, c] = s.sum.leading_term();
    j["leading"] = ojson{{"exponent", gaussian_json(e)}, {"coeff", gaussian_json(c)}};
  }
  return j;
}

ojson profile_json(const FibrationProfile& p) {
  return ojson{{"name", p.name},       {"b1", p.b1},
               {"b_plus", p.b_plus},   {"b_minus", p.b_minus},
               {"genus", p.genus},     {"n_plus", p.n_plus()},
               {"n_minus", p.n_minus()}};
}

ojson numerics_json(const FiberSumNumerics& n) {
  return ojson{{"b1", n.b1},
               {"b_plus", n.b_plus},
               {"b_minus", n.b_minus},
               {"sigma", n.sigma},
               {"euler", n.euler}};
}

ojson certificate_json(const ConstructionCertificate& cert, const std::string& mode) {
  ojson summands = ojson::array();
  for (const auto& [profile, copies] : cert.summands)
    summands.push_back(ojson{{"profile", profile_json(profile)}, {"copies", copies}});
  return ojson{{"command", "plan"},
               {"mode", mode},
               {"success", cert.success},
               {"failure", cert.failure},
               {"start", profile_json(cert.start)},
               {"summands", summands},
               {"resulting", numerics_json(cert.resulting)},
               {"target", ojson{{"kind", cert.target.kind},
                                {"degree", cert.target.degree},
                                {"knot_genus", cert.target.knot_genus},
                                {"n", cert.target.n},
                                {"b_plus", cert.target.b_plus},
                                {"b_minus", cert.target.b_minus}}},
               {"checks", check_lines_json(cert.checks)},
               {"all_pass", cert.all_pass()}};
}

ojson gaussian_array_json(const std::array<GaussianRational, 4>& a) {
  ojson out = ojson::array();
  for (const auto& z : a) out.push_back(gaussian_json(z));
  return out;
}

int cmd_series(const CatalogDocument& cat, const std::string& name, const std::string& w_str,
               const std::string& h_str, const GlobalOpts& g, std::ostream& out) {
  const Manifold& m = manifold_or_fail(cat, name);
  size_t rank = static_cast<size_t>(m.lattice.rank());
  EvalRequest req;
  req.h = parse_coords(h_str);
  req.w = w_str.empty() ? H2Class(rank, 0) : parse_coords(w_str);
  if (req.h.size() != rank || req.w.size() != rank)
    throw std::invalid_argument("class size does not match the rank " + std::to_string(rank) +
                                " lattice of '" + name + "'");
  QuadExpSeries s = donaldson_series(m, req);
  emit_report(ojson{{"command", "series"},
                    {"manifold", name},
                    {"w", h2_json(req.w)},
                    {"h", h2_json(req.h)},
                    {"series", series_json(s)},
                    {"term_count", s.sum.size()}},
              g, out);
  return 0;
}

int cmd_blowup(const CatalogDocument& cat, const std::string& name, const std::string& rename,
               const GlobalOpts& g, std::ostream& out) {
  Manifold up = blowup(manifold_or_fail(cat, name));
  if (!rename.empty()) up.name = rename;
  CatalogDocument doc;
  doc.manifolds.push_back(std::move(up));
  write_output(save_catalog(doc), g, out);
  return 0;
}

int cmd_blowdown(const CatalogDocument& cat, const std::string& name, const std::string& e_str,
                 const std::string& rename, const GlobalOpts& g, std::ostream& out) {
  const Manifold& m = manifold_or_fail(cat, name);
  // --e takes a basis label or a coordinate vector.
  H2Class e;
  int idx = m.lattice.index_of(e_str);
  if (idx >= 0)
    e = m.lattice.basis_vector(idx);
  else
    e = parse_coords(e_str);
  Manifold down = blowdown(m, e);
  if (!rename.empty()) down.name = rename;
  CatalogDocument doc;
  doc.manifolds.push_back(std::move(down));
  write_output(save_catalog(doc), g, out);
  return 0;
}

int cmd_fibersum(const std::string& start_str, const std::string& summand_str, int genus,
                 int copies, const GlobalOpts& g, std::ostream& out) {
  if (copies < 1) throw std::invalid_argument("--repeat must be >= 1");
  BettiTriple start = parse_betti(start_str);
  BettiTriple summand = parse_betti(summand_str);
  BettiTriple cur = start;
  FiberSumNumerics last{};
  for (int i = 0; i < copies; ++i) {
    last = fiber_sum_numerics(cur, summand, genus);
    cur = {last.b1, last.b_plus, last.b_minus};
  }
  emit_report(
      ojson{{"command", "fibersum"},
            {"start", ojson{{"b1", start.b1}, {"b_plus", start.b_plus}, {"b_minus", start.b_minus}}},
            {"summand", ojson{{"b1", summand.b1},
                              {"b_plus", summand.b_plus},
                              {"b_minus", summand.b_minus},
                              {"n_plus", n_plus(summand, genus)},
                              {"n_minus", n_minus(summand, genus)}}},
            {"genus", genus},
            {"copies", copies},
            {"result", numerics_json(last)}},
      g, out);
  return 0;
}

int cmd_glue(const std::string& input_path, const GlobalOpts& g, std::ostream& out) {
  GluingInput in = gluing_input_from_json(read_file(input_path));
  QuadExpSeries s = munoz_glue(in);
  LeadingFactorization lf = leading_factorization(in);
  emit_report(ojson{{"command", "glue"},
                    {"genus", in.genus},
                    {"series", series_json(s)},
                    {"leading_factorization",
                     ojson{{"lhs", lf.lhs.str()},
                           {"rhs_x", lf.rhs_x.str()},
                           {"rhs_z", lf.rhs_z.str()},
                           {"epsilon", lf.epsilon},
                           {"identity_holds", lf.identity_holds},
                           {"nonvanishing", lf.nonvanishing}}}},
              g, out);
  return lf.identity_holds ? 0 : 3;
}

int cmd_constraints(const CatalogDocument& cat, const std::string& name,
                    const std::string& class_str, const std::string& genera_str, bool with_sw,
                    const GlobalOpts& g, std::ostream& out) {
  const FibrationRecord* rec = cat.find_fibration(name);
  if (!rec) throw std::invalid_argument("unknown fibration '" + name + "'");
  LefschetzFibration f = realize_fibration(cat, *rec);
  H2Class k = parse_coords(class_str);
  if (k.size() != static_cast<size_t>(f.manifold().lattice.rank()))
    throw std::invalid_argument("class size does not match the total space lattice");

  DecompositionResult dec = decompose_canonical_difference(f, k);
  ojson raw = ojson::array();
  for (const auto& r : dec.raw) raw.push_back(r.str());
  ojson dec_json{{"valid", dec.valid},
                 {"reason", dec.valid ? "none" : decomp_failure_str(dec.reason)},
                 {"n", dec.n},
                 {"c", dec.c},
                 {"raw", raw}};

  ojson bound_json(nullptr);
  if (dec.valid) {
    std::vector<int> genera = rec->fiber_genera;
    if (!genera_str.empty()) {
      genera.clear();
      for (std::int64_t x : parse_coords(genera_str)) genera.push_back(static_cast<int>(x));
    }
    BoundResult b = normalize_and_bound(f, dec, genera);
    bound_json = ojson{{"value", b.value},
                       {"equality", b.equality},
                       {"n", b.n},
                       {"c", b.c},
                       {"genera", b.genera}};
  }

  UniquenessVerdict v = nonminimal_uniqueness(f, k);
  const char* kind = v.kind == UniquenessKind::equals_canonical ? "equals_canonical"
                     : v.kind == UniquenessKind::ruled_out      ? "ruled_out"
                                                                : "inconclusive";
  ojson rep{{"command", "constraints"},
            {"fibration", name},
            {"class", h2_json(k)},
            {"decomposition", dec_json},
            {"bound", bound_json},
            {"uniqueness", ojson{{"kind", kind}, {"reason", v.reason}}}};
  if (with_sw) {
    Verdict sv = sw_max_uniqueness(f);
    rep["sw_uniqueness"] = ojson{{"holds", sv.holds}, {"witness", sv.witness}};
  }
  emit_report(rep, g, out);
  return 0;
}

int cmd_plan(const CatalogDocument& cat, const std::string& name, const std::string& mode,
             const GlobalOpts& g, std::ostream& out) {
  const FibrationRecord* rec = cat.find_fibration(name);
  if (!rec) throw std::invalid_argument("unknown fibration '" + name + "'");
  const Manifold& total = manifold_or_fail(cat, rec->manifold);
  FibrationProfile prof{rec->name, total.b1, total.b_plus, total.b_minus, rec->genus,
                        rec->relatively_minimal};
  PlanMode pm = mode == "hypersurface" ? PlanMode::ratio_lt_2_hypersurface
                                       : PlanMode::ratio_lt_7_2_knot_surgery;
  ConstructionCertificate cert = plan_fiber_sum(prof, pm);
  emit_report(certificate_json(cert, mode), g, out);
  return cert.all_pass() ? 0 : 3;
}

int cmd_asymptotics(const CatalogDocument& cat, const std::string& name, const GlobalOpts& g,
                    std::ostream& out) {
  const FloerModel* m = cat.find_floer(name);
  if (!m) throw std::invalid_argument("unknown floer model '" + name + "'");
  SpectrumCert cert = certify_spectrum(*m);
  if (!cert.ok) {
    emit_report(ojson{{"command", "asymptotics"},
                      {"model", name},
                      {"spectrum_ok", false},
                      {"witness", cert.witness}},
                g, out);
    return 2;
  }
  CongruenceResult cong = degree_congruence(m->w_sq, m->b_plus, m->b1, 0);
  Polynomial p = annihilator_p(*m);
  int d = p.degree();
  std::vector<GaussianRational> seq = pairing_sequence(*m, 2 * d + 11);
  AsymptoticReport rep = generating_asymptotics(seq, m->genus, m->mults, cong.d0);
  std::array<GaussianRational, 4> proj = projector_constants(*m);
  bool agree = proj == rep.c_r;
  emit_report(ojson{{"command", "asymptotics"},
                    {"model", name},
                    {"genus", m->genus},
                    {"spectrum_ok", true},
                    {"growth", rep.growth},
                    {"d0", rep.d0},
                    {"annihilator_degree", d},
                    {"residues", ojson{{"generating", gaussian_array_json(rep.c_r)},
                                       {"projector", gaussian_array_json(proj)},
                                       {"agree", agree}}},
                    {"a", gaussian_array_json(rep.a)},
                    {"leading", gaussian_json(rep.leading)},
                    {"contradiction_branch", rep.contradiction_branch},
                    {"checks", check_lines_json(rep.checks)}},
              g, out);
  return agree ? 0 : 3;
}

int cmd_catalog_validate(const GlobalOpts& g, std::ostream& out) {
  CatalogDocument cat = active_catalog(g);  // loading runs every construction invariant
  ojson spectra = ojson::array();
  bool all_ok = true;
  for (const auto& m : cat.floer_models) {
    SpectrumCert cert = certify_spectrum(m);
    ojson row{{"model", m.name}, {"ok", cert.ok}};
    if (!cert.ok) row["witness"] = cert.witness;
    spectra.push_back(std::move(row));
    all_ok = all_ok && cert.ok;
  }
  emit_report(ojson{{"command", "catalog_validate"},
                    {"schema_version", cat.schema_version},
                    {"manifolds", cat.manifolds.size()},
                    {"fibrations", cat.fibrations.size()},
                    {"floer_models", cat.floer_models.size()},
                    {"spectrum", spectra},
                    {"ok", all_ok}},
              g, out);
  return all_ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra for Donaldson series, fiber sums and Lefschetz fibrations"};
  app.name("fourfold");
  GlobalOpts g;
  app.add_option("--catalog", g.catalog_path, "Catalog JSON file (default: built-in catalog)");
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.require_subcommand(1);

  std::string name, w_str, h_str, e_str, rename, class_str, genera_str, mode, input_path;
  std::string start_str, summand_str;
  int genus = 2, copies = 1;
  bool with_sw = false;

  CLI::App* series = app.add_subcommand("series", "Donaldson series of a catalog manifold");
  CLI::App* blowup_cmd = app.add_subcommand("blowup", "Blow up a manifold; writes a catalog document");
  CLI::App* blowdown_cmd =
      app.add_subcommand("blowdown", "Blow down an exceptional class; writes a catalog document");
  CLI::App* fibersum =
      app.add_subcommand("fibersum", "Betti/sigma/Euler bookkeeping of a repeated fiber sum");
  CLI::App* glue = app.add_subcommand("glue", "Fiber-sum gluing formula and leading factorization");
  CLI::App* constraints =
      app.add_subcommand("constraints", "Canonical-class constraints on a catalog fibration");
  CLI::App* plan = app.add_subcommand("plan", "Fiber-sum planner for same-b+, smaller-b- targets");
  CLI::App* asym = app.add_subcommand("asymptotics", "Pairing-sequence asymptotics of a Floer model");
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Catalog maintenance");
  CLI::App* catalog_validate = catalog_cmd->add_subcommand("validate", "Validate every record");
  catalog_cmd->require_subcommand(1);

  // --h is an option (the evaluation class), so help lives on --help alone.
  app.set_help_flag("--help", "Print help and exit");
  for (CLI::App* s : {series, blowup_cmd, blowdown_cmd, fibersum, glue, constraints, plan, asym,
                      catalog_cmd, catalog_validate}) {
    s->fallthrough();
    s->set_help_flag("--help", "Print help and exit");
  }

  series->add_option("manifold", name, "Manifold name")->required();
  series->add_option("--h", h_str, "Evaluation class h (comma-separated coordinates)")->required();
  series->add_option("--w", w_str, "Bundle class w (default: 0)");

  blowup_cmd->add_option("manifold", name, "Manifold name")->required();
  blowup_cmd->add_option("--name", rename, "Name for the blown-up record");

  blowdown_cmd->add_option("manifold", name, "Manifold name")->required();
  blowdown_cmd->add_option("--e", e_str, "Exceptional class: basis label or coordinates")
      ->required();
  blowdown_cmd->add_option("--name", rename, "Name for the blown-down record");

  fibersum->add_option("--start", start_str, "Start triple b1,b+,b-")->required();
  fibersum->add_option("--summand", summand_str, "Summand triple b1,b+,b-")->required();
  fibersum->add_option("--genus", genus, "Fiber genus")->required();
  fibersum->add_option("--repeat", copies, "Number of summand copies glued on");

  glue->add_option("--input", input_path, "GluingInput JSON document")->required();

  constraints->add_option("fibration", name, "Fibration name")->required();
  constraints->add_option("--class", class_str, "Candidate class K (coordinates)")->required();
  constraints->add_option("--genera", genera_str,
                          "Component genera per reducible fiber (default: catalog record)");
  constraints->add_flag("--sw", with_sw, "Also check the Seiberg-Witten uniqueness package");

  plan->add_option("fibration", name, "Start fibration name")->required();
  plan->add_option("--mode", mode, "hypersurface | knot")
      ->check(CLI::IsMember({"hypersurface", "knot"}))
      ->required();

  asym->add_option("model", name, "Floer model name")->required();

  std::vector<const char*> argv;
  argv.push_back("fourfold");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(series))
      return cmd_series(active_catalog(g), name, w_str, h_str, g, out);
    if (app.got_subcommand(blowup_cmd))
      return cmd_blowup(active_catalog(g), name, rename, g, out);
    if (app.got_subcommand(blowdown_cmd))
      return cmd_blowdown(active_catalog(g), name, e_str, rename, g, out);
    if (app.got_subcommand(fibersum))
      return cmd_fibersum(start_str, summand_str, genus, copies, g, out);
    if (app.got_subcommand(glue)) return cmd_glue(input_path, g, out);
    if (app.got_subcommand(constraints))
      return cmd_constraints(active_catalog(g), name, class_str, genera_str, with_sw, g, out);
    if (app.got_subcommand(plan)) return cmd_plan(active_catalog(g), name, mode, g, out);
    if (app.got_subcommand(asym)) return cmd_asymptotics(active_catalog(g), name, g, out);
    if (app.got_subcommand(catalog_cmd)) return cmd_catalog_validate(g, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable given require_subcommand(1)
}

}  // namespace fourfold
