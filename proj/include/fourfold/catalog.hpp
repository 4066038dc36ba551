#pragma once

#include <string>
#include <vector>

#include "fourfold/floer.hpp"
#include "fourfold/geography.hpp"
#include "fourfold/lefschetz.hpp"
#include "json.hpp"

namespace fourfold {

// A Lefschetz fibration in document form: the constructor arguments of
// LefschetzFibration, with the total space referenced by name, plus the
// component genera that normalize_and_bound consumes.
struct FibrationRecord {
  std::string name;
  std::string manifold;
  H2Class fiber;
  int genus = 2;
  std::vector<ReducibleFiber> reducible;
  std::vector<int> fiber_genera;  // g(F_i), one entry per reducible fiber
  std::vector<SectionRecord> sections;
  bool relatively_minimal = true;
  bool h1_generated = false;
};

struct CatalogDocument {
  std::string schema_version = "1";
  std::vector<Manifold> manifolds;
  std::vector<FibrationRecord> fibrations;
  std::vector<FloerModel> floer_models;

  const Manifold* find_manifold(const std::string& name) const;
  const FibrationRecord* find_fibration(const std::string& name) const;
  const FloerModel* find_floer(const std::string& name) const;
};

// Runs every record through its module's construction invariants
// (validate_manifold, LefschetzFibration construction against the referenced
// total space, validate_floer_model) and rejects duplicate names. Throws
// std::invalid_argument naming the offending record.
void validate_catalog(const CatalogDocument& doc);

// Materializes a fibration record against its total space (which must be a
// manifold record in the same document).
LefschetzFibration realize_fibration(const CatalogDocument& doc, const FibrationRecord& rec);

// JSON document form. Exact data survives as text: rationals as "p/q"
// strings, Gaussian rationals as {"re", "im"}, gram matrices as sparse
// upper-triangular (i, j, value) entry lists. save is deterministic
// (insertion-ordered keys, fixed indentation), and load validates, so
// load(save(doc)) == doc on anything that passes validation.
std::string save_catalog(const CatalogDocument& doc);
CatalogDocument load_catalog(const std::string& text);

// The shipped catalog: the elliptic surfaces E(1)..E(6), hypersurface
// skeletons H(1)..H(12), the Stipsicz genus-g fibration pairs for g = 2..20,
// fiber-sum start profiles, a blown-up pencil fixture, and three Floer-model
// fixtures for the asymptotics pipeline.
CatalogDocument builtin_catalog();

// JSON fragments shared with the report writers.
nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json gaussian_json(const GaussianRational& z);
nlohmann::ordered_json h2_json(const H2Class& v);
nlohmann::ordered_json check_lines_json(const std::vector<CheckLine>& checks);

// The gluing-input document the glue subcommand consumes.
GluingInput gluing_input_from_json(const std::string& text);

}  // namespace fourfold
