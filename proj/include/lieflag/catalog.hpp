#pragma once

#include "lieflag/finsler.hpp"
#include "lieflag/lie_core.hpp"
#include "lieflag/rng.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lieflag {

using ParamMap = std::map<std::string, double>;

/// One parameterized row of the connection table: brackets, metric template,
/// parameter domain, and the tabulated nine nabla entries.
struct CatalogCase {
  int id = 0;
  std::string group;
  std::vector<std::string> params;        // required parameter names
  std::vector<std::string> inert_params;  // listed by the condition column, unused by the templates
  std::string conditions;                 // condition column, human readable
  std::vector<std::string> notes;         // static remarks (overlaps, sampling restrictions)

  std::function<void(const ParamMap&)> validate;  // throws std::invalid_argument
  std::function<LieAlgebra(const ParamMap&)> algebra;
  std::function<InnerProduct(const ParamMap&)> metric;
  /// Tabulated nabla_{e_i} e_j at index 3*i + j.
  std::function<std::array<Vec3, 9>(const ParamMap&)> tabulated;
  /// Seeded in-domain parameter sample (log-uniform over [0.1, 10], projected
  /// into the condition set).
  std::function<ParamMap(Rng&)> sample;

  std::array<std::array<std::string, 3>, 3> bracket_expr;  // [x,y], [x,z], [y,z]
  std::array<std::array<std::string, 3>, 3> metric_expr;
};

const std::vector<CatalogCase>& catalog();
const CatalogCase& catalog_case(int id);  // throws for id outside 1..15

/// Concrete algebra and metric for a row. Rejects missing, unknown and
/// out-of-domain parameters, naming the violated constraint. For case 15 the
/// metric symbol lambda is derived from c and must not be supplied.
std::pair<LieAlgebra, InnerProduct> instantiate_case(int id, const ParamMap& params);

struct RowEntry {
  int i = 0, j = 0;
  Vec3 koszul = Vec3::Zero();
  Vec3 tabulated = Vec3::Zero();
  double residual = 0.0;  // |koszul - tabulated|_inf
};

/// Diff of the Koszul-derived connection against the tabulated row. The
/// Koszul result is authoritative: a mismatch is an errata record for the
/// table, never a failure of the derivation, which is certified separately
/// by the torsion and compatibility residuals.
struct RowReport {
  int id = 0;
  ParamMap params;
  double tol = 0.0;
  std::array<RowEntry, 9> entries;
  double max_residual = 0.0;  // max entry residual / (1 + max |tabulated|)
  bool match = false;
  double torsion = 0.0;
  double compatibility = 0.0;
  std::vector<std::string> notes;
};

RowReport verify_table_row(int id, const ParamMap& params, double tol = 1e-9);

struct CaseClassification {
  int id = 0;
  std::string group;
  int samples = 0;
  int min_dim = 3;
  int max_dim = 0;
  std::vector<Vec3> parallel_basis;  // at reference parameters, admitting cases only
  int clause = 0;                    // 1..3, 0 = not admitting
  std::string randers_bound;
  std::string matsumoto_bound;
  bool as_expected = false;
  std::vector<int> dims_mu_unit;      // case 5 only: dims over the nu sweep at mu = 1
  std::vector<int> dims_mu_interior;  // case 5 only: dims for sampled mu in (0,1)
};

struct ClassificationResult {
  std::uint64_t seed = 0;
  int samples_per_case = 0;
  double tol = 0.0;
  std::vector<CaseClassification> cases;  // sorted by id
  bool expected_outcome = false;          // every case classified as expected
  std::vector<std::string> notes;
};

/// Runs parallel_fields over seeded in-domain parameter samples for every
/// row, sweeps the case-5 dichotomy (mu = 1 exactly vs mu in (0,1)), and
/// checks the outcome against the admitting classification: case 1 with the
/// full algebra parallel, case 5 at mu = 1 with span{z}, case 11 with
/// span{-2x + y}, every other row empty.
ClassificationResult classify(int samples_per_case = 20, std::uint64_t seed = 42,
                              double tol = 1e-9);

struct AdmissibleBound {
  int case_id = 0;
  MetricKind kind = MetricKind::randers;
  std::string expression;                            // e.g. "|p| < sqrt(3)/3"
  std::function<double(const ParamMap&)> threshold;  // bound on |p|
  std::function<Vec3(double)> deformation;           // p -> xt
};

/// Deformation-parameter bound for the admitting cases 1, 5, 11. Throws
/// std::invalid_argument for any other id.
AdmissibleBound admissible_bound(int id, MetricKind kind);

/// Machine-readable dump of all 15 rows: brackets, metric templates,
/// conditions.
nlohmann::ordered_json catalog_to_json();

}  // namespace lieflag
