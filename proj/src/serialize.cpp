#include "sigmax/serialize.hpp"

#include <fstream>
#include <utility>

#include "sigmax/error.hpp"

namespace sigmax {
namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(Errc::parse_error, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) bad(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

double number_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number()) bad(where, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::int64_t int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) bad(where, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::string> label_list(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) bad(where, std::string("field '") + key + "' must be an array");
  std::vector<std::string> labels;
  for (const Json& item : v) {
    if (!item.is_string()) bad(where, std::string("'") + key + "' entries must be strings");
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

// Matrix plus optional per-column defined flags, shared by relations and joints.
std::vector<std::vector<Scalar>> matrix_from_json(const Json& j, const std::string& where) {
  const Json& m = field(j, "matrix", where);
  if (!m.is_array()) bad(where, "field 'matrix' must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const Json& row : m) {
    if (!row.is_array()) bad(where, "matrix rows must be arrays");
    std::vector<Scalar> out;
    for (const Json& cell : row) out.push_back(scalar_from_json(cell, where + " matrix"));
    rows.push_back(std::move(out));
  }
  return rows;
}

MeasureKind measure_kind_from_json(const Json& j, const std::string& where) {
  const std::string kind = string_field(j, "kind", where);
  if (kind == "probability") return MeasureKind::probability;
  if (kind == "possibility") return MeasureKind::possibility;
  bad(where, "field 'kind' must be \"probability\" or \"possibility\", got \"" + kind + "\"");
}

Json values_to_json(const SampleSpace& space, const std::vector<Scalar>& values) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < space.size(); ++i) obj[space.labels()[i]] = to_json(values[i]);
  return obj;
}

std::vector<Scalar> values_from_json(const Json& j, const SampleSpace& space,
                                     const std::string& where) {
  const Json& v = field(j, "values", where);
  if (!v.is_object()) bad(where, "field 'values' must map labels to numbers");
  if (v.size() != space.size())
    bad(where, "'values' must cover every label exactly once (got " +
                   std::to_string(v.size()) + " of " + std::to_string(space.size()) + ")");
  std::vector<Scalar> values;
  values.reserve(space.size());
  for (const std::string& label : space.labels()) {
    const auto it = v.find(label);
    if (it == v.end()) bad(where, "'values' is missing label '" + label + "'");
    values.push_back(scalar_from_json(*it, where + " value of '" + label + "'"));
  }
  return values;
}

}  // namespace

Json to_json(const Rational& q) {
  return Json{{"num", q.num()}, {"den", q.den()}, {"decimal", q.to_double()}};
}

Json to_json(const Scalar& s) {
  if (s.exact()) return to_json(s.rational());
  return Json(s.value());
}

Json to_json(const SampleSpace& space) {
  return Json{{"kind", space_kind_name(space.kind())}, {"labels", space.labels()}};
}

Json to_json(const IntensionSet& f) {
  Json atoms = Json::array();
  for (const auto& [id, w] : f.atoms()) atoms.push_back(Json::array({id, w}));
  return Json{{"universe", f.universe()}, {"atoms", std::move(atoms)}};
}

Json to_json(const GridSpec& grid) {
  return Json{{"cols", grid.cols},
              {"rows", grid.rows},
              {"cell_size", grid.cell_size},
              {"origin_x", grid.origin_x},
              {"origin_y", grid.origin_y}};
}

Json to_json(const EllipseSpec& e) {
  return Json{{"label", e.label},
              {"center_x", e.center_x},
              {"center_y", e.center_y},
              {"semi_axis_x", e.semi_axis_x},
              {"semi_axis_y", e.semi_axis_y},
              {"rotation", e.rotation}};
}

namespace {

Json member_to_json(const FixtureMember& m) {
  return Json{{"label", m.ellipse.label},
              {"ellipse", to_json(m.ellipse)},
              {"intension", to_json(m.intension)}};
}

FixtureMember member_from_json(const Json& j, const std::string& where) {
  FixtureMember m;
  const Json& e = field(j, "ellipse", where);
  m.ellipse.label = string_field(j, "label", where);
  m.ellipse.center_x = number_field(e, "center_x", where);
  m.ellipse.center_y = number_field(e, "center_y", where);
  m.ellipse.semi_axis_x = number_field(e, "semi_axis_x", where);
  m.ellipse.semi_axis_y = number_field(e, "semi_axis_y", where);
  m.ellipse.rotation = number_field(e, "rotation", where);
  m.intension = intension_from_json(field(j, "intension", where));
  return m;
}

}  // namespace

Json to_json(const Fixture& fx) {
  Json concepts = Json::array();
  for (const auto& m : fx.concepts) concepts.push_back(member_to_json(m));
  return Json{{"name", fx.name},
              {"grid", to_json(fx.grid)},
              {"reference", member_to_json(fx.reference)},
              {"concepts", std::move(concepts)}};
}

Json to_json(const FrequencyCounts& counts) {
  Json c = Json::object();
  for (const auto& [label, n] : counts.counts()) c[label] = n;
  return Json{{"counts", std::move(c)}, {"total", counts.total()}};
}

Json to_json(const ProbabilityDistribution& dist) {
  return Json{{"kind", "probability"},
              {"space", to_json(dist.space())},
              {"values", values_to_json(dist.space(), dist.values())}};
}

Json to_json(const PossibilityDistribution& dist) {
  return Json{{"kind", "possibility"},
              {"space", to_json(dist.space())},
              {"normalized", dist.normalized()},
              {"values", values_to_json(dist.space(), dist.values())}};
}

Json to_json(const ConditionalRelation& rel) {
  Json matrix = Json::array();
  for (const auto& row : rel.values()) {
    Json r = Json::array();
    for (const Scalar& v : row) r.push_back(to_json(v));
    matrix.push_back(std::move(r));
  }
  Json defined = Json::array();
  for (std::size_t g = 0; g < rel.given_space().size(); ++g) defined.push_back(rel.defined(g));
  return Json{{"kind", measure_kind_name(rel.kind())},
              {"given", rel.given_space().labels()},
              {"out", rel.out_space().labels()},
              {"matrix", std::move(matrix)},
              {"defined", std::move(defined)}};
}

Json to_json(const JointDistribution& joint) {
  Json matrix = Json::array();
  for (const auto& row : joint.values()) {
    Json r = Json::array();
    for (const Scalar& v : row) r.push_back(to_json(v));
    matrix.push_back(std::move(r));
  }
  Json out{{"kind", measure_kind_name(joint.kind())},
           {"rows", joint.row_space().labels()},
           {"cols", joint.col_space().labels()},
           {"matrix", std::move(matrix)}};
  if (joint.kind() == MeasureKind::possibility) out["normalized"] = joint.normalized();
  return out;
}

Json to_json(const PairClassReport& report) {
  return Json{{"class", pair_class_name(report.cls)},
              {"pi_i", to_json(report.pi_i)},
              {"pi_j", to_json(report.pi_j)},
              {"pi_intersection", to_json(report.pi_intersection)},
              {"pi_union_exact", to_json(report.pi_union_exact)},
              {"pi_union_max", to_json(report.pi_union_max)},
              {"pi_union_sum", to_json(report.pi_union_sum)},
              {"max_error", to_json(report.max_error)}};
}

Json to_json(const MaxitivityReport& report) {
  Json pairs = Json::array();
  for (const auto& v : report.pairs) {
    Json entry = to_json(v.report);
    Json row{{"pair", Json::array({v.label_i, v.label_j})}};
    row.update(entry);
    pairs.push_back(std::move(row));
  }
  return Json{{"passed", report.passed}, {"pairs", std::move(pairs)}};
}

Json to_json(const ExtractionReport& report) {
  return Json{{"passed", report.passed},
              {"union_possibility", to_json(report.union_possibility)},
              {"max_possibility", to_json(report.max_possibility)},
              {"argmax", report.argmax_label}};
}

Json to_json(const ProbUnionReport& report) {
  return Json{{"p_a", to_json(report.p_a)},
              {"p_b", to_json(report.p_b)},
              {"p_intersection", to_json(report.p_intersection)},
              {"p_union", to_json(report.p_union)},
              {"bounds_ok", report.bounds_ok},
              {"additive_case", report.additive_case},
              {"nested_case", report.nested_case}};
}

namespace {

Json to_json(const AxiomCheck& check) {
  return Json{{"passed", check.passed}, {"witness", check.witness}};
}

}  // namespace

Json to_json(const ProbAxiomReport& report) {
  return Json{{"passed", report.all_passed()},
              {"nonnegativity", to_json(report.nonnegativity)},
              {"normality", to_json(report.normality)},
              {"additivity", to_json(report.additivity)},
              {"additivity_exhaustive", report.additivity_exhaustive}};
}

Json to_json(const PossAxiomReport& report) {
  return Json{{"passed", report.all_passed()},
              {"empty_set", to_json(report.empty_set)},
              {"normality", to_json(report.normality)},
              {"maxitivity", to_json(report.maxitivity)},
              {"maxitivity_exhaustive", report.maxitivity_exhaustive}};
}

Json to_json(const JointReport& report) {
  Json rows = Json::array();
  for (const Scalar& v : report.row_combined) rows.push_back(to_json(v));
  Json cols = Json::array();
  for (const Scalar& v : report.col_combined) cols.push_back(to_json(v));
  return Json{{"kind", measure_kind_name(report.kind)},
              {"passed", report.passed},
              {"witness", report.witness},
              {"total", to_json(report.total)},
              {"global_max", to_json(report.global_max)},
              {"row_combined", std::move(rows)},
              {"col_combined", std::move(cols)}};
}

Json to_json(const RelationReport& report) {
  Json cols = Json::array();
  for (const auto& c : report.columns)
    cols.push_back(Json{{"defined", c.defined}, {"combined", to_json(c.combined)}, {"ok", c.ok}});
  return Json{{"all_ok", report.all_ok}, {"columns", std::move(cols)}};
}

Json to_json(const OracleVerdict& verdict) {
  return Json{{"claim_id", verdict.claim_id},
              {"passed", verdict.passed},
              {"witness", verdict.witness}};
}

Json to_json(const SweepResult& result) {
  return Json{{"name", result.name},
              {"cases", result.cases},
              {"failures", result.failures},
              {"passed", result.passed()},
              {"witness", result.witness}};
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  if (j.is_number()) return Scalar::real(j.get<double>());
  if (j.is_object()) {
    const std::int64_t num = int_field(j, "num", where);
    const std::int64_t den = int_field(j, "den", where);
    if (den == 0) bad(where, "rational with zero denominator");
    return Scalar(Rational(num, den));
  }
  bad(where, "expected a number or a {\"num\", \"den\"} object");
}

SampleSpace space_from_json(const Json& j) {
  const std::string where = "space";
  const std::string kind = string_field(j, "kind", where);
  if (kind != "random" && kind != "fuzzy")
    bad(where, "field 'kind' must be \"random\" or \"fuzzy\", got \"" + kind + "\"");
  return SampleSpace(kind == "random" ? SpaceKind::random : SpaceKind::fuzzy,
                     label_list(j, "labels", where));
}

IntensionSet intension_from_json(const Json& j) {
  const std::string where = "intension";
  const std::string universe = string_field(j, "universe", where);
  const Json& atoms = field(j, "atoms", where);
  if (!atoms.is_array()) bad(where, "field 'atoms' must be an array of [id, weight] pairs");
  std::vector<IntensionSet::AtomEntry> entries;
  for (const Json& a : atoms) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      bad(where, "atoms must be [id, weight] integer pairs");
    entries.push_back({a[0].get<std::int64_t>(), a[1].get<std::int64_t>()});
  }
  return IntensionSet(universe, std::move(entries));
}

GridSpec grid_from_json(const Json& j) {
  const std::string where = "grid";
  GridSpec grid;
  grid.cols = static_cast<int>(int_field(j, "cols", where));
  grid.rows = static_cast<int>(int_field(j, "rows", where));
  grid.cell_size = number_field(j, "cell_size", where);
  grid.origin_x = number_field(j, "origin_x", where);
  grid.origin_y = number_field(j, "origin_y", where);
  return grid;
}

DistributionVariant distribution_from_json(const Json& j) {
  const std::string where = "distribution";
  const MeasureKind kind = measure_kind_from_json(j, where);
  SampleSpace space = space_from_json(field(j, "space", where));
  std::vector<Scalar> values = values_from_json(j, space, where);
  if (kind == MeasureKind::probability)
    return ProbabilityDistribution(std::move(space), std::move(values));

  const auto it = j.find("normalized");
  if (it == j.end() || !it->is_boolean())
    bad(where, "possibility distribution needs a boolean 'normalized' field");
  return PossibilityDistribution(std::move(space), std::move(values), it->get<bool>());
}

FrequencyCounts counts_from_json(const Json& j) {
  const std::string where = "counts";
  const Json& c = field(j, "counts", where);
  if (!c.is_object()) bad(where, "field 'counts' must be an object");
  std::vector<std::pair<std::string, std::int64_t>> entries;
  for (const auto& [label, v] : c.items()) {
    if (!v.is_number_integer()) bad(where, "count for '" + label + "' must be an integer");
    entries.emplace_back(label, v.get<std::int64_t>());
  }
  try {
    return FrequencyCounts(std::move(entries));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

ConditionalRelation relation_from_json(const Json& j) {
  const std::string where = "relation";
  const MeasureKind kind = measure_kind_from_json(j, where);
  const SpaceKind sk = kind == MeasureKind::probability ? SpaceKind::random : SpaceKind::fuzzy;
  SampleSpace given(sk, label_list(j, "given", where));
  SampleSpace out(sk, label_list(j, "out", where));
  std::vector<std::vector<Scalar>> matrix = matrix_from_json(j, where);

  std::vector<bool> defined;
  if (const auto it = j.find("defined"); it != j.end()) {
    if (!it->is_array()) bad(where, "field 'defined' must be an array of booleans");
    for (const Json& b : *it) {
      if (!b.is_boolean()) bad(where, "'defined' entries must be booleans");
      defined.push_back(b.get<bool>());
    }
  }
  return ConditionalRelation(kind, std::move(given), std::move(out), std::move(matrix),
                             std::move(defined));
}

JointDistribution joint_from_json(const Json& j) {
  const std::string where = "joint";
  const MeasureKind kind = measure_kind_from_json(j, where);
  const SpaceKind sk = kind == MeasureKind::probability ? SpaceKind::random : SpaceKind::fuzzy;
  SampleSpace rows(sk, label_list(j, "rows", where));
  SampleSpace cols(sk, label_list(j, "cols", where));
  std::vector<std::vector<Scalar>> matrix = matrix_from_json(j, where);

  bool normalized = true;
  if (const auto it = j.find("normalized"); it != j.end()) {
    if (!it->is_boolean()) bad(where, "field 'normalized' must be a boolean");
    normalized = it->get<bool>();
  }
  return JointDistribution(kind, std::move(rows), std::move(cols), std::move(matrix), normalized);
}

Fixture fixture_from_json(const Json& j) {
  const std::string where = "fixture";
  Fixture fx;
  fx.name = string_field(j, "name", where);
  fx.grid = grid_from_json(field(j, "grid", where));
  fx.reference = member_from_json(field(j, "reference", where), where + " reference");
  const Json& concepts = field(j, "concepts", where);
  if (!concepts.is_array()) bad(where, "field 'concepts' must be an array");
  for (const Json& c : concepts) fx.concepts.push_back(member_from_json(c, where + " concept"));
  return fx;
}

DocKind detect_document(const Json& j) {
  if (!j.is_object()) return DocKind::unknown;
  if (j.contains("atoms") && j.contains("universe")) return DocKind::intension;
  if (j.contains("values") && j.contains("space")) return DocKind::distribution;
  if (j.contains("matrix") && j.contains("given")) return DocKind::relation;
  if (j.contains("matrix") && j.contains("rows")) return DocKind::joint;
  if (j.contains("name") && j.contains("concepts")) return DocKind::fixture;
  if (j.contains("counts")) return DocKind::counts;
  if (j.contains("kind") && j.contains("labels")) return DocKind::space;
  return DocKind::unknown;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, path + ": " + e.what());
  }
}

}  // namespace sigmax
