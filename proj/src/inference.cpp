#include "sigmax/inference.hpp"

#include <utility>

#include "sigmax/error.hpp"

namespace sigmax {
namespace {

// Probability lives over random spaces, possibility over fuzzy ones.
void require_space_kind(MeasureKind kind, const SampleSpace& space, const char* which) {
  const SpaceKind want = kind == MeasureKind::probability ? SpaceKind::random : SpaceKind::fuzzy;
  if (space.kind() != want)
    fail(Errc::kind_mismatch, std::string(measure_kind_name(kind)) + " values need a " +
                                  space_kind_name(want) + " " + which + " space");
}

void require_shape(const std::vector<std::vector<Scalar>>& values, std::size_t rows,
                   std::size_t cols, const char* what) {
  if (values.size() != rows)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) +
                                " rows, got " + std::to_string(values.size()));
  for (const auto& row : values)
    if (row.size() != cols)
      throw std::invalid_argument(std::string(what) + ": ragged row, expected " +
                                  std::to_string(cols) + " columns");
}

Scalar combine(MeasureKind kind, const Scalar& a, const Scalar& b) {
  return kind == MeasureKind::probability ? a + b : scalar_max(a, b);
}

}  // namespace

const char* measure_kind_name(MeasureKind k) {
  return k == MeasureKind::probability ? "probability" : "possibility";
}

JointDistribution::JointDistribution(MeasureKind kind, SampleSpace row_space,
                                     SampleSpace col_space,
                                     std::vector<std::vector<Scalar>> values, bool normalized)
    : kind_(kind),
      row_space_(std::move(row_space)),
      col_space_(std::move(col_space)),
      values_(std::move(values)),
      normalized_(normalized) {
  require_space_kind(kind_, row_space_, "row");
  require_space_kind(kind_, col_space_, "column");
  require_shape(values_, row_space_.size(), col_space_.size(), "joint distribution");
}

ConditionalRelation::ConditionalRelation(MeasureKind kind, SampleSpace given_space,
                                         SampleSpace out_space,
                                         std::vector<std::vector<Scalar>> values,
                                         std::vector<bool> defined)
    : kind_(kind),
      given_space_(std::move(given_space)),
      out_space_(std::move(out_space)),
      values_(std::move(values)),
      defined_(std::move(defined)) {
  require_space_kind(kind_, given_space_, "given");
  require_space_kind(kind_, out_space_, "out");
  require_shape(values_, out_space_.size(), given_space_.size(), "conditional relation");
  if (defined_.empty()) defined_.assign(given_space_.size(), true);
  if (defined_.size() != given_space_.size())
    throw std::invalid_argument("conditional relation: defined flags do not match columns");
}

bool ConditionalRelation::fully_defined() const {
  for (bool d : defined_)
    if (!d) return false;
  return true;
}

Marginal marginal(const JointDistribution& joint, Axis axis) {
  const std::size_t rows = joint.row_space().size();
  const std::size_t cols = joint.col_space().size();
  const std::size_t n = axis == Axis::row ? rows : cols;

  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t k = axis == Axis::row ? i : j;
      out[k] = combine(joint.kind(), out[k], joint.at(i, j));
    }

  const SampleSpace& space = axis == Axis::row ? joint.row_space() : joint.col_space();
  if (joint.kind() == MeasureKind::probability)
    return ProbabilityDistribution(space, std::move(out));
  // max over one axis then the other is the global max, so normalization carries over
  return PossibilityDistribution(space, std::move(out), joint.normalized());
}

ConditionalRelation condition(const JointDistribution& joint, ConditionDirection direction) {
  const bool given_is_col = direction == ConditionDirection::out_given_col;
  const SampleSpace& given = given_is_col ? joint.col_space() : joint.row_space();
  const SampleSpace& out = given_is_col ? joint.row_space() : joint.col_space();

  std::vector<Scalar> given_marginal(given.size(), Scalar(0));
  for (std::size_t i = 0; i < joint.row_space().size(); ++i)
    for (std::size_t j = 0; j < joint.col_space().size(); ++j) {
      const std::size_t g = given_is_col ? j : i;
      given_marginal[g] = combine(joint.kind(), given_marginal[g], joint.at(i, j));
    }

  std::vector<bool> defined(given.size());
  bool any_defined = false;
  for (std::size_t g = 0; g < given.size(); ++g) {
    defined[g] = !given_marginal[g].is_zero();
    any_defined = any_defined || defined[g];
  }
  if (!any_defined)
    fail(Errc::all_zero_given, "every conditioning marginal is zero");

  std::vector<std::vector<Scalar>> entries(out.size(), std::vector<Scalar>(given.size(), Scalar(0)));
  for (std::size_t o = 0; o < out.size(); ++o)
    for (std::size_t g = 0; g < given.size(); ++g) {
      if (!defined[g]) continue;
      const Scalar& v = given_is_col ? joint.at(o, g) : joint.at(g, o);
      entries[o][g] = v / given_marginal[g];
    }

  return ConditionalRelation(joint.kind(), given, out, std::move(entries), std::move(defined));
}

namespace {

JointDistribution product_joint_impl(const ConditionalRelation& rel, const SampleSpace& space,
                                     const std::vector<Scalar>& weights, MeasureKind want) {
  if (rel.kind() != want)
    fail(Errc::kind_mismatch, std::string("recombination needs a ") + measure_kind_name(want) +
                                  " relation");
  if (!(rel.given_space() == space))
    fail(Errc::space_mismatch, "prior space does not match the relation's given space");

  const std::size_t rows = rel.out_space().size();
  const std::size_t cols = rel.given_space().size();
  std::vector<std::vector<Scalar>> values(rows, std::vector<Scalar>(cols, Scalar(0)));
  Scalar global_max(0);
  for (std::size_t g = 0; g < cols; ++g) {
    if (!rel.defined(g)) {
      if (!weights[g].is_zero())
        throw std::invalid_argument("recombination: nonzero prior weight on an undefined column");
      continue;  // zero weight times an undefined column contributes nothing
    }
    for (std::size_t o = 0; o < rows; ++o) {
      values[o][g] = rel.at(o, g) * weights[g];
      global_max = scalar_max(global_max, values[o][g]);
    }
  }

  const bool normalized = scalar_eq(global_max, Scalar(1), kMeasureTolerance);
  return JointDistribution(want, rel.out_space(), rel.given_space(), std::move(values),
                           normalized);
}

}  // namespace

JointDistribution product_joint(const ConditionalRelation& rel,
                                const ProbabilityDistribution& given) {
  return product_joint_impl(rel, given.space(), given.values(), MeasureKind::probability);
}

JointDistribution product_joint(const ConditionalRelation& rel,
                                const PossibilityDistribution& given) {
  return product_joint_impl(rel, given.space(), given.values(), MeasureKind::possibility);
}

ConditionalRelation compose(const ConditionalRelation& first, const ConditionalRelation& second) {
  if (first.kind() != second.kind())
    fail(Errc::kind_mismatch, "cannot compose relations of different kinds");
  if (!(first.out_space() == second.given_space()))
    fail(Errc::space_mismatch, "first relation's out space must be the second's given space");

  const std::size_t mids = first.out_space().size();
  const std::size_t rows = second.out_space().size();
  const std::size_t cols = first.given_space().size();

  std::vector<std::vector<Scalar>> values(rows, std::vector<Scalar>(cols, Scalar(0)));
  std::vector<bool> defined(cols, true);
  for (std::size_t a = 0; a < cols; ++a) {
    if (!first.defined(a)) {
      defined[a] = false;
      continue;
    }
    for (std::size_t b = 0; b < mids; ++b) {
      if (first.at(b, a).is_zero()) continue;
      if (!second.defined(b)) {
        // a reachable intermediate with no defined continuation taints the column
        defined[a] = false;
        break;
      }
      for (std::size_t c = 0; c < rows; ++c)
        values[c][a] = combine(first.kind(), values[c][a], second.at(c, b) * first.at(b, a));
    }
    if (!defined[a])
      for (std::size_t c = 0; c < rows; ++c) values[c][a] = Scalar(0);
  }

  return ConditionalRelation(first.kind(), first.given_space(), second.out_space(),
                             std::move(values), std::move(defined));
}

namespace {

// Per-label numerators prior(x) * likelihood(observed | x), shared by both
// update rules; only the way the denominator folds differs.
std::vector<Scalar> update_numerators(const SampleSpace& prior_space,
                                      const std::vector<Scalar>& prior_values,
                                      const ConditionalRelation& likelihood,
                                      const std::string& observed, MeasureKind want) {
  if (likelihood.kind() != want)
    fail(Errc::kind_mismatch, std::string("update needs a ") + measure_kind_name(want) +
                                  " likelihood");
  if (!(likelihood.given_space() == prior_space))
    fail(Errc::space_mismatch, "likelihood's given space must be the prior's space");
  const std::size_t row = likelihood.out_space().index_of(observed);

  std::vector<Scalar> numerators(prior_space.size(), Scalar(0));
  for (std::size_t i = 0; i < prior_space.size(); ++i) {
    if (!likelihood.defined(i)) {
      if (!prior_values[i].is_zero())
        throw std::invalid_argument("update: nonzero prior weight on an undefined column");
      continue;
    }
    numerators[i] = prior_values[i] * likelihood.at(row, i);
  }
  return numerators;
}

}  // namespace

ProbabilityDistribution bayes_update(const ProbabilityDistribution& prior,
                                     const ConditionalRelation& likelihood,
                                     const std::string& observed) {
  std::vector<Scalar> numerators = update_numerators(prior.space(), prior.values(), likelihood,
                                                     observed, MeasureKind::probability);
  Scalar evidence(0);
  for (const Scalar& t : numerators) evidence = evidence + t;
  if (evidence.is_zero())
    fail(Errc::zero_evidence, "observation '" + observed + "' has probability 0 under the prior");

  for (Scalar& t : numerators) t = t / evidence;
  return ProbabilityDistribution(prior.space(), std::move(numerators));
}

PossibilityDistribution poss_update(const PossibilityDistribution& prior,
                                    const ConditionalRelation& likelihood,
                                    const std::string& observed) {
  std::vector<Scalar> numerators = update_numerators(prior.space(), prior.values(), likelihood,
                                                     observed, MeasureKind::possibility);
  Scalar evidence(0);
  for (const Scalar& t : numerators) evidence = scalar_max(evidence, t);
  if (evidence.is_zero())
    fail(Errc::zero_evidence, "observation '" + observed + "' has possibility 0 under the prior");

  for (Scalar& t : numerators) t = t / evidence;
  // dividing by the max pins the best label at exactly 1
  return PossibilityDistribution(prior.space(), std::move(numerators), true);
}

JointReport validate_joint(const JointDistribution& joint, double tol) {
  const std::size_t rows = joint.row_space().size();
  const std::size_t cols = joint.col_space().size();

  JointReport report;
  report.kind = joint.kind();
  report.total = Scalar(0);
  report.global_max = Scalar(0);
  report.row_combined.assign(rows, Scalar(0));
  report.col_combined.assign(cols, Scalar(0));
  report.passed = true;

  const Scalar zero(0);
  const Scalar one(1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& v = joint.at(i, j);
      report.total = report.total + v;
      report.global_max = scalar_max(report.global_max, v);
      report.row_combined[i] = combine(joint.kind(), report.row_combined[i], v);
      report.col_combined[j] = combine(joint.kind(), report.col_combined[j], v);
      const bool in_range = scalar_le(zero, v, tol) &&
                            (joint.kind() == MeasureKind::probability ||
                             scalar_le(v, one, tol));
      if (!in_range && report.passed) {
        report.passed = false;
        report.witness = "entry (" + joint.row_space().labels()[i] + ", " +
                         joint.col_space().labels()[j] + ") = " + v.to_string() +
                         " out of range";
      }
    }

  if (report.passed) {
    if (joint.kind() == MeasureKind::probability) {
      if (!scalar_eq(report.total, one, tol)) {
        report.passed = false;
        report.witness = "total mass " + report.total.to_string() + " is not 1";
      }
    } else if (joint.normalized() && !scalar_eq(report.global_max, one, tol)) {
      report.passed = false;
      report.witness = "declared normalized but global max is " + report.global_max.to_string();
    }
  }
  return report;
}

RelationReport validate_relation(const ConditionalRelation& rel, double tol) {
  RelationReport report;
  report.all_ok = true;
  const Scalar one(1);
  for (std::size_t g = 0; g < rel.given_space().size(); ++g) {
    ColumnCheck check;
    check.defined = rel.defined(g);
    check.combined = Scalar(0);
    if (!check.defined) {
      check.ok = true;  // explicitly undefined columns carry no contract
      report.columns.push_back(check);
      continue;
    }
    for (std::size_t o = 0; o < rel.out_space().size(); ++o)
      check.combined = combine(rel.kind(), check.combined, rel.at(o, g));
    check.ok = scalar_eq(check.combined, one, tol);
    report.all_ok = report.all_ok && check.ok;
    report.columns.push_back(check);
  }
  return report;
}

}  // namespace sigmax
