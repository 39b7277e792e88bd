#pragma once
// Two inference stacks with the same shape: sum-product over probability
// joints and max-product over possibility joints. Conditioning uses the
// product form for both kinds, so p(xy) = p(x|y)p(y) and pi(xy) = pi(x|y)pi(y)
// hold entrywise wherever the conditional is defined. Columns whose
// conditioning marginal is zero are carried as explicitly undefined rather
// than silently zero-filled; a zero-filled column would corrupt max-marginals.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "sigmax/measures.hpp"
#include "sigmax/scalar.hpp"
#include "sigmax/spaces.hpp"

namespace sigmax {

enum class MeasureKind { probability, possibility };

const char* measure_kind_name(MeasureKind k);

// Matrix over two labeled spaces, entry (row i, col j). Probability joints
// live over random spaces, possibility joints over fuzzy ones. The
// constructor enforces shape and kind agreement only; numeric contracts
// (total 1, max 1) are checked by validate_joint so that violations can be
// reported instead of thrown.
class JointDistribution {
 public:
  JointDistribution(MeasureKind kind, SampleSpace row_space, SampleSpace col_space,
                    std::vector<std::vector<Scalar>> values, bool normalized = true);

  MeasureKind kind() const { return kind_; }
  const SampleSpace& row_space() const { return row_space_; }
  const SampleSpace& col_space() const { return col_space_; }
  const std::vector<std::vector<Scalar>>& values() const { return values_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return values_[i][j]; }
  // Declared for possibility joints; ignored for probability.
  bool normalized() const { return normalized_; }

 private:
  MeasureKind kind_;
  SampleSpace row_space_;
  SampleSpace col_space_;
  std::vector<std::vector<Scalar>> values_;
  bool normalized_;
};

// Conditional p(out|given) or pi(out|given): matrix indexed [out][given], one
// column per conditioning value. defined[j] = false marks a column that came
// from conditioning on a zero-marginal value; its entries are meaningless.
class ConditionalRelation {
 public:
  ConditionalRelation(MeasureKind kind, SampleSpace given_space, SampleSpace out_space,
                      std::vector<std::vector<Scalar>> values,
                      std::vector<bool> defined = {});

  MeasureKind kind() const { return kind_; }
  const SampleSpace& given_space() const { return given_space_; }
  const SampleSpace& out_space() const { return out_space_; }
  const std::vector<std::vector<Scalar>>& values() const { return values_; }
  const Scalar& at(std::size_t out, std::size_t given) const { return values_[out][given]; }
  bool defined(std::size_t given_index) const { return defined_[given_index]; }
  bool fully_defined() const;

 private:
  MeasureKind kind_;
  SampleSpace given_space_;
  SampleSpace out_space_;
  std::vector<std::vector<Scalar>> values_;
  std::vector<bool> defined_;
};

enum class Axis { row, col };

using Marginal = std::variant<ProbabilityDistribution, PossibilityDistribution>;

// Sum over the other axis for probability, max for possibility. The result
// lives on the named axis's space and keeps the joint's kind.
Marginal marginal(const JointDistribution& joint, Axis axis);

enum class ConditionDirection { out_given_row, out_given_col };

// Entry = joint / marginal-of-given. Columns with zero given-marginal come
// back undefined; AllZeroGiven when no column is defined at all.
ConditionalRelation condition(const JointDistribution& joint, ConditionDirection direction);

// Product-form recombination: entry(out, given) = rel(out|given) * prior(given).
// Undefined columns are acceptable only where the prior weight is zero.
JointDistribution product_joint(const ConditionalRelation& rel,
                                const ProbabilityDistribution& given);
JointDistribution product_joint(const ConditionalRelation& rel,
                                const PossibilityDistribution& given);

// Chain first: A->B then second: B->C into A->C. Probability combines the
// intermediate by sum of products, possibility by max of products.
ConditionalRelation compose(const ConditionalRelation& first,
                            const ConditionalRelation& second);

// Posterior over the prior's space after observing one out-label.
ProbabilityDistribution bayes_update(const ProbabilityDistribution& prior,
                                     const ConditionalRelation& likelihood,
                                     const std::string& observed);

// Max-product counterpart; the denominator is the best joint value, so the
// output always renormalizes to max 1.
PossibilityDistribution poss_update(const PossibilityDistribution& prior,
                                    const ConditionalRelation& likelihood,
                                    const std::string& observed);

struct JointReport {
  MeasureKind kind = MeasureKind::probability;
  Scalar total;                     // sum of all entries
  Scalar global_max;                // largest entry
  std::vector<Scalar> row_combined; // per-row sum (probability) or max (possibility)
  std::vector<Scalar> col_combined;
  bool passed = false;
  std::string witness;              // first violated condition, empty when passed
};

JointReport validate_joint(const JointDistribution& joint, double tol = kMeasureTolerance);

struct ColumnCheck {
  bool defined = true;
  Scalar combined;                  // column sum (probability) or max (possibility)
  bool ok = false;
};

struct RelationReport {
  std::vector<ColumnCheck> columns;
  bool all_ok = false;              // every defined column meets its contract
};

// Probability columns must sum to 1; possibility columns must peak at 1.
// Undefined columns are skipped and do not fail the report.
RelationReport validate_relation(const ConditionalRelation& rel, double tol = kMeasureTolerance);

}  // namespace sigmax
