#pragma once
// Probability and possibility distributions over sample spaces, event
// measures (additive sum vs. max), axiom verification and a seeded sampler.
//
// Constructors enforce structure only (space kind, one value per label);
// whether the values actually satisfy the axioms is the job of
// check_prob_axioms / check_poss_axioms, so that invalid inputs can be
// loaded and reported rather than rejected at parse time.

#include <cstdint>
#include <string>
#include <vector>

#include "sigmax/error.hpp"
#include "sigmax/scalar.hpp"
#include "sigmax/spaces.hpp"

namespace sigmax {

// Absolute tolerance for comparisons involving real-valued measures.
// Exact rational values are always compared with zero tolerance.
inline constexpr double kMeasureTolerance = 1e-9;

class FrequencyCounts {
 public:
  // Entries keep their given order; counts must be nonnegative and sum to a
  // positive total.
  explicit FrequencyCounts(std::vector<std::pair<std::string, std::int64_t>> counts);

  const std::vector<std::pair<std::string, std::int64_t>>& counts() const { return counts_; }
  std::int64_t total() const { return total_; }

 private:
  std::vector<std::pair<std::string, std::int64_t>> counts_;
  std::int64_t total_;
};

class ProbabilityDistribution {
 public:
  // space must be kind=random; values are aligned with the space's label order.
  ProbabilityDistribution(SampleSpace space, std::vector<Scalar> values);

  const SampleSpace& space() const { return space_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& value_of(const std::string& label) const { return values_[space_.index_of(label)]; }
  bool all_exact() const;

 private:
  SampleSpace space_;
  std::vector<Scalar> values_;
};

class PossibilityDistribution {
 public:
  // space must be kind=fuzzy. The normalized flag is declared by the producer,
  // never inferred; check_poss_axioms reports flag/value mismatches.
  PossibilityDistribution(SampleSpace space, std::vector<Scalar> values, bool normalized);

  const SampleSpace& space() const { return space_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& value_of(const std::string& label) const { return values_[space_.index_of(label)]; }
  bool normalized() const { return normalized_; }
  bool all_exact() const;

 private:
  SampleSpace space_;
  std::vector<Scalar> values_;
  bool normalized_;
};

// p(x_i) = n_i / n_t as exact rationals over a random space synthesized from
// the counts' label order.
ProbabilityDistribution from_frequencies(const FrequencyCounts& counts);

// Sum of elementary values over the event; p(empty) = 0.
Scalar prob_event(const ProbabilityDistribution& dist, const Event& event);

// Max of elementary values over the event; pi(empty) = 0.
Scalar poss_event(const PossibilityDistribution& dist, const Event& event);

struct AxiomCheck {
  bool passed = true;
  std::string witness;  // first counterexample; empty when passed
};

struct ProbAxiomReport {
  AxiomCheck nonnegativity;
  AxiomCheck normality;
  AxiomCheck additivity;
  bool additivity_exhaustive = false;  // pair sweep runs only for N <= 10

  bool all_passed() const {
    return nonnegativity.passed && normality.passed && additivity.passed;
  }
};

struct PossAxiomReport {
  AxiomCheck empty_set;
  AxiomCheck normality;
  AxiomCheck maxitivity;
  bool maxitivity_exhaustive = false;

  bool all_passed() const { return empty_set.passed && normality.passed && maxitivity.passed; }
};

ProbAxiomReport check_prob_axioms(const ProbabilityDistribution& dist,
                                  double tol = kMeasureTolerance);
PossAxiomReport check_poss_axioms(const PossibilityDistribution& dist,
                                  double tol = kMeasureTolerance);

// The all-ones possibility distribution: total ignorance.
PossibilityDistribution innocent_prior(const SampleSpace& space);

// Inverse-CDF sampling over the declared label order with the splitmix64
// generator; deterministic for a fixed seed.
FrequencyCounts sample(const ProbabilityDistribution& dist, std::int64_t n, std::uint64_t seed);

}  // namespace sigmax
