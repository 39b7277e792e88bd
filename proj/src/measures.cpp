#include "sigmax/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sigmax/rng.hpp"

namespace sigmax {

namespace {

bool values_all_exact(const std::vector<Scalar>& values) {
  return std::all_of(values.begin(), values.end(), [](const Scalar& v) { return v.exact(); });
}

std::string pair_witness(const SampleSpace& space, std::uint32_t ma, std::uint32_t mb,
                         const Scalar& combined, const Scalar& expected) {
  std::ostringstream out;
  out << "A=" << std::to_string(ma) << " B=" << std::to_string(mb)
      << " measure(A op B)=" << combined.to_string() << " expected " << expected.to_string()
      << " over " << space.size() << " labels";
  return out.str();
}

}  // namespace

FrequencyCounts::FrequencyCounts(std::vector<std::pair<std::string, std::int64_t>> counts)
    : counts_(std::move(counts)), total_(0) {
  for (const auto& [label, n] : counts_) {
    if (label.empty()) fail(Errc::invalid_argument, "empty label in counts");
    if (n < 0) fail(Errc::invalid_argument, "negative count for '" + label + "'");
    total_ += n;
  }
  if (total_ < 1) fail(Errc::zero_total, "counts sum to zero");
}

ProbabilityDistribution::ProbabilityDistribution(SampleSpace space, std::vector<Scalar> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (space_.kind() != SpaceKind::random)
    fail(Errc::kind_mismatch, "probability distribution needs a random space");
  if (values_.size() != space_.size())
    fail(Errc::invalid_argument, "one value per label required");
}

bool ProbabilityDistribution::all_exact() const { return values_all_exact(values_); }

PossibilityDistribution::PossibilityDistribution(SampleSpace space, std::vector<Scalar> values,
                                                 bool normalized)
    : space_(std::move(space)), values_(std::move(values)), normalized_(normalized) {
  if (space_.kind() != SpaceKind::fuzzy)
    fail(Errc::kind_mismatch, "possibility distribution needs a fuzzy space");
  if (values_.size() != space_.size())
    fail(Errc::invalid_argument, "one value per label required");
}

bool PossibilityDistribution::all_exact() const { return values_all_exact(values_); }

ProbabilityDistribution from_frequencies(const FrequencyCounts& counts) {
  std::vector<std::string> labels;
  std::vector<Scalar> values;
  labels.reserve(counts.counts().size());
  for (const auto& [label, n] : counts.counts()) {
    labels.push_back(label);
    values.emplace_back(Rational(n, counts.total()));
  }
  return ProbabilityDistribution(SampleSpace(SpaceKind::random, std::move(labels)),
                                 std::move(values));
}

Scalar prob_event(const ProbabilityDistribution& dist, const Event& event) {
  const std::uint32_t mask = event.to_mask(dist.space());
  Scalar sum;
  for (std::size_t i = 0; i < dist.space().size(); ++i)
    if (mask & (std::uint32_t{1} << i)) sum = sum + dist.values()[i];
  return sum;
}

Scalar poss_event(const PossibilityDistribution& dist, const Event& event) {
  const std::uint32_t mask = event.to_mask(dist.space());
  Scalar best;  // exact zero for the empty event
  for (std::size_t i = 0; i < dist.space().size(); ++i)
    if (mask & (std::uint32_t{1} << i)) best = scalar_max(best, dist.values()[i]);
  return best;
}

ProbAxiomReport check_prob_axioms(const ProbabilityDistribution& dist, double tol) {
  ProbAxiomReport report;
  const auto& labels = dist.space().labels();
  const auto& values = dist.values();

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!scalar_le(Scalar(0), values[i], tol)) {
      report.nonnegativity.passed = false;
      report.nonnegativity.witness =
          "p(" + labels[i] + ") = " + values[i].to_string() + " < 0";
      break;
    }
  }

  Scalar sum;
  for (const auto& v : values) sum = sum + v;
  if (!scalar_eq(sum, Scalar(1), tol)) {
    report.normality.passed = false;
    report.normality.witness = "values sum to " + sum.to_string();
  }

  if (dist.space().size() <= 10) {
    report.additivity_exhaustive = true;
    const std::uint32_t count = std::uint32_t{1} << dist.space().size();
    std::vector<Scalar> measure(count);
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const std::uint32_t low = mask & (~mask + 1);
      std::uint32_t bit = 0;
      while ((std::uint32_t{1} << bit) != low) ++bit;
      measure[mask] = measure[mask ^ low] + values[bit];
    }
    for (std::uint32_t a = 0; a < count && report.additivity.passed; ++a) {
      for (std::uint32_t b = 0; b < count; ++b) {
        if (a & b) continue;  // additivity is claimed for disjoint pairs only
        if (!scalar_eq(measure[a | b], measure[a] + measure[b], tol)) {
          report.additivity.passed = false;
          report.additivity.witness =
              pair_witness(dist.space(), a, b, measure[a | b], measure[a] + measure[b]);
          break;
        }
      }
    }
  }
  return report;
}

PossAxiomReport check_poss_axioms(const PossibilityDistribution& dist, double tol) {
  PossAxiomReport report;
  const auto& labels = dist.space().labels();
  const auto& values = dist.values();

  const Scalar empty = poss_event(dist, Event());
  if (!empty.is_zero()) {
    report.empty_set.passed = false;
    report.empty_set.witness = "pi(empty) = " + empty.to_string();
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    const Scalar& v = values[i];
    if (!scalar_le(Scalar(0), v, tol) || !scalar_le(v, Scalar(1), tol)) {
      report.normality.passed = false;
      report.normality.witness = "pi(" + labels[i] + ") = " + values[i].to_string() + " outside [0,1]";
      break;
    }
  }
  if (report.normality.passed) {
    Scalar peak;
    for (const auto& v : values) peak = scalar_max(peak, v);
    const bool peak_is_one = scalar_eq(peak, Scalar(1), tol);
    if (dist.normalized() && !peak_is_one) {
      report.normality.passed = false;
      report.normality.witness = "flagged normalized but max value is " + peak.to_string();
    } else if (!dist.normalized() && peak_is_one) {
      report.normality.passed = false;
      report.normality.witness = "flagged sub-normalized but a value reaches 1";
    }
  }

  if (dist.space().size() <= 10) {
    report.maxitivity_exhaustive = true;
    const std::uint32_t count = std::uint32_t{1} << dist.space().size();
    std::vector<Scalar> measure(count);
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const std::uint32_t low = mask & (~mask + 1);
      std::uint32_t bit = 0;
      while ((std::uint32_t{1} << bit) != low) ++bit;
      measure[mask] = scalar_max(measure[mask ^ low], values[bit]);
    }
    for (std::uint32_t a = 0; a < count && report.maxitivity.passed; ++a) {
      for (std::uint32_t b = 0; b < count; ++b) {
        const Scalar expected = scalar_max(measure[a], measure[b]);
        if (!scalar_eq(measure[a | b], expected, tol)) {
          report.maxitivity.passed = false;
          report.maxitivity.witness = pair_witness(dist.space(), a, b, measure[a | b], expected);
          break;
        }
      }
    }
  }
  return report;
}

PossibilityDistribution innocent_prior(const SampleSpace& space) {
  if (space.kind() != SpaceKind::fuzzy)
    fail(Errc::kind_mismatch, "innocent prior is defined on fuzzy spaces");
  return PossibilityDistribution(space, std::vector<Scalar>(space.size(), Scalar(1)), true);
}

FrequencyCounts sample(const ProbabilityDistribution& dist, std::int64_t n, std::uint64_t seed) {
  if (n < 1) fail(Errc::invalid_argument, "sample size must be positive");

  std::vector<double> cumulative(dist.space().size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.values().size(); ++i) {
    acc += dist.values()[i].value();
    cumulative[i] = acc;
  }

  std::vector<std::int64_t> hits(dist.space().size(), 0);
  SplitMix64 rng(seed);
  for (std::int64_t draw = 0; draw < n; ++draw) {
    const double u = rng.next_unit();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= hits.size()) idx = hits.size() - 1;  // top rounding edge goes to the last label
    ++hits[idx];
  }

  std::vector<std::pair<std::string, std::int64_t>> counts;
  counts.reserve(hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) counts.emplace_back(dist.space().labels()[i], hits[i]);
  return FrequencyCounts(std::move(counts));
}

}  // namespace sigmax
