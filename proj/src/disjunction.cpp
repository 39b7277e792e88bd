#include "sigmax/disjunction.hpp"

#include <algorithm>

#include "sigmax/error.hpp"

namespace sigmax {

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::mutually_exclusive: return "MutuallyExclusive";
    case PairClass::projection_exclusive: return "ProjectionExclusive";
    case PairClass::projection_nested: return "ProjectionNested";
    case PairClass::general: return "General";
  }
  return "?";
}

PairClass classify_pair(const IntensionSet& fX, const IntensionSet& fi,
                        const IntensionSet& fj) {
  if (measure(fX) < 1) fail(Errc::empty_reference, "reference intension fX is empty");
  const IntensionSet gi = set_algebra(fX, fi).intersection;
  const IntensionSet gj = set_algebra(fX, fj).intersection;
  if (weight_dominated(gi, gj) || weight_dominated(gj, gi))
    return PairClass::projection_nested;
  if (set_algebra(gi, gj).intersection.empty())
    return PairClass::projection_exclusive;
  return PairClass::general;
}

PairClassReport exact_union_possibility(const IntensionSet& fX, const IntensionSet& fi,
                                        const IntensionSet& fj) {
  PairClassReport r;
  r.cls = classify_pair(fX, fi, fj);

  const IntensionAlgebra ij = set_algebra(fi, fj);
  r.pi_i = subsethood(fX, fi);
  r.pi_j = subsethood(fX, fj);
  r.pi_intersection = subsethood(fX, ij.intersection);
  r.pi_union_exact = subsethood(fX, ij.union_set);
  r.pi_union_max = rational_max(r.pi_i, r.pi_j);
  r.pi_union_sum = r.pi_i + r.pi_j - r.pi_intersection;

  // The per-atom min/max algebra makes inclusion-exclusion an identity, so
  // the direct route and the arithmetic route cannot drift apart.
  if (!(r.pi_union_exact == r.pi_union_sum))
    fail(Errc::internal_disagreement,
         "union possibility: direct value " + r.pi_union_exact.to_string() +
             " vs inclusion-exclusion " + r.pi_union_sum.to_string());

  r.max_error = r.pi_union_exact - r.pi_union_max;
  return r;
}

ProbUnionReport prob_union_report(const ProbabilityDistribution& dist, const Event& a,
                                  const Event& b) {
  const SampleSpace& space = dist.space();
  const std::uint64_t ma = a.to_mask(space);
  const std::uint64_t mb = b.to_mask(space);

  ProbUnionReport r;
  r.p_a = prob_event(dist, a);
  r.p_b = prob_event(dist, b);
  r.p_intersection = prob_event(dist, Event::from_mask(space, ma & mb));
  r.p_union = r.p_a + r.p_b - r.p_intersection;

  const Scalar lower = scalar_max(r.p_a, r.p_b);
  const Scalar upper = r.p_a + r.p_b;
  r.bounds_ok = scalar_le(lower, r.p_union, kMeasureTolerance) &&
                scalar_le(r.p_union, upper, kMeasureTolerance);
  r.additive_case = scalar_eq(r.p_intersection, Scalar(Rational::zero()), kMeasureTolerance);
  const bool contained = (ma & mb) == ma || (ma & mb) == mb;
  r.nested_case = contained && scalar_eq(r.p_intersection, scalar_min(r.p_a, r.p_b),
                                         kMeasureTolerance);
  return r;
}

MaxitivityReport verify_exact_maxitivity(const IntensionSet& fX,
                                         const std::vector<Concept>& concepts) {
  if (concepts.size() < 2)
    fail(Errc::invalid_argument, "maxitivity check needs at least two concepts");

  MaxitivityReport report;
  report.passed = true;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    for (std::size_t j = i + 1; j < concepts.size(); ++j) {
      PairVerdict v;
      v.label_i = concepts[i].label;
      v.label_j = concepts[j].label;
      v.report = exact_union_possibility(fX, concepts[i].intension, concepts[j].intension);
      if (v.report.cls == PairClass::projection_nested && !v.report.max_error.is_zero())
        report.passed = false;
      report.pairs.push_back(std::move(v));
    }
  }
  return report;
}

ExtractionReport verify_exact_extraction(const IntensionSet& fX,
                                         const std::vector<Concept>& concepts) {
  if (!is_exhaustive(fX, concepts))
    fail(Errc::not_exhaustive, "no concept reaches degree 1; whole-space claim needs an exhaustive setup");

  ExtractionReport r;
  IntensionSet all;
  bool first = true;
  for (const auto& c : concepts) {
    const Rational degree = subsethood(fX, c.intension);
    if (first || r.max_possibility < degree) {
      r.max_possibility = degree;
      r.argmax_label = c.label;
    }
    all = first ? c.intension : set_algebra(all, c.intension).union_set;
    first = false;
  }
  r.union_possibility = subsethood(fX, all);
  r.passed = r.union_possibility.is_one() && r.max_possibility.is_one();
  return r;
}

}  // namespace sigmax
