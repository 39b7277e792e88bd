#include "sigmax/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sigmax/disjunction.hpp"
#include "sigmax/error.hpp"

namespace sigmax {
namespace {

std::string mask_to_string(const SampleSpace& space, std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t b = 0; b < space.size(); ++b) {
    if (!(mask >> b & 1u)) continue;
    if (!first) s += ", ";
    s += space.labels()[b];
    first = false;
  }
  return s + "}";
}

OracleVerdict fail_verdict(std::string claim_id, std::string witness) {
  return OracleVerdict{std::move(claim_id), false, std::move(witness)};
}

// Shared walk for both kinds: recompute all event measures by raw bit loops,
// compare each against the library value, then check the combination law on
// the recomputed values only.
template <typename Dist, typename EventFn, typename CombineFn>
OracleVerdict event_measures_impl(const Dist& dist, std::string claim_id, EventFn library_value,
                                  CombineFn combine_law, bool pairs_must_be_disjoint) {
  const SampleSpace& space = dist.space();
  const std::size_t n = space.size();
  if (n > 10) fail(Errc::space_too_large, "event oracle enumerates 2^N; N must be at most 10");

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Scalar> measures(total, Scalar(0));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Scalar m(0);
    bool any = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (!(mask >> b & 1u)) continue;
      m = any ? combine_law(m, dist.values()[b]) : dist.values()[b];
      any = true;
    }
    if (!any) m = Scalar(0);  // empty event measures 0 under both laws
    measures[mask] = m;

    const Scalar lib = library_value(mask);
    if (!scalar_eq(m, lib, kOracleTolerance))
      return fail_verdict(std::move(claim_id),
                          "event " + mask_to_string(space, mask) + ": enumeration gives " +
                              m.to_string() + ", library gives " + lib.to_string());
  }

  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) {
      if (pairs_must_be_disjoint && (a & b) != 0) continue;
      const Scalar expect = combine_law(measures[a], measures[b]);
      if (!scalar_eq(measures[a | b], expect, kOracleTolerance))
        return fail_verdict(std::move(claim_id),
                            "events " + mask_to_string(space, a) + " and " +
                                mask_to_string(space, b) + ": union measure " +
                                measures[a | b].to_string() + " vs combined " +
                                expect.to_string());
    }

  return OracleVerdict{std::move(claim_id), true, ""};
}

}  // namespace

OracleVerdict oracle_event_measures(const ProbabilityDistribution& dist) {
  return event_measures_impl(
      dist, "event-measures/probability",
      [&](std::uint64_t mask) {
        return prob_event(dist, Event::from_mask(dist.space(), static_cast<std::uint32_t>(mask)));
      },
      [](const Scalar& a, const Scalar& b) { return a + b; },
      /*pairs_must_be_disjoint=*/true);
}

OracleVerdict oracle_event_measures(const PossibilityDistribution& dist) {
  return event_measures_impl(
      dist, "event-measures/possibility",
      [&](std::uint64_t mask) {
        return poss_event(dist, Event::from_mask(dist.space(), static_cast<std::uint32_t>(mask)));
      },
      [](const Scalar& a, const Scalar& b) { return scalar_max(a, b); },
      /*pairs_must_be_disjoint=*/false);
}

OracleVerdict oracle_union_possibility(const IntensionSet& fX, const IntensionSet& fi,
                                       const IntensionSet& fj) {
  const std::string claim = "union-possibility";
  if (fX.universe() != fi.universe() || fX.universe() != fj.universe())
    fail(Errc::universe_mismatch, "union oracle needs a common universe");

  // Everything below |fX| happens inside fX's atom support, so one pass over
  // fX's atoms recovers all four overlap measures without any set algebra.
  std::int64_t fx_total = 0;
  std::int64_t in_i = 0;
  std::int64_t in_j = 0;
  std::int64_t in_both = 0;
  std::int64_t in_union = 0;
  for (const auto& [id, w] : fX.atoms()) {
    const std::int64_t wi = fi.weight_of(id);
    const std::int64_t wj = fj.weight_of(id);
    fx_total += w;
    in_i += std::min(w, wi);
    in_j += std::min(w, wj);
    in_both += std::min(w, std::min(wi, wj));
    in_union += std::min(w, std::max(wi, wj));
  }
  if (fx_total == 0) fail(Errc::empty_reference, "union oracle: reference intension is empty");

  const Rational oi(in_i, fx_total);
  const Rational oj(in_j, fx_total);
  const Rational ob(in_both, fx_total);
  const Rational ou(in_union, fx_total);

  const PairClassReport report = exact_union_possibility(fX, fi, fj);
  if (!(report.pi_i == oi) || !(report.pi_j == oj) || !(report.pi_intersection == ob) ||
      !(report.pi_union_exact == ou))
    return fail_verdict(claim, "library (" + report.pi_i.to_string() + ", " +
                                   report.pi_j.to_string() + ", " +
                                   report.pi_intersection.to_string() + ", " +
                                   report.pi_union_exact.to_string() +
                                   ") vs enumeration (" + oi.to_string() + ", " +
                                   oj.to_string() + ", " + ob.to_string() + ", " +
                                   ou.to_string() + ")");

  const Rational lower = rational_max(oi, oj);
  const Rational upper = oi + oj;
  if (ou < lower || upper < ou)
    return fail_verdict(claim, "union value " + ou.to_string() + " outside [max " +
                                   lower.to_string() + ", sum " + upper.to_string() + "]");

  if (report.cls == PairClass::projection_nested && !(ou == lower))
    return fail_verdict(claim, "nested pair: union " + ou.to_string() + " differs from max " +
                                   lower.to_string());
  if (report.cls == PairClass::projection_exclusive && !(ou == oi + oj))
    return fail_verdict(claim, "exclusive pair: union " + ou.to_string() +
                                   " differs from sum " + (oi + oj).to_string());

  return OracleVerdict{claim, true, ""};
}

OracleVerdict oracle_composition(const ConditionalRelation& first,
                                 const ConditionalRelation& second) {
  const bool prob = first.kind() == MeasureKind::probability;
  const std::string claim = prob ? "composition/probability" : "composition/possibility";
  if (first.kind() != second.kind())
    fail(Errc::kind_mismatch, "composition oracle: relation kinds differ");
  if (!(first.out_space() == second.given_space()))
    fail(Errc::space_mismatch, "composition oracle: relations do not chain");
  if (first.given_space().size() > 5 || first.out_space().size() > 5 ||
      second.out_space().size() > 5)
    fail(Errc::space_too_large, "composition oracle handles spaces of at most 5 labels");

  const ConditionalRelation composed = compose(first, second);
  for (std::size_t a = 0; a < first.given_space().size(); ++a) {
    if (!composed.defined(a)) continue;  // undefined columns carry no claim
    for (std::size_t c = 0; c < second.out_space().size(); ++c) {
      Scalar expect(0);
      for (std::size_t b = 0; b < first.out_space().size(); ++b) {
        const Scalar term = second.at(c, b) * first.at(b, a);
        expect = prob ? expect + term : scalar_max(expect, term);
      }
      if (!scalar_eq(composed.at(c, a), expect, kOracleTolerance))
        return fail_verdict(claim, "entry (" + second.out_space().labels()[c] + " | " +
                                       first.given_space().labels()[a] + "): compose gives " +
                                       composed.at(c, a).to_string() + ", enumeration gives " +
                                       expect.to_string());
    }
  }

  return OracleVerdict{claim, true, ""};
}

}  // namespace sigmax
