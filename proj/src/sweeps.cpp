#include "sigmax/sweeps.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <variant>

#include "sigmax/disjunction.hpp"
#include "sigmax/inference.hpp"
#include "sigmax/intension.hpp"
#include "sigmax/measures.hpp"
#include "sigmax/oracle.hpp"
#include "sigmax/rng.hpp"

namespace sigmax {
namespace {

std::vector<std::string> make_labels(const char* stem, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(stem) + std::to_string(i));
  return labels;
}

SampleSpace random_space(SplitMix64& rng, SpaceKind kind, const char* stem, std::uint64_t lo,
                         std::uint64_t hi) {
  return SampleSpace(kind, make_labels(stem, lo + rng.next_below(hi - lo + 1)));
}

ProbabilityDistribution random_prob(SplitMix64& rng, bool as_real) {
  SampleSpace space = random_space(rng, SpaceKind::random, "x", 1, 6);
  std::vector<std::int64_t> weights(space.size());
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = static_cast<std::int64_t>(rng.next_below(10));
    total += w;
  }
  if (total == 0) weights[0] = total = 1;

  std::vector<Scalar> values;
  values.reserve(weights.size());
  for (auto w : weights)
    values.push_back(as_real ? Scalar::real(static_cast<double>(w) / static_cast<double>(total))
                             : Scalar(Rational(w, total)));
  return ProbabilityDistribution(std::move(space), std::move(values));
}

// Normalized distributions peak at exactly 1; sub-normalized ones are capped
// strictly below 1 so the declared flag is truthful either way.
PossibilityDistribution random_poss(SplitMix64& rng, bool sub_normalized,
                                    bool force_two_positive) {
  SampleSpace space = random_space(rng, SpaceKind::fuzzy, "y", 2, 6);
  const std::int64_t den = 16;
  std::vector<Rational> vals(space.size());
  for (auto& v : vals) v = Rational(static_cast<std::int64_t>(rng.next_below(den + 1)), den);

  if (sub_normalized) {
    for (auto& v : vals)
      if (v.is_one()) v = Rational(den - 1, den);
  } else {
    const std::size_t peak = rng.next_below(vals.size());
    vals[peak] = Rational(1);
    if (force_two_positive) {
      std::size_t other = rng.next_below(vals.size() - 1);
      if (other >= peak) ++other;
      if (vals[other].is_zero())
        vals[other] = Rational(1 + static_cast<std::int64_t>(rng.next_below(den - 1)), den);
    }
  }

  std::vector<Scalar> values(vals.begin(), vals.end());
  return PossibilityDistribution(std::move(space), std::move(values), !sub_normalized);
}

IntensionSet random_intension(SplitMix64& rng, const std::string& universe,
                              std::int64_t atom_span, bool ensure_nonempty) {
  std::vector<IntensionSet::AtomEntry> atoms;
  for (std::int64_t id = 0; id < atom_span; ++id)
    if (rng.next_below(2) == 0)
      atoms.push_back({id, 1 + static_cast<std::int64_t>(rng.next_below(4))});
  if (ensure_nonempty && atoms.empty())
    atoms.push_back({static_cast<std::int64_t>(rng.next_below(atom_span)),
                     1 + static_cast<std::int64_t>(rng.next_below(4))});
  return IntensionSet(universe, std::move(atoms));
}

EllipseSpec random_ellipse(SplitMix64& rng) {
  EllipseSpec e;
  e.center_x = 8.0 + rng.next_unit() * 48.0;
  e.center_y = 8.0 + rng.next_unit() * 48.0;
  e.semi_axis_x = 2.0 + rng.next_unit() * 18.0;
  e.semi_axis_y = 2.0 + rng.next_unit() * 18.0;
  e.rotation = rng.next_unit() * 3.14159265358979323846;
  return e;
}

// Exact column contract by construction: columns sum to 1 (probability) or
// peak at 1 (possibility). strictly_positive additionally keeps every entry
// nonzero, which update sweeps use to stay clear of zero evidence.
ConditionalRelation random_relation(SplitMix64& rng, MeasureKind kind,
                                    const SampleSpace& given, const SampleSpace& out,
                                    bool strictly_positive) {
  const std::size_t rows = out.size();
  const std::size_t cols = given.size();
  std::vector<std::vector<Scalar>> values(rows, std::vector<Scalar>(cols, Scalar(0)));
  for (std::size_t g = 0; g < cols; ++g) {
    std::vector<std::int64_t> w(rows);
    std::int64_t total = 0;
    std::int64_t peak = 0;
    for (auto& x : w) {
      x = (strictly_positive ? 1 : 0) + static_cast<std::int64_t>(rng.next_below(9));
      total += x;
      peak = std::max(peak, x);
    }
    if (total == 0) w[0] = total = peak = 1;
    const std::int64_t den = kind == MeasureKind::probability ? total : peak;
    for (std::size_t o = 0; o < rows; ++o) values[o][g] = Scalar(Rational(w[o], den));
  }
  return ConditionalRelation(kind, given, out, std::move(values));
}

JointDistribution random_joint(SplitMix64& rng, MeasureKind kind) {
  const SpaceKind sk = kind == MeasureKind::probability ? SpaceKind::random : SpaceKind::fuzzy;
  SampleSpace row_space = random_space(rng, sk, "r", 2, 4);
  SampleSpace col_space = random_space(rng, sk, "c", 2, 4);

  std::vector<std::vector<std::int64_t>> w(row_space.size(),
                                           std::vector<std::int64_t>(col_space.size()));
  std::int64_t total = 0;
  std::int64_t peak = 0;
  for (auto& row : w)
    for (auto& x : row) {
      x = static_cast<std::int64_t>(rng.next_below(10));
      total += x;
      peak = std::max(peak, x);
    }
  if (total == 0) w[0][0] = total = peak = 1;

  const std::int64_t den = kind == MeasureKind::probability ? total : peak;
  std::vector<std::vector<Scalar>> values(row_space.size(),
                                          std::vector<Scalar>(col_space.size(), Scalar(0)));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w[i].size(); ++j) values[i][j] = Scalar(Rational(w[i][j], den));
  return JointDistribution(kind, std::move(row_space), std::move(col_space), std::move(values),
                           true);
}

// One failure note per sweep is enough to replay the case; later failures
// only bump the counter.
void note_failure(SweepResult& r, int case_index, const std::string& what) {
  ++r.failures;
  if (r.witness.empty()) r.witness = "case " + std::to_string(case_index) + ": " + what;
}

}  // namespace

SweepResult sweep_event_axioms(int count, std::uint64_t seed) {
  SweepResult result{"event-axioms", 0, 0, ""};
  SplitMix64 rng(seed);
  for (int c = 0; c < count; ++c) {
    ++result.cases;

    const ProbabilityDistribution prob = random_prob(rng, c % 4 == 3);
    if (!check_prob_axioms(prob).all_passed()) {
      note_failure(result, c, "probability axioms failed");
      continue;
    }
    OracleVerdict verdict = oracle_event_measures(prob);
    if (!verdict.passed) {
      note_failure(result, c, verdict.witness);
      continue;
    }
    const std::uint32_t events = std::uint32_t{1} << prob.space().size();
    bool ok = true;
    for (int k = 0; k < 8 && ok; ++k) {
      const Event a = Event::from_mask(prob.space(), static_cast<std::uint32_t>(rng.next_below(events)));
      const Event b = Event::from_mask(prob.space(), static_cast<std::uint32_t>(rng.next_below(events)));
      if (!prob_union_report(prob, a, b).bounds_ok) {
        note_failure(result, c, "probability union left the max/sum bracket");
        ok = false;
      }
    }
    if (!ok) continue;

    const PossibilityDistribution poss = random_poss(rng, c % 5 == 4, false);
    if (!check_poss_axioms(poss).all_passed()) {
      note_failure(result, c, "possibility axioms failed");
      continue;
    }
    verdict = oracle_event_measures(poss);
    if (!verdict.passed) note_failure(result, c, verdict.witness);
  }
  return result;
}

SweepResult sweep_intension_unions(int count, std::uint64_t seed) {
  SweepResult result{"intension-unions", 0, 0, ""};
  SplitMix64 rng(seed);
  for (int c = 0; c < count; ++c) {
    ++result.cases;
    const IntensionSet fX = random_intension(rng, "sweep", 12, true);
    const IntensionSet fi = random_intension(rng, "sweep", 12, false);
    const IntensionSet fj = random_intension(rng, "sweep", 12, false);

    const PairClassReport r = exact_union_possibility(fX, fi, fj);
    if (r.pi_union_exact < r.pi_union_max || r.pi_i + r.pi_j < r.pi_union_exact) {
      note_failure(result, c, "union left the max/sum bracket");
      continue;
    }
    if (r.cls == PairClass::projection_nested && !r.max_error.is_zero()) {
      note_failure(result, c, "nested pair with nonzero max error");
      continue;
    }
    if (r.cls == PairClass::projection_exclusive && !(r.pi_union_exact == r.pi_i + r.pi_j)) {
      note_failure(result, c, "exclusive pair missed the sum identity");
      continue;
    }
    if (!r.pi_intersection.is_zero() && (r.pi_i.is_zero() || r.pi_j.is_zero())) {
      note_failure(result, c, "non-empty triple intersection with a zero degree");
      continue;
    }
    const OracleVerdict verdict = oracle_union_possibility(fX, fi, fj);
    if (!verdict.passed) note_failure(result, c, verdict.witness);
  }
  return result;
}

SweepResult sweep_ellipse_unions(int count, std::uint64_t seed) {
  SweepResult result{"ellipse-unions", 0, 0, ""};
  SplitMix64 rng(seed);
  const GridSpec grid;  // 64x64, unit cells
  for (int c = 0; c < count; ++c) {
    ++result.cases;
    IntensionSet fX = rasterize_ellipse(random_ellipse(rng), grid);
    while (fX.empty()) fX = rasterize_ellipse(random_ellipse(rng), grid);
    const IntensionSet fi = rasterize_ellipse(random_ellipse(rng), grid);
    const IntensionSet fj = rasterize_ellipse(random_ellipse(rng), grid);

    const OracleVerdict verdict = oracle_union_possibility(fX, fi, fj);
    if (!verdict.passed) note_failure(result, c, verdict.witness);
  }
  return result;
}

SweepResult sweep_inference_roundtrip(int count, std::uint64_t seed) {
  SweepResult result{"inference-roundtrip", 0, 0, ""};
  SplitMix64 rng(seed);
  for (int c = 0; c < count; ++c) {
    ++result.cases;
    const MeasureKind kind = c % 2 == 0 ? MeasureKind::probability : MeasureKind::possibility;
    const JointDistribution joint = random_joint(rng, kind);
    if (!validate_joint(joint).passed) {
      note_failure(result, c, "generated joint failed validation");
      continue;
    }

    const auto rebuilt_matches = [&](const JointDistribution& rebuilt, bool transposed) {
      for (std::size_t i = 0; i < joint.row_space().size(); ++i)
        for (std::size_t j = 0; j < joint.col_space().size(); ++j) {
          const Scalar& back = transposed ? rebuilt.at(j, i) : rebuilt.at(i, j);
          if (!scalar_eq(joint.at(i, j), back, kOracleTolerance)) return false;
        }
      return true;
    };

    const ConditionalRelation by_col = condition(joint, ConditionDirection::out_given_col);
    const Marginal col_marg = marginal(joint, Axis::col);
    const JointDistribution back_col =
        kind == MeasureKind::probability
            ? product_joint(by_col, std::get<ProbabilityDistribution>(col_marg))
            : product_joint(by_col, std::get<PossibilityDistribution>(col_marg));
    if (!rebuilt_matches(back_col, false)) {
      note_failure(result, c, "column conditioning did not recompose the joint");
      continue;
    }

    const ConditionalRelation by_row = condition(joint, ConditionDirection::out_given_row);
    const Marginal row_marg = marginal(joint, Axis::row);
    const JointDistribution back_row =
        kind == MeasureKind::probability
            ? product_joint(by_row, std::get<ProbabilityDistribution>(row_marg))
            : product_joint(by_row, std::get<PossibilityDistribution>(row_marg));
    if (!rebuilt_matches(back_row, true))
      note_failure(result, c, "row conditioning did not recompose the joint");
  }
  return result;
}

SweepResult sweep_composition(int count, std::uint64_t seed) {
  SweepResult result{"composition", 0, 0, ""};
  SplitMix64 rng(seed);
  for (int c = 0; c < count; ++c) {
    ++result.cases;
    const MeasureKind kind = c % 2 == 0 ? MeasureKind::probability : MeasureKind::possibility;
    const SpaceKind sk = kind == MeasureKind::probability ? SpaceKind::random : SpaceKind::fuzzy;
    const SampleSpace a = random_space(rng, sk, "a", 2, 4);
    const SampleSpace b = random_space(rng, sk, "b", 2, 4);
    const SampleSpace d = random_space(rng, sk, "c", 2, 4);
    const SampleSpace e = random_space(rng, sk, "d", 2, 4);

    const ConditionalRelation r1 = random_relation(rng, kind, a, b, false);
    const ConditionalRelation r2 = random_relation(rng, kind, b, d, false);
    const ConditionalRelation r3 = random_relation(rng, kind, d, e, false);

    OracleVerdict verdict = oracle_composition(r1, r2);
    if (!verdict.passed) {
      note_failure(result, c, verdict.witness);
      continue;
    }
    verdict = oracle_composition(r2, r3);
    if (!verdict.passed) {
      note_failure(result, c, verdict.witness);
      continue;
    }

    const ConditionalRelation left = compose(compose(r1, r2), r3);
    const ConditionalRelation right = compose(r1, compose(r2, r3));
    bool ok = true;
    for (std::size_t o = 0; o < e.size() && ok; ++o)
      for (std::size_t g = 0; g < a.size() && ok; ++g)
        ok = scalar_eq(left.at(o, g), right.at(o, g), kOracleTolerance);
    if (!ok) note_failure(result, c, "three-way composition is not associative");
  }
  return result;
}

SweepResult sweep_updates(int count, std::uint64_t seed) {
  SweepResult result{"updates", 0, 0, ""};
  SplitMix64 rng(seed);
  const Rational one(1);
  for (int c = 0; c < count; ++c) {
    ++result.cases;

    // additive rule: posterior mass must be exactly 1
    {
      SampleSpace space = random_space(rng, SpaceKind::random, "x", 2, 4);
      std::vector<std::int64_t> w(space.size());
      std::int64_t total = 0;
      for (auto& x : w) {
        x = 1 + static_cast<std::int64_t>(rng.next_below(9));
        total += x;
      }
      std::vector<Scalar> vals;
      for (auto x : w) vals.push_back(Scalar(Rational(x, total)));
      const ProbabilityDistribution prior(space, std::move(vals));

      const SampleSpace out = random_space(rng, SpaceKind::random, "e", 2, 4);
      const ConditionalRelation lik = random_relation(rng, MeasureKind::probability, space, out,
                                                      true);
      const std::string observed = out.labels()[rng.next_below(out.size())];
      const ProbabilityDistribution posterior = bayes_update(prior, lik, observed);

      Rational mass(0);
      for (const Scalar& v : posterior.values()) mass = mass + v.rational();
      if (!(mass == one)) {
        note_failure(result, c, "posterior mass " + mass.to_string());
        continue;
      }
    }

    // max rule: posterior peak must be exactly 1
    {
      SampleSpace space = random_space(rng, SpaceKind::fuzzy, "y", 2, 4);
      std::vector<Scalar> vals(space.size());
      for (auto& v : vals)
        v = Scalar(Rational(1 + static_cast<std::int64_t>(rng.next_below(16)), 16));
      vals[rng.next_below(vals.size())] = Scalar(Rational(1));
      const PossibilityDistribution prior(space, std::move(vals), true);

      const SampleSpace out = random_space(rng, SpaceKind::fuzzy, "e", 2, 4);
      const ConditionalRelation lik = random_relation(rng, MeasureKind::possibility, space, out,
                                                      true);
      const std::string observed = out.labels()[rng.next_below(out.size())];
      const PossibilityDistribution posterior = poss_update(prior, lik, observed);

      Rational peak(0);
      for (const Scalar& v : posterior.values()) peak = rational_max(peak, v.rational());
      if (!(peak == one)) note_failure(result, c, "posterior peak " + peak.to_string());
    }
  }
  return result;
}

SweepResult sweep_sigma_triviality(int count, std::uint64_t seed) {
  SweepResult result{"sigma-triviality", 0, 0, ""};
  SplitMix64 rng(seed);
  const Rational one(1);
  for (int c = 0; c < count; ++c) {
    ++result.cases;
    const PossibilityDistribution poss = random_poss(rng, false, true);
    Rational mass(0);
    int positive = 0;
    for (const Scalar& v : poss.values()) {
      mass = mass + v.rational();
      if (!v.is_zero()) ++positive;
    }
    if (positive < 2) {
      note_failure(result, c, "generator produced fewer than two positive values");
      continue;
    }
    if (!(one < mass))
      note_failure(result, c, "normalized distribution with total mass " + mass.to_string());
  }
  return result;
}

std::vector<SweepResult> run_all_sweeps(std::uint64_t seed) {
  return {
      sweep_event_axioms(1000, seed),     sweep_intension_unions(500, seed),
      sweep_ellipse_unions(1000, seed),   sweep_inference_roundtrip(500, seed),
      sweep_composition(500, seed),       sweep_updates(500, seed),
      sweep_sigma_triviality(1000, seed),
  };
}

}  // namespace sigmax
