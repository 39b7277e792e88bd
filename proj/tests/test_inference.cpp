#include "doctest.h"

#include <variant>
#include <vector>

#include "sigmax/inference.hpp"
#include "test_support.hpp"

using sigmax::Axis;
using sigmax::ConditionalRelation;
using sigmax::ConditionDirection;
using sigmax::Errc;
using sigmax::JointDistribution;
using sigmax::MeasureKind;
using sigmax::PossibilityDistribution;
using sigmax::ProbabilityDistribution;
using sigmax::Rational;
using sigmax::SampleSpace;
using sigmax::Scalar;
using sigmax::SpaceKind;
using testsupport::code_of;

namespace {

Scalar q(std::int64_t n, std::int64_t d) { return Scalar(Rational(n, d)); }

const SampleSpace kStates(SpaceKind::random, {"s1", "s2"});
const SampleSpace kObs(SpaceKind::random, {"pos", "neg"});
const SampleSpace kFuzzyA(SpaceKind::fuzzy, {"a1", "a2"});
const SampleSpace kFuzzyB(SpaceKind::fuzzy, {"b1", "b2"});
const SampleSpace kFuzzyC(SpaceKind::fuzzy, {"c1", "c2"});

}  // namespace

TEST_CASE("joint constructor checks kind and shape") {
  CHECK(code_of([] {
          JointDistribution(MeasureKind::probability, kFuzzyA, kFuzzyB,
                            {{q(1, 2), q(0, 1)}, {q(0, 1), q(1, 2)}});
        }) == Errc::kind_mismatch);
  CHECK_THROWS_AS(JointDistribution(MeasureKind::probability, kStates, kObs,
                                    {{q(1, 2), q(1, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("probability marginals sum, possibility marginals max") {
  const JointDistribution joint(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 8), q(1, 4)}, {q(1, 8), q(1, 2)}});

  const auto rows = std::get<ProbabilityDistribution>(sigmax::marginal(joint, Axis::row));
  CHECK(rows.space() == kStates);
  CHECK(rows.values()[0].rational() == Rational(3, 8));
  CHECK(rows.values()[1].rational() == Rational(5, 8));

  const auto cols = std::get<ProbabilityDistribution>(sigmax::marginal(joint, Axis::col));
  CHECK(cols.values()[0].rational() == Rational(1, 4));
  CHECK(cols.values()[1].rational() == Rational(3, 4));

  const JointDistribution fuzzy(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 1), q(1, 2)}, {q(1, 4), q(3, 4)}});
  const auto prow = std::get<PossibilityDistribution>(sigmax::marginal(fuzzy, Axis::row));
  CHECK(prow.values()[0].rational() == Rational(1));
  CHECK(prow.values()[1].rational() == Rational(3, 4));
  CHECK(prow.normalized());
}

TEST_CASE("conditioning divides by the given marginal") {
  const JointDistribution joint(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 8), q(1, 4)}, {q(1, 8), q(1, 2)}});
  const auto rel = sigmax::condition(joint, ConditionDirection::out_given_col);
  CHECK(rel.given_space() == kObs);
  CHECK(rel.out_space() == kStates);
  CHECK(rel.fully_defined());
  CHECK(rel.at(0, 0).rational() == Rational(1, 2));  // p(s1|pos)
  CHECK(rel.at(1, 0).rational() == Rational(1, 2));
  CHECK(rel.at(0, 1).rational() == Rational(1, 3));  // p(s1|neg)
  CHECK(rel.at(1, 1).rational() == Rational(2, 3));
  CHECK(sigmax::validate_relation(rel).all_ok);
}

TEST_CASE("zero-marginal columns come back undefined, never zero-filled") {
  const JointDistribution joint(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 2), q(0, 1)}, {q(1, 2), q(0, 1)}});
  const auto rel = sigmax::condition(joint, ConditionDirection::out_given_col);
  CHECK(rel.defined(0));
  CHECK_FALSE(rel.defined(1));
  CHECK_FALSE(rel.fully_defined());
  CHECK(sigmax::validate_relation(rel).all_ok);  // undefined columns are skipped

  const JointDistribution all_zero(
      MeasureKind::probability, kStates, kObs,
      {{q(0, 1), q(0, 1)}, {q(0, 1), q(0, 1)}});
  CHECK(code_of([&] {
          sigmax::condition(all_zero, ConditionDirection::out_given_col);
        }) == Errc::all_zero_given);
}

TEST_CASE("condition then recombine reproduces the joint") {
  const JointDistribution joint(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 8), q(1, 4)}, {q(1, 8), q(1, 2)}});
  const auto rel = sigmax::condition(joint, ConditionDirection::out_given_col);
  const auto given = std::get<ProbabilityDistribution>(sigmax::marginal(joint, Axis::col));
  const auto back = sigmax::product_joint(rel, given);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(back.at(i, j).rational() == joint.at(i, j).rational());
}

TEST_CASE("product form holds for possibility joints") {
  const ConditionalRelation rel(
      MeasureKind::possibility, kFuzzyB, kFuzzyA,
      {{q(1, 1), q(1, 2)}, {q(1, 2), q(1, 1)}});
  const PossibilityDistribution prior(kFuzzyB, {Scalar(1), q(1, 2)}, true);
  const auto joint = sigmax::product_joint(rel, prior);
  CHECK(joint.kind() == MeasureKind::possibility);
  CHECK(joint.at(0, 0).rational() == Rational(1));
  CHECK(joint.at(0, 1).rational() == Rational(1, 4));
  CHECK(joint.at(1, 0).rational() == Rational(1, 2));
  CHECK(joint.at(1, 1).rational() == Rational(1, 2));
  CHECK(joint.normalized());  // peak entry is exactly 1
}

TEST_CASE("recombining over an undefined column needs zero prior weight there") {
  const ConditionalRelation rel(
      MeasureKind::probability, kObs, kStates,
      {{q(1, 2), q(0, 1)}, {q(1, 2), q(0, 1)}}, {true, false});
  const ProbabilityDistribution ok_prior(kObs, {Scalar(1), Scalar(0)});
  CHECK_NOTHROW(sigmax::product_joint(rel, ok_prior));

  const ProbabilityDistribution bad_prior(kObs, {q(1, 2), q(1, 2)});
  CHECK_THROWS_AS(sigmax::product_joint(rel, bad_prior), std::invalid_argument);
}

TEST_CASE("bayes update, exact hand values") {
  const ProbabilityDistribution prior(kStates, {q(1, 2), q(1, 2)});
  // p(obs | state), matrix [out][given]
  const ConditionalRelation likelihood(
      MeasureKind::probability, kStates, kObs,
      {{q(9, 10), q(3, 10)}, {q(1, 10), q(7, 10)}});
  const auto posterior = sigmax::bayes_update(prior, likelihood, "pos");
  CHECK(posterior.values()[0].rational() == Rational(3, 4));
  CHECK(posterior.values()[1].rational() == Rational(1, 4));

  Scalar total;
  for (const auto& v : posterior.values()) total = total + v;
  CHECK(total.rational() == Rational(1));

  CHECK(code_of([&] { sigmax::bayes_update(prior, likelihood, "nope"); }) ==
        Errc::foreign_label);
}

TEST_CASE("zero evidence is an error, not a zero posterior") {
  const ProbabilityDistribution prior(kStates, {Scalar(1), Scalar(0)});
  const ConditionalRelation likelihood(
      MeasureKind::probability, kStates, kObs,
      {{q(0, 1), q(1, 1)}, {q(1, 1), q(0, 1)}});
  // observed "pos" has likelihood 0 under s1, and s2 has no prior mass
  CHECK(code_of([&] { sigmax::bayes_update(prior, likelihood, "pos"); }) ==
        Errc::zero_evidence);
}

TEST_CASE("possibility update renormalizes to peak 1") {
  const PossibilityDistribution prior(kFuzzyA, {Scalar(1), q(3, 5)}, true);
  const ConditionalRelation likelihood(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(2, 5), q(1, 1)}, {q(1, 1), q(1, 2)}});
  const auto posterior = sigmax::poss_update(prior, likelihood, "b1");
  // numerators (2/5, 3/5), peak 3/5
  CHECK(posterior.values()[0].rational() == Rational(2, 3));
  CHECK(posterior.values()[1].rational() == Rational(1));
  CHECK(posterior.normalized());
}

TEST_CASE("an uninformative likelihood column leaves the prior unchanged") {
  const PossibilityDistribution prior(kFuzzyA, {Scalar(1), q(2, 5)}, true);
  const ConditionalRelation ones(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 1), q(1, 1)}, {q(1, 1), q(1, 1)}});
  const auto posterior = sigmax::poss_update(prior, ones, "b2");
  CHECK(posterior.values()[0].rational() == prior.values()[0].rational());
  CHECK(posterior.values()[1].rational() == prior.values()[1].rational());
}

TEST_CASE("updating the innocent prior yields the normalized likelihood column") {
  const auto prior = sigmax::innocent_prior(kFuzzyA);
  const ConditionalRelation likelihood(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 2), q(1, 4)}, {q(1, 1), q(3, 4)}});
  const auto posterior = sigmax::poss_update(prior, likelihood, "b1");
  CHECK(posterior.values()[0].rational() == Rational(1));    // (1/2)/(1/2)
  CHECK(posterior.values()[1].rational() == Rational(1, 2));  // (1/4)/(1/2)
}

TEST_CASE("probability composition is the matrix product over the middle space") {
  const ConditionalRelation first(
      MeasureKind::probability, kStates, kObs,
      {{q(9, 10), q(2, 10)}, {q(1, 10), q(8, 10)}});
  const ConditionalRelation second(
      MeasureKind::probability, kObs, kStates,
      {{q(7, 10), q(3, 10)}, {q(3, 10), q(7, 10)}});
  const auto composed = sigmax::compose(first, second);
  CHECK(composed.given_space() == kStates);
  CHECK(composed.out_space() == kStates);
  CHECK(composed.at(0, 0).rational() == Rational(33, 50));
  CHECK(composed.at(1, 0).rational() == Rational(17, 50));
  CHECK(sigmax::validate_relation(composed).all_ok);
}

TEST_CASE("possibility composition takes the best intermediate path") {
  const ConditionalRelation first(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 1), q(3, 5)}, {q(2, 5), q(1, 1)}});
  const ConditionalRelation second(
      MeasureKind::possibility, kFuzzyB, kFuzzyC,
      {{q(1, 1), q(1, 2)}, {q(1, 4), q(1, 1)}});
  const auto composed = sigmax::compose(first, second);
  CHECK(composed.at(0, 0).rational() == Rational(1));      // max(1*1, 1/2*2/5)
  CHECK(composed.at(1, 0).rational() == Rational(2, 5));   // max(1/4*1, 1*2/5)
  CHECK(composed.at(0, 1).rational() == Rational(3, 5));   // max(1*3/5, 1/2*1)
  CHECK(composed.at(1, 1).rational() == Rational(1));      // max(1/4*3/5, 1*1)
}

TEST_CASE("composing with the identity changes nothing") {
  const ConditionalRelation identity(
      MeasureKind::possibility, kFuzzyA, kFuzzyA,
      {{q(1, 1), q(0, 1)}, {q(0, 1), q(1, 1)}});
  const ConditionalRelation rel(
      MeasureKind::possibility, kFuzzyA, kFuzzyA,
      {{q(1, 1), q(1, 3)}, {q(2, 3), q(1, 1)}});
  const auto left = sigmax::compose(identity, rel);
  const auto right = sigmax::compose(rel, identity);
  for (std::size_t o = 0; o < 2; ++o) {
    for (std::size_t g = 0; g < 2; ++g) {
      CHECK(left.at(o, g).rational() == rel.at(o, g).rational());
      CHECK(right.at(o, g).rational() == rel.at(o, g).rational());
    }
  }
}

TEST_CASE("composition carries undefined columns through reachable paths") {
  // first's own undefined column stays undefined after composition
  const ConditionalRelation hole_in_first(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 1), q(0, 1)}, {q(1, 2), q(0, 1)}}, {true, false});
  const ConditionalRelation full_second(
      MeasureKind::possibility, kFuzzyB, kFuzzyC,
      {{q(1, 1), q(1, 1)}, {q(1, 2), q(1, 2)}});
  const auto composed = sigmax::compose(hole_in_first, full_second);
  CHECK(composed.defined(0));
  CHECK_FALSE(composed.defined(1));

  // second is undefined at b2; a1 reaches b2 with positive weight and is
  // tainted, a2 never touches b2 and survives
  const ConditionalRelation first(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 1), q(1, 1)}, {q(1, 2), q(0, 1)}});
  const ConditionalRelation hole_in_second(
      MeasureKind::possibility, kFuzzyB, kFuzzyC,
      {{q(1, 1), q(0, 1)}, {q(1, 2), q(0, 1)}}, {true, false});
  const auto tainted = sigmax::compose(first, hole_in_second);
  CHECK_FALSE(tainted.defined(0));
  CHECK(tainted.defined(1));
  CHECK(tainted.at(0, 1).rational() == Rational(1));  // b1 path only
}

TEST_CASE("mixed kinds and mismatched spaces are rejected") {
  const ConditionalRelation prob(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
  const ConditionalRelation poss(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 1), q(1, 1)}, {q(1, 2), q(1, 2)}});
  CHECK(code_of([&] { sigmax::compose(prob, poss); }) == Errc::kind_mismatch);

  const ConditionalRelation wrong_middle(
      MeasureKind::possibility, kFuzzyC, kFuzzyB,
      {{q(1, 1), q(1, 1)}, {q(1, 2), q(1, 2)}});
  CHECK(code_of([&] { sigmax::compose(poss, wrong_middle); }) == Errc::space_mismatch);

  // the prior lives on A but wrong_middle conditions on C
  const PossibilityDistribution fuzzy_prior(kFuzzyA, {Scalar(1), Scalar(1)}, true);
  CHECK(code_of([&] { sigmax::poss_update(fuzzy_prior, wrong_middle, "b1"); }) ==
        Errc::space_mismatch);
}

TEST_CASE("joint validation reports totals and witnesses") {
  const JointDistribution good(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 8), q(1, 4)}, {q(1, 8), q(1, 2)}});
  const auto ok = sigmax::validate_joint(good);
  CHECK(ok.passed);
  CHECK(ok.total.rational() == Rational(1));
  CHECK(ok.witness.empty());

  const JointDistribution short_total(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 8), q(1, 8)}, {q(1, 8), q(1, 8)}});
  const auto bad = sigmax::validate_joint(short_total);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.witness.empty());

  // flagged normalized but no entry reaches 1
  const JointDistribution flat(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}, true);
  CHECK_FALSE(sigmax::validate_joint(flat).passed);
  const JointDistribution declared(
      MeasureKind::possibility, kFuzzyA, kFuzzyB,
      {{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}, false);
  CHECK(sigmax::validate_joint(declared).passed);
}

TEST_CASE("relation validation checks defined columns only") {
  const ConditionalRelation broken(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 2), q(1, 4)}, {q(1, 4), q(1, 4)}});
  const auto report = sigmax::validate_relation(broken);
  CHECK_FALSE(report.all_ok);
  CHECK_FALSE(report.columns[0].ok);  // sums to 3/4
  CHECK_FALSE(report.columns[1].ok);  // sums to 1/2

  const ConditionalRelation with_hole(
      MeasureKind::probability, kStates, kObs,
      {{q(1, 2), q(9, 9)}, {q(1, 2), q(9, 9)}}, {true, false});
  CHECK(sigmax::validate_relation(with_hole).all_ok);
}
