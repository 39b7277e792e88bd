#include "doctest.h"

#include <string>
#include <vector>

#include "sigmax/disjunction.hpp"
#include "sigmax/fixtures.hpp"
#include "sigmax/oracle.hpp"
#include "test_support.hpp"

using sigmax::ConditionalRelation;
using sigmax::Errc;
using sigmax::IntensionSet;
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

}  // namespace

TEST_CASE("event-measure oracle agrees on exact and real distributions") {
  const SampleSpace s(SpaceKind::random, {"a", "b", "c"});
  const auto exact = sigmax::oracle_event_measures(
      ProbabilityDistribution(s, {q(1, 2), q(1, 3), q(1, 6)}));
  CHECK(exact.passed);
  CHECK(exact.claim_id == "event-measures/probability");
  CHECK(exact.witness.empty());

  const auto real = sigmax::oracle_event_measures(
      ProbabilityDistribution(s, {Scalar::real(0.5), Scalar::real(0.3), Scalar::real(0.2)}));
  CHECK(real.passed);

  const SampleSpace f(SpaceKind::fuzzy, {"x", "y", "z"});
  const auto poss = sigmax::oracle_event_measures(
      PossibilityDistribution(f, {Scalar(1), q(1, 2), q(1, 2)}, true));
  CHECK(poss.passed);
  CHECK(poss.claim_id == "event-measures/possibility");
}

TEST_CASE("event-measure oracle stays within its enumeration budget") {
  std::vector<std::string> labels;
  std::vector<Scalar> values;
  for (int i = 0; i < 11; ++i) {
    labels.push_back("l" + std::to_string(i));
    values.push_back(q(1, 11));
  }
  const ProbabilityDistribution wide(SampleSpace(SpaceKind::random, labels), values);
  CHECK(code_of([&] { sigmax::oracle_event_measures(wide); }) == Errc::space_too_large);
}

TEST_CASE("union oracle re-derives the report from raw atoms") {
  const IntensionSet fX("u", {{0, 2}, {1, 3}, {2, 1}});
  const IntensionSet fi("u", {{0, 1}, {1, 3}});
  const IntensionSet fj("u", {{1, 1}, {2, 5}});
  const auto verdict = sigmax::oracle_union_possibility(fX, fi, fj);
  CHECK(verdict.passed);
  CHECK(verdict.claim_id == "union-possibility");
  CHECK(verdict.witness.empty());
}

TEST_CASE("union oracle covers fixture geometry") {
  const auto fx = sigmax::generate_fixture("example-5.2", sigmax::GridSpec{});
  for (std::size_t i = 0; i < fx.concepts.size(); ++i) {
    for (std::size_t j = i + 1; j < fx.concepts.size(); ++j) {
      const auto verdict = sigmax::oracle_union_possibility(
          fx.reference.intension, fx.concepts[i].intension, fx.concepts[j].intension);
      CHECK(verdict.passed);
    }
  }
}

TEST_CASE("union oracle propagates input errors") {
  const IntensionSet fX("u", {{0, 1}});
  const IntensionSet other("v", {{0, 1}});
  CHECK(code_of([&] { sigmax::oracle_union_possibility(fX, other, other); }) ==
        Errc::universe_mismatch);
  CHECK(code_of([&] {
          sigmax::oracle_union_possibility(IntensionSet("u", {}), fX, fX);
        }) == Errc::empty_reference);
}

TEST_CASE("composition oracle re-walks the intermediate space") {
  const SampleSpace a(SpaceKind::fuzzy, {"a1", "a2"});
  const SampleSpace b(SpaceKind::fuzzy, {"b1", "b2", "b3"});
  const SampleSpace c(SpaceKind::fuzzy, {"c1", "c2"});
  const ConditionalRelation first(
      MeasureKind::possibility, a, b,
      {{q(1, 1), q(1, 3)}, {q(1, 2), q(1, 1)}, {q(1, 4), q(1, 2)}});
  const ConditionalRelation second(
      MeasureKind::possibility, b, c,
      {{q(1, 1), q(1, 2), q(1, 3)}, {q(1, 4), q(1, 1), q(1, 1)}});
  const auto verdict = sigmax::oracle_composition(first, second);
  CHECK(verdict.passed);
  CHECK(verdict.claim_id == "composition/possibility");

  const SampleSpace ra(SpaceKind::random, {"a1", "a2"});
  const SampleSpace rb(SpaceKind::random, {"b1", "b2"});
  const ConditionalRelation p1(MeasureKind::probability, ra, rb,
                               {{q(1, 4), q(2, 3)}, {q(3, 4), q(1, 3)}});
  const ConditionalRelation p2(MeasureKind::probability, rb, ra,
                               {{q(1, 2), q(1, 5)}, {q(1, 2), q(4, 5)}});
  const auto prob_verdict = sigmax::oracle_composition(p1, p2);
  CHECK(prob_verdict.passed);
  CHECK(prob_verdict.claim_id == "composition/probability");
}

TEST_CASE("composition oracle rejects oversized and mismatched inputs") {
  std::vector<std::string> labels;
  for (int i = 0; i < 6; ++i) labels.push_back("l" + std::to_string(i));
  const SampleSpace big(SpaceKind::fuzzy, labels);
  const std::vector<std::vector<Scalar>> ones(6, std::vector<Scalar>(6, Scalar(1)));
  const ConditionalRelation wide(MeasureKind::possibility, big, big, ones);
  CHECK(code_of([&] { sigmax::oracle_composition(wide, wide); }) == Errc::space_too_large);
}
