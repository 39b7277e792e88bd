#include "doctest.h"

#include <vector>

#include "sigmax/disjunction.hpp"
#include "sigmax/fixtures.hpp"
#include "test_support.hpp"

using sigmax::Errc;
using sigmax::GridSpec;
using sigmax::PairClass;
using sigmax::Rational;
using testsupport::code_of;

namespace {

PairClass class_of(const sigmax::Fixture& fx, std::size_t i, std::size_t j) {
  return sigmax::classify_pair(fx.reference.intension, fx.concepts[i].intension,
                               fx.concepts[j].intension);
}

Rational degree_of(const sigmax::Fixture& fx, std::size_t i) {
  return sigmax::subsethood(fx.reference.intension, fx.concepts[i].intension);
}

}  // namespace

TEST_CASE("the fixture catalogue") {
  const auto& names = sigmax::fixture_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "example-5.1");
  CHECK(code_of([] { sigmax::generate_fixture("nope", GridSpec{}); }) ==
        Errc::unknown_fixture);
}

TEST_CASE("age scene: two nested pairs and one exclusive pair") {
  const auto fx = sigmax::generate_fixture("example-5.1", GridSpec{});
  REQUIRE(fx.concepts.size() == 3);
  CHECK(fx.concepts[0].ellipse.label == "YOUTH");
  CHECK(fx.concepts[1].ellipse.label == "MID");
  CHECK(fx.concepts[2].ellipse.label == "AGED");

  CHECK(class_of(fx, 0, 1) == PairClass::projection_nested);
  CHECK(class_of(fx, 1, 2) == PairClass::projection_nested);
  CHECK(class_of(fx, 0, 2) == PairClass::projection_exclusive);

  CHECK(degree_of(fx, 1) == Rational(1));
  CHECK(degree_of(fx, 0) > Rational(0));
  CHECK(degree_of(fx, 2) > Rational(0));

  // the nested unions resolve by max, the exclusive union by sum
  const auto ym = sigmax::exact_union_possibility(
      fx.reference.intension, fx.concepts[0].intension, fx.concepts[1].intension);
  CHECK(ym.pi_union_exact == ym.pi_union_max);
  const auto ya = sigmax::exact_union_possibility(
      fx.reference.intension, fx.concepts[0].intension, fx.concepts[2].intension);
  CHECK(ya.pi_union_exact == ya.pi_i + ya.pi_j);
}

TEST_CASE("profession scene: the general pair keeps a positive max shortfall") {
  const auto fx = sigmax::generate_fixture("example-5.2", GridSpec{});
  REQUIRE(fx.concepts.size() == 3);
  CHECK(fx.concepts[0].ellipse.label == "EXPERT");
  CHECK(fx.concepts[1].ellipse.label == "SCHOLAR");
  CHECK(fx.concepts[2].ellipse.label == "RESEARCHER");

  CHECK(class_of(fx, 0, 2) == PairClass::projection_nested);
  CHECK(class_of(fx, 1, 2) == PairClass::projection_nested);
  CHECK(class_of(fx, 0, 1) == PairClass::general);

  CHECK(degree_of(fx, 2) == Rational(1));

  const auto es = sigmax::exact_union_possibility(
      fx.reference.intension, fx.concepts[0].intension, fx.concepts[1].intension);
  CHECK(es.pi_union_sum == es.pi_i + es.pi_j - es.pi_intersection);
  CHECK(es.pi_union_exact == es.pi_union_sum);
  CHECK(es.max_error > Rational(0));

  // both pairs against the containing concept resolve by max
  for (std::size_t i : {std::size_t{0}, std::size_t{1}}) {
    const auto rep = sigmax::exact_union_possibility(
        fx.reference.intension, fx.concepts[i].intension, fx.concepts[2].intension);
    CHECK(rep.max_error == Rational(0));
    CHECK(rep.pi_union_exact == Rational(1));
  }
}

TEST_CASE("age grades hit exact half, one, zero") {
  const auto fx = sigmax::generate_fixture("age-groups", GridSpec{});
  const auto degrees = sigmax::compatibility_distribution(fx.reference.intension,
                                                          fx.concept_list());
  CHECK(degrees.values()[0].rational() == Rational(1, 2));
  CHECK(degrees.values()[1].rational() == Rational(1));
  CHECK(degrees.values()[2].rational() == Rational(0));
  CHECK(degrees.normalized());
  CHECK(sigmax::is_exhaustive(fx.reference.intension, fx.concept_list()));

  const auto extraction =
      sigmax::verify_exact_extraction(fx.reference.intension, fx.concept_list());
  CHECK(extraction.passed);
  CHECK(extraction.union_possibility == Rational(1));
  CHECK(extraction.argmax_label == "MID");
}

TEST_CASE("overlap scenes split on where the concepts meet") {
  const auto inside = sigmax::generate_fixture("fig-3a", GridSpec{});
  CHECK(sigmax::is_fuzzy_setup(inside.reference.intension, inside.concept_list()).fuzzy);

  const auto outside = sigmax::generate_fixture("fig-3b", GridSpec{});
  CHECK_FALSE(
      sigmax::is_fuzzy_setup(outside.reference.intension, outside.concept_list()).fuzzy);
  // the concepts do overlap, just not inside the reference
  CHECK_FALSE(sigmax::set_algebra(outside.concepts[0].intension,
                                  outside.concepts[1].intension)
                  .intersection.empty());
  CHECK(class_of(outside, 0, 1) == PairClass::projection_exclusive);
  CHECK(degree_of(outside, 0) > Rational(0));
  CHECK(degree_of(outside, 1) > Rational(0));
}

TEST_CASE("innocent scene: every concept swallows the reference") {
  const auto fx = sigmax::generate_fixture("fig-4d", GridSpec{});
  CHECK(degree_of(fx, 0) == Rational(1));
  CHECK(degree_of(fx, 1) == Rational(1));
  // equal projections dominate each other
  CHECK(class_of(fx, 0, 1) == PairClass::projection_nested);
}

TEST_CASE("geometry scales with the grid") {
  GridSpec fine;
  fine.cols = 128;
  fine.rows = 128;
  const auto fx = sigmax::generate_fixture("example-5.1", fine);
  CHECK(class_of(fx, 0, 1) == PairClass::projection_nested);
  CHECK(class_of(fx, 0, 2) == PairClass::projection_exclusive);
  CHECK(degree_of(fx, 1) == Rational(1));
}

TEST_CASE("a grid too coarse for the scene fails loudly") {
  GridSpec tiny;
  tiny.cols = 2;
  tiny.rows = 2;
  CHECK(code_of([&] { sigmax::generate_fixture("example-5.1", tiny); }) ==
        Errc::fixture_invalid);
}

TEST_CASE("fixtures carry consistent universes") {
  const auto fx = sigmax::generate_fixture("fig-4d", GridSpec{});
  CHECK(fx.reference.intension.universe() == fx.grid.universe_id());
  for (const auto& member : fx.concepts) {
    CHECK(member.intension.universe() == fx.grid.universe_id());
  }
}
