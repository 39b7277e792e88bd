#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <variant>
#include <vector>

#include "sigmax/fixtures.hpp"
#include "sigmax/serialize.hpp"
#include "test_support.hpp"

using sigmax::ConditionalRelation;
using sigmax::DocKind;
using sigmax::Errc;
using sigmax::IntensionSet;
using sigmax::Json;
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

}  // namespace

TEST_CASE("scalars serialize by exactness") {
  const Json exact = sigmax::to_json(q(1, 3));
  CHECK(exact["num"] == 1);
  CHECK(exact["den"] == 3);
  CHECK(exact["decimal"].is_number_float());

  const Json real = sigmax::to_json(Scalar::real(0.25));
  CHECK(real.is_number_float());
  CHECK(real.get<double>() == 0.25);
}

TEST_CASE("scalar parsing keeps integers and num/den pairs exact") {
  CHECK(sigmax::scalar_from_json(Json(1), "t").exact());
  CHECK(sigmax::scalar_from_json(Json(1), "t").rational() == Rational(1));
  CHECK_FALSE(sigmax::scalar_from_json(Json(0.5), "t").exact());
  const auto parsed = sigmax::scalar_from_json(Json{{"num", 2}, {"den", 6}}, "t");
  CHECK(parsed.rational() == Rational(1, 3));
  CHECK(code_of([] {
          sigmax::scalar_from_json(Json{{"num", 1}, {"den", 0}}, "t");
        }) == Errc::parse_error);
  CHECK(code_of([] { sigmax::scalar_from_json(Json("x"), "t"); }) == Errc::parse_error);
}

TEST_CASE("space and intension round trips") {
  const SampleSpace space(SpaceKind::fuzzy, {"x", "y"});
  CHECK(sigmax::space_from_json(sigmax::to_json(space)) == space);

  const IntensionSet f("u", {{0, 2}, {5, 1}});
  CHECK(sigmax::intension_from_json(sigmax::to_json(f)) == f);
}

TEST_CASE("distribution round trips preserve kind, values, flags") {
  const ProbabilityDistribution p(SampleSpace(SpaceKind::random, {"a", "b"}),
                                  {q(1, 4), q(3, 4)});
  const auto p2 = std::get<ProbabilityDistribution>(
      sigmax::distribution_from_json(sigmax::to_json(p)));
  CHECK(p2.space() == p.space());
  CHECK(p2.values()[0].rational() == Rational(1, 4));

  const PossibilityDistribution pi(SampleSpace(SpaceKind::fuzzy, {"a", "b"}),
                                   {Scalar(1), q(1, 2)}, true);
  const auto pi2 = std::get<PossibilityDistribution>(
      sigmax::distribution_from_json(sigmax::to_json(pi)));
  CHECK(pi2.normalized());
  CHECK(pi2.values()[1].rational() == Rational(1, 2));
}

TEST_CASE("possibility distributions must declare their normalization") {
  Json j = sigmax::to_json(PossibilityDistribution(
      SampleSpace(SpaceKind::fuzzy, {"a"}), {Scalar(1)}, true));
  j.erase("normalized");
  CHECK(code_of([&] { sigmax::distribution_from_json(j); }) == Errc::parse_error);
}

TEST_CASE("relation round trip keeps undefined columns") {
  const ConditionalRelation rel(
      MeasureKind::probability, SampleSpace(SpaceKind::random, {"g1", "g2"}),
      SampleSpace(SpaceKind::random, {"o1", "o2"}),
      {{q(1, 2), q(0, 1)}, {q(1, 2), q(0, 1)}}, {true, false});
  const auto rel2 = sigmax::relation_from_json(sigmax::to_json(rel));
  CHECK(rel2.kind() == MeasureKind::probability);
  CHECK(rel2.given_space() == rel.given_space());
  CHECK(rel2.defined(0));
  CHECK_FALSE(rel2.defined(1));
  CHECK(rel2.at(0, 0).rational() == Rational(1, 2));
}

TEST_CASE("joint round trip keeps the possibility normalization flag") {
  const JointDistribution joint(
      MeasureKind::possibility, SampleSpace(SpaceKind::fuzzy, {"r1", "r2"}),
      SampleSpace(SpaceKind::fuzzy, {"c1", "c2"}),
      {{q(1, 2), q(1, 4)}, {q(1, 4), q(1, 2)}}, false);
  const auto j2 = sigmax::joint_from_json(sigmax::to_json(joint));
  CHECK(j2.kind() == MeasureKind::possibility);
  CHECK_FALSE(j2.normalized());
  CHECK(j2.at(1, 0).rational() == Rational(1, 4));
}

TEST_CASE("fixture round trip") {
  const auto fx = sigmax::generate_fixture("fig-4d", sigmax::GridSpec{});
  const auto fx2 = sigmax::fixture_from_json(sigmax::to_json(fx));
  CHECK(fx2.name == fx.name);
  CHECK(fx2.reference.intension == fx.reference.intension);
  REQUIRE(fx2.concepts.size() == fx.concepts.size());
  for (std::size_t i = 0; i < fx.concepts.size(); ++i) {
    CHECK(fx2.concepts[i].ellipse.label == fx.concepts[i].ellipse.label);
    CHECK(fx2.concepts[i].intension == fx.concepts[i].intension);
  }
}

TEST_CASE("counts round trip") {
  const sigmax::FrequencyCounts counts({{"a", 3}, {"b", 0}, {"c", 7}});
  const auto back = sigmax::counts_from_json(sigmax::to_json(counts));
  CHECK(back.counts() == counts.counts());
  CHECK(back.total() == 10);
}

TEST_CASE("document detection keys off the shape") {
  CHECK(sigmax::detect_document(sigmax::to_json(IntensionSet("u", {{0, 1}}))) ==
        DocKind::intension);
  CHECK(sigmax::detect_document(sigmax::to_json(SampleSpace(SpaceKind::random, {"a"}))) ==
        DocKind::space);
  CHECK(sigmax::detect_document(sigmax::to_json(ProbabilityDistribution(
            SampleSpace(SpaceKind::random, {"a"}), {Scalar(1)}))) == DocKind::distribution);
  CHECK(sigmax::detect_document(
            sigmax::to_json(sigmax::generate_fixture("fig-4d", sigmax::GridSpec{}))) ==
        DocKind::fixture);
  CHECK(sigmax::detect_document(Json::object()) == DocKind::unknown);
  CHECK(sigmax::detect_document(Json{{"counts", Json::object()}, {"total", 0}}) ==
        DocKind::counts);
}

TEST_CASE("serialization is deterministic") {
  const auto fx = sigmax::generate_fixture("example-5.1", sigmax::GridSpec{});
  CHECK(sigmax::to_json(fx).dump(2) == sigmax::to_json(fx).dump(2));

  // key order is fixed by construction order, independent of label content
  const Json j = sigmax::to_json(ProbabilityDistribution(
      SampleSpace(SpaceKind::random, {"zz", "aa"}), {q(1, 2), q(1, 2)}));
  CHECK(j.begin().key() == "kind");
}

TEST_CASE("file loading failures are parse errors") {
  CHECK(code_of([] { sigmax::load_json_file("/nonexistent/path.json"); }) ==
        Errc::parse_error);

  const std::string path = "/tmp/sigmax_test_bad.json";
  std::ofstream(path) << "{ not json";
  CHECK(code_of([&] { sigmax::load_json_file(path); }) == Errc::parse_error);
  std::remove(path.c_str());

  const std::string good = "/tmp/sigmax_test_good.json";
  std::ofstream(good) << R"({"kind":"random","labels":["a","b"]})";
  const Json doc = sigmax::load_json_file(good);
  CHECK(sigmax::detect_document(doc) == DocKind::space);
  std::remove(good.c_str());
}
