#pragma once
// JSON in and out for every value the CLI touches. Output uses ordered maps
// and a fixed field layout, so the same value always serializes to the same
// bytes. Exact rationals survive the round trip as {"num", "den"} pairs; a
// plain JSON number always means a real. Parsers name the offending field in
// their diagnostics and throw ParseError, never assert.

#include <string>
#include <variant>

#include "json.hpp"
#include "sigmax/disjunction.hpp"
#include "sigmax/fixtures.hpp"
#include "sigmax/inference.hpp"
#include "sigmax/intension.hpp"
#include "sigmax/measures.hpp"
#include "sigmax/oracle.hpp"
#include "sigmax/sweeps.hpp"

namespace sigmax {

using Json = nlohmann::ordered_json;

// ---- rendering ----

Json to_json(const Rational& q);   // {"num", "den", "decimal"}
Json to_json(const Scalar& s);     // rational object when exact, number otherwise

Json to_json(const SampleSpace& space);
Json to_json(const IntensionSet& f);
Json to_json(const GridSpec& grid);
Json to_json(const EllipseSpec& e);
Json to_json(const Fixture& fx);

Json to_json(const FrequencyCounts& counts);
Json to_json(const ProbabilityDistribution& dist);
Json to_json(const PossibilityDistribution& dist);
Json to_json(const ConditionalRelation& rel);
Json to_json(const JointDistribution& joint);

Json to_json(const PairClassReport& report);
Json to_json(const MaxitivityReport& report);
Json to_json(const ExtractionReport& report);
Json to_json(const ProbUnionReport& report);
Json to_json(const ProbAxiomReport& report);
Json to_json(const PossAxiomReport& report);
Json to_json(const JointReport& report);
Json to_json(const RelationReport& report);
Json to_json(const OracleVerdict& verdict);
Json to_json(const SweepResult& result);

// ---- parsing ----

using DistributionVariant = std::variant<ProbabilityDistribution, PossibilityDistribution>;

Scalar scalar_from_json(const Json& j, const std::string& where);
SampleSpace space_from_json(const Json& j);
IntensionSet intension_from_json(const Json& j);
GridSpec grid_from_json(const Json& j);
DistributionVariant distribution_from_json(const Json& j);
ConditionalRelation relation_from_json(const Json& j);
JointDistribution joint_from_json(const Json& j);
Fixture fixture_from_json(const Json& j);
FrequencyCounts counts_from_json(const Json& j);

// What a loaded document is, judged by its keys.
enum class DocKind { space, intension, distribution, relation, joint, fixture, counts, unknown };

DocKind detect_document(const Json& j);

// Reads and parses a file; diagnostics carry the path.
Json load_json_file(const std::string& path);

}  // namespace sigmax
