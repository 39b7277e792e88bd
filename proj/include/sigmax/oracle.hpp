#pragma once
// Brute-force re-derivations of every exact claim, kept deliberately free of
// the library's own measure/union/compose helpers: events are walked as raw
// label subsets, intensions as raw atom lists, compositions as explicit
// loops over the intermediate variable. A verdict failure means the library
// and the enumeration disagree, and the witness names the first mismatch.

#include <string>

#include "sigmax/inference.hpp"
#include "sigmax/intension.hpp"
#include "sigmax/measures.hpp"

namespace sigmax {

// Agreement tolerance for real-valued oracle comparisons; rational values
// are compared exactly.
inline constexpr double kOracleTolerance = 1e-12;

struct OracleVerdict {
  std::string claim_id;
  bool passed = false;
  std::string witness;  // first counterexample, empty exactly when passed
};

// Recomputes all 2^N event measures from the elementary values and checks
// both agreement with the event-measure functions and the disjoint-pair
// additivity (probability) or all-pair maxitivity (possibility) of the
// recomputed values themselves.
OracleVerdict oracle_event_measures(const ProbabilityDistribution& dist);
OracleVerdict oracle_event_measures(const PossibilityDistribution& dist);

// Recomputes |fX n (fi u fj)| / |fX| atom by atom, with no set algebra and no
// inclusion-exclusion, and compares exactly against exact_union_possibility;
// also re-checks the max/sum bracket and the per-class exact identities.
OracleVerdict oracle_union_possibility(const IntensionSet& fX, const IntensionSet& fi,
                                       const IntensionSet& fj);

// Recomputes every composed entry by an explicit loop over the intermediate
// variable and compares against compose().
OracleVerdict oracle_composition(const ConditionalRelation& first,
                                 const ConditionalRelation& second);

}  // namespace sigmax
