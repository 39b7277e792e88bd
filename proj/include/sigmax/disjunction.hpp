#pragma once
// Disjunction analysis. For possibility the interesting question is what
// pi(xi u xj) really is when computed from intensions, versus what the max
// operator and the additive (inclusion-exclusion) form give. Pairs are
// classified by how their projections into the reference intension fX relate;
// nested pairs make max exact, exclusive pairs make the plain sum exact, and
// everything is bracketed by max below and sum above.

#include <string>
#include <vector>

#include "sigmax/intension.hpp"
#include "sigmax/measures.hpp"
#include "sigmax/rational.hpp"
#include "sigmax/scalar.hpp"
#include "sigmax/spaces.hpp"

namespace sigmax {

enum class PairClass {
  mutually_exclusive,    // random-space events with empty intersection
  projection_exclusive,  // projections into fX have disjoint supports
  projection_nested,     // one projection weight-dominates the other
  general,
};

const char* pair_class_name(PairClass c);

// Classification works on the projections gi = fX n fi, gj = fX n fj.
// Nested is checked first: when a projection is empty the pair satisfies both
// definitions and nested wins (max absorbs the zero and stays exact).
PairClass classify_pair(const IntensionSet& fX, const IntensionSet& fi,
                        const IntensionSet& fj);

struct PairClassReport {
  PairClass cls = PairClass::general;
  Rational pi_i;
  Rational pi_j;
  Rational pi_intersection;   // degree of fX in fi n fj
  Rational pi_union_exact;    // degree of fX in fi u fj, the ground truth
  Rational pi_union_max;      // max(pi_i, pi_j)
  Rational pi_union_sum;      // pi_i + pi_j - pi_intersection
  Rational max_error;         // pi_union_exact - pi_union_max, always >= 0
};

// pi_union_exact is computed along two independent routes that must agree
// exactly: subsethood against the union intension, and inclusion-exclusion
// over the three subsethood values. A mismatch is a set-algebra bug, not an
// input problem, and raises InternalDisagreement.
PairClassReport exact_union_possibility(const IntensionSet& fX, const IntensionSet& fi,
                                        const IntensionSet& fj);

struct ProbUnionReport {
  Scalar p_a;
  Scalar p_b;
  Scalar p_intersection;
  Scalar p_union;             // p_a + p_b - p_intersection
  bool bounds_ok = false;     // max(p_a,p_b) <= p_union <= p_a + p_b
  bool additive_case = false; // intersection carries no mass
  bool nested_case = false;   // one event inside the other; union collapses to max
};

ProbUnionReport prob_union_report(const ProbabilityDistribution& dist, const Event& a,
                                  const Event& b);

struct PairVerdict {
  std::string label_i;
  std::string label_j;
  PairClassReport report;
};

struct MaxitivityReport {
  std::vector<PairVerdict> pairs;  // all unordered concept pairs, list order
  bool passed = false;             // every nested pair has max_error == 0
};

// Checks that max is exact on every projection-nested pair; non-nested pairs
// are reported with their error but do not affect the verdict.
MaxitivityReport verify_exact_maxitivity(const IntensionSet& fX,
                                         const std::vector<Concept>& concepts);

struct ExtractionReport {
  Rational union_possibility;  // degree of fX in the union of all concepts
  Rational max_possibility;    // largest per-concept degree
  std::string argmax_label;    // first label attaining the max, list order
  bool passed = false;         // both values equal 1
};

// Exhaustive setups admit exact feature extraction: the whole-space
// possibility equals the best single concept's degree, both exactly 1.
// Requires is_exhaustive(fX, concepts); otherwise NotExhaustive.
ExtractionReport verify_exact_extraction(const IntensionSet& fX,
                                         const std::vector<Concept>& concepts);

}  // namespace sigmax
