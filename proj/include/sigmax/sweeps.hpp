#pragma once
// Seeded randomized sweeps: generate distributions, intensions, joints and
// relations, then hold every generated case against the brute-force oracles
// and the exactness identities. One result per sweep; a sweep fails when any
// case does, and the witness pins down the first failing case for replay.
// Everything is deterministic in the seed.

#include <cstdint>
#include <string>
#include <vector>

namespace sigmax {

struct SweepResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string witness;  // first failing case, empty when clean

  bool passed() const { return cases > 0 && failures == 0; }
};

// Random probability and normalized possibility distributions (N <= 6):
// axiom reports, event-measure oracle, and union bounds on sampled event
// pairs. count cases of each kind.
SweepResult sweep_event_axioms(int count, std::uint64_t seed);

// Random weighted atom triples: exact union bracket, per-class identities,
// positive-degree consequence of a non-empty triple intersection, union oracle.
SweepResult sweep_intension_unions(int count, std::uint64_t seed);

// Random ellipse triples rasterized on a 64x64 grid, checked via the union
// oracle (which re-checks the bracket and per-class identities).
SweepResult sweep_ellipse_unions(int count, std::uint64_t seed);

// Random joints of both kinds (spaces <= 4): conditioning then product-form
// recombination must reproduce the joint along both axes.
SweepResult sweep_inference_roundtrip(int count, std::uint64_t seed);

// Random relation chains of both kinds: composition oracle on each link and
// associativity of the three-way chain.
SweepResult sweep_composition(int count, std::uint64_t seed);

// Random priors and likelihood relations: posterior mass exactly 1 for the
// additive rule, posterior peak exactly 1 for the max rule.
SweepResult sweep_updates(int count, std::uint64_t seed);

// Normalized possibility distributions with at least two strictly positive
// values always have total mass > 1, so additive disjunction cannot be
// consistent on a fuzzy sample space.
SweepResult sweep_sigma_triviality(int count, std::uint64_t seed);

// Every sweep at its acceptance-scale case count.
std::vector<SweepResult> run_all_sweeps(std::uint64_t seed);

}  // namespace sigmax
