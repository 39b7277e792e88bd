#pragma once
// Concept intensions as finite weighted atom sets. The measure |f| is the sum
// of atom weights; intersection/union take per-atom min/max so that
// |f u g| + |f n g| = |f| + |g| holds exactly in integer arithmetic, and every
// subsethood/similarity value is an exact rational.
//
// An ellipse rasterizer turns geometric scenes into intension fixtures: atoms
// are grid cells whose centers fall inside the ellipse, weight 1 each.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sigmax/error.hpp"
#include "sigmax/measures.hpp"
#include "sigmax/rational.hpp"

namespace sigmax {

class IntensionSet {
 public:
  using AtomEntry = std::pair<std::int64_t, std::int64_t>;  // (atom id, weight > 0)

  IntensionSet() = default;
  // Atoms may arrive in any order; they are kept sorted by id. Weights must be
  // strictly positive and ids nonnegative and distinct.
  IntensionSet(std::string universe, std::vector<AtomEntry> atoms);

  const std::string& universe() const { return universe_; }
  const std::vector<AtomEntry>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  // Weight of an atom, 0 when absent.
  std::int64_t weight_of(std::int64_t id) const;

  friend bool operator==(const IntensionSet& a, const IntensionSet& b) {
    return a.universe_ == b.universe_ && a.atoms_ == b.atoms_;
  }

 private:
  std::string universe_;
  std::vector<AtomEntry> atoms_;
};

struct Concept {
  std::string label;
  IntensionSet intension;
};

// Sum of atom weights; 0 for the empty intension.
std::int64_t measure(const IntensionSet& f);

struct IntensionAlgebra {
  IntensionSet intersection;  // per-atom min
  IntensionSet union_set;     // per-atom max
  IntensionSet difference;    // per-atom saturating subtraction
};

IntensionAlgebra set_algebra(const IntensionSet& f, const IntensionSet& g);

// True when every atom of f has weight <= its weight in g.
bool weight_dominated(const IntensionSet& f, const IntensionSet& g);

// |fX n fC| / |fX| as an exact reduced rational in [0,1].
Rational subsethood(const IntensionSet& fX, const IntensionSet& fC);

// |f n g| / |f u g|.
Rational similarity(const IntensionSet& f, const IntensionSet& g);

// |u . v| / (||u|| ||v||), in [0,1].
double cosine(const std::vector<double>& u, const std::vector<double>& v);

// pi(x_i) = subsethood(fX, f_{x_i}) over a fuzzy space built from the concept
// labels; the result is flagged normalized exactly when some value reaches 1.
PossibilityDistribution compatibility_distribution(const IntensionSet& fX,
                                                   const std::vector<Concept>& concepts);

struct FuzzySetupResult {
  bool fuzzy = false;
  std::string witness_i;  // first witnessing pair in concept-list order
  std::string witness_j;
};

// True iff some concept pair has a non-empty triple intersection with fX.
FuzzySetupResult is_fuzzy_setup(const IntensionSet& fX, const std::vector<Concept>& concepts);

// True iff some concept contains fX's weighted content entirely.
bool is_exhaustive(const IntensionSet& fX, const std::vector<Concept>& concepts);

struct EllipseSpec {
  double center_x = 0.0;
  double center_y = 0.0;
  double semi_axis_x = 1.0;
  double semi_axis_y = 1.0;
  double rotation = 0.0;  // radians
  std::string label;
};

struct GridSpec {
  int cols = 64;
  int rows = 64;
  double cell_size = 1.0;
  double origin_x = 0.0;
  double origin_y = 0.0;

  // Canonical universe identifier; intensions rasterized on equal grids compose.
  std::string universe_id() const;
};

IntensionSet rasterize_ellipse(const EllipseSpec& spec, const GridSpec& grid);

}  // namespace sigmax
