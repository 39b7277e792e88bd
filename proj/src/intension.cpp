#include "sigmax/intension.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sigmax {

namespace {

void require_same_universe(const IntensionSet& f, const IntensionSet& g) {
  if (f.universe() != g.universe())
    fail(Errc::universe_mismatch,
         "'" + f.universe() + "' vs '" + g.universe() + "'");
}

// Walks two sorted atom lists in lockstep and feeds (weight_f, weight_g) for
// every atom present in either to the visitor.
template <typename Visit>
void merge_atoms(const IntensionSet& f, const IntensionSet& g, Visit&& visit) {
  const auto& fa = f.atoms();
  const auto& ga = g.atoms();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < ga.size()) {
    if (j == ga.size() || (i < fa.size() && fa[i].first < ga[j].first)) {
      visit(fa[i].first, fa[i].second, std::int64_t{0});
      ++i;
    } else if (i == fa.size() || ga[j].first < fa[i].first) {
      visit(ga[j].first, std::int64_t{0}, ga[j].second);
      ++j;
    } else {
      visit(fa[i].first, fa[i].second, ga[j].second);
      ++i;
      ++j;
    }
  }
}

}  // namespace

IntensionSet::IntensionSet(std::string universe, std::vector<AtomEntry> atoms)
    : universe_(std::move(universe)), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const auto& [id, weight] = atoms_[k];
    if (id < 0) fail(Errc::invalid_argument, "negative atom id");
    if (weight <= 0)
      fail(Errc::invalid_argument, "atom " + std::to_string(id) + " has non-positive weight");
    if (k > 0 && atoms_[k - 1].first == id)
      fail(Errc::invalid_argument, "duplicate atom id " + std::to_string(id));
  }
}

std::int64_t IntensionSet::weight_of(std::int64_t id) const {
  const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), id,
                                   [](const AtomEntry& e, std::int64_t v) { return e.first < v; });
  return (it != atoms_.end() && it->first == id) ? it->second : 0;
}

std::int64_t measure(const IntensionSet& f) {
  std::int64_t total = 0;
  for (const auto& [id, weight] : f.atoms()) total += weight;
  return total;
}

IntensionAlgebra set_algebra(const IntensionSet& f, const IntensionSet& g) {
  require_same_universe(f, g);
  std::vector<IntensionSet::AtomEntry> meet, join, diff;
  merge_atoms(f, g, [&](std::int64_t id, std::int64_t wf, std::int64_t wg) {
    if (const std::int64_t w = std::min(wf, wg); w > 0) meet.emplace_back(id, w);
    if (const std::int64_t w = std::max(wf, wg); w > 0) join.emplace_back(id, w);
    if (const std::int64_t w = wf - wg; w > 0) diff.emplace_back(id, w);
  });
  return IntensionAlgebra{
      IntensionSet(f.universe(), std::move(meet)),
      IntensionSet(f.universe(), std::move(join)),
      IntensionSet(f.universe(), std::move(diff)),
  };
}

bool weight_dominated(const IntensionSet& f, const IntensionSet& g) {
  bool dominated = true;
  merge_atoms(f, g, [&](std::int64_t, std::int64_t wf, std::int64_t wg) {
    if (wf > wg) dominated = false;
  });
  return dominated;
}

Rational subsethood(const IntensionSet& fX, const IntensionSet& fC) {
  require_same_universe(fX, fC);
  const std::int64_t mx = measure(fX);
  if (mx == 0) fail(Errc::empty_reference, "subsethood reference intension is empty");
  std::int64_t overlap = 0;
  merge_atoms(fX, fC, [&](std::int64_t, std::int64_t wf, std::int64_t wg) {
    overlap += std::min(wf, wg);
  });
  return Rational(overlap, mx);
}

Rational similarity(const IntensionSet& f, const IntensionSet& g) {
  require_same_universe(f, g);
  std::int64_t meet = 0, join = 0;
  merge_atoms(f, g, [&](std::int64_t, std::int64_t wf, std::int64_t wg) {
    meet += std::min(wf, wg);
    join += std::max(wf, wg);
  });
  if (join == 0) fail(Errc::both_empty, "similarity of two empty intensions");
  return Rational(meet, join);
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size())
    fail(Errc::dimension_mismatch,
         std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) fail(Errc::zero_vector, "cosine of a zero vector");
  return std::fabs(dot) / (std::sqrt(nu) * std::sqrt(nv));
}

PossibilityDistribution compatibility_distribution(const IntensionSet& fX,
                                                   const std::vector<Concept>& concepts) {
  if (measure(fX) == 0) fail(Errc::empty_reference, "empty variable intension");
  std::vector<std::string> labels;
  std::vector<Scalar> values;
  bool normalized = false;
  labels.reserve(concepts.size());
  for (const auto& c : concepts) {
    const Rational degree = subsethood(fX, c.intension);
    if (degree.is_one()) normalized = true;
    labels.push_back(c.label);
    values.emplace_back(degree);
  }
  return PossibilityDistribution(SampleSpace(SpaceKind::fuzzy, std::move(labels)),
                                 std::move(values), normalized);
}

FuzzySetupResult is_fuzzy_setup(const IntensionSet& fX, const std::vector<Concept>& concepts) {
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    for (std::size_t j = i + 1; j < concepts.size(); ++j) {
      const IntensionSet pair_meet =
          set_algebra(concepts[i].intension, concepts[j].intension).intersection;
      if (measure(set_algebra(fX, pair_meet).intersection) > 0)
        return FuzzySetupResult{true, concepts[i].label, concepts[j].label};
    }
  }
  return FuzzySetupResult{};
}

bool is_exhaustive(const IntensionSet& fX, const std::vector<Concept>& concepts) {
  if (measure(fX) == 0) fail(Errc::empty_reference, "empty variable intension");
  for (const auto& c : concepts)
    if (subsethood(fX, c.intension).is_one()) return true;
  return false;
}

std::string GridSpec::universe_id() const {
  std::ostringstream out;
  out << "grid:" << cols << "x" << rows << ":cell=" << cell_size << ":origin=(" << origin_x << ","
      << origin_y << ")";
  return out.str();
}

IntensionSet rasterize_ellipse(const EllipseSpec& spec, const GridSpec& grid) {
  if (grid.cols <= 0 || grid.rows <= 0 || grid.cell_size <= 0.0)
    fail(Errc::degenerate_grid, "grid needs positive dimensions and cell size");
  if (spec.semi_axis_x <= 0.0 || spec.semi_axis_y <= 0.0)
    fail(Errc::invalid_argument, "ellipse semi-axes must be positive");

  const double cos_r = std::cos(spec.rotation);
  const double sin_r = std::sin(spec.rotation);
  std::vector<IntensionSet::AtomEntry> atoms;
  for (int row = 0; row < grid.rows; ++row) {
    for (int col = 0; col < grid.cols; ++col) {
      const double cx = grid.origin_x + (col + 0.5) * grid.cell_size;
      const double cy = grid.origin_y + (row + 0.5) * grid.cell_size;
      const double dx = cx - spec.center_x;
      const double dy = cy - spec.center_y;
      const double px = (dx * cos_r + dy * sin_r) / spec.semi_axis_x;
      const double py = (-dx * sin_r + dy * cos_r) / spec.semi_axis_y;
      if (px * px + py * py <= 1.0)
        atoms.emplace_back(static_cast<std::int64_t>(row) * grid.cols + col, 1);
    }
  }
  return IntensionSet(grid.universe_id(), std::move(atoms));
}

}  // namespace sigmax
