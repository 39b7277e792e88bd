#include "sigmax/fixtures.hpp"

#include <cmath>

#include "sigmax/disjunction.hpp"
#include "sigmax/error.hpp"

namespace sigmax {

std::vector<Concept> Fixture::concept_list() const {
  std::vector<Concept> out;
  out.reserve(concepts.size());
  for (const auto& m : concepts) out.push_back(Concept{m.ellipse.label, m.intension});
  return out;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "example-5.1", "example-5.2", "age-groups", "fig-3a", "fig-3b", "fig-4d",
  };
  return names;
}

namespace {

// Scene geometry is authored on a 64x64 unit grid and mapped onto the actual
// grid, so the shapes scale with resolution. Exactness claims (the 1/2 in
// age-groups) rely on cell-center symmetry, which survives even integer
// scalings; validation below catches any resolution that breaks a relation.
struct SceneMapper {
  const GridSpec& grid;

  double x(double u) const { return grid.origin_x + u * grid.cols / 64.0 * grid.cell_size; }
  double y(double v) const { return grid.origin_y + v * grid.rows / 64.0 * grid.cell_size; }
  double rx(double r) const { return r * grid.cols / 64.0 * grid.cell_size; }
  double ry(double r) const { return r * grid.rows / 64.0 * grid.cell_size; }

  FixtureMember circle(std::string label, double cx, double cy, double r) const {
    EllipseSpec spec;
    spec.center_x = x(cx);
    spec.center_y = y(cy);
    spec.semi_axis_x = rx(r);
    spec.semi_axis_y = ry(r);
    spec.rotation = 0.0;
    spec.label = std::move(label);
    return FixtureMember{spec, rasterize_ellipse(spec, grid)};
  }

  FixtureMember ellipse(std::string label, double cx, double cy, double ax, double ay) const {
    EllipseSpec spec;
    spec.center_x = x(cx);
    spec.center_y = y(cy);
    spec.semi_axis_x = rx(ax);
    spec.semi_axis_y = ry(ay);
    spec.rotation = 0.0;
    spec.label = std::move(label);
    return FixtureMember{spec, rasterize_ellipse(spec, grid)};
  }
};

[[noreturn]] void invalid(const Fixture& fx, const std::string& what) {
  fail(Errc::fixture_invalid, "fixture '" + fx.name + "' at " + std::to_string(fx.grid.cols) +
                                  "x" + std::to_string(fx.grid.rows) + ": " + what);
}

void require_class(const Fixture& fx, std::size_t i, std::size_t j, PairClass want) {
  const PairClass got = classify_pair(fx.reference.intension, fx.concepts[i].intension,
                                      fx.concepts[j].intension);
  if (got != want)
    invalid(fx, fx.concepts[i].ellipse.label + "/" + fx.concepts[j].ellipse.label +
                    " classified " + pair_class_name(got) + ", needs " + pair_class_name(want));
}

void require_degree(const Fixture& fx, std::size_t i, const Rational& want) {
  const Rational got = subsethood(fx.reference.intension, fx.concepts[i].intension);
  if (!(got == want))
    invalid(fx, "degree of " + fx.concepts[i].ellipse.label + " is " + got.to_string() +
                    ", needs " + want.to_string());
}

// Catches resolutions so coarse that a shape rasterizes to nothing, before
// any relation check trips over the empty set.
void require_substance(const Fixture& fx) {
  if (fx.reference.intension.empty())
    invalid(fx, "reference '" + fx.reference.ellipse.label + "' rasterized to no cells");
  for (const auto& member : fx.concepts)
    if (member.intension.empty())
      invalid(fx, "concept '" + member.ellipse.label + "' rasterized to no cells");
}

void require_positive_degree(const Fixture& fx, std::size_t i) {
  const Rational got = subsethood(fx.reference.intension, fx.concepts[i].intension);
  if (got.is_zero())
    invalid(fx, "degree of " + fx.concepts[i].ellipse.label + " vanished");
}

Fixture build_example_5_1(const GridSpec& grid) {
  const SceneMapper m{grid};
  Fixture fx;
  fx.name = "example-5.1";
  fx.grid = grid;
  fx.reference = m.circle("age45", 32, 32, 6);
  fx.concepts = {m.circle("YOUTH", 18, 32, 10), m.circle("MID", 32, 32, 16),
                 m.circle("AGED", 46, 32, 10)};

  require_substance(fx);
  require_class(fx, 0, 1, PairClass::projection_nested);   // YOUTH / MID
  require_class(fx, 2, 1, PairClass::projection_nested);   // AGED / MID
  require_class(fx, 0, 2, PairClass::projection_exclusive);  // YOUTH / AGED
  require_degree(fx, 1, Rational(1));
  require_positive_degree(fx, 0);
  require_positive_degree(fx, 2);
  return fx;
}

Fixture build_example_5_2(const GridSpec& grid) {
  const SceneMapper m{grid};
  Fixture fx;
  fx.name = "example-5.2";
  fx.grid = grid;
  // The classified person's intension coincides with RESEARCHER's.
  fx.reference = m.circle("person", 32, 32, 12);
  fx.concepts = {m.circle("EXPERT", 24, 32, 10), m.circle("SCHOLAR", 40, 32, 10),
                 m.circle("RESEARCHER", 32, 32, 12)};

  require_substance(fx);
  require_class(fx, 0, 2, PairClass::projection_nested);  // EXPERT / RESEARCHER
  require_class(fx, 1, 2, PairClass::projection_nested);  // SCHOLAR / RESEARCHER
  require_class(fx, 0, 1, PairClass::general);            // EXPERT / SCHOLAR
  require_degree(fx, 2, Rational(1));
  require_positive_degree(fx, 0);
  require_positive_degree(fx, 1);
  return fx;
}

Fixture build_age_groups(const GridSpec& grid) {
  const SceneMapper m{grid};
  Fixture fx;
  fx.name = "age-groups";
  fx.grid = grid;
  // The reference circle is centered on a cell boundary, so its cells split
  // symmetrically about x = 32; the YOUTH ellipse covers exactly the left
  // half, MID contains everything, AGED stays clear.
  fx.reference = m.circle("age40", 32, 32, 8);
  fx.concepts = {m.ellipse("YOUTH", 2, 32, 30, 100), m.circle("MID", 32, 32, 20),
                 m.circle("AGED", 60, 32, 4)};

  require_substance(fx);
  require_degree(fx, 0, Rational(1, 2));
  require_degree(fx, 1, Rational(1));
  require_degree(fx, 2, Rational(0));
  if (!is_exhaustive(fx.reference.intension, fx.concept_list()))
    invalid(fx, "setup must be exhaustive through MID");
  return fx;
}

Fixture build_fig_3a(const GridSpec& grid) {
  const SceneMapper m{grid};
  Fixture fx;
  fx.name = "fig-3a";
  fx.grid = grid;
  fx.reference = m.circle("X", 24, 32, 8);
  fx.concepts = {m.circle("xi", 30, 28, 9), m.circle("xj", 30, 36, 9)};

  require_substance(fx);
  if (!is_fuzzy_setup(fx.reference.intension, fx.concept_list()).fuzzy)
    invalid(fx, "concept pair must overlap inside the reference");
  return fx;
}

Fixture build_fig_3b(const GridSpec& grid) {
  const SceneMapper m{grid};
  Fixture fx;
  fx.name = "fig-3b";
  fx.grid = grid;
  fx.reference = m.circle("X", 16, 32, 7);
  fx.concepts = {m.circle("xi", 28, 24, 9), m.circle("xj", 28, 40, 9)};

  require_substance(fx);
  if (is_fuzzy_setup(fx.reference.intension, fx.concept_list()).fuzzy)
    invalid(fx, "concepts must not overlap inside the reference");
  if (set_algebra(fx.concepts[0].intension, fx.concepts[1].intension).intersection.empty())
    invalid(fx, "concepts must overlap outside the reference");
  require_class(fx, 0, 1, PairClass::projection_exclusive);
  require_positive_degree(fx, 0);
  require_positive_degree(fx, 1);
  return fx;
}

Fixture build_fig_4d(const GridSpec& grid) {
  const SceneMapper m{grid};
  Fixture fx;
  fx.name = "fig-4d";
  fx.grid = grid;
  fx.reference = m.circle("X", 32, 32, 5);
  fx.concepts = {m.circle("xi", 28, 32, 15), m.circle("xj", 36, 32, 15)};

  require_substance(fx);
  require_degree(fx, 0, Rational(1));
  require_degree(fx, 1, Rational(1));
  return fx;
}

}  // namespace

Fixture generate_fixture(const std::string& name, const GridSpec& grid) {
  if (name == "example-5.1") return build_example_5_1(grid);
  if (name == "example-5.2") return build_example_5_2(grid);
  if (name == "age-groups") return build_age_groups(grid);
  if (name == "fig-3a") return build_fig_3a(grid);
  if (name == "fig-3b") return build_fig_3b(grid);
  if (name == "fig-4d") return build_fig_4d(grid);
  fail(Errc::unknown_fixture, "no fixture named '" + name + "'");
}

}  // namespace sigmax
