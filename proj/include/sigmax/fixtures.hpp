#pragma once
// Named geometric scenes that reproduce the classification configurations the
// library is tested against: ellipse-derived intensions on a grid, one
// reference object plus a list of concepts. Geometry is chosen here, but
// never trusted: every generated fixture is re-checked against the relations
// it is supposed to exhibit and generation fails loudly if the grid
// resolution breaks them.

#include <string>
#include <vector>

#include "sigmax/intension.hpp"

namespace sigmax {

struct FixtureMember {
  EllipseSpec ellipse;   // the member's label lives on the ellipse
  IntensionSet intension;
};

struct Fixture {
  std::string name;
  GridSpec grid;
  FixtureMember reference;              // the object being classified, fX
  std::vector<FixtureMember> concepts;  // the candidate concepts, in label order

  std::vector<Concept> concept_list() const;
};

// Known scene names:
//   example-5.1  age-45 object vs {YOUTH, MID, AGED}: two nested pairs, one
//                exclusive pair
//   example-5.2  researcher vs {EXPERT, SCHOLAR, RESEARCHER}: RE-pairs nested,
//                EXPERT/SCHOLAR neither nested nor exclusive
//   age-groups   age-40 object with compatibility exactly (1/2, 1, 0)
//   fig-3a       concept pair overlapping inside the reference (fuzzy setup)
//   fig-3b       concepts overlapping only outside the reference
//   fig-4d       reference inside every concept (innocent)
const std::vector<std::string>& fixture_names();

Fixture generate_fixture(const std::string& name, const GridSpec& grid);

}  // namespace sigmax
