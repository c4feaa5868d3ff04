#pragma once

#include <vector>

#include "imhom/corpus.hpp"

namespace imh::testing {

// Every corpus space (entries whose payload is a complex, not a map).
inline std::vector<std::string> space_names() {
  return {"circle",
          "sphere2",
          "sphere2_octa",
          "grid_torus",
          "csaszar_torus",
          "pinched_torus_icosa",
          "pinched_torus_quotient",
          "glued_spheres",
          "susp_torus"};
}

// The smaller spaces, for quadratic-cost property checks.
inline std::vector<std::string> small_space_names() {
  return {"circle",         "sphere2",       "sphere2_octa",
          "grid_torus",     "csaszar_torus", "pinched_torus_icosa",
          "glued_spheres",  "susp_torus"};
}

}  // namespace imh::testing
