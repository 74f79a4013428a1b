#pragma once

// Exact feasibility of strict homogeneous inequality systems (Fourier-Motzkin)
// and face enumeration of small central hyperplane arrangements.

#include "conelab/linalg.hpp"

#include <optional>
#include <vector>

namespace conelab {

// A rational x in span(space) with <s,x> > 0 for all s in strict and
// <z,x> = 0 for all z in zero; nullopt if infeasible.
std::optional<VecQ> strict_feasible(const std::vector<VecQ>& strict,
                                    const std::vector<VecQ>& zero,
                                    const MatQ& space);

struct ArrangementFace {
  MatQ flat;                 // basis of the supporting flat
  std::vector<int> sign;     // sign per hyperplane: -1, 0, +1 (0 = contains flat)
  VecQ interior;             // witness point, relatively interior
};

// All faces of the central arrangement given by `hyperplanes` (covectors)
// restricted to span(space). Hyperplanes identically zero on the space are
// ignored; proportional hyperplanes must be deduplicated by the caller.
std::vector<ArrangementFace> arrangement_faces(const std::vector<VecQ>& hyperplanes,
                                               const MatQ& space);

} // namespace conelab
