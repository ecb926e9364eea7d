#pragma once

#include "msurg/css.hpp"
#include "msurg/surgery.hpp"

namespace msurg {

struct SurfaceCodeBundle {
    CssCode code;                // unrotated planar code, n = d^2 + (d-1)^2
    SurgeryInterface interface;  // smooth boundary carrying logical Z
};

// Unrotated planar surface code of distance d on the grid 0 <= i, j <= 2d-2:
// qubits at i + j even, X-checks at (i odd, j even), Z-checks at
// (i even, j odd). Logical Z runs down the smooth boundary column j = 0.
SurfaceCodeBundle build_surface_code(int d);

}  // namespace msurg
