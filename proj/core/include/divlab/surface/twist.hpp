#pragma once

#include "divlab/common.hpp"
#include "divlab/surface/lamination.hpp"
#include "divlab/surface/triangulation.hpp"

namespace divlab {

// n-th power of the positive Dehn twist about an essential simple
// closed curve, applied to a disjointly embedded system of curves and
// arcs. Positive means the handedness fixed by the surface orientation
// convention of the triangulation (ccw triangles); negative n gives the
// inverse twist.
Lamination dehn_twist(const Triangulation& tri, const Lamination& target, const Lamination& about, Weight n);

}  // namespace divlab
