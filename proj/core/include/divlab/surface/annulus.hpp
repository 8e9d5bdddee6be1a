#pragma once

#include "divlab/common.hpp"
#include "divlab/surface/lamination.hpp"
#include "divlab/surface/triangulation.hpp"

namespace divlab {

// Twisting coordinate of x about the curve alpha, gauged by a fixed
// transversal tau with i(alpha, tau) > 0: the integer n minimizing
// i(x, D_alpha^n tau). Requires i(alpha, x) > 0, else the projection
// to the annulus is empty and a UsageError is thrown. Twist-equivariant
// on the nose: shift(D_alpha^m x) = shift(x) + m.
Weight twist_shift(const Triangulation& tri, const Lamination& alpha, const Lamination& tau, const Lamination& x);

// Distance in the annular curve complex of alpha between the
// projections of x and y: 1 + |shift(x) - shift(y)|. Within an additive
// error of 2 of the true annular distance.
Weight annular_projection_distance(const Triangulation& tri, const Lamination& alpha, const Lamination& tau,
                                   const Lamination& x, const Lamination& y);

// Independent estimate of the same distance, no transversal involved:
// count whole trips around alpha inside the longest stretch of x's
// itinerary that runs parallel to alpha's, signed by the direction of
// travel, and compare the counts for x and y.
Weight annular_distance_runlength(const Triangulation& tri, const Lamination& alpha, const Lamination& x,
                                  const Lamination& y);

}  // namespace divlab
