#pragma once

#include <vector>

#include "divlab/common.hpp"
#include "divlab/surface/trace.hpp"

namespace divlab {

// One geometric crossing between taut paths a and b, charged to the
// first shared edge of the corridor the strands traverse together.
// step_a / step_b index the forward itineraries; b_reversed records
// whether the co-directional walk used b backwards. upward means a
// passes b from the low side of the shared entry (toward the clockwise
// corner) to the high side.
struct CrossingEvent {
  int step_a = -1;
  int step_b = -1;
  bool b_reversed = false;
  bool upward = false;
};

std::vector<CrossingEvent> crossing_events(const Triangulation& tri, const Itinerary& a, const Itinerary& b);

// Geometric intersection number of two taut traced components.
Weight intersection_number(const Triangulation& tri, const TracedComponent& a, const TracedComponent& b);

// Convenience: trace single-component laminations and intersect them.
// Multi-component systems are summed over component pairs.
Weight intersection_number(const Triangulation& tri, const Lamination& a, const Lamination& b);

}  // namespace divlab
