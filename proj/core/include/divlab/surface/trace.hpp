#pragma once

#include <string>
#include <vector>

#include "divlab/common.hpp"
#include "divlab/surface/lamination.hpp"
#include "divlab/surface/triangulation.hpp"

namespace divlab {

// A path transverse to the triangulation, recorded as the signed labels
// of the sides it enters through, in order. Open arcs also carry the
// corners (triangle, corner position) holding their terminal segments:
// the start corner lives in the triangle the first step leaves, the end
// corner in the triangle the last step enters.
struct Itinerary {
  std::vector<int> steps;
  bool closed = true;
  int start_tri = -1;
  int start_corner = -1;
  int end_tri = -1;
  int end_corner = -1;
};

bool itinerary_valid(const Triangulation& tri, const Itinerary& it, std::string* why = nullptr);

// Crossing counts (and terminal counts for open arcs) of a taut itinerary.
Lamination coords_of(const Triangulation& tri, const Itinerary& it);

enum class ComponentKind {
  kCurve,        // essential (or at least non-peripheral) closed curve
  kPeripheral,   // closed curve bounding a puncture
  kArc,          // taut arc with at least one crossing
  kEdgeArc,      // arc parallel to a triangulation edge
  kTrivialLoop,  // contractible closed path
  kTrivialArc,   // arc that retracts into its endpoint
};

struct TracedComponent {
  ComponentKind kind = ComponentKind::kTrivialLoop;
  Lamination coords;  // kCurve, kPeripheral, kArc
  Itinerary itin;     // kCurve, kPeripheral, kArc
  int edge = -1;      // kEdgeArc
  int vertex = -1;    // kPeripheral
};

// Pull an itinerary taut: cancel immediate re-crossings and swing arc
// ends off adjacent corners until every terminal points at the far
// corner of its last crossed side. The isotopy class is preserved.
TracedComponent normalize(const Triangulation& tri, Itinerary it);

// Decompose admissible normal coordinates into traced components.
std::vector<TracedComponent> trace(const Triangulation& tri, const Lamination& lam);

// Closed loop around puncture v, starting at any corner of v.
Itinerary peripheral_itinerary(const Triangulation& tri, int v);

// Boundary of a regular neighborhood of edge e together with its
// endpoint punctures (a closed system; trace it to split components).
Lamination edge_neighborhood_boundary(const Triangulation& tri, int e);

}  // namespace divlab
