#pragma once

#include <array>
#include <string>
#include <vector>

#include "divlab/common.hpp"
#include "divlab/surface/triangulation.hpp"

namespace divlab {

// Normal coordinates for a system of disjoint curves and taut arcs.
// edge_weights[e] counts transverse crossings of edge e. ends[t][s]
// counts terminal segments in triangle t that cross side s and run to
// the opposite corner (s+1), ending at that puncture. Taut arcs carry
// only this terminal type: an end next to an endpoint of its last
// crossed edge can always be swung across that edge, dropping one
// crossing, so canonical ends point at the far corner.
struct Lamination {
  std::vector<Weight> edge_weights;
  std::vector<std::array<Weight, 3>> ends;  // empty for closed systems

  bool closed() const;
  bool operator==(const Lamination& other) const;
};

Lamination make_closed(std::vector<Weight> weights);

// Crossings of side s of triangle t that belong to corner segments,
// i.e. the side's edge weight minus this triangle's own terminals.
Weight side_weight(const Triangulation& tri, const Lamination& lam, int t, int s);

// Corner segment counts: G[j] strands cutting corner j, so side s of
// the triangle carries G[s-1] + ends[t][s] + G[s] strands in ccw order.
std::array<Weight, 3> corner_counts(const Triangulation& tri, const Lamination& lam, int t);

bool is_admissible(const Triangulation& tri, const Lamination& lam, std::string* why = nullptr);

// Vertex whose link equals the given closed weights, or -1.
int peripheral_vertex(const Triangulation& tri, const std::vector<Weight>& weights);

Weight total_weight(const Lamination& lam);
Weight end_count(const Lamination& lam);

std::string lamination_to_string(const Lamination& lam);
std::uint64_t lamination_hash(const Lamination& lam);

}  // namespace divlab
