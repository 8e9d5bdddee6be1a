#include "divlab/metric/coarse_space.hpp"

#include <deque>

namespace divlab {

Ball ball(const CoarseSpace& space, Point center, Weight radius, const SearchLimits& limits) {
  if (radius < 0) throw UsageError("ball radius must be nonnegative");
  Ball b;
  b.center = center;
  b.radius = radius;
  if (radius == 0) return b;  // open ball of radius 0 is empty
  b.dist[center] = 0;
  std::deque<Point> frontier{center};
  std::vector<Point> nbr;
  while (!frontier.empty()) {
    Point p = frontier.front();
    frontier.pop_front();
    Weight dp = b.dist[p];
    if (dp + 1 >= radius) continue;  // children would be at distance >= radius
    space.neighbors(p, nbr);
    for (Point q : nbr) {
      if (b.dist.find(q) != b.dist.end()) continue;
      if (b.dist.size() >= limits.max_states)
        throw CapacityError("ball enumeration exceeded " + std::to_string(limits.max_states) +
                            " states (space " + space.name() + ", radius " +
                            std::to_string(radius) + ")");
      b.dist[q] = dp + 1;
      frontier.push_back(q);
    }
  }
  return b;
}

namespace {

ConstrainedResult bfs_constrained(const CoarseSpace& space, Point a, Point b,
                                  const Ball& forbidden, const SearchLimits& limits) {
  ConstrainedResult res;
  res.method = "bfs";
  std::unordered_map<Point, Point> parent;
  parent[a] = a;
  std::deque<Point> frontier{a};
  std::vector<Point> nbr;
  bool found = (a == b);
  while (!frontier.empty() && !found) {
    Point p = frontier.front();
    frontier.pop_front();
    space.neighbors(p, nbr);
    for (Point q : nbr) {
      if (forbidden.contains(q)) continue;
      if (parent.find(q) != parent.end()) continue;
      if (parent.size() >= limits.max_states)
        throw CapacityError("constrained search exceeded " + std::to_string(limits.max_states) +
                            " states (space " + space.name() + ")");
      parent[q] = p;
      if (q == b) {
        found = true;
        break;
      }
      frontier.push_back(q);
    }
  }
  res.explored = parent.size();
  if (!found) {
    // Frontier exhausted: a's component in the complement is finite and
    // does not contain b.
    res.disconnected = true;
    return res;
  }
  for (Point v = b;; v = parent[v]) {
    res.witness.push_back(v);
    if (v == a) break;
  }
  std::reverse(res.witness.begin(), res.witness.end());
  res.distance = static_cast<Weight>(res.witness.size()) - 1;
  return res;
}

}  // namespace

ConstrainedResult constrained_distance(const CoarseSpace& space, Point a, Point b,
                                       const Ball& forbidden, const SearchLimits& limits) {
  if (forbidden.contains(a) || forbidden.contains(b))
    throw UsageError("constrained_distance endpoint inside forbidden set");
  auto oracle = space.constrained_oracle(a, b, forbidden.center, forbidden.radius);
  if (oracle && oracle->disconnected) {
    // BFS cannot certify disconnection when the complement component is
    // infinite; only the oracle can.
    ConstrainedResult res;
    res.method = "oracle";
    res.disconnected = true;
    return res;
  }
  ConstrainedResult res = bfs_constrained(space, a, b, forbidden, limits);
  if (oracle) {
    if (res.disconnected || res.distance != oracle->distance)
      throw FalsificationError(
          "constrained BFS disagrees with the space's oracle on " + space.name(),
          "bfs=" + (res.disconnected ? std::string("disconnected") : std::to_string(res.distance)) +
              " oracle=" + std::to_string(oracle->distance));
    res.method = "bfs+oracle";
  }
  return res;
}

}  // namespace divlab
