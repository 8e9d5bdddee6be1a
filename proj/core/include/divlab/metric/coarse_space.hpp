#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "divlab/common.hpp"

namespace divlab {

// Opaque point handle. Concrete spaces intern their states and hand out
// stable ids; ids are only meaningful within the space that minted them.
using Point = std::uint64_t;

struct SearchLimits {
  std::size_t max_states = 10'000'000;  // capacity cap, never silent truncation
};

class CoarseSpace {
 public:
  virtual ~CoarseSpace() = default;
  virtual std::string name() const = 0;
  virtual Point basepoint() const = 0;
  // Symmetric, finite neighbor enumeration in deterministic order.
  virtual void neighbors(Point p, std::vector<Point>& out) const = 0;
  // Exact distance when the space has one (controls do).
  virtual std::optional<Weight> exact_distance(Point, Point) const { return std::nullopt; }
  // Admissible lower bound: never exceeds the true distance.
  virtual std::optional<Weight> distance_lower_bound(Point, Point) const { return std::nullopt; }
  // Exact answer for distance-in-complement-of-ball queries, when the
  // space can reason about its global shape (controls again). radius is
  // the open-ball radius, center the ball center.
  struct ConstrainedAnswer {
    bool disconnected = false;
    Weight distance = 0;  // valid when !disconnected
  };
  virtual std::optional<ConstrainedAnswer> constrained_oracle(Point /*a*/, Point /*b*/,
                                                              Point /*center*/,
                                                              Weight /*radius*/) const {
    return std::nullopt;
  }
  virtual std::string describe(Point p) const { return std::to_string(p); }
};

// Open ball {y : d(center, y) < r} with exact distances, via BFS.
struct Ball {
  Point center = 0;
  Weight radius = 0;
  std::unordered_map<Point, Weight> dist;  // every point at distance < radius

  bool contains(Point p) const { return dist.find(p) != dist.end(); }
};

Ball ball(const CoarseSpace& space, Point center, Weight radius,
          const SearchLimits& limits = {});

struct ConstrainedResult {
  bool disconnected = false;
  Weight distance = 0;
  std::vector<Point> witness;  // vertex path a..b when connected
  std::size_t explored = 0;
  std::string method;  // "bfs" | "oracle"
};

// Shortest path from a to b in the subgraph where forbidden(p) is false.
// Throws UsageError if an endpoint is forbidden, CapacityError when the
// search exceeds limits without an answer.
ConstrainedResult constrained_distance(const CoarseSpace& space, Point a, Point b,
                                       const Ball& forbidden,
                                       const SearchLimits& limits = {});

}  // namespace divlab
