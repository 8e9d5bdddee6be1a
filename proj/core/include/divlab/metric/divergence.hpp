#pragma once

#include <functional>
#include <string>
#include <vector>

#include "divlab/metric/coarse_space.hpp"

namespace divlab {

struct Ray {
  Point basepoint = 0;
  std::function<Point(Weight)> at;  // t >= 0
  double quasi_constant = 1.0;      // Q: |s-t|/Q - Q <= d(ray s, ray t) <= |s-t|
  std::string label;
};

enum class DivStatus {
  kExact,        // constrained BFS (or oracle) distance
  kInfinite,     // complement disconnects the ray points
  kUpperBound,   // certified path length, not known minimal
  kIdentical,    // rays agree at t
  kCapacity,     // search exceeded limits at this t
};

const char* to_string(DivStatus s);

struct DivEntry {
  Weight t = 0;
  DivStatus status = DivStatus::kExact;
  Weight div = 0;       // valid for kExact/kUpperBound
  Weight path_len = 0;  // witness length (== div when exact)
  std::vector<Point> witness;
  std::string note;
};

struct DivergenceProfile {
  std::string space_name;
  std::vector<DivEntry> entries;
  bool any_infinite() const;
  std::size_t finite_count() const;
};

// div(r1,r2,t) = dist_{X \ B_t(x)}(r1(t), r2(t)) with x the shared basepoint.
DivergenceProfile divergence_profile(const CoarseSpace& space, const Ray& r1, const Ray& r2,
                                     const std::vector<Weight>& t_values,
                                     const SearchLimits& limits = {});

struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // max |log div - fit| over samples
  std::size_t points = 0;
  bool ok = false;  // >= 3 finite points and residual under threshold
};

// Least-squares slope of log(div) against log(t) over finite entries.
// Residual threshold 0.05 marks a clean power law; callers may still
// read slope when ok=false (flagged fit).
GrowthFit fit_growth_exponent(const DivergenceProfile& profile, double residual_threshold = 0.05);

// Checks the Ray contract on sampled parameters via exact distances.
// Returns the measured worst Q (>= 1); throws FalsificationError when the
// upper bound d <= |s-t| fails (rays must be 1-Lipschitz in our models).
double check_ray_contract(const CoarseSpace& space, const Ray& ray,
                          const std::vector<Weight>& samples,
                          const SearchLimits& limits = {});

}  // namespace divlab
