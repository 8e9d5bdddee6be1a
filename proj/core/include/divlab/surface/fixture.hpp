#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divlab/surface/lamination.hpp"
#include "divlab/surface/triangulation.hpp"

namespace divlab {

// A frozen model surface: its triangulation plus the named essential
// curves everything downstream (generators, projections, calibrated
// constants) refers to. The hash pins the exact combinatorics so
// reported numbers can cite the model they were computed on.
struct SurfaceFixture {
  std::string name;
  Triangulation tri;
  std::vector<std::string> curve_names;
  std::vector<Lamination> curves;
  // Index of the frozen transversal gauge for each curve: the first
  // fixture curve meeting it. Annular coordinates are taken against it.
  std::vector<int> transversal_index;

  const Lamination& curve(const std::string& curve_name) const;
  const Lamination& transversal(const std::string& curve_name) const;
  std::uint64_t hash() const;
};

// Known fixtures: "s11" (once-punctured torus), "s05" (five-punctured
// sphere, the primary model), "s12" (twice-punctured torus).
const SurfaceFixture& surface_fixture(const std::string& name);
std::vector<std::string> surface_fixture_names();

// Weights of the (p, q) slope curve on the "s11" triangulation;
// p and q must not both vanish. Coprimality is the caller's business.
Lamination torus_slope(Weight p, Weight q);

}  // namespace divlab
