#pragma once

#include <memory>
#include <string>

#include "divlab/groups/cayley.hpp"
#include "divlab/metric/divergence.hpp"

namespace divlab {

// Periodic direction in a Cayley space: at(t) is the length-t prefix of
// period^infinity read from the identity, so consecutive points differ
// by one letter and the track is 1-Lipschitz by construction.
class AxisRay {
 public:
  AxisRay(std::shared_ptr<CayleySpace> space, Word period, std::string label);

  const GroupElement& at(Weight t) const;
  Ray ray(double quasi_constant) const;

  const CayleySpace& space() const { return *space_; }
  const Word& period() const { return period_; }
  const std::string& label() const { return label_; }

 private:
  std::shared_ptr<CayleySpace> space_;
  Word period_;
  std::string label_;
  mutable std::vector<GroupElement> cache_;  // cache_[t] = at(t)
};

// Smallest Q with gap/Q - Q <= d(at(s), at(s+gap)) over all phases s and
// gaps 1..max_gap (segment lengths by capped BFS; periodicity means only
// s mod |period| matters). Throws FalsificationError if some measured
// distance exceeds the gap, which the one-letter-per-step track forbids.
double calibrate_axis_quasi_constant(const AxisRay& ray, Weight max_gap,
                                     const SearchLimits& limits = {});

}  // namespace divlab
