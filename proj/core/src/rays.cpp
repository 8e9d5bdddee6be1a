#include "divlab/groups/rays.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace divlab {

AxisRay::AxisRay(std::shared_ptr<CayleySpace> space, Word period, std::string label)
    : space_(std::move(space)), period_(std::move(period)), label_(std::move(label)) {
  if (period_.empty()) throw UsageError("axis ray needs a nonempty period word");
  for (int l : period_) {
    if (l < 0 || l >= space_->backend().letter_count())
      throw UsageError("axis ray period uses a letter outside the generator list");
  }
  cache_.push_back(space_->identity());
}

const GroupElement& AxisRay::at(Weight t) const {
  if (t < 0) throw UsageError("ray parameter must be nonnegative");
  while (static_cast<Weight>(cache_.size()) <= t) {
    std::size_t n = cache_.size() - 1;
    int letter = period_[n % period_.size()];
    cache_.push_back(space_->step(cache_.back(), letter));
  }
  return cache_[static_cast<std::size_t>(t)];
}

Ray AxisRay::ray(double quasi_constant) const {
  Ray r;
  r.basepoint = space_->basepoint();
  r.quasi_constant = quasi_constant;
  r.label = label_;
  r.at = [this](Weight t) { return this->at(t).id; };
  return r;
}

double calibrate_axis_quasi_constant(const AxisRay& ray, Weight max_gap,
                                     const SearchLimits& limits) {
  if (max_gap < 1) throw UsageError("calibration needs max_gap >= 1");
  const CayleySpace& space = ray.space();
  const Word& period = ray.period();
  const Weight p = static_cast<Weight>(period.size());
  double q = 1.0;
  for (Weight gap = 1; gap <= max_gap; ++gap) {
    for (Weight s = 0; s < p; ++s) {
      Word segment;
      segment.reserve(static_cast<std::size_t>(gap));
      for (Weight i = 0; i < gap; ++i)
        segment.push_back(period[static_cast<std::size_t>((s + i) % p)]);
      GroupElement g = space.normalize(segment);
      std::optional<Weight> d = space.word_length_exact(g, gap, limits);
      if (!d) {
        std::ostringstream os;
        os << "segment of length " << gap << " at phase " << s << " measured longer than itself";
        throw FalsificationError("axis ray is not 1-Lipschitz on " + space.name(), os.str());
      }
      // smallest Q with gap/Q - Q <= d, i.e. Q^2 + d*Q - gap >= 0
      double dd = static_cast<double>(*d);
      double need = (-dd + std::sqrt(dd * dd + 4.0 * static_cast<double>(gap))) / 2.0;
      q = std::max(q, need);
    }
  }
  return q;
}

}  // namespace divlab
