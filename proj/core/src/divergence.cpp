#include "divlab/metric/divergence.hpp"

#include <algorithm>
#include <cmath>

namespace divlab {

const char* to_string(DivStatus s) {
  switch (s) {
    case DivStatus::kExact: return "exact";
    case DivStatus::kInfinite: return "infinite";
    case DivStatus::kUpperBound: return "upper_bound";
    case DivStatus::kIdentical: return "identical";
    case DivStatus::kCapacity: return "capacity";
  }
  return "?";
}

bool DivergenceProfile::any_infinite() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const DivEntry& e) { return e.status == DivStatus::kInfinite; });
}

std::size_t DivergenceProfile::finite_count() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.status == DivStatus::kExact || e.status == DivStatus::kUpperBound) ++n;
  return n;
}

DivergenceProfile divergence_profile(const CoarseSpace& space, const Ray& r1, const Ray& r2,
                                     const std::vector<Weight>& t_values,
                                     const SearchLimits& limits) {
  if (r1.basepoint != r2.basepoint) throw UsageError("divergence rays must share a basepoint");
  DivergenceProfile profile;
  profile.space_name = space.name();
  for (Weight t : t_values) {
    if (t < 0) throw UsageError("divergence requires t >= 0");
    DivEntry entry;
    entry.t = t;
    Point a = r1.at(t);
    Point b = r2.at(t);
    if (a == b) {
      entry.status = DivStatus::kIdentical;
      profile.entries.push_back(std::move(entry));
      continue;
    }
    try {
      Ball forbidden = ball(space, r1.basepoint, t, limits);
      ConstrainedResult res = constrained_distance(space, a, b, forbidden, limits);
      if (res.disconnected) {
        entry.status = DivStatus::kInfinite;
        entry.note = "disconnecting";
      } else {
        entry.status = DivStatus::kExact;
        entry.div = res.distance;
        entry.path_len = res.distance;
        entry.witness = std::move(res.witness);
        entry.note = res.method;
      }
    } catch (const CapacityError& e) {
      entry.status = DivStatus::kCapacity;
      entry.note = e.what();
    }
    profile.entries.push_back(std::move(entry));
  }
  return profile;
}

GrowthFit fit_growth_exponent(const DivergenceProfile& profile, double residual_threshold) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& e : profile.entries) {
    if (e.status != DivStatus::kExact && e.status != DivStatus::kUpperBound) continue;
    if (e.t <= 0 || e.div <= 0) continue;
    pts.emplace_back(std::log(static_cast<double>(e.t)), std::log(static_cast<double>(e.div)));
  }
  if (pts.size() < 3)
    throw UsageError("growth fit needs at least 3 finite positive samples, have " +
                     std::to_string(pts.size()));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw UsageError("growth fit degenerate (all t equal)");
  GrowthFit fit;
  fit.points = pts.size();
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (auto [x, y] : pts)
    fit.max_residual = std::max(fit.max_residual, std::abs(y - (fit.slope * x + fit.intercept)));
  fit.ok = fit.max_residual <= residual_threshold;
  return fit;
}

double check_ray_contract(const CoarseSpace& space, const Ray& ray,
                          const std::vector<Weight>& samples, const SearchLimits& limits) {
  double worst_q = 1.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      Weight s = samples[i], t = samples[j];
      Point ps = ray.at(s), pt = ray.at(t);
      Weight gap = std::abs(s - t);
      Weight d;
      if (auto ex = space.exact_distance(ps, pt)) {
        d = *ex;
      } else {
        Ball around = ball(space, ps, gap + 2, limits);
        auto it = around.dist.find(pt);
        if (it == around.dist.end())
          throw FalsificationError("ray violates 1-Lipschitz upper bound",
                                   ray.label + " at s=" + std::to_string(s) +
                                       " t=" + std::to_string(t));
        d = it->second;
      }
      if (d > gap)
        throw FalsificationError("ray violates 1-Lipschitz upper bound",
                                 ray.label + " at s=" + std::to_string(s) +
                                     " t=" + std::to_string(t));
      if (gap > 0) {
        // smallest Q with gap/Q - Q <= d: solve Q^2 + dQ - gap >= 0
        double q = (-static_cast<double>(d) +
                    std::sqrt(static_cast<double>(d) * d + 4.0 * static_cast<double>(gap))) /
                   2.0;
        worst_q = std::max(worst_q, q);
      }
    }
  }
  return worst_q;
}

}  // namespace divlab
