#include "divlab/surface/annulus.hpp"

#include <algorithm>
#include <map>

#include "divlab/surface/intersect.hpp"
#include "divlab/surface/trace.hpp"
#include "divlab/surface/twist.hpp"

namespace divlab {

namespace {

class TwistObjective {
 public:
  TwistObjective(const Triangulation& tri, const Lamination& alpha, const Lamination& tau, const Lamination& x)
      : tri_(&tri), alpha_(&alpha), tau_(&tau), x_(&x) {}

  Weight operator()(Weight n) {
    const auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    const Weight v = intersection_number(*tri_, *x_, dehn_twist(*tri_, *tau_, *alpha_, n));
    cache_.emplace(n, v);
    return v;
  }

 private:
  const Triangulation* tri_;
  const Lamination* alpha_;
  const Lamination* tau_;
  const Lamination* x_;
  std::map<Weight, Weight> cache_;
};

// Smallest minimizer magnitude wins ties, then the smaller n; keeps the
// gauge deterministic on plateaus.
bool better(Weight n, Weight fn, Weight m, Weight fm) {
  if (fn != fm) return fn < fm;
  const Weight an = n < 0 ? -n : n;
  const Weight am = m < 0 ? -m : m;
  if (an != am) return an < am;
  return n < m;
}

}  // namespace

Weight twist_shift(const Triangulation& tri, const Lamination& alpha, const Lamination& tau, const Lamination& x) {
  if (intersection_number(tri, alpha, tau) == 0) {
    throw UsageError("transversal misses the twisting curve");
  }
  if (intersection_number(tri, alpha, x) == 0) {
    throw UsageError("annular projection is empty");
  }
  TwistObjective f(tri, alpha, tau, x);

  // Bracket the convex objective by doubling away from 0.
  Weight lo = -1;
  Weight hi = 1;
  if (f(0) <= f(1) && f(0) <= f(-1)) {
    lo = -2;
    hi = 2;
  } else {
    const Weight dir = f(1) < f(0) ? 1 : -1;
    Weight step = 1;
    while (f(dir * 2 * step) < f(dir * step)) step = checked_mul(step, 2);
    lo = std::min<Weight>(dir * 2 * step, -1);
    hi = std::max<Weight>(dir * 2 * step, 1);
    if (dir > 0) lo = step / 2; else hi = -step / 2;
  }

  while (hi - lo > 3) {
    const Weight m1 = lo + (hi - lo) / 3;
    const Weight m2 = hi - (hi - lo) / 3;
    if (f(m1) <= f(m2)) hi = m2; else lo = m1;
  }
  Weight best = lo;
  Weight fbest = f(lo);
  for (Weight n = lo + 1; n <= hi; ++n) {
    const Weight fn = f(n);
    if (better(n, fn, best, fbest)) {
      best = n;
      fbest = fn;
    }
  }
  return best;
}

Weight annular_projection_distance(const Triangulation& tri, const Lamination& alpha, const Lamination& tau,
                                   const Lamination& x, const Lamination& y) {
  const Weight sx = twist_shift(tri, alpha, tau, x);
  const Weight sy = twist_shift(tri, alpha, tau, y);
  const Weight d = sx > sy ? sx - sy : sy - sx;
  return checked_add(d, 1);
}

namespace {

// One full reading of a strand in the direction that matches the core
// curve's forward labels. Closed strands are cyclic.
struct Reading {
  std::vector<int> word;
  bool cyclic = false;
};

// Signed whole trips around the core along the longest stretch of x
// running parallel to it. Traversal direction of the strand carries no
// information (a parametrization choice), so the sign comes from the
// side of the core the strand enters the parallel stretch from, read
// off the core's own turn at the handoff triangle: a strand can only
// join along the third side, which sits right of the core when the
// core turns left there and left of it when the core turns right.
class WrapCounter {
 public:
  WrapCounter(const Triangulation& tri, const Itinerary& alpha) : tri_(&tri), base_(alpha.steps) {
    const int L = static_cast<int>(base_.size());
    prev_turn_.resize(base_.size());
    next_turn_.resize(base_.size());
    for (int p = 0; p < L; ++p) {
      const int before = base_[static_cast<std::size_t>((p - 1 + L) % L)];
      const int after = base_[static_cast<std::size_t>(p)];
      const int a = tri.slot_of(before).pos;
      const int b = tri.slot_of(Triangulation::reverse_label(after)).pos;
      // Turn the core makes in the triangle it leaves through step p.
      prev_turn_[static_cast<std::size_t>(p)] = (b - a + 3) % 3;
      next_turn_[static_cast<std::size_t>((p - 1 + L) % L)] = prev_turn_[static_cast<std::size_t>(p)];
    }
  }

  Weight best_signed_wraps(const Itinerary& strand) const {
    Weight best = 0;
    Weight best_mag = 0;
    for (const Reading& r : readings(strand)) {
      scan(r, &best, &best_mag);
    }
    return best;
  }

 private:
  std::vector<Reading> readings(const Itinerary& strand) const {
    Reading fwd{strand.steps, strand.closed};
    Reading bwd;
    bwd.cyclic = strand.closed;
    for (auto it = strand.steps.rbegin(); it != strand.steps.rend(); ++it) {
      bwd.word.push_back(Triangulation::reverse_label(*it));
    }
    return {fwd, bwd};
  }

  void scan(const Reading& r, Weight* best, Weight* best_mag) const {
    const int n = static_cast<int>(r.word.size());
    const int L = static_cast<int>(base_.size());
    if (n == 0) return;
    for (int i = 0; i < n; ++i) {
      for (int p = 0; p < L; ++p) {
        if (r.word[static_cast<std::size_t>(i)] != base_[static_cast<std::size_t>(p)]) continue;
        const bool has_entry = r.cyclic || i > 0;
        if (has_entry &&
            r.word[static_cast<std::size_t>((i - 1 + n) % n)] == base_[static_cast<std::size_t>((p - 1 + L) % L)]) {
          continue;  // not a maximal start
        }
        Weight len = 1;
        while (len < n) {
          const int wi = r.cyclic ? static_cast<int>((i + len) % n) : static_cast<int>(i + len);
          if (wi >= n) break;
          if (r.word[static_cast<std::size_t>(wi)] != base_[static_cast<std::size_t>((p + len) % L)]) break;
          ++len;
        }
        const Weight wraps = len / L;
        if (wraps <= *best_mag) continue;
        int sign = 1;
        if (has_entry) {
          sign = prev_turn_[static_cast<std::size_t>(p)] == 2 ? 1 : -1;
        } else {
          const int end_phase = static_cast<int>((p + len - 1) % L);
          const bool has_exit = r.cyclic || i + len < n;
          if (has_exit) sign = next_turn_[static_cast<std::size_t>(end_phase)] == 1 ? 1 : -1;
        }
        *best_mag = wraps;
        *best = sign * wraps;
      }
    }
  }

  const Triangulation* tri_;
  std::vector<int> base_;
  std::vector<int> prev_turn_;
  std::vector<int> next_turn_;
};

Weight wrap_count(const Triangulation& tri, const Itinerary& alpha, const Lamination& x) {
  const WrapCounter counter(tri, alpha);
  Weight best = 0;
  Weight best_mag = -1;
  for (const TracedComponent& c : trace(tri, x)) {
    if (c.kind != ComponentKind::kCurve && c.kind != ComponentKind::kArc) continue;
    const Weight w = counter.best_signed_wraps(c.itin);
    const Weight mag = w < 0 ? -w : w;
    if (mag > best_mag) {
      best_mag = mag;
      best = w;
    }
  }
  return best;
}

}  // namespace

Weight annular_distance_runlength(const Triangulation& tri, const Lamination& alpha, const Lamination& x,
                                  const Lamination& y) {
  if (intersection_number(tri, alpha, x) == 0 || intersection_number(tri, alpha, y) == 0) {
    throw UsageError("annular projection is empty");
  }
  const std::vector<TracedComponent> core = trace(tri, alpha);
  if (core.size() != 1 || core.front().kind != ComponentKind::kCurve) {
    throw UsageError("twisting curve must be a single essential closed curve");
  }
  const Weight tx = wrap_count(tri, core.front().itin, x);
  const Weight ty = wrap_count(tri, core.front().itin, y);
  const Weight d = tx > ty ? tx - ty : ty - tx;
  return checked_add(d, 1);
}

}  // namespace divlab
