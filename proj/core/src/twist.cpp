#include "divlab/surface/twist.hpp"

#include <algorithm>
#include <cstdlib>

#include "divlab/surface/intersect.hpp"
#include "divlab/surface/trace.hpp"

namespace divlab {

namespace {

// Loop of the twisting curve beginning and ending in the triangle the
// target occupies right after the charged crossing. q is the curve's
// passage index there; rev says the co-directional state ran the curve
// backwards. forward_labels picks which way the loop traverses the
// curve's own itinerary.
std::vector<int> twist_loop(const std::vector<int>& steps, int q, bool rev, bool forward_labels) {
  const int m = static_cast<int>(steps.size());
  std::vector<int> loop;
  loop.reserve(static_cast<std::size_t>(m));
  if (forward_labels) {
    const int base = rev ? q : q + 1;
    for (int k = 0; k < m; ++k) loop.push_back(steps[static_cast<std::size_t>((base + k) % m)]);
  } else {
    const int base = rev ? q - 1 : q;
    for (int k = 0; k < m; ++k) {
      loop.push_back(Triangulation::reverse_label(steps[static_cast<std::size_t>((base - k + m + m) % m)]));
    }
  }
  return loop;
}

Lamination twist_component(const Triangulation& tri, const TracedComponent& comp, const TracedComponent& about, Weight n) {
  if (comp.kind == ComponentKind::kEdgeArc) {
    if (about.coords.edge_weights[static_cast<std::size_t>(comp.edge)] != 0) {
      throw UsageError("cannot twist an edge-parallel arc across the twisting curve");
    }
    return comp.coords;
  }
  if (comp.kind != ComponentKind::kCurve && comp.kind != ComponentKind::kArc) return comp.coords;

  std::vector<CrossingEvent> events = crossing_events(tri, comp.itin, about.itin);
  if (events.empty()) return comp.coords;
  std::sort(events.begin(), events.end(), [](const CrossingEvent& a, const CrossingEvent& b) {
    if (a.step_a != b.step_a) return a.step_a < b.step_a;
    return a.step_b < b.step_b;
  });

  Itinerary spliced;
  spliced.closed = comp.itin.closed;
  spliced.start_tri = comp.itin.start_tri;
  spliced.start_corner = comp.itin.start_corner;
  spliced.end_tri = comp.itin.end_tri;
  spliced.end_corner = comp.itin.end_corner;

  const Weight copies = n < 0 ? -n : n;
  std::size_t next_event = 0;
  for (int i = 0; i < static_cast<int>(comp.itin.steps.size()); ++i) {
    spliced.steps.push_back(comp.itin.steps[static_cast<std::size_t>(i)]);
    while (next_event < events.size() && events[next_event].step_a == i) {
      const CrossingEvent& ev = events[next_event];
      const int sign = (ev.upward ? 1 : -1) * (ev.b_reversed ? -1 : 1) * (n > 0 ? 1 : -1);
      const bool forward_labels = sign < 0;
      const std::vector<int> loop = twist_loop(about.itin.steps, ev.step_b, ev.b_reversed, forward_labels);
      for (Weight c = 0; c < copies; ++c) {
        spliced.steps.insert(spliced.steps.end(), loop.begin(), loop.end());
      }
      ++next_event;
    }
  }

  const TracedComponent result = normalize(tri, spliced);
  if (result.kind == ComponentKind::kTrivialLoop || result.kind == ComponentKind::kTrivialArc) {
    throw FalsificationError("twist produced an inessential component", lamination_to_string(comp.coords));
  }
  return result.coords;
}

}  // namespace

Lamination dehn_twist(const Triangulation& tri, const Lamination& target, const Lamination& about, Weight n) {
  const std::vector<TracedComponent> core = trace(tri, about);
  if (core.size() != 1 || core.front().kind != ComponentKind::kCurve) {
    throw UsageError("twisting curve must be a single essential closed curve");
  }
  if (n == 0) return target;

  const std::vector<TracedComponent> parts = trace(tri, target);
  Lamination total;
  total.edge_weights.assign(static_cast<std::size_t>(tri.edge_count()), 0);
  bool any_ends = false;
  for (const TracedComponent& comp : parts) {
    const Lamination piece = twist_component(tri, comp, core.front(), n);
    for (std::size_t e = 0; e < total.edge_weights.size(); ++e) {
      total.edge_weights[e] = checked_add(total.edge_weights[e], piece.edge_weights[e]);
    }
    if (!piece.ends.empty()) {
      if (!any_ends) {
        total.ends.assign(static_cast<std::size_t>(tri.triangle_count()), {0, 0, 0});
        any_ends = true;
      }
      for (std::size_t t = 0; t < piece.ends.size(); ++t) {
        for (int s = 0; s < 3; ++s) {
          total.ends[t][static_cast<std::size_t>(s)] =
              checked_add(total.ends[t][static_cast<std::size_t>(s)], piece.ends[t][static_cast<std::size_t>(s)]);
        }
      }
    }
  }
  return total;
}

}  // namespace divlab
