#include "divlab/surface/trace.hpp"

#include <algorithm>

namespace divlab {
namespace {

int rev(int label) { return Triangulation::reverse_label(label); }

struct ChordHit {
  bool terminal = false;
  int exit_side = -1;
  Weight exit_pos = -1;
};

struct ChordTable {
  const Triangulation* tri;
  const Lamination* lam;
  std::vector<std::array<Weight, 3>> corner;  // G per triangle

  Weight full(int t, int s) const {
    return lam->edge_weights[static_cast<std::size_t>(Triangulation::edge_of(tri->label_at(t, s)))];
  }
  Weight terminals(int t, int s) const {
    if (lam->ends.empty()) return 0;
    return lam->ends[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
  }
  // Chord occupying position q (in ccw order) of side s of triangle t.
  // Blocks along the side: corner s-1 chords, terminals, corner s chords.
  ChordHit hit(int t, int s, Weight q) const {
    Weight a = corner[static_cast<std::size_t>(t)][static_cast<std::size_t>((s + 2) % 3)];
    ChordHit h;
    if (q < a) {
      h.exit_side = (s + 2) % 3;
      h.exit_pos = full(t, h.exit_side) - 1 - q;
      return h;
    }
    if (q < a + terminals(t, s)) {
      h.terminal = true;
      return h;
    }
    Weight depth = full(t, s) - 1 - q;
    h.exit_side = (s + 1) % 3;
    h.exit_pos = depth;
    return h;
  }
};

void classify_closed(const Triangulation& tri, Itinerary it, TracedComponent& out) {
  out.itin = std::move(it);
  if (out.itin.steps.empty()) {
    out.kind = ComponentKind::kTrivialLoop;
    return;
  }
  out.coords = coords_of(tri, out.itin);
  int v = peripheral_vertex(tri, out.coords.edge_weights);
  if (v >= 0) {
    out.kind = ComponentKind::kPeripheral;
    out.vertex = v;
  } else {
    out.kind = ComponentKind::kCurve;
  }
}

void classify_open(const Triangulation& tri, Itinerary it, TracedComponent& out) {
  if (it.steps.empty()) {
    if (it.start_tri != it.end_tri) throw UsageError("itinerary ends lost their triangle");
    if (it.start_corner == it.end_corner) {
      out.kind = ComponentKind::kTrivialArc;
      return;
    }
    for (int s = 0; s < 3; ++s) {
      int head = s, tail = (s + 2) % 3;
      if ((head == it.start_corner && tail == it.end_corner) ||
          (head == it.end_corner && tail == it.start_corner)) {
        out.kind = ComponentKind::kEdgeArc;
        out.edge = Triangulation::edge_of(tri.label_at(it.start_tri, s));
        return;
      }
    }
    throw UsageError("itinerary ends at impossible corner pair");
  }
  out.kind = ComponentKind::kArc;
  out.coords = coords_of(tri, it);
  out.itin = std::move(it);
}

}  // namespace

bool itinerary_valid(const Triangulation& tri, const Itinerary& it, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  for (int L : it.steps) {
    int e = Triangulation::edge_of(L);
    if (e < 0 || e >= tri.edge_count()) return fail("label out of range");
  }
  std::size_t n = it.steps.size();
  std::size_t pairs = it.closed ? n : (n == 0 ? 0 : n - 1);
  for (std::size_t k = 0; k < pairs; ++k) {
    int cur = it.steps[k];
    int nxt = it.steps[(k + 1) % n];
    if (tri.slot_of(rev(nxt)).tri != tri.slot_of(cur).tri) {
      return fail("consecutive steps do not share a triangle");
    }
  }
  if (!it.closed) {
    if (it.start_corner < 0 || it.start_corner > 2 || it.end_corner < 0 || it.end_corner > 2) {
      return fail("corner out of range");
    }
    if (n == 0) {
      if (it.start_tri != it.end_tri) return fail("empty arc spans two triangles");
    } else {
      if (it.start_tri != tri.slot_of(rev(it.steps.front())).tri) return fail("start corner in wrong triangle");
      if (it.end_tri != tri.slot_of(it.steps.back()).tri) return fail("end corner in wrong triangle");
    }
  }
  return true;
}

Lamination coords_of(const Triangulation& tri, const Itinerary& it) {
  Lamination lam;
  lam.edge_weights.assign(static_cast<std::size_t>(tri.edge_count()), 0);
  for (int L : it.steps) lam.edge_weights[static_cast<std::size_t>(Triangulation::edge_of(L))] += 1;
  if (!it.closed) {
    lam.ends.assign(static_cast<std::size_t>(tri.triangle_count()), {0, 0, 0});
    if (!it.steps.empty()) {
      lam.ends[static_cast<std::size_t>(it.start_tri)][static_cast<std::size_t>(tri.slot_of(rev(it.steps.front())).pos)] += 1;
      lam.ends[static_cast<std::size_t>(it.end_tri)][static_cast<std::size_t>(tri.slot_of(it.steps.back()).pos)] += 1;
    }
  }
  return lam;
}

TracedComponent normalize(const Triangulation& tri, Itinerary it) {
  TracedComponent out;
  if (it.closed) {
    std::vector<int> stack;
    for (int L : it.steps) {
      if (!stack.empty() && stack.back() == rev(L)) {
        stack.pop_back();
      } else {
        stack.push_back(L);
      }
    }
    while (stack.size() >= 2 && stack.front() == rev(stack.back())) {
      stack.erase(stack.begin());
      stack.pop_back();
    }
    Itinerary reduced;
    reduced.closed = true;
    reduced.steps = std::move(stack);
    classify_closed(tri, std::move(reduced), out);
    return out;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Interior cancellations.
    std::vector<int> stack;
    for (int L : it.steps) {
      if (!stack.empty() && stack.back() == rev(L)) {
        stack.pop_back();
        changed = true;
      } else {
        stack.push_back(L);
      }
    }
    it.steps = std::move(stack);
    // Swing the start terminal until it points at the far corner. The
    // corner records which end of the crossed edge it hugs, so loop
    // edges resolve unambiguously.
    while (!it.steps.empty()) {
      int L = it.steps.front();
      Triangulation::Slot here = tri.slot_of(rev(L));
      if (it.start_corner == (here.pos + 1) % 3) break;
      Triangulation::Slot there = tri.slot_of(L);
      if (it.start_corner == here.pos) {
        it.start_corner = (there.pos + 2) % 3;  // head of rev(L) is tail of L
      } else {
        it.start_corner = there.pos;
      }
      it.start_tri = there.tri;
      it.steps.erase(it.steps.begin());
      changed = true;
    }
    while (!it.steps.empty()) {
      int L = it.steps.back();
      Triangulation::Slot here = tri.slot_of(L);
      if (it.end_corner == (here.pos + 1) % 3) break;
      Triangulation::Slot there = tri.slot_of(rev(L));
      if (it.end_corner == here.pos) {
        it.end_corner = (there.pos + 2) % 3;
      } else {
        it.end_corner = there.pos;
      }
      it.end_tri = there.tri;
      it.steps.pop_back();
      changed = true;
    }
  }
  classify_open(tri, std::move(it), out);
  return out;
}

std::vector<TracedComponent> trace(const Triangulation& tri, const Lamination& lam) {
  std::string why;
  if (!is_admissible(tri, lam, &why)) throw UsageError("inadmissible coordinates: " + why);

  ChordTable table;
  table.tri = &tri;
  table.lam = &lam;
  table.corner.resize(static_cast<std::size_t>(tri.triangle_count()));
  for (int t = 0; t < tri.triangle_count(); ++t) {
    table.corner[static_cast<std::size_t>(t)] = corner_counts(tri, lam, t);
  }

  std::vector<std::array<std::vector<char>, 3>> visited(static_cast<std::size_t>(tri.triangle_count()));
  for (int t = 0; t < tri.triangle_count(); ++t) {
    for (int s = 0; s < 3; ++s) {
      visited[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(table.full(t, s)), 0);
    }
  }
  auto mark = [&](int t, int s, Weight q) { visited[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)][static_cast<std::size_t>(q)] = 1; };
  auto seen = [&](int t, int s, Weight q) { return visited[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)][static_cast<std::size_t>(q)] != 0; };

  std::vector<TracedComponent> out;

  // Arcs start at terminal slots.
  for (int t0 = 0; t0 < tri.triangle_count(); ++t0) {
    for (int s0 = 0; s0 < 3; ++s0) {
      Weight a = table.corner[static_cast<std::size_t>(t0)][static_cast<std::size_t>((s0 + 2) % 3)];
      Weight b = a + table.terminals(t0, s0);
      for (Weight q0 = a; q0 < b; ++q0) {
        if (seen(t0, s0, q0)) continue;
        Itinerary it;
        it.closed = false;
        it.start_tri = t0;
        it.start_corner = (s0 + 1) % 3;
        mark(t0, s0, q0);
        int L = tri.label_at(t0, s0);
        it.steps.push_back(rev(L));
        Triangulation::Slot ns = tri.slot_of(rev(L));
        int ct = ns.tri, cs = ns.pos;
        Weight cq = table.full(t0, s0) - 1 - q0;
        mark(ct, cs, cq);
        while (true) {
          ChordHit h = table.hit(ct, cs, cq);
          if (h.terminal) {
            it.end_tri = ct;
            it.end_corner = (cs + 1) % 3;
            break;
          }
          mark(ct, h.exit_side, h.exit_pos);
          int L2 = tri.label_at(ct, h.exit_side);
          it.steps.push_back(rev(L2));
          Triangulation::Slot n2 = tri.slot_of(rev(L2));
          Weight q2 = table.full(ct, h.exit_side) - 1 - h.exit_pos;
          ct = n2.tri;
          cs = n2.pos;
          cq = q2;
          mark(ct, cs, cq);
        }
        TracedComponent comp;
        classify_open(tri, std::move(it), comp);
        out.push_back(std::move(comp));
      }
    }
  }

  // Remaining slots belong to closed components.
  for (int t0 = 0; t0 < tri.triangle_count(); ++t0) {
    for (int s0 = 0; s0 < 3; ++s0) {
      Weight n = table.full(t0, s0);
      for (Weight q0 = 0; q0 < n; ++q0) {
        if (seen(t0, s0, q0)) continue;
        Itinerary it;
        it.closed = true;
        it.steps.push_back(tri.label_at(t0, s0));
        mark(t0, s0, q0);
        int ct = t0, cs = s0;
        Weight cq = q0;
        while (true) {
          ChordHit h = table.hit(ct, cs, cq);
          if (h.terminal) throw UsageError("closed trace hit a terminal slot");
          mark(ct, h.exit_side, h.exit_pos);
          int L2 = tri.label_at(ct, h.exit_side);
          Triangulation::Slot n2 = tri.slot_of(rev(L2));
          Weight q2 = table.full(ct, h.exit_side) - 1 - h.exit_pos;
          if (n2.tri == t0 && n2.pos == s0 && q2 == q0) break;
          it.steps.push_back(rev(L2));
          ct = n2.tri;
          cs = n2.pos;
          cq = q2;
          mark(ct, cs, cq);
        }
        TracedComponent comp;
        classify_closed(tri, std::move(it), comp);
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

Itinerary peripheral_itinerary(const Triangulation& tri, int v) {
  for (int t = 0; t < tri.triangle_count(); ++t) {
    for (int c = 0; c < 3; ++c) {
      if (tri.vertex_at_corner(t, c) != v) continue;
      Itinerary it;
      it.closed = true;
      int ct = t, cc = c;
      do {
        int L = tri.label_at(ct, (cc + 1) % 3);
        Triangulation::Slot ns = tri.slot_of(rev(L));
        it.steps.push_back(rev(L));
        ct = ns.tri;
        cc = ns.pos;
      } while (ct != t || cc != c);
      return it;
    }
  }
  throw UsageError("no corner found for vertex");
}

Lamination edge_neighborhood_boundary(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.edge_count()) throw UsageError("edge out of range");
  int u = tri.initial_vertex(e);
  int v = tri.terminal_vertex(e);
  std::vector<Weight> w(static_cast<std::size_t>(tri.edge_count()), 0);
  for (int f = 0; f < tri.edge_count(); ++f) {
    Weight ends = tri.vertex_link(u)[static_cast<std::size_t>(f)];
    if (v != u) ends += tri.vertex_link(v)[static_cast<std::size_t>(f)];
    w[static_cast<std::size_t>(f)] = ends;
  }
  w[static_cast<std::size_t>(e)] -= 2;
  return make_closed(std::move(w));
}

}  // namespace divlab
