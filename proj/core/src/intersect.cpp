#include "divlab/surface/intersect.hpp"

#include <array>
#include <cstdint>
#include <utility>

#include "divlab/surface/lamination.hpp"

namespace divlab {

namespace {

// A taut itinerary walked in one direction. entry(k) is the signed label
// whose slot the walk enters at crossing k; turn(k) says how the walk
// leaves that triangle: 1 exits the next side ccw (left), 2 the side
// after (right), 0 terminates at the corner opposite the entry side.
class PathView {
 public:
  PathView() = default;

  PathView(const Triangulation& tri, const Itinerary& it, bool reversed) : closed_(it.closed) {
    const int n = static_cast<int>(it.steps.size());
    entries_.resize(n);
    turns_.resize(n);
    for (int k = 0; k < n; ++k) {
      const int m = reversed ? n - 1 - k : k;
      entries_[k] = reversed ? Triangulation::reverse_label(it.steps[m]) : it.steps[m];
      int exit_pos = -1;
      if (!reversed) {
        if (it.closed || k + 1 < n) {
          exit_pos = tri.slot_of(Triangulation::reverse_label(it.steps[(k + 1) % n])).pos;
        }
      } else {
        if (it.closed || m > 0) {
          exit_pos = tri.slot_of(it.steps[(m - 1 + n) % n]).pos;
        }
      }
      if (exit_pos < 0) {
        turns_[k] = 0;
        continue;
      }
      const int entry_pos = tri.slot_of(entries_[k]).pos;
      const int turn = (exit_pos - entry_pos + 3) % 3;
      if (turn == 0) throw UsageError("path has a return and is not taut");
      turns_[k] = static_cast<std::int8_t>(turn);
    }
  }

  int length() const { return static_cast<int>(entries_.size()); }
  bool closed() const { return closed_; }
  int entry(int k) const { return entries_[k]; }
  int turn(int k) const { return turns_[k]; }
  int next(int k) const { return closed_ ? (k + 1) % length() : k + 1; }

 private:
  bool closed_ = true;
  std::vector<int> entries_;
  std::vector<std::int8_t> turns_;
};

enum class Order : std::uint8_t { kLess = 1, kGreater = 2, kParallel = 3 };

// Positions along an entry side run ccw from the clockwise corner, so
// strands that exit to the right sit lowest, terminating strands sit in
// the middle, and strands that exit left sit highest.
int turn_rank(int turn) { return (turn + 1) % 3; }

// Decides the relative ccw order of two co-directional strands by
// walking them forward until their turns differ. States revisited
// within one walk, or walks where both strands terminate together,
// are parallel. Results are memoised per state; every state on the
// walk to a decision shares that decision.
class DivergenceEngine {
 public:
  DivergenceEngine(const PathView& a, const PathView& b)
      : a_(&a), b_(&b), memo_(static_cast<std::size_t>(a.length()) * static_cast<std::size_t>(b.length()), 0),
        epoch_(memo_.size(), 0) {}

  Order query(int i, int j) {
    const std::size_t start = key(i, j);
    if (memo_[start] != 0) return static_cast<Order>(memo_[start]);
    ++round_;
    path_.clear();
    Order result = Order::kParallel;
    int ci = i;
    int cj = j;
    for (;;) {
      const std::size_t k = key(ci, cj);
      if (memo_[k] != 0) {
        result = static_cast<Order>(memo_[k]);
        break;
      }
      if (epoch_[k] == round_) break;  // cycle: strands never diverge
      epoch_[k] = round_;
      path_.push_back(k);
      const int ta = a_->turn(ci);
      const int tb = b_->turn(cj);
      if (ta != tb) {
        result = turn_rank(ta) < turn_rank(tb) ? Order::kLess : Order::kGreater;
        break;
      }
      if (ta == 0) break;  // both terminate at the shared opposite corner
      ci = a_->next(ci);
      cj = b_->next(cj);
    }
    for (const std::size_t k : path_) memo_[k] = static_cast<std::uint8_t>(result);
    return result;
  }

 private:
  std::size_t key(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(b_->length()) + static_cast<std::size_t>(j); }

  const PathView* a_;
  const PathView* b_;
  std::vector<std::uint8_t> memo_;
  std::vector<std::int32_t> epoch_;
  std::int32_t round_ = 0;
  std::vector<std::size_t> path_;
};

Order flip(Order o) {
  if (o == Order::kLess) return Order::kGreater;
  if (o == Order::kGreater) return Order::kLess;
  return Order::kParallel;
}

// Crossings forced inside a single triangle between chords that share
// no side: a corner chord against a terminal ending at that corner, and
// terminals entering distinct sides. Pairs sharing a side are handled
// by the corridor walk instead.
Weight in_triangle_extras(const Triangulation& tri, const Lamination& a, const Lamination& b) {
  if (a.ends.empty() && b.ends.empty()) return 0;
  Weight total = 0;
  for (int t = 0; t < tri.triangle_count(); ++t) {
    const std::array<Weight, 3> ga = corner_counts(tri, a, t);
    const std::array<Weight, 3> gb = corner_counts(tri, b, t);
    std::array<Weight, 3> ta{0, 0, 0};
    std::array<Weight, 3> tb{0, 0, 0};
    if (!a.ends.empty()) ta = a.ends[static_cast<std::size_t>(t)];
    if (!b.ends.empty()) tb = b.ends[static_cast<std::size_t>(t)];
    for (int j = 0; j < 3; ++j) {
      total = checked_add(total, checked_mul(ga[static_cast<std::size_t>(j)], tb[static_cast<std::size_t>((j + 2) % 3)]));
      total = checked_add(total, checked_mul(gb[static_cast<std::size_t>(j)], ta[static_cast<std::size_t>((j + 2) % 3)]));
    }
    for (int s = 0; s < 3; ++s) {
      for (int s2 = 0; s2 < 3; ++s2) {
        if (s == s2) continue;
        total = checked_add(total, checked_mul(ta[static_cast<std::size_t>(s)], tb[static_cast<std::size_t>(s2)]));
      }
    }
  }
  return total;
}

}  // namespace

std::vector<CrossingEvent> crossing_events(const Triangulation& tri, const Itinerary& a, const Itinerary& b) {
  std::vector<CrossingEvent> events;
  if (a.steps.empty() || b.steps.empty()) return events;

  const PathView af(tri, a, false);
  const PathView ar(tri, a, true);
  const PathView bf(tri, b, false);
  const PathView br(tri, b, true);
  const int na = af.length();
  const int nb = bf.length();

  DivergenceEngine fwd_f(af, bf);
  DivergenceEngine fwd_r(af, br);
  DivergenceEngine bwd_f(ar, br);  // backward of a co-directional forward-b state
  DivergenceEngine bwd_r(ar, bf);  // backward of a reversed-b state

  std::vector<std::vector<int>> passages(static_cast<std::size_t>(tri.edge_count()));
  for (int j = 0; j < nb; ++j) passages[static_cast<std::size_t>(Triangulation::edge_of(b.steps[j]))].push_back(j);

  for (int i = 0; i < na; ++i) {
    const int label = a.steps[static_cast<std::size_t>(i)];
    for (const int j : passages[static_cast<std::size_t>(Triangulation::edge_of(label))]) {
      const bool reversed = b.steps[static_cast<std::size_t>(j)] != label;
      // Directed index of b's passage j in the view used for the state.
      const int dj = reversed ? nb - 1 - j : j;

      // Backward walk begins in the triangle on the far side of the
      // shared edge; a crossing is charged here only when the strands
      // arrived there through different sides.
      const int bi = na - 1 - i;
      const int bj = nb - 1 - dj;
      const PathView& aback = ar;
      const PathView& bback = reversed ? bf : br;
      if (aback.turn(bi) == bback.turn(bj)) continue;

      const Order back = reversed ? bwd_r.query(bi, bj) : bwd_f.query(bi, bj);
      const Order front = reversed ? fwd_r.query(i, dj) : fwd_f.query(i, dj);
      if (front == Order::kParallel || back == Order::kParallel) continue;
      // back is stated in far-side entry coordinates; crossing means the
      // near-side orders disagree, i.e. front equals the unflipped back.
      if (front != back) continue;

      CrossingEvent ev;
      ev.step_a = i;
      ev.step_b = j;
      ev.b_reversed = reversed;
      ev.upward = flip(back) == Order::kLess;
      events.push_back(ev);
    }
  }
  return events;
}

Weight intersection_number(const Triangulation& tri, const TracedComponent& a, const TracedComponent& b) {
  const auto trivial = [](const TracedComponent& c) {
    return c.kind == ComponentKind::kTrivialLoop || c.kind == ComponentKind::kTrivialArc;
  };
  if (trivial(a) || trivial(b)) return 0;
  if (a.kind == ComponentKind::kPeripheral || b.kind == ComponentKind::kPeripheral) {
    throw UsageError("intersection with a peripheral component is not supported");
  }
  if (a.kind == ComponentKind::kEdgeArc && b.kind == ComponentKind::kEdgeArc) return 0;
  if (a.kind == ComponentKind::kEdgeArc) {
    return b.coords.edge_weights[static_cast<std::size_t>(a.edge)];
  }
  if (b.kind == ComponentKind::kEdgeArc) {
    return a.coords.edge_weights[static_cast<std::size_t>(b.edge)];
  }
  const Weight crossings = static_cast<Weight>(crossing_events(tri, a.itin, b.itin).size());
  return checked_add(crossings, in_triangle_extras(tri, a.coords, b.coords));
}

Weight intersection_number(const Triangulation& tri, const Lamination& a, const Lamination& b) {
  const std::vector<TracedComponent> ca = trace(tri, a);
  const std::vector<TracedComponent> cb = trace(tri, b);
  Weight total = 0;
  for (const TracedComponent& x : ca) {
    for (const TracedComponent& y : cb) {
      total = checked_add(total, intersection_number(tri, x, y));
    }
  }
  return total;
}

}  // namespace divlab
