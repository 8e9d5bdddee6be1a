#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "divlab/surface/annulus.hpp"
#include "divlab/surface/fixture.hpp"
#include "divlab/surface/intersect.hpp"
#include "divlab/surface/lamination.hpp"
#include "divlab/surface/trace.hpp"
#include "divlab/surface/triangulation.hpp"
#include "divlab/surface/twist.hpp"
#include "harness.hpp"

using namespace divlab;

namespace {

Itinerary reversed_itinerary(const Itinerary& it) {
  Itinerary out;
  out.closed = it.closed;
  for (auto r = it.steps.rbegin(); r != it.steps.rend(); ++r) {
    out.steps.push_back(Triangulation::reverse_label(*r));
  }
  out.start_tri = it.end_tri;
  out.start_corner = it.end_corner;
  out.end_tri = it.start_tri;
  out.end_corner = it.start_corner;
  return out;
}

Lamination dual_arc_s11() {
  Lamination arc;
  arc.edge_weights = {1, 0, 0};
  arc.ends.assign(2, {0, 0, 0});
  arc.ends[0][0] = 1;
  arc.ends[1][0] = 1;
  return arc;
}

std::vector<std::pair<Weight, Weight>> coprime_slopes(Weight bound) {
  std::vector<std::pair<Weight, Weight>> out;
  for (Weight p = -bound; p <= bound; ++p) {
    for (Weight q = 0; q <= bound; ++q) {
      if (q == 0 && p <= 0) continue;
      if (q > 0 && p != 0 && std::gcd(static_cast<long long>(p < 0 ? -p : p), static_cast<long long>(q)) != 1) continue;
      if (q == 0 && p != 1) continue;
      if (q > 0 && p == 0 && q != 1) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

}  // namespace

TEST_CASE(triangulation_counts_and_genus) {
  const SurfaceFixture& s11 = surface_fixture("s11");
  REQUIRE_EQ(s11.tri.edge_count(), 3);
  REQUIRE_EQ(s11.tri.triangle_count(), 2);
  REQUIRE_EQ(s11.tri.vertex_count(), 1);
  REQUIRE_EQ(s11.tri.genus(), 1);
  REQUIRE_EQ(s11.tri.punctures(), 1);

  const SurfaceFixture& s05 = surface_fixture("s05");
  REQUIRE_EQ(s05.tri.edge_count(), 9);
  REQUIRE_EQ(s05.tri.triangle_count(), 6);
  REQUIRE_EQ(s05.tri.vertex_count(), 5);
  REQUIRE_EQ(s05.tri.genus(), 0);
  REQUIRE_EQ(s05.tri.punctures(), 5);

  const SurfaceFixture& s12 = surface_fixture("s12");
  REQUIRE_EQ(s12.tri.edge_count(), 6);
  REQUIRE_EQ(s12.tri.triangle_count(), 4);
  REQUIRE_EQ(s12.tri.vertex_count(), 2);
  REQUIRE_EQ(s12.tri.genus(), 1);
  REQUIRE_EQ(s12.tri.punctures(), 2);
}

TEST_CASE(triangulation_rejects_bad_gluings) {
  REQUIRE_THROWS_AS(Triangulation(3, {{{0, 1, 2}}, {{0, ~1, ~2}}}), UsageError);
  REQUIRE_THROWS_AS(Triangulation(2, {{{0, 1, ~0}}, {{~1, 0, 1}}}), UsageError);
  REQUIRE_THROWS_AS(Triangulation(4, {{{0, 1, 2}}, {{~0, ~1, ~2}}}), UsageError);
  // Two disjoint once-punctured tori share no triangle path.
  REQUIRE_THROWS_AS(Triangulation(6, {{{0, 1, 2}}, {{~0, ~1, ~2}}, {{3, 4, 5}}, {{~3, ~4, ~5}}}), UsageError);
}

TEST_CASE(pentagon_vertex_links) {
  const SurfaceFixture& f = surface_fixture("s05");
  const int v1 = f.tri.terminal_vertex(0);
  REQUIRE_EQ(f.tri.vertex_degree(v1), 2);
  const std::vector<Weight> link = f.tri.vertex_link(v1);
  REQUIRE_EQ(link[0], 1);
  REQUIRE_EQ(link[1], 1);
  Weight rest = 0;
  for (int e = 2; e < 9; ++e) rest += link[static_cast<std::size_t>(e)];
  REQUIRE_EQ(rest, 0);
  REQUIRE_EQ(peripheral_vertex(f.tri, link), v1);

  Weight degree_sum = 0;
  for (int v = 0; v < f.tri.vertex_count(); ++v) degree_sum += f.tri.vertex_degree(v);
  REQUIRE_EQ(degree_sum, 2 * f.tri.edge_count());
}

TEST_CASE(admissibility_screens) {
  const SurfaceFixture& f = surface_fixture("s11");
  std::string why;
  REQUIRE(is_admissible(f.tri, make_closed({2, 1, 1}), &why));
  REQUIRE(!is_admissible(f.tri, make_closed({1, 0, 0}), &why));
  REQUIRE(!is_admissible(f.tri, make_closed({4, 1, 1}), &why));
  REQUIRE(!is_admissible(f.tri, make_closed({-1, 0, 1}), &why));
  REQUIRE(!is_admissible(f.tri, make_closed({1, 1}), &why));

  Lamination arc = dual_arc_s11();
  REQUIRE(is_admissible(f.tri, arc, &why));
  arc.ends[0][0] = 2;
  REQUIRE(!is_admissible(f.tri, arc, &why));
  arc.edge_weights[0] = 3;
  arc.ends[0][0] = 1;
  arc.ends[1][0] = 0;
  REQUIRE(!is_admissible(f.tri, arc, &why));
}

TEST_CASE(trace_round_trips_fixture_curves) {
  for (const std::string& name : surface_fixture_names()) {
    const SurfaceFixture& f = surface_fixture(name);
    REQUIRE(!f.curves.empty());
    for (const Lamination& c : f.curves) {
      const std::vector<TracedComponent> comps = trace(f.tri, c);
      REQUIRE_EQ(comps.size(), 1u);
      REQUIRE(comps.front().kind == ComponentKind::kCurve);
      REQUIRE(comps.front().coords == c);
      std::string why;
      REQUIRE(itinerary_valid(f.tri, comps.front().itin, &why));
      REQUIRE(coords_of(f.tri, comps.front().itin) == c);
    }
  }
}

TEST_CASE(trace_splits_parallel_and_disjoint_unions) {
  const SurfaceFixture& f = surface_fixture("s05");
  const Lamination& a0 = f.curve("a0");
  const Lamination& a2 = f.curve("a2");

  Lamination doubled = a0;
  for (std::size_t e = 0; e < doubled.edge_weights.size(); ++e) doubled.edge_weights[e] *= 2;
  const std::vector<TracedComponent> twins = trace(f.tri, doubled);
  REQUIRE_EQ(twins.size(), 2u);
  REQUIRE(twins[0].coords == a0);
  REQUIRE(twins[1].coords == a0);

  Lamination pair = a0;
  for (std::size_t e = 0; e < pair.edge_weights.size(); ++e) pair.edge_weights[e] += a2.edge_weights[e];
  const std::vector<TracedComponent> comps = trace(f.tri, pair);
  REQUIRE_EQ(comps.size(), 2u);
  REQUIRE((comps[0].coords == a0 && comps[1].coords == a2) || (comps[0].coords == a2 && comps[1].coords == a0));
}

TEST_CASE(trace_detects_peripherals) {
  const SurfaceFixture& f = surface_fixture("s05");
  for (int v = 0; v < f.tri.vertex_count(); ++v) {
    const std::vector<TracedComponent> comps = trace(f.tri, make_closed(f.tri.vertex_link(v)));
    REQUIRE_EQ(comps.size(), 1u);
    REQUIRE(comps.front().kind == ComponentKind::kPeripheral);
    REQUIRE_EQ(comps.front().vertex, v);
    REQUIRE(coords_of(f.tri, peripheral_itinerary(f.tri, v)).edge_weights == f.tri.vertex_link(v));
  }
}

TEST_CASE(normalize_cancels_returns) {
  const SurfaceFixture& f = surface_fixture("s11");
  Itinerary loop;
  loop.steps = {0, ~0};
  const TracedComponent c = normalize(f.tri, loop);
  REQUIRE(c.kind == ComponentKind::kTrivialLoop);
}

TEST_CASE(normalize_is_reversal_invariant) {
  for (const std::string& name : surface_fixture_names()) {
    const SurfaceFixture& f = surface_fixture(name);
    for (const Lamination& c : f.curves) {
      const std::vector<TracedComponent> comps = trace(f.tri, c);
      const TracedComponent back = normalize(f.tri, reversed_itinerary(comps.front().itin));
      REQUIRE(back.kind == ComponentKind::kCurve);
      REQUIRE(back.coords == c);
    }
  }
  const SurfaceFixture& s11 = surface_fixture("s11");
  const std::vector<TracedComponent> arcs = trace(s11.tri, dual_arc_s11());
  REQUIRE_EQ(arcs.size(), 1u);
  REQUIRE(arcs.front().kind == ComponentKind::kArc);
  const TracedComponent back = normalize(s11.tri, reversed_itinerary(arcs.front().itin));
  REQUIRE(back.kind == ComponentKind::kArc);
  REQUIRE(back.coords == dual_arc_s11());
}

TEST_CASE(normalize_rotation_invariant_for_curves) {
  const SurfaceFixture& f = surface_fixture("s05");
  for (const Lamination& c : f.curves) {
    const Itinerary it = trace(f.tri, c).front().itin;
    for (std::size_t r = 1; r < it.steps.size(); ++r) {
      Itinerary rot;
      rot.closed = true;
      rot.steps.assign(it.steps.begin() + static_cast<long>(r), it.steps.end());
      rot.steps.insert(rot.steps.end(), it.steps.begin(), it.steps.begin() + static_cast<long>(r));
      const TracedComponent got = normalize(f.tri, rot);
      REQUIRE(got.kind == ComponentKind::kCurve);
      REQUIRE(got.coords == c);
    }
  }
}

TEST_CASE(torus_slopes_realize_determinant_pairing) {
  const SurfaceFixture& f = surface_fixture("s11");
  const std::vector<std::pair<Weight, Weight>> slopes = coprime_slopes(4);
  REQUIRE(slopes.size() >= 10u);
  for (const auto& a : slopes) {
    for (const auto& b : slopes) {
      const Weight expected = a.first * b.second - a.second * b.first;
      const Weight got = intersection_number(f.tri, torus_slope(a.first, a.second), torus_slope(b.first, b.second));
      REQUIRE_EQ(got, expected < 0 ? -expected : expected);
    }
  }
}

TEST_CASE(pentagon_chain_intersections) {
  const SurfaceFixture& f = surface_fixture("s05");
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const int gap = std::min((i - j + 5) % 5, (j - i + 5) % 5);
      const Weight expected = gap == 1 ? 2 : 0;
      REQUIRE_EQ(intersection_number(f.tri, f.curves[static_cast<std::size_t>(i)], f.curves[static_cast<std::size_t>(j)]), expected);
    }
  }
}

TEST_CASE(edge_neighborhood_boundary_on_torus) {
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination bd = edge_neighborhood_boundary(f.tri, 0);
  REQUIRE(bd.edge_weights == std::vector<Weight>({0, 2, 2}));
  const std::vector<TracedComponent> comps = trace(f.tri, bd);
  REQUIRE_EQ(comps.size(), 2u);
  for (const TracedComponent& c : comps) {
    REQUIRE(c.kind == ComponentKind::kCurve);
    REQUIRE(c.coords == torus_slope(1, -1));
  }
}

TEST_CASE(edge_arc_intersections) {
  const SurfaceFixture& f = surface_fixture("s05");
  TracedComponent ea;
  ea.kind = ComponentKind::kEdgeArc;
  ea.edge = 0;
  const TracedComponent a0 = trace(f.tri, f.curve("a0")).front();
  const TracedComponent a1 = trace(f.tri, f.curve("a1")).front();
  const TracedComponent a2 = trace(f.tri, f.curve("a2")).front();
  REQUIRE_EQ(intersection_number(f.tri, ea, a0), 0);
  REQUIRE_EQ(intersection_number(f.tri, ea, a1), 1);
  REQUIRE_EQ(intersection_number(f.tri, a1, ea), 1);
  REQUIRE_EQ(intersection_number(f.tri, ea, a2), 0);
}

TEST_CASE(arc_slope_pairings) {
  // The arc crossing only edge 0 is the flipped diagonal: determinant 1
  // against the square's sides, 2 against the old diagonal's curve, 0
  // against its own curve.
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination arc = dual_arc_s11();
  REQUIRE_EQ(intersection_number(f.tri, arc, torus_slope(1, 0)), 1);
  REQUIRE_EQ(intersection_number(f.tri, arc, torus_slope(0, 1)), 1);
  const Weight with_sum = intersection_number(f.tri, arc, torus_slope(1, 1));
  const Weight with_diff = intersection_number(f.tri, arc, torus_slope(1, -1));
  REQUIRE_EQ(std::min(with_sum, with_diff), 0);
  REQUIRE_EQ(std::max(with_sum, with_diff), 2);
  REQUIRE_EQ(intersection_number(f.tri, torus_slope(1, -1), arc), with_diff);
}

TEST_CASE(peripheral_intersection_rejected) {
  const SurfaceFixture& f = surface_fixture("s05");
  const TracedComponent per = trace(f.tri, make_closed(f.tri.vertex_link(0))).front();
  const TracedComponent a0 = trace(f.tri, f.curve("a0")).front();
  REQUIRE_THROWS_AS(intersection_number(f.tri, per, a0), UsageError);
}

TEST_CASE(twist_fixes_its_core) {
  const SurfaceFixture& s11 = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  REQUIRE(dehn_twist(s11.tri, x, x, 9) == x);
  const SurfaceFixture& s05 = surface_fixture("s05");
  REQUIRE(dehn_twist(s05.tri, s05.curve("a3"), s05.curve("a3"), -4) == s05.curve("a3"));
}

TEST_CASE(twist_ignores_disjoint_curves) {
  const SurfaceFixture& f = surface_fixture("s05");
  REQUIRE(dehn_twist(f.tri, f.curve("a2"), f.curve("a0"), 5) == f.curve("a2"));
  REQUIRE(dehn_twist(f.tri, f.curve("a3"), f.curve("a0"), -7) == f.curve("a3"));
}

TEST_CASE(twist_acts_on_torus_slopes_by_shear) {
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  const Lamination y = torus_slope(0, 1);
  // Frozen handedness of the positive twist on this triangulation.
  REQUIRE(dehn_twist(f.tri, y, x, 1) == torus_slope(-1, 1));
  REQUIRE(dehn_twist(f.tri, x, y, 1) == torus_slope(1, 1));
  for (Weight n = -4; n <= 4; ++n) {
    REQUIRE(dehn_twist(f.tri, y, x, n) == torus_slope(-n, 1));
  }
  // Inverse twists undo.
  for (Weight n = 1; n <= 5; ++n) {
    REQUIRE(dehn_twist(f.tri, dehn_twist(f.tri, y, x, n), x, -n) == y);
  }
}

TEST_CASE(twist_growth_matches_square_law) {
  const SurfaceFixture& s11 = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  const Lamination y = torus_slope(0, 1);
  for (const Weight n : {Weight(1), Weight(2), Weight(5), Weight(17), Weight(-3), Weight(50)}) {
    const Lamination moved = dehn_twist(s11.tri, y, x, n);
    REQUIRE_EQ(intersection_number(s11.tri, moved, y), (n < 0 ? -n : n));
    REQUIRE_EQ(intersection_number(s11.tri, moved, x), 1);
  }
  const SurfaceFixture& s05 = surface_fixture("s05");
  const Lamination& a0 = s05.curve("a0");
  const Lamination& a1 = s05.curve("a1");
  for (const Weight n : {Weight(1), Weight(2), Weight(3), Weight(-2)}) {
    const Lamination moved = dehn_twist(s05.tri, a1, a0, n);
    REQUIRE_EQ(intersection_number(s05.tri, moved, a1), 4 * (n < 0 ? -n : n));
    REQUIRE_EQ(intersection_number(s05.tri, moved, a0), 2);
    REQUIRE(dehn_twist(s05.tri, moved, a0, -n) == a1);
  }
}

TEST_CASE(twist_powers_compose) {
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  const Lamination z = torus_slope(1, 1);
  REQUIRE(dehn_twist(f.tri, dehn_twist(f.tri, z, x, 2), x, 3) == dehn_twist(f.tri, z, x, 5));
  REQUIRE(dehn_twist(f.tri, dehn_twist(f.tri, z, x, -2), x, 2) == z);
  const SurfaceFixture& s05 = surface_fixture("s05");
  const Lamination& a1 = s05.curve("a1");
  const Lamination& a2 = s05.curve("a2");
  REQUIRE(dehn_twist(s05.tri, dehn_twist(s05.tri, a2, a1, 1), a1, 1) == dehn_twist(s05.tri, a2, a1, 2));
}

TEST_CASE(disjoint_twists_commute) {
  const SurfaceFixture& f = surface_fixture("s05");
  const Lamination& a0 = f.curve("a0");
  const Lamination& a2 = f.curve("a2");
  for (const char* target : {"a1", "a3", "a4"}) {
    const Lamination& c = f.curve(target);
    const Lamination lhs = dehn_twist(f.tri, dehn_twist(f.tri, c, a0, 2), a2, -3);
    const Lamination rhs = dehn_twist(f.tri, dehn_twist(f.tri, c, a2, -3), a0, 2);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE(unit_intersection_twists_braid) {
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  const Lamination y = torus_slope(0, 1);
  const auto dx = [&](const Lamination& c, Weight n) { return dehn_twist(f.tri, c, x, n); };
  const auto dy = [&](const Lamination& c, Weight n) { return dehn_twist(f.tri, c, y, n); };
  for (const auto& slope : coprime_slopes(3)) {
    const Lamination c = torus_slope(slope.first, slope.second);
    REQUIRE(dx(dy(dx(c, 1), 1), 1) == dy(dx(dy(c, 1), 1), 1));
  }
  REQUIRE(dx(dy(dx(x, 1), 1), 1) == y);
}

TEST_CASE(twists_preserve_intersection_numbers) {
  const SurfaceFixture& s11 = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  const std::vector<std::pair<Weight, Weight>> slopes = coprime_slopes(3);
  for (const auto& a : slopes) {
    for (const auto& b : slopes) {
      const Lamination la = torus_slope(a.first, a.second);
      const Lamination lb = torus_slope(b.first, b.second);
      const Weight before = intersection_number(s11.tri, la, lb);
      const Lamination ta = dehn_twist(s11.tri, la, x, 3);
      const Lamination tb = dehn_twist(s11.tri, lb, x, 3);
      REQUIRE_EQ(intersection_number(s11.tri, ta, tb), before);
    }
  }
  const SurfaceFixture& s05 = surface_fixture("s05");
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const Lamination ta = dehn_twist(s05.tri, s05.curves[static_cast<std::size_t>(i)], s05.curve("a1"), -2);
      const Lamination tb = dehn_twist(s05.tri, s05.curves[static_cast<std::size_t>(j)], s05.curve("a1"), -2);
      const Weight before = intersection_number(s05.tri, s05.curves[static_cast<std::size_t>(i)], s05.curves[static_cast<std::size_t>(j)]);
      REQUIRE_EQ(intersection_number(s05.tri, ta, tb), before);
    }
  }
}

TEST_CASE(twists_conjugate_along_mapping_classes) {
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination x = torus_slope(1, 0);
  const Lamination y = torus_slope(0, 1);
  const Lamination z = torus_slope(1, 1);
  // The twist about the image of x under the y-twist equals the
  // conjugated twist, applied here to a third curve.
  const Lamination moved_core = dehn_twist(f.tri, x, y, 1);
  for (const Weight n : {Weight(1), Weight(2), Weight(-3)}) {
    const Lamination lhs = dehn_twist(f.tri, z, moved_core, n);
    const Lamination rhs = dehn_twist(f.tri, dehn_twist(f.tri, dehn_twist(f.tri, z, y, -1), x, n), y, 1);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE(twists_move_arcs) {
  const SurfaceFixture& f = surface_fixture("s11");
  const Lamination arc = dual_arc_s11();
  const Lamination y = torus_slope(0, 1);
  const Lamination moved = dehn_twist(f.tri, arc, y, 2);
  REQUIRE(!moved.closed());
  REQUIRE_EQ(end_count(moved), 2);
  REQUIRE(dehn_twist(f.tri, moved, y, -2) == arc);
  const Lamination x = torus_slope(1, 0);
  const Weight before = intersection_number(f.tri, arc, x);
  REQUIRE_EQ(intersection_number(f.tri, moved, dehn_twist(f.tri, x, y, 2)), before);
}

TEST_CASE(twist_on_multicurve_sums_components) {
  const SurfaceFixture& f = surface_fixture("s05");
  const Lamination& a0 = f.curve("a0");
  const Lamination& a2 = f.curve("a2");
  Lamination pair = a0;
  for (std::size_t e = 0; e < pair.edge_weights.size(); ++e) pair.edge_weights[e] += a2.edge_weights[e];
  const Lamination moved = dehn_twist(f.tri, pair, f.curve("a1"), 2);
  const Lamination m0 = dehn_twist(f.tri, a0, f.curve("a1"), 2);
  const Lamination m2 = dehn_twist(f.tri, a2, f.curve("a1"), 2);
  Lamination expect = m0;
  for (std::size_t e = 0; e < expect.edge_weights.size(); ++e) expect.edge_weights[e] += m2.edge_weights[e];
  REQUIRE(moved == expect);
}

TEST_CASE(twist_requires_closed_essential_core) {
  const SurfaceFixture& f = surface_fixture("s05");
  REQUIRE_THROWS_AS(dehn_twist(f.tri, f.curve("a0"), make_closed(f.tri.vertex_link(0)), 1), UsageError);
  REQUIRE_THROWS_AS(dehn_twist(f.tri, f.curve("a0"), dual_arc_s11(), 1), UsageError);
}

TEST_CASE(secondary_fixture_curves_are_essential) {
  const SurfaceFixture& f = surface_fixture("s12");
  REQUIRE(f.curves.size() >= 3u);
  for (std::size_t i = 0; i < f.curves.size(); ++i) {
    for (std::size_t j = 0; j < f.curves.size(); ++j) {
      REQUIRE_EQ(intersection_number(f.tri, f.curves[i], f.curves[j]),
                 intersection_number(f.tri, f.curves[j], f.curves[i]));
    }
  }
}

TEST_CASE(fixture_hashes_are_stable) {
  const std::uint64_t h1 = surface_fixture("s05").hash();
  const std::uint64_t h2 = surface_fixture("s05").hash();
  REQUIRE_EQ(h1, h2);
  REQUIRE(surface_fixture("s05").hash() != surface_fixture("s12").hash());
}

TEST_CASE(twist_shift_is_equivariant) {
  const SurfaceFixture& f = surface_fixture("s05");
  const Lamination& alpha = f.curve("a0");
  const Lamination& tau = f.transversal("a0");
  const Lamination& beta = f.curve("a4");
  const Weight base = twist_shift(f.tri, alpha, tau, beta);
  for (const Weight m : {Weight(-3), Weight(1), Weight(7)}) {
    const Lamination moved = dehn_twist(f.tri, beta, alpha, m);
    REQUIRE_EQ(twist_shift(f.tri, alpha, tau, moved), base + m);
  }
}

TEST_CASE(annular_distance_to_self_is_small) {
  const SurfaceFixture& f = surface_fixture("s05");
  const Lamination& alpha = f.curve("a2");
  const Lamination& tau = f.transversal("a2");
  const Lamination& beta = f.curve("a1");
  REQUIRE(annular_projection_distance(f.tri, alpha, tau, beta, beta) <= 2);
  REQUIRE(annular_distance_runlength(f.tri, alpha, beta, beta) <= 2);
}

TEST_CASE(annular_distance_tracks_twist_power) {
  for (const std::string& name : {std::string("s11"), std::string("s05")}) {
    const SurfaceFixture& f = surface_fixture(name);
    const std::string a_name = name == "s11" ? "x" : "a0";
    const std::string b_name = name == "s11" ? "y" : "a1";
    const Lamination& alpha = f.curve(a_name);
    const Lamination& tau = f.transversal(a_name);
    const Lamination& beta = f.curve(b_name);
    for (const Weight n : {Weight(5), Weight(17), Weight(50), Weight(-5)}) {
      const Lamination moved = dehn_twist(f.tri, beta, alpha, n);
      const Weight want = n < 0 ? -n : n;
      const Weight prod = annular_projection_distance(f.tri, alpha, tau, beta, moved);
      const Weight indep = annular_distance_runlength(f.tri, alpha, beta, moved);
      REQUIRE(prod >= want - 2 && prod <= want + 2);
      REQUIRE(indep >= want - 2 && indep <= want + 2);
      REQUIRE((prod > indep ? prod - indep : indep - prod) <= 2);
    }
  }
}

TEST_CASE(annular_distance_sees_opposite_twists) {
  const SurfaceFixture& f = surface_fixture("s05");
  const Lamination& alpha = f.curve("a3");
  const Lamination& tau = f.transversal("a3");
  const Lamination& beta = f.curve("a2");
  const Lamination up = dehn_twist(f.tri, beta, alpha, 5);
  const Lamination down = dehn_twist(f.tri, beta, alpha, -5);
  const Weight prod = annular_projection_distance(f.tri, alpha, tau, up, down);
  const Weight indep = annular_distance_runlength(f.tri, alpha, up, down);
  REQUIRE(prod >= 9 && prod <= 13);
  REQUIRE(indep >= 9 && indep <= 13);
}

TEST_CASE(empty_annular_projection_rejected) {
  const SurfaceFixture& f = surface_fixture("s05");
  REQUIRE_THROWS_AS(twist_shift(f.tri, f.curve("a0"), f.transversal("a0"), f.curve("a2")), UsageError);
  REQUIRE_THROWS_AS(annular_distance_runlength(f.tri, f.curve("a0"), f.curve("a2"), f.curve("a1")), UsageError);
}

TEST_MAIN()
