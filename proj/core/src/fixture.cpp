#include "divlab/surface/fixture.hpp"

#include <cstdlib>
#include <map>
#include <memory>

#include "divlab/surface/intersect.hpp"
#include "divlab/surface/trace.hpp"

namespace divlab {

namespace {

Triangulation build_s11() {
  return Triangulation(3, {{{0, 1, 2}}, {{~0, ~1, ~2}}});
}

// Pentagon model of the five-punctured sphere: edges 0..4 are the
// pentagon sides v_i -> v_{i+1}, edges 5..8 triangulate the two faces.
Triangulation build_s05() {
  return Triangulation(9, {
                              {{0, 1, ~5}},
                              {{5, 2, ~6}},
                              {{6, 3, 4}},
                              {{~4, ~3, ~7}},
                              {{7, ~2, ~8}},
                              {{8, ~1, ~0}},
                          });
}

// Twice-punctured torus: cone the second face of the s11 model to a
// new vertex along edges 3, 4, 5.
Triangulation build_s12() {
  return Triangulation(6, {
                              {{0, 1, 2}},
                              {{~0, 4, ~3}},
                              {{~1, 5, ~4}},
                              {{~2, 3, ~5}},
                          });
}

void attach_transversals(SurfaceFixture& f) {
  f.transversal_index.assign(f.curves.size(), -1);
  for (std::size_t i = 0; i < f.curves.size(); ++i) {
    for (std::size_t j = 0; j < f.curves.size(); ++j) {
      if (i == j) continue;
      if (intersection_number(f.tri, f.curves[i], f.curves[j]) > 0) {
        f.transversal_index[i] = static_cast<int>(j);
        break;
      }
    }
  }
}

SurfaceFixture build_fixture(const std::string& name) {
  SurfaceFixture f{name, build_s11(), {}, {}, {}};
  if (name == "s11") {
    f.curve_names = {"x", "y", "z"};
    f.curves = {torus_slope(1, 0), torus_slope(0, 1), torus_slope(1, 1)};
    attach_transversals(f);
    return f;
  }
  if (name == "s05") {
    f.tri = build_s05();
    for (int e = 0; e < 5; ++e) {
      f.curve_names.push_back("a" + std::to_string(e));
      f.curves.push_back(edge_neighborhood_boundary(f.tri, e));
    }
    attach_transversals(f);
    return f;
  }
  if (name == "s12") {
    f.tri = build_s12();
    for (int e = 0; e < f.tri.edge_count(); ++e) {
      const Lamination cand = edge_neighborhood_boundary(f.tri, e);
      const std::vector<TracedComponent> comps = trace(f.tri, cand);
      if (comps.size() == 1 && comps.front().kind == ComponentKind::kCurve) {
        f.curve_names.push_back("b" + std::to_string(e));
        f.curves.push_back(cand);
      }
    }
    attach_transversals(f);
    return f;
  }
  throw UsageError("unknown surface fixture: " + name);
}

}  // namespace

const Lamination& SurfaceFixture::transversal(const std::string& curve_name) const {
  for (std::size_t i = 0; i < curve_names.size(); ++i) {
    if (curve_names[i] == curve_name) {
      if (transversal_index[i] < 0) throw UsageError("curve " + curve_name + " has no transversal in fixture " + name);
      return curves[static_cast<std::size_t>(transversal_index[i])];
    }
  }
  throw UsageError("fixture " + name + " has no curve named " + curve_name);
}

const Lamination& SurfaceFixture::curve(const std::string& curve_name) const {
  for (std::size_t i = 0; i < curve_names.size(); ++i) {
    if (curve_names[i] == curve_name) return curves[i];
  }
  throw UsageError("fixture " + name + " has no curve named " + curve_name);
}

std::uint64_t SurfaceFixture::hash() const {
  std::uint64_t h = tri.hash();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (const char c : curve_names[i]) h = hash_mix(h, static_cast<std::uint64_t>(c));
    h = hash_mix(h, lamination_hash(curves[i]));
  }
  return h;
}

const SurfaceFixture& surface_fixture(const std::string& name) {
  static std::map<std::string, std::unique_ptr<SurfaceFixture>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, std::make_unique<SurfaceFixture>(build_fixture(name))).first;
  }
  return *it->second;
}

std::vector<std::string> surface_fixture_names() { return {"s11", "s05", "s12"}; }

Lamination torus_slope(Weight p, Weight q) {
  if (p == 0 && q == 0) throw UsageError("slope requires a nonzero pair");
  const Weight ap = p < 0 ? -p : p;
  const Weight aq = q < 0 ? -q : q;
  const Weight apq = p + q < 0 ? -(p + q) : p + q;
  return make_closed({apq, aq, ap});
}

}  // namespace divlab
