#include "divlab/surface/triangulation.hpp"

#include <queue>
#include <sstream>

namespace divlab {
namespace {

// Directed sides are numbered 3*tri + pos.
int side_id(int tri, int pos) { return 3 * tri + pos; }

}  // namespace

Triangulation::Triangulation(int num_edges, std::vector<std::array<int, 3>> triangles)
    : num_edges_(num_edges), triangles_(std::move(triangles)) {
  if (num_edges_ <= 0 || triangles_.empty()) {
    throw UsageError("triangulation needs at least one edge and one triangle");
  }
  if (2 * num_edges_ != 3 * static_cast<int>(triangles_.size())) {
    throw UsageError("triangulation side count mismatch: need 2E = 3T");
  }
  fwd_slot_.assign(static_cast<std::size_t>(num_edges_), Slot{});
  rev_slot_.assign(static_cast<std::size_t>(num_edges_), Slot{});
  for (int t = 0; t < triangle_count(); ++t) {
    for (int p = 0; p < 3; ++p) {
      int label = triangles_[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
      int e = edge_of(label);
      if (e < 0 || e >= num_edges_) {
        throw UsageError("triangulation label out of range: " + std::to_string(label));
      }
      Slot& slot = is_forward(label) ? fwd_slot_[static_cast<std::size_t>(e)] : rev_slot_[static_cast<std::size_t>(e)];
      if (slot.tri >= 0) {
        throw UsageError("triangulation repeats label for edge " + std::to_string(e));
      }
      slot = Slot{t, p};
    }
  }
  for (int e = 0; e < num_edges_; ++e) {
    if (fwd_slot_[static_cast<std::size_t>(e)].tri < 0 || rev_slot_[static_cast<std::size_t>(e)].tri < 0) {
      throw UsageError("triangulation is missing a side of edge " + std::to_string(e));
    }
  }

  // Connectivity over triangle adjacency.
  {
    std::vector<char> seen(triangles_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      for (int p = 0; p < 3; ++p) {
        int other = slot_of(reverse_label(label_at(t, p))).tri;
        if (!seen[static_cast<std::size_t>(other)]) {
          seen[static_cast<std::size_t>(other)] = 1;
          ++reached;
          q.push(other);
        }
      }
    }
    if (reached != triangle_count()) {
      throw UsageError("triangulation is not connected");
    }
  }

  // Vertex orbits: rotating around the initial vertex of a directed side
  // d sends d to the side after rev(d) in its triangle.
  int side_total = 3 * triangle_count();
  std::vector<int> orbit(static_cast<std::size_t>(side_total), -1);
  corner_vertex_.assign(triangles_.size(), {-1, -1, -1});
  int next_vertex = 0;
  for (int start = 0; start < side_total; ++start) {
    if (orbit[static_cast<std::size_t>(start)] >= 0) continue;
    int v = next_vertex++;
    int d = start;
    do {
      orbit[static_cast<std::size_t>(d)] = v;
      int label = label_at(d / 3, d % 3);
      Slot r = slot_of(reverse_label(label));
      d = side_id(r.tri, (r.pos + 1) % 3);
    } while (d != start);
  }
  vertex_count_ = next_vertex;
  for (int t = 0; t < triangle_count(); ++t) {
    for (int p = 0; p < 3; ++p) {
      // Corner p is the initial vertex of side p+1.
      corner_vertex_[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)] =
          orbit[static_cast<std::size_t>(side_id(t, (p + 1) % 3))];
    }
  }

  int chi = vertex_count_ - num_edges_ + triangle_count();
  if (chi % 2 != 0 || chi > 2) {
    throw UsageError("triangulation has impossible Euler characteristic " + std::to_string(chi));
  }
  genus_ = (2 - chi) / 2;

  links_.assign(static_cast<std::size_t>(vertex_count_), std::vector<Weight>(static_cast<std::size_t>(num_edges_), 0));
  for (int e = 0; e < num_edges_; ++e) {
    links_[static_cast<std::size_t>(initial_vertex(e))][static_cast<std::size_t>(e)] += 1;
    links_[static_cast<std::size_t>(terminal_vertex(e))][static_cast<std::size_t>(e)] += 1;
  }
}

Triangulation::Slot Triangulation::slot_of(int label) const {
  int e = edge_of(label);
  return is_forward(label) ? fwd_slot_[static_cast<std::size_t>(e)] : rev_slot_[static_cast<std::size_t>(e)];
}

int Triangulation::vertex_at_corner(int tri, int pos) const {
  return corner_vertex_[static_cast<std::size_t>(tri)][static_cast<std::size_t>(pos)];
}

int Triangulation::initial_vertex(int label) const {
  Slot s = slot_of(label);
  // Side p runs from corner p-1 to corner p.
  return vertex_at_corner(s.tri, (s.pos + 2) % 3);
}

int Triangulation::terminal_vertex(int label) const {
  Slot s = slot_of(label);
  return vertex_at_corner(s.tri, s.pos);
}

const std::vector<Weight>& Triangulation::vertex_link(int v) const {
  if (v < 0 || v >= vertex_count_) throw UsageError("vertex id out of range");
  return links_[static_cast<std::size_t>(v)];
}

int Triangulation::vertex_degree(int v) const {
  const std::vector<Weight>& link = vertex_link(v);
  Weight total = 0;
  for (Weight w : link) total += w;
  return static_cast<int>(total);
}

std::string Triangulation::canonical_string() const {
  std::ostringstream out;
  out << "E" << num_edges_;
  for (const std::array<int, 3>& tri : triangles_) {
    out << ";" << tri[0] << "," << tri[1] << "," << tri[2];
  }
  return out.str();
}

std::uint64_t Triangulation::hash() const {
  std::uint64_t h = kHashSeed;
  for (char c : canonical_string()) h = hash_mix(h, static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return h;
}

}  // namespace divlab
