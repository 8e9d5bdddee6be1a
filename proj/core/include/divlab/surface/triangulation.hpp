#pragma once

#include <array>
#include <string>
#include <vector>

#include "divlab/common.hpp"

namespace divlab {

// Ideal triangulation of a punctured surface. Each triangle lists its
// three sides in ccw order as signed edge labels: label e >= 0 means
// edge e traversed tail-to-head, ~e (= -e-1) the reverse. Every edge
// appears exactly once with each sign, which forces orientability.
//
// Corner j of a triangle sits between sides j and j+1 (mod 3); it is
// the terminal vertex of directed side j. Vertices are the puncture
// classes obtained by rotating corners around their vertex.
class Triangulation {
 public:
  Triangulation(int num_edges, std::vector<std::array<int, 3>> triangles);

  static int reverse_label(int label) { return -label - 1; }
  static int edge_of(int label) { return label >= 0 ? label : -label - 1; }
  static bool is_forward(int label) { return label >= 0; }

  int edge_count() const { return num_edges_; }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  int vertex_count() const { return vertex_count_; }
  int genus() const { return genus_; }
  int punctures() const { return vertex_count_; }

  const std::array<int, 3>& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }

  struct Slot {
    int tri = -1;
    int pos = -1;
  };
  // Location of a signed label among the triangle sides.
  Slot slot_of(int label) const;
  int label_at(int tri, int pos) const { return triangles_[static_cast<std::size_t>(tri)][static_cast<std::size_t>(pos)]; }

  // Vertex ids (0..punctures-1).
  int vertex_at_corner(int tri, int pos) const;
  int initial_vertex(int label) const;   // tail of the directed side
  int terminal_vertex(int label) const;  // head
  // Number of ends of each edge at vertex v (the vertex link vector;
  // peripheral curves have exactly these normal coordinates).
  const std::vector<Weight>& vertex_link(int v) const;
  int vertex_degree(int v) const;  // total edge-ends at v

  std::string canonical_string() const;
  std::uint64_t hash() const;

 private:
  int num_edges_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Slot> fwd_slot_, rev_slot_;     // by edge
  std::vector<std::array<int, 3>> corner_vertex_;  // by triangle
  std::vector<std::vector<Weight>> links_;
  int vertex_count_ = 0;
  int genus_ = 0;
};

}  // namespace divlab
