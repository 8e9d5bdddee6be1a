#include "divlab/surface/lamination.hpp"

#include <sstream>

namespace divlab {

bool Lamination::closed() const {
  for (const std::array<Weight, 3>& t : ends) {
    if (t[0] != 0 || t[1] != 0 || t[2] != 0) return false;
  }
  return true;
}

bool Lamination::operator==(const Lamination& other) const {
  if (edge_weights != other.edge_weights) return false;
  if (closed() && other.closed()) return true;
  return ends == other.ends;
}

Lamination make_closed(std::vector<Weight> weights) {
  Lamination lam;
  lam.edge_weights = std::move(weights);
  return lam;
}

Weight side_weight(const Triangulation& tri, const Lamination& lam, int t, int s) {
  int e = Triangulation::edge_of(tri.label_at(t, s));
  Weight w = lam.edge_weights[static_cast<std::size_t>(e)];
  if (!lam.ends.empty()) w -= lam.ends[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
  return w;
}

std::array<Weight, 3> corner_counts(const Triangulation& tri, const Lamination& lam, int t) {
  std::array<Weight, 3> w{};
  for (int s = 0; s < 3; ++s) w[static_cast<std::size_t>(s)] = side_weight(tri, lam, t, s);
  std::array<Weight, 3> g{};
  for (int j = 0; j < 3; ++j) {
    g[static_cast<std::size_t>(j)] =
        (w[static_cast<std::size_t>(j)] + w[static_cast<std::size_t>((j + 1) % 3)] - w[static_cast<std::size_t>((j + 2) % 3)]) / 2;
  }
  return g;
}

bool is_admissible(const Triangulation& tri, const Lamination& lam, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  if (static_cast<int>(lam.edge_weights.size()) != tri.edge_count()) {
    return fail("edge weight count mismatch");
  }
  if (!lam.ends.empty() && static_cast<int>(lam.ends.size()) != tri.triangle_count()) {
    return fail("terminal table size mismatch");
  }
  for (Weight w : lam.edge_weights) {
    if (w < 0) return fail("negative edge weight");
  }
  Weight ends_total = 0;
  for (const std::array<Weight, 3>& t : lam.ends) {
    for (Weight v : t) {
      if (v < 0) return fail("negative terminal count");
      ends_total += v;
    }
  }
  if (ends_total % 2 != 0) return fail("odd number of arc ends");
  for (int t = 0; t < tri.triangle_count(); ++t) {
    Weight w[3];
    for (int s = 0; s < 3; ++s) {
      w[s] = side_weight(tri, lam, t, s);
      if (w[s] < 0) return fail("terminals exceed edge weight in triangle " + std::to_string(t));
    }
    if ((w[0] + w[1] + w[2]) % 2 != 0) {
      return fail("odd corner parity in triangle " + std::to_string(t));
    }
    for (int j = 0; j < 3; ++j) {
      if (w[j] + w[(j + 1) % 3] - w[(j + 2) % 3] < 0) {
        return fail("negative corner count in triangle " + std::to_string(t));
      }
    }
  }
  return true;
}

int peripheral_vertex(const Triangulation& tri, const std::vector<Weight>& weights) {
  for (int v = 0; v < tri.vertex_count(); ++v) {
    if (tri.vertex_link(v) == weights) return v;
  }
  return -1;
}

Weight total_weight(const Lamination& lam) {
  Weight total = 0;
  for (Weight w : lam.edge_weights) total += w;
  return total;
}

Weight end_count(const Lamination& lam) {
  Weight total = 0;
  for (const std::array<Weight, 3>& t : lam.ends) total += t[0] + t[1] + t[2];
  return total;
}

std::string lamination_to_string(const Lamination& lam) {
  std::ostringstream out;
  out << "w[";
  for (std::size_t i = 0; i < lam.edge_weights.size(); ++i) {
    if (i > 0) out << ",";
    out << lam.edge_weights[i];
  }
  out << "]";
  if (!lam.closed()) {
    out << " ends[";
    for (std::size_t t = 0; t < lam.ends.size(); ++t) {
      if (t > 0) out << ";";
      out << lam.ends[t][0] << "," << lam.ends[t][1] << "," << lam.ends[t][2];
    }
    out << "]";
  }
  return out.str();
}

std::uint64_t lamination_hash(const Lamination& lam) {
  std::uint64_t h = hash_mix(kHashSeed, lam.edge_weights.size());
  for (Weight w : lam.edge_weights) h = hash_mix(h, static_cast<std::uint64_t>(w));
  if (!lam.closed()) {
    for (const std::array<Weight, 3>& t : lam.ends) {
      for (Weight v : t) h = hash_mix(h, static_cast<std::uint64_t>(v) + 0x9e37);
    }
  }
  return h;
}

}  // namespace divlab
