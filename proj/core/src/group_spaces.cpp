#include "divlab/groups/controls.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace divlab {
namespace {

std::string coord_name(int i) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  if (i < 4) return kNames[i];
  return "g" + std::to_string(i);
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class ZnBackend : public ActionBackend {
 public:
  explicit ZnBackend(int n) : n_(n) {
    if (n < 1) throw UsageError("Z^n needs n >= 1");
  }

  std::string name() const override { return "Z^" + std::to_string(n_); }
  int letter_count() const override { return 2 * n_; }
  std::string letter_label(int l) const override {
    std::string base = coord_name(l / 2);
    return (l % 2 == 0) ? base : upper(base);
  }
  int inverse_letter(int l) const override { return l ^ 1; }
  State identity_state() const override { return State(static_cast<std::size_t>(n_), 0); }

  State apply(const State& s, int l) const override {
    State r = s;
    r[static_cast<std::size_t>(l / 2)] += (l % 2 == 0) ? 1 : -1;
    return r;
  }

  std::optional<Weight> exact_distance(const State& a, const State& b) const override {
    Weight d = 0;
    for (int i = 0; i < n_; ++i) d += std::llabs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
    return d;
  }

  std::optional<CoarseSpace::ConstrainedAnswer> constrained_oracle(const State& a, const State& b,
                                                                   const State& c,
                                                                   Weight radius) const override {
    if (n_ != 1) return std::nullopt;  // only the line has a closed form
    Weight x = a[0], y = b[0], m = c[0];
    if (radius <= 0) return CoarseSpace::ConstrainedAnswer{false, std::llabs(x - y)};
    Weight lo = m - radius + 1, hi = m + radius - 1;  // integers inside the open ball
    bool x_left = x < lo, y_left = y < lo;
    bool x_right = x > hi, y_right = y > hi;
    if ((x_left && y_right) || (x_right && y_left))
      return CoarseSpace::ConstrainedAnswer{true, 0};
    return CoarseSpace::ConstrainedAnswer{false, std::llabs(x - y)};
  }

 private:
  int n_;
};

class FreeBackend : public ActionBackend {
 public:
  explicit FreeBackend(int rank) : rank_(rank) {
    if (rank < 1 || rank > 6) throw UsageError("free rank must be in [1,6]");
  }

  std::string name() const override { return "F_" + std::to_string(rank_); }
  int letter_count() const override { return 2 * rank_; }
  std::string letter_label(int l) const override {
    std::string base(1, static_cast<char>('a' + l / 2));
    return (l % 2 == 0) ? base : upper(base);
  }
  int inverse_letter(int l) const override { return l ^ 1; }
  State identity_state() const override { return {}; }

  // State entries: generator i as i+1, its inverse as -(i+1), reduced.
  State apply(const State& s, int l) const override {
    Weight v = (l % 2 == 0) ? (l / 2 + 1) : -(l / 2 + 1);
    State r = s;
    if (!r.empty() && r.back() == -v) {
      r.pop_back();
    } else {
      r.push_back(v);
    }
    return r;
  }

  std::optional<Weight> exact_distance(const State& a, const State& b) const override {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<Weight>(a.size() - k) + static_cast<Weight>(b.size() - k);
  }

  // The Cayley graph is a tree: the a..b geodesic is unique, so the ball
  // separates iff it meets that geodesic.
  std::optional<CoarseSpace::ConstrainedAnswer> constrained_oracle(const State& a, const State& b,
                                                                   const State& c,
                                                                   Weight radius) const override {
    if (radius <= 0) return CoarseSpace::ConstrainedAnswer{false, *exact_distance(a, b)};
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    auto dist_to_c = [&](const State& v) {
      std::size_t j = 0;
      while (j < v.size() && j < c.size() && v[j] == c[j]) ++j;
      return static_cast<Weight>(v.size() - j) + static_cast<Weight>(c.size() - j);
    };
    State v = a;
    auto blocked = [&](const State& p) { return dist_to_c(p) < radius; };
    if (blocked(v)) return CoarseSpace::ConstrainedAnswer{true, 0};
    while (v.size() > k) {
      v.pop_back();
      if (blocked(v)) return CoarseSpace::ConstrainedAnswer{true, 0};
    }
    for (std::size_t j = k; j < b.size(); ++j) {
      v.push_back(b[j]);
      if (blocked(v)) return CoarseSpace::ConstrainedAnswer{true, 0};
    }
    return CoarseSpace::ConstrainedAnswer{false, *exact_distance(a, b)};
  }

  std::string describe(const State& s) const override {
    if (s.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ".";
      int g = static_cast<int>(std::llabs(s[i])) - 1;
      std::string base(1, static_cast<char>('a' + g));
      out += (s[i] > 0) ? base : upper(base);
    }
    return out;
  }

 private:
  int rank_;
};

// B3 = <x, y | x^2 = y^3>, z = x^2 central, x = s1.s2.s1, y = s1.s2.
// Normal form: z^m followed by alternating syllables from {x, y, y^2};
// the state is [m, syl...] with x -> 1, y -> 2, y^2 -> 3. This is the
// standard amalgam normal form, so equality of states is equality in B3.
class Braid3Backend : public ActionBackend {
 public:
  std::string name() const override { return "B_3"; }
  int letter_count() const override { return 4; }
  std::string letter_label(int l) const override {
    static const char* kLabels[] = {"s1", "S1", "s2", "S2"};
    return kLabels[l];
  }
  int inverse_letter(int l) const override { return l ^ 1; }
  State identity_state() const override { return {0}; }

  State apply(const State& s, int l) const override {
    State r = s;
    r[0] -= 1;  // every sigma letter carries one z^{-1}
    switch (l) {
      case 0: push(r, 3); push(r, 1); break;  // s1 = z^{-1} y^2 x
      case 1: push(r, 1); push(r, 2); break;  // S1 = z^{-1} x y
      case 2: push(r, 1); push(r, 3); break;  // s2 = z^{-1} x y^2
      case 3: push(r, 2); push(r, 1); break;  // S2 = z^{-1} y x
      default: throw UsageError("bad letter for B_3");
    }
    return r;
  }

  std::vector<std::vector<int>> relators() const override {
    // braid relation s1 s2 s1 = s2 s1 s2 as a cyclic word
    return {{0, 2, 0, 3, 1, 3}};
  }

  std::string describe(const State& s) const override {
    std::ostringstream os;
    os << "z^" << s[0];
    for (std::size_t i = 1; i < s.size(); ++i) {
      os << (s[i] == 1 ? ".x" : s[i] == 2 ? ".y" : ".y2");
    }
    return os.str();
  }

 private:
  static void push(State& r, Weight syl) {
    for (;;) {
      if (r.size() == 1) {
        r.push_back(syl);
        return;
      }
      Weight last = r.back();
      if (last == 1 && syl == 1) {  // x.x = z
        r.pop_back();
        r[0] += 1;
        return;
      }
      if (last >= 2 && syl >= 2) {  // combine y powers, y^3 = z
        Weight e = (last - 1) + (syl - 1);
        r.pop_back();
        if (e == 2) {
          r.push_back(3);
          return;
        }
        r[0] += 1;  // e is 3 or 4, both carry one z
        if (e == 3) return;
        syl = 2;  // leftover y re-enters against the new tail
        continue;
      }
      r.push_back(syl);
      return;
    }
  }
};

}  // namespace

std::shared_ptr<const ActionBackend> make_zn_backend(int n) {
  return std::make_shared<ZnBackend>(n);
}

std::shared_ptr<const ActionBackend> make_free_backend(int rank) {
  return std::make_shared<FreeBackend>(rank);
}

std::shared_ptr<const ActionBackend> make_braid3_backend() {
  return std::make_shared<Braid3Backend>();
}

}  // namespace divlab
