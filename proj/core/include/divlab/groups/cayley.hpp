#pragma once

#include <functional>
#include <memory>
#include <unordered_map>

#include "divlab/groups/backend.hpp"
#include "divlab/metric/coarse_space.hpp"

namespace divlab {

struct GroupElement {
  Point id = 0;                 // interned state id within one CayleySpace
  ActionBackend::State state;   // canonical normal-form state
  Word word;                    // some defining word (not necessarily geodesic)
};

// Cayley graph of an action-backed group as a CoarseSpace. Interns
// states; neighbor enumeration is right multiplication by each letter.
class CayleySpace : public CoarseSpace {
 public:
  explicit CayleySpace(std::shared_ptr<const ActionBackend> backend);

  std::string name() const override { return backend_->name(); }
  Point basepoint() const override { return identity_; }
  void neighbors(Point p, std::vector<Point>& out) const override;
  std::optional<Weight> exact_distance(Point a, Point b) const override;
  std::optional<ConstrainedAnswer> constrained_oracle(Point a, Point b, Point center,
                                                      Weight radius) const override;
  std::optional<Weight> distance_lower_bound(Point a, Point b) const override;
  std::string describe(Point p) const override;

  const ActionBackend& backend() const { return *backend_; }

  Point intern(const ActionBackend::State& s) const;
  const ActionBackend::State& state_of(Point p) const;

  GroupElement normalize(const Word& w) const;
  GroupElement identity() const;
  // g * a for a single letter.
  GroupElement step(const GroupElement& g, int letter) const;
  // g * h by replaying h's word on g.
  GroupElement multiply(const GroupElement& g, const Word& h) const;
  GroupElement inverse(const GroupElement& g) const;

  // Exact word length by BFS from identity, capped. nullopt = ">cap".
  std::optional<Weight> word_length_exact(const GroupElement& g, Weight cap,
                                          const SearchLimits& limits = {}) const;

  // Plug-in admissible lower bound on |a^{-1} b| (e.g. projection sums).
  void set_lower_bound_hook(
      std::function<std::optional<Weight>(const ActionBackend::State&,
                                          const ActionBackend::State&)>
          hook) {
    lower_bound_hook_ = std::move(hook);
  }

 private:
  std::shared_ptr<const ActionBackend> backend_;
  Point identity_;
  mutable std::vector<ActionBackend::State> states_;
  mutable std::unordered_map<std::uint64_t, std::vector<Point>> index_;  // hash -> ids
  std::function<std::optional<Weight>(const ActionBackend::State&, const ActionBackend::State&)>
      lower_bound_hook_;
};

std::uint64_t state_hash(const ActionBackend::State& s);

}  // namespace divlab
