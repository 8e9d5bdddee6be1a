#include "divlab/groups/cayley.hpp"

#include <deque>

namespace divlab {

std::uint64_t state_hash(const ActionBackend::State& s) {
  std::uint64_t h = hash_mix(kHashSeed, static_cast<std::uint64_t>(s.size()));
  for (Weight v : s) h = hash_mix(h, static_cast<std::uint64_t>(v));
  return h;
}

CayleySpace::CayleySpace(std::shared_ptr<const ActionBackend> backend)
    : backend_(std::move(backend)) {
  identity_ = intern(backend_->identity_state());
}

Point CayleySpace::intern(const ActionBackend::State& s) const {
  std::uint64_t h = state_hash(s);
  auto& bucket = index_[h];
  for (Point id : bucket) {
    if (states_[id] == s) return id;
  }
  Point id = states_.size();
  states_.push_back(s);
  bucket.push_back(id);
  return id;
}

const ActionBackend::State& CayleySpace::state_of(Point p) const {
  if (p >= states_.size()) throw UsageError("unknown point id in " + name());
  return states_[p];
}

void CayleySpace::neighbors(Point p, std::vector<Point>& out) const {
  const ActionBackend::State s = state_of(p);  // copy: intern may grow states_
  out.clear();
  for (int l = 0; l < backend_->letter_count(); ++l) out.push_back(intern(backend_->apply(s, l)));
}

std::optional<Weight> CayleySpace::exact_distance(Point a, Point b) const {
  return backend_->exact_distance(state_of(a), state_of(b));
}

std::optional<CoarseSpace::ConstrainedAnswer> CayleySpace::constrained_oracle(
    Point a, Point b, Point center, Weight radius) const {
  return backend_->constrained_oracle(state_of(a), state_of(b), state_of(center), radius);
}

std::optional<Weight> CayleySpace::distance_lower_bound(Point a, Point b) const {
  if (!lower_bound_hook_) return std::nullopt;
  return lower_bound_hook_(state_of(a), state_of(b));
}

std::string CayleySpace::describe(Point p) const { return backend_->describe(state_of(p)); }

GroupElement CayleySpace::identity() const {
  return GroupElement{identity_, backend_->identity_state(), {}};
}

GroupElement CayleySpace::normalize(const Word& w) const {
  ActionBackend::State s = backend_->identity_state();
  for (int l : w) s = backend_->apply(s, l);
  Point id = intern(s);
  return GroupElement{id, std::move(s), w};
}

GroupElement CayleySpace::step(const GroupElement& g, int letter) const {
  GroupElement out;
  out.state = backend_->apply(g.state, letter);
  out.id = intern(out.state);
  out.word = g.word;
  out.word.push_back(letter);
  return out;
}

GroupElement CayleySpace::multiply(const GroupElement& g, const Word& h) const {
  GroupElement out = g;
  for (int l : h) out.state = backend_->apply(out.state, l);
  out.id = intern(out.state);
  out.word.insert(out.word.end(), h.begin(), h.end());
  return out;
}

GroupElement CayleySpace::inverse(const GroupElement& g) const {
  return normalize(inverse_word(*backend_, g.word));
}

std::optional<Weight> CayleySpace::word_length_exact(const GroupElement& g, Weight cap,
                                                     const SearchLimits& limits) const {
  if (g.id == identity_) return 0;
  if (cap <= 0) return std::nullopt;
  std::unordered_map<Point, Weight> dist;
  std::deque<Point> frontier;
  dist[identity_] = 0;
  frontier.push_back(identity_);
  std::vector<Point> nbrs;
  while (!frontier.empty()) {
    Point p = frontier.front();
    frontier.pop_front();
    Weight dp = dist[p];
    if (dp >= cap) continue;
    neighbors(p, nbrs);
    for (Point q : nbrs) {
      if (dist.count(q)) continue;
      dist[q] = dp + 1;
      if (q == g.id) return dp + 1;
      if (dist.size() > limits.max_states)
        throw CapacityError("word length search exceeded state budget in " + name());
      frontier.push_back(q);
    }
  }
  return std::nullopt;
}

}  // namespace divlab
