#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divlab/common.hpp"
#include "divlab/metric/coarse_space.hpp"

namespace divlab {

// A group given by a symmetric generator list acting faithfully on a
// normal-form state. States are flat integer vectors so equality and
// hashing are exact. Letters index the symmetric generator list.
class ActionBackend {
 public:
  using State = std::vector<Weight>;

  virtual ~ActionBackend() = default;
  virtual std::string name() const = 0;
  virtual int letter_count() const = 0;
  virtual std::string letter_label(int letter) const = 0;
  virtual int inverse_letter(int letter) const = 0;
  virtual State identity_state() const = 0;
  // State of g*a given the state of g (right multiplication).
  virtual State apply(const State& state, int letter) const = 0;
  virtual std::string describe(const State& state) const;

  // Optional exact structure (controls implement these).
  virtual std::optional<Weight> exact_distance(const State&, const State&) const {
    return std::nullopt;
  }
  virtual std::optional<CoarseSpace::ConstrainedAnswer> constrained_oracle(
      const State&, const State&, const State&, Weight) const {
    return std::nullopt;
  }

  // Relator words for sanity checks; every one must normalize to identity.
  virtual std::vector<std::vector<int>> relators() const { return {}; }
};

using Word = std::vector<int>;  // letter indices

Word inverse_word(const ActionBackend& backend, const Word& w);
std::string word_to_string(const ActionBackend& backend, const Word& w);
// Parses "a,B,c" style comma lists or whitespace lists of letter labels.
Word parse_word(const ActionBackend& backend, const std::string& text);

}  // namespace divlab
