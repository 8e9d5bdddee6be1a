#include "divlab/groups/backend.hpp"

#include <sstream>

namespace divlab {

std::string ActionBackend::describe(const State& state) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) os << ",";
    os << state[i];
  }
  os << "]";
  return os.str();
}

Word inverse_word(const ActionBackend& backend, const Word& w) {
  Word inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(backend.inverse_letter(*it));
  return inv;
}

std::string word_to_string(const ActionBackend& backend, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += backend.letter_label(static_cast<int>(w[i]));
  }
  return out;
}

Word parse_word(const ActionBackend& backend, const std::string& text) {
  Word w;
  std::string tok;
  std::istringstream is(text);
  auto flush = [&](const std::string& t) {
    if (t.empty() || t == "1") return;
    for (int l = 0; l < backend.letter_count(); ++l) {
      if (backend.letter_label(l) == t) {
        w.push_back(l);
        return;
      }
    }
    throw UsageError("unknown generator label '" + t + "' for " + backend.name());
  };
  std::string chunk;
  while (is >> chunk) {
    std::string cur;
    for (char c : chunk) {
      if (c == ',' || c == '.') {
        flush(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    flush(cur);
  }
  return w;
}

}  // namespace divlab
