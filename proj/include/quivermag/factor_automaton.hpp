#pragma once

#include <cstddef>
#include <vector>

namespace quivermag {

// Aho-Corasick automaton over a dense integer alphabet that recognizes
// words containing any of a set of forbidden factors. Transitions are a
// complete table; a state is dead once some forbidden word ends there (or
// at one of its suffix-link ancestors). Dead states are absorbing for the
// purposes of path enumeration: callers stop extending when they hit one.
class FactorAutomaton {
 public:
  FactorAutomaton(std::size_t alphabet_size, const std::vector<std::vector<std::size_t>>& forbidden);

  static constexpr std::size_t root() { return 0; }

  std::size_t next(std::size_t state, std::size_t symbol) const {
    return transitions_[state * alphabet_size_ + symbol];
  }
  bool is_dead(std::size_t state) const { return dead_[state]; }
  std::size_t size() const { return dead_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }

 private:
  std::size_t alphabet_size_;
  std::vector<std::size_t> transitions_;
  std::vector<bool> dead_;
};

}  // namespace quivermag
