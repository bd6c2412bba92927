#include "quivermag/factor_automaton.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace quivermag {

namespace {
constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
}

FactorAutomaton::FactorAutomaton(std::size_t alphabet_size,
                                 const std::vector<std::vector<std::size_t>>& forbidden)
    : alphabet_size_(alphabet_size) {
  // Trie.
  transitions_.assign(alphabet_size_, kUnset);
  dead_.assign(1, false);
  for (const auto& word : forbidden) {
    std::size_t state = root();
    for (std::size_t symbol : word) {
      if (symbol >= alphabet_size_) throw std::out_of_range("forbidden word uses a symbol outside the alphabet");
      std::size_t& slot = transitions_[state * alphabet_size_ + symbol];
      if (slot == kUnset) {
        slot = dead_.size();
        dead_.push_back(false);
        transitions_.resize(dead_.size() * alphabet_size_, kUnset);
      }
      state = transitions_[state * alphabet_size_ + symbol];
    }
    dead_[state] = true;
  }

  // Breadth-first completion: missing edges follow the suffix link.
  std::vector<std::size_t> link(dead_.size(), root());
  std::queue<std::size_t> pending;
  for (std::size_t symbol = 0; symbol < alphabet_size_; ++symbol) {
    std::size_t& slot = transitions_[symbol];
    if (slot == kUnset) {
      slot = root();
    } else {
      link[slot] = root();
      pending.push(slot);
    }
  }
  while (!pending.empty()) {
    const std::size_t state = pending.front();
    pending.pop();
    if (dead_[link[state]]) dead_[state] = true;
    for (std::size_t symbol = 0; symbol < alphabet_size_; ++symbol) {
      std::size_t& slot = transitions_[state * alphabet_size_ + symbol];
      const std::size_t fallback = transitions_[link[state] * alphabet_size_ + symbol];
      if (slot == kUnset) {
        slot = fallback;
      } else {
        link[slot] = fallback;
        pending.push(slot);
      }
    }
  }
}

}  // namespace quivermag
