#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivermag/factor_automaton.hpp"
#include "quivermag/quiver.hpp"

namespace quivermag {

// Automaton rejecting paths that contain a relation, over arrow indices.
FactorAutomaton relation_automaton(const BoundQuiver& bq);

// A cycle of arrows (traversal order) that can be repeated forever without
// ever completing a relation, reachable from some idempotent; std::nullopt
// when the algebra is finite-dimensional.
std::optional<std::vector<std::size_t>> find_unbounded_cycle(const BoundQuiver& bq);

// True iff only finitely many paths avoid every relation as a contiguous
// factor, i.e. KQ/(relations) is finite-dimensional.
bool is_finite_dimensional(const BoundQuiver& bq);

class InfiniteDimensionalError : public std::runtime_error {
 public:
  InfiniteDimensionalError(const Quiver& quiver, std::vector<std::size_t> cycle);

  const std::vector<std::size_t>& cycle() const { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

}  // namespace quivermag
