#include "quivermag/finiteness.hpp"

namespace quivermag {

namespace {

std::string describe_cycle(const Quiver& q, const std::vector<std::size_t>& cycle) {
  std::string labels;
  for (std::size_t a : cycle) {
    if (!labels.empty()) labels += ", ";
    labels += q.arrows()[a].label;
  }
  return "algebra is infinite-dimensional: the cycle through arrows [" + labels +
         "] (traversal order) avoids every relation and can be repeated indefinitely";
}

}  // namespace

InfiniteDimensionalError::InfiniteDimensionalError(const Quiver& quiver, std::vector<std::size_t> cycle)
    : std::runtime_error(describe_cycle(quiver, cycle)), cycle_(std::move(cycle)) {}

FactorAutomaton relation_automaton(const BoundQuiver& bq) {
  std::vector<std::vector<std::size_t>> words;
  for (const Path& r : bq.relations()) words.push_back(r.arrows);
  return FactorAutomaton(bq.quiver().num_arrows(), words);
}

std::optional<std::vector<std::size_t>> find_unbounded_cycle(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  const FactorAutomaton automaton = relation_automaton(bq);
  const std::size_t n = q.num_vertices();

  // Product graph node: (automaton state, current vertex).
  enum class Mark : unsigned char { unseen, open, done };
  std::vector<Mark> mark(automaton.size() * n, Mark::unseen);
  struct Frame {
    std::size_t node;
    std::size_t next_edge;
    std::size_t via_arrow;
  };

  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t start_node = FactorAutomaton::root() * n + start;
    if (mark[start_node] != Mark::unseen) continue;
    std::vector<Frame> stack{{start_node, 0, 0}};
    mark[start_node] = Mark::open;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const std::size_t state = top.node / n;
      const std::size_t vertex = top.node % n;
      const auto& out = q.arrows_from(vertex);
      if (top.next_edge == out.size()) {
        mark[top.node] = Mark::done;
        stack.pop_back();
        continue;
      }
      const std::size_t a = out[top.next_edge++];
      const std::size_t next_state = automaton.next(state, a);
      if (automaton.is_dead(next_state)) continue;
      const std::size_t next = next_state * n + q.arrows()[a].target;
      if (mark[next] == Mark::open) {
        std::vector<std::size_t> cycle;
        std::size_t k = stack.size();
        while (stack[k - 1].node != next) --k;
        for (std::size_t f = k; f < stack.size(); ++f) cycle.push_back(stack[f].via_arrow);
        cycle.push_back(a);
        return cycle;
      }
      if (mark[next] == Mark::unseen) {
        mark[next] = Mark::open;
        stack.push_back({next, 0, a});
      }
    }
  }
  return std::nullopt;
}

bool is_finite_dimensional(const BoundQuiver& bq) { return !find_unbounded_cycle(bq).has_value(); }

}  // namespace quivermag
