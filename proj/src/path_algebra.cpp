#include "quivermag/path_algebra.hpp"

#include <algorithm>
#include <deque>

namespace quivermag {

PathBasis::PathBasis(std::size_t num_vertices, std::vector<std::vector<Path>> by_pair,
                     std::vector<std::string> label_order)
    : num_vertices_(num_vertices), by_pair_(std::move(by_pair)), index_(num_vertices) {
  auto labels = [&](const Path& p) {
    std::vector<std::string_view> out;
    for (std::size_t a : p.arrows) out.emplace_back(label_order[a]);
    return out;
  };
  for (auto& list : by_pair_) {
    std::sort(list.begin(), list.end(), [&](const Path& x, const Path& y) {
      if (x.length() != y.length()) return x.length() < y.length();
      return labels(x) < labels(y);
    });
    for (std::size_t k = 0; k < list.size(); ++k) index_[list[k].source].emplace(list[k].arrows, k);
    total_dim_ += list.size();
  }
}

std::optional<std::size_t> PathBasis::index_of(std::size_t source, const std::vector<std::size_t>& arrows) const {
  const auto& index = index_[source];
  const auto it = index.find(arrows);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

PathBasis enumerate_paths(const BoundQuiver& bq) {
  if (auto cycle = find_unbounded_cycle(bq)) throw InfiniteDimensionalError(bq.quiver(), std::move(*cycle));

  const Quiver& q = bq.quiver();
  const std::size_t n = q.num_vertices();
  const FactorAutomaton automaton = relation_automaton(bq);

  std::vector<std::vector<Path>> by_pair(n * n);
  struct Pending {
    Path path;
    std::size_t state;
  };
  std::deque<Pending> frontier;
  for (std::size_t v = 0; v < n; ++v) frontier.push_back({idempotent(v), FactorAutomaton::root()});

  while (!frontier.empty()) {
    Pending item = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t a : q.arrows_from(item.path.target)) {
      const std::size_t state = automaton.next(item.state, a);
      if (automaton.is_dead(state)) continue;
      Path longer{item.path.source, q.arrows()[a].target, item.path.arrows};
      longer.arrows.push_back(a);
      frontier.push_back({std::move(longer), state});
    }
    by_pair[item.path.source * n + item.path.target].push_back(std::move(item.path));
  }

  std::vector<std::string> labels;
  for (const Arrow& a : q.arrows()) labels.push_back(a.label);
  return PathBasis(n, std::move(by_pair), std::move(labels));
}

Matrix cartan_matrix(const PathBasis& basis) {
  const std::size_t n = basis.num_vertices();
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = static_cast<unsigned long>(basis.count(j, i));
  return z;
}

Representation projective_module(const BoundQuiver& bq, const PathBasis& basis, std::size_t vertex) {
  const Quiver& q = bq.quiver();
  Representation p = zero_representation(q);
  for (std::size_t k = 0; k < q.num_vertices(); ++k) p.dims[k] = basis.count(vertex, k);

  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    Matrix action(p.dims[arrow.target], p.dims[arrow.source]);
    const auto& from = basis.paths(vertex, arrow.source);
    for (std::size_t col = 0; col < from.size(); ++col) {
      std::vector<std::size_t> extended = from[col].arrows;
      extended.push_back(a);
      if (const auto row = basis.index_of(vertex, extended)) action(*row, col) = 1;
    }
    p.arrow_maps[a] = std::move(action);
  }
  return p;
}

Algebra::Algebra(BoundQuiver bq)
    : bq_(std::move(bq)), basis_(enumerate_paths(bq_)), cartan_(cartan_matrix(basis_)) {
  projectives_.reserve(bq_.quiver().num_vertices());
  for (std::size_t v = 0; v < bq_.quiver().num_vertices(); ++v) {
    projectives_.push_back(projective_module(bq_, basis_, v));
  }
}

}  // namespace quivermag
