#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "quivermag/finiteness.hpp"
#include "quivermag/matrix.hpp"
#include "quivermag/quiver.hpp"
#include "quivermag/representation.hpp"

namespace quivermag {

// The nonzero paths of KQ/(relations), grouped by (source, target). Within
// a pair, paths are ordered by length and then by their label sequence in
// traversal order.
class PathBasis {
 public:
  PathBasis() = default;
  PathBasis(std::size_t num_vertices, std::vector<std::vector<Path>> by_pair,
            std::vector<std::string> label_order);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Path>& paths(std::size_t source, std::size_t target) const {
    return by_pair_[source * num_vertices_ + target];
  }
  std::size_t count(std::size_t source, std::size_t target) const { return paths(source, target).size(); }
  // dim_K A
  std::size_t total_dim() const { return total_dim_; }

  // Position of `arrows` within paths(source, target(arrows)), if it is a basis path.
  std::optional<std::size_t> index_of(std::size_t source, const std::vector<std::size_t>& arrows) const;

 private:
  std::size_t num_vertices_ = 0;
  std::size_t total_dim_ = 0;
  std::vector<std::vector<Path>> by_pair_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_;  // per source
};

// Breadth-first extension of the idempotents, carrying the relation
// automaton state along each path so no suffix is rescanned. Throws
// InfiniteDimensionalError naming a reachable relation-avoiding cycle.
PathBasis enumerate_paths(const BoundQuiver& bq);

// Z_{ij} = number of basis paths from j to i = dim Hom(P_i, P_j).
Matrix cartan_matrix(const PathBasis& basis);

// P_i: basis paths starting at i, arrows acting by post-composition.
Representation projective_module(const BoundQuiver& bq, const PathBasis& basis, std::size_t vertex);

// A finite-dimensional bound quiver algebra with its path basis, Cartan
// matrix and indecomposable projectives computed once.
class Algebra {
 public:
  explicit Algebra(BoundQuiver bq);

  const BoundQuiver& bound_quiver() const { return bq_; }
  const Quiver& quiver() const { return bq_.quiver(); }
  const PathBasis& basis() const { return basis_; }
  const Matrix& cartan() const { return cartan_; }
  const Representation& projective(std::size_t vertex) const { return projectives_[vertex]; }
  std::size_t dimension() const { return basis_.total_dim(); }
  std::size_t num_vertices() const { return bq_.quiver().num_vertices(); }

 private:
  BoundQuiver bq_;
  PathBasis basis_;
  Matrix cartan_;
  std::vector<Representation> projectives_;
};

}  // namespace quivermag
