#pragma once

#include <cstddef>
#include <vector>

#include "quivermag/matrix.hpp"
#include "quivermag/quiver.hpp"

namespace quivermag {

// A finite-dimensional module over KQ/(relations): a vector space of
// dimension dims[v] at each vertex and, for each arrow a: i -> j, a
// dims[j] x dims[i] matrix.
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrow_maps;

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Representation&, const Representation&) = default;
};

Representation zero_representation(const Quiver& quiver);

// Composite action of a path on a representation (identity for e_i).
Matrix path_action(const Representation& m, const Path& path);

// Shapes match the quiver and every relation acts as zero. Throws
// std::invalid_argument describing the first violation.
void validate(const BoundQuiver& bq, const Representation& m);

Representation direct_sum(const Quiver& quiver, const std::vector<Representation>& summands);

// Homomorphism given by one block per vertex (codomain.dims[v] x domain.dims[v]).
struct ModuleMap {
  Representation domain;
  Representation codomain;
  std::vector<Matrix> blocks;
};

// Every naturality square block[j] * domain(a) == codomain(a) * block[i] holds.
bool is_homomorphism(const Quiver& quiver, const ModuleMap& f);

// g after f; requires f.codomain == g.domain.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

ModuleMap identity_map(const Representation& m);

}  // namespace quivermag
