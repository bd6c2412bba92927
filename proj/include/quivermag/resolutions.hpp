#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivermag/path_algebra.hpp"
#include "quivermag/representation.hpp"

namespace quivermag {

// A submodule together with its inclusion into the ambient module.
struct Subrepresentation {
  Representation module;
  ModuleMap inclusion;
};

// One-dimensional at `vertex`, zero elsewhere, all arrows acting by zero.
Representation simple_module(const BoundQuiver& bq, std::size_t vertex);

// rad M: at vertex j, the sum of the images of all arrows ending at j.
Subrepresentation radical(const BoundQuiver& bq, const Representation& m);

// Multiplicity of each simple in M / rad M.
std::vector<std::size_t> top(const BoundQuiver& bq, const Representation& m);

struct ProjectiveCover {
  Representation cover;  // sum of P_v^{multiplicities[v]}, grouped by vertex
  ModuleMap surjection;
  std::vector<std::size_t> multiplicities;
};

// Generators are coordinate vectors complementing rad M at each vertex; the
// surjection sends the idempotent of each summand to its generator and a
// basis path p to p acting on that generator.
ProjectiveCover projective_cover(const Algebra& algebra, const Representation& m);

Subrepresentation kernel(const BoundQuiver& bq, const ModuleMap& f);

// 0 <- X <- Q_0 <- Q_1 <- ... <- Q_N with Q_n = sum_k P_k^{multiplicities[n][k]}.
struct MinimalResolution {
  Representation resolved;
  std::vector<std::vector<std::size_t>> multiplicities;
  std::vector<Representation> terms;
  std::optional<ModuleMap> augmentation;  // Q_0 -> X; absent when X = 0
  std::vector<ModuleMap> differentials;   // differentials[n - 1]: Q_n -> Q_{n-1}
  // The last syzygy was zero within the degree bound.
  bool complete = false;

  std::size_t length() const { return terms.size(); }
};

// Iterates projective covers of successive syzygies for degrees
// 0..max_degree. complete == false means the syzygy after max_degree is
// still nonzero.
MinimalResolution minimal_projective_resolution(const Algebra& algebra, const Representation& m,
                                                std::size_t max_degree);

// Vertex-wise rank counting: rank(d_n) + rank(d_{n+1}) = dim Q_n, the
// augmentation onto, and d_N injective when complete.
bool resolution_is_exact(const MinimalResolution& res);

// Q_0 has the same top as X and each differential lands in the radical.
bool resolution_is_minimal(const BoundQuiver& bq, const MinimalResolution& res);

// sum_n (-1)^n dim Q_n, vertex-wise.
std::vector<long> alternating_dimension_sum(const MinimalResolution& res);

// dim Ext^n(S_i, S_j) for all degrees up to the bound.
struct ExtTable {
  std::size_t num_vertices = 0;
  std::size_t degree_bound = 0;
  std::vector<std::vector<std::size_t>> degrees;  // degrees[n][i * num_vertices + j]
  // Set iff every simple has a complete resolution within the bound.
  std::optional<std::size_t> global_dimension;

  bool complete() const { return global_dimension.has_value(); }
  std::size_t num_degrees() const { return degrees.size(); }
  std::size_t dim(std::size_t n, std::size_t i, std::size_t j) const {
    return n < degrees.size() ? degrees[n][i * num_vertices + j] : 0;
  }
};

// Minimal resolutions of every simple, computed in parallel.
std::vector<MinimalResolution> simple_resolutions(const Algebra& algebra, std::size_t max_degree);

// Minimality kills every differential of Hom(Q_*, S_j), so
// dim Ext^n(S_i, S_j) is the multiplicity of P_j in degree n of the
// resolution of S_i. The bound defaults to dim_K A.
ExtTable ext_table(const Algebra& algebra, std::optional<std::size_t> max_degree = std::nullopt);

ExtTable ext_table_from_resolutions(const std::vector<MinimalResolution>& resolutions,
                                    std::size_t num_vertices, std::size_t degree_bound);

namespace reference {

std::vector<MinimalResolution> simple_resolutions(const Algebra& algebra, std::size_t max_degree);
ExtTable ext_table(const Algebra& algebra, std::optional<std::size_t> max_degree = std::nullopt);

}  // namespace reference

}  // namespace quivermag
