#include "quivermag/resolutions.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "quivermag/linalg.hpp"

namespace quivermag {

namespace {

// Restricts m to the subspaces spanned by the columns of bases[v] (full
// column rank, stable under every arrow).
Subrepresentation restrict_to(const Quiver& q, const Representation& m, std::vector<Matrix> bases) {
  Representation sub = zero_representation(q);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) sub.dims[v] = bases[v].cols();
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrows()[k];
    const Matrix image = m.arrow_maps[k] * bases[a.source];
    auto coords = solve(bases[a.target], image);
    if (!coords) throw std::logic_error("subspace is not stable under arrow '" + a.label + "'");
    sub.arrow_maps[k] = std::move(*coords);
  }
  ModuleMap inclusion{sub, m, std::move(bases)};
  return Subrepresentation{std::move(sub), std::move(inclusion)};
}

Matrix radical_span(const Quiver& q, const Representation& m, std::size_t v) {
  Matrix images(m.dims[v], 0);
  for (std::size_t a : q.arrows_into(v)) images = images.hstack(m.arrow_maps[a]);
  return column_space_basis(images);
}

// Coordinate directions complementing the column span of `basis` in K^dim.
std::vector<std::size_t> complement_coordinates(const Matrix& basis, std::size_t dim) {
  std::vector<bool> covered(dim, false);
  for (std::size_t p : row_reduce(basis.transpose()).pivot_columns) covered[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dim; ++k)
    if (!covered[k]) out.push_back(k);
  return out;
}

bool image_within(const Matrix& span, const Matrix& f) {
  if (f.cols() == 0 || f.rows() == 0) return true;
  return rank(span.hstack(f)) == rank(span);
}

template <typename Body>
void run_per_vertex(std::size_t n, bool parallel, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (parallel && n > 1)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<MinimalResolution> resolve_simples(const Algebra& algebra, std::size_t max_degree, bool parallel) {
  const std::size_t n = algebra.num_vertices();
  std::vector<MinimalResolution> out(n);
  run_per_vertex(n, parallel, [&](std::size_t i) {
    out[i] = minimal_projective_resolution(algebra, simple_module(algebra.bound_quiver(), i), max_degree);
  });
  return out;
}

}  // namespace

Representation simple_module(const BoundQuiver& bq, std::size_t vertex) {
  const Quiver& q = bq.quiver();
  if (vertex >= q.num_vertices()) throw std::out_of_range("simple_module: vertex out of range");
  Representation s = zero_representation(q);
  s.dims[vertex] = 1;
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrows()[k];
    s.arrow_maps[k] = Matrix(s.dims[a.target], s.dims[a.source]);
  }
  return s;
}

Subrepresentation radical(const BoundQuiver& bq, const Representation& m) {
  const Quiver& q = bq.quiver();
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) bases.push_back(radical_span(q, m, v));
  return restrict_to(q, m, std::move(bases));
}

std::vector<std::size_t> top(const BoundQuiver& bq, const Representation& m) {
  const Quiver& q = bq.quiver();
  std::vector<std::size_t> t(q.num_vertices());
  for (std::size_t v = 0; v < q.num_vertices(); ++v) t[v] = m.dims[v] - radical_span(q, m, v).cols();
  return t;
}

ProjectiveCover projective_cover(const Algebra& algebra, const Representation& m) {
  const Quiver& q = algebra.quiver();
  const PathBasis& basis = algebra.basis();
  const std::size_t n = q.num_vertices();

  struct Generator {
    std::size_t vertex;
    std::size_t coordinate;
  };
  std::vector<Generator> generators;
  std::vector<std::size_t> multiplicities(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k : complement_coordinates(radical_span(q, m, v), m.dims[v])) {
      generators.push_back({v, k});
      ++multiplicities[v];
    }
  }

  std::vector<Representation> summands;
  for (const auto& g : generators) summands.push_back(algebra.projective(g.vertex));
  Representation cover = direct_sum(q, summands);

  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < n; ++w) blocks.emplace_back(m.dims[w], cover.dims[w]);
  std::vector<std::size_t> offset(n, 0);

  for (const auto& g : generators) {
    // Images of the generator under every basis path from g.vertex, built by
    // extending prefixes (basis paths are closed under taking prefixes).
    std::vector<std::vector<Matrix>> image(n);
    for (std::size_t w = 0; w < n; ++w) image[w].resize(basis.count(g.vertex, w));

    std::vector<const Path*> order;
    for (std::size_t w = 0; w < n; ++w)
      for (const Path& p : basis.paths(g.vertex, w)) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(),
                     [](const Path* a, const Path* b) { return a->length() < b->length(); });

    for (const Path* p : order) {
      const std::size_t slot = *basis.index_of(g.vertex, p->arrows);
      Matrix& out = image[p->target][slot];
      if (p->arrows.empty()) {
        out = Matrix(m.dims[g.vertex], 1);
        out(g.coordinate, 0) = 1;
      } else {
        std::vector<std::size_t> prefix(p->arrows.begin(), p->arrows.end() - 1);
        const std::size_t last = p->arrows.back();
        const std::size_t from = q.arrows()[last].source;
        out = m.arrow_maps[last] * image[from][*basis.index_of(g.vertex, prefix)];
      }
    }

    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t c = 0; c < image[w].size(); ++c)
        for (std::size_t r = 0; r < m.dims[w]; ++r) blocks[w](r, offset[w] + c) = image[w][c](r, 0);
      offset[w] += image[w].size();
    }
  }

  ModuleMap surjection{cover, m, std::move(blocks)};
  return ProjectiveCover{std::move(cover), std::move(surjection), std::move(multiplicities)};
}

Subrepresentation kernel(const BoundQuiver& bq, const ModuleMap& f) {
  std::vector<Matrix> bases;
  for (const Matrix& block : f.blocks) bases.push_back(kernel_basis(block));
  return restrict_to(bq.quiver(), f.domain, std::move(bases));
}

MinimalResolution minimal_projective_resolution(const Algebra& algebra, const Representation& m,
                                                std::size_t max_degree) {
  const BoundQuiver& bq = algebra.bound_quiver();
  MinimalResolution res;
  res.resolved = m;

  Representation syzygy = m;
  std::optional<ModuleMap> into_previous;  // syzygy -> Q_{n-1}
  for (std::size_t degree = 0;; ++degree) {
    if (syzygy.is_zero()) {
      res.complete = true;
      break;
    }
    if (degree > max_degree) break;

    ProjectiveCover pc = projective_cover(algebra, syzygy);
    Subrepresentation next = kernel(bq, pc.surjection);
    if (degree == 0) {
      res.augmentation = pc.surjection;
    } else {
      res.differentials.push_back(compose(*into_previous, pc.surjection));
    }
    res.multiplicities.push_back(std::move(pc.multiplicities));
    res.terms.push_back(std::move(pc.cover));
    syzygy = std::move(next.module);
    into_previous = std::move(next.inclusion);
  }
  return res;
}

bool resolution_is_exact(const MinimalResolution& res) {
  const std::size_t len = res.length();
  if (len == 0) return res.resolved.is_zero();
  const std::size_t nv = res.resolved.dims.size();
  for (std::size_t v = 0; v < nv; ++v) {
    if (rank(res.augmentation->blocks[v]) != res.resolved.dims[v]) return false;
    // Exactness at the last computed term is only checkable once the
    // resolution has stopped.
    const std::size_t checked = res.complete ? len : len - 1;
    for (std::size_t n = 0; n < checked; ++n) {
      const std::size_t outgoing =
          n == 0 ? rank(res.augmentation->blocks[v]) : rank(res.differentials[n - 1].blocks[v]);
      const std::size_t incoming = n + 1 < len ? rank(res.differentials[n].blocks[v]) : 0;
      if (outgoing + incoming != res.terms[n].dims[v]) return false;
    }
  }
  // Rank counting only gives exactness once consecutive maps compose to zero.
  for (std::size_t n = 0; n + 1 < len; ++n) {
    const ModuleMap& outgoing = n == 0 ? *res.augmentation : res.differentials[n - 1];
    for (const Matrix& block : compose(outgoing, res.differentials[n]).blocks)
      if (!block.is_zero()) return false;
  }
  return true;
}

bool resolution_is_minimal(const BoundQuiver& bq, const MinimalResolution& res) {
  if (res.length() == 0) return true;
  if (res.multiplicities[0] != top(bq, res.resolved)) return false;
  const Quiver& q = bq.quiver();
  for (std::size_t n = 1; n < res.length(); ++n) {
    const Representation& codomain = res.terms[n - 1];
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      if (!image_within(radical_span(q, codomain, v), res.differentials[n - 1].blocks[v])) return false;
    }
  }
  return true;
}

std::vector<long> alternating_dimension_sum(const MinimalResolution& res) {
  std::vector<long> sum(res.resolved.dims.size(), 0);
  for (std::size_t n = 0; n < res.length(); ++n) {
    const long sign = n % 2 == 0 ? 1 : -1;
    for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += sign * static_cast<long>(res.terms[n].dims[v]);
  }
  return sum;
}

ExtTable ext_table_from_resolutions(const std::vector<MinimalResolution>& resolutions,
                                    std::size_t num_vertices, std::size_t degree_bound) {
  ExtTable table;
  table.num_vertices = num_vertices;
  table.degree_bound = degree_bound;
  bool complete = true;
  std::size_t longest = 0;
  for (const auto& r : resolutions) {
    complete = complete && r.complete;
    longest = std::max(longest, r.length());
  }
  table.degrees.assign(longest, std::vector<std::size_t>(num_vertices * num_vertices, 0));
  for (std::size_t i = 0; i < resolutions.size(); ++i) {
    const auto& r = resolutions[i];
    for (std::size_t n = 0; n < r.length(); ++n)
      for (std::size_t j = 0; j < num_vertices; ++j) table.degrees[n][i * num_vertices + j] = r.multiplicities[n][j];
  }
  if (complete) table.global_dimension = longest == 0 ? 0 : longest - 1;
  return table;
}

std::vector<MinimalResolution> simple_resolutions(const Algebra& algebra, std::size_t max_degree) {
  return resolve_simples(algebra, max_degree, true);
}

ExtTable ext_table(const Algebra& algebra, std::optional<std::size_t> max_degree) {
  const std::size_t bound = max_degree.value_or(algebra.dimension());
  return ext_table_from_resolutions(quivermag::simple_resolutions(algebra, bound), algebra.num_vertices(), bound);
}

namespace reference {

std::vector<MinimalResolution> simple_resolutions(const Algebra& algebra, std::size_t max_degree) {
  return resolve_simples(algebra, max_degree, false);
}

ExtTable ext_table(const Algebra& algebra, std::optional<std::size_t> max_degree) {
  const std::size_t bound = max_degree.value_or(algebra.dimension());
  return ext_table_from_resolutions(reference::simple_resolutions(algebra, bound), algebra.num_vertices(), bound);
}

}  // namespace reference

}  // namespace quivermag
