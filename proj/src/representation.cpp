#include "quivermag/representation.hpp"

#include <numeric>
#include <stdexcept>

namespace quivermag {

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

Representation zero_representation(const Quiver& quiver) {
  Representation m;
  m.dims.assign(quiver.num_vertices(), 0);
  m.arrow_maps.assign(quiver.num_arrows(), Matrix());
  return m;
}

Matrix path_action(const Representation& m, const Path& path) {
  Matrix action = Matrix::identity(m.dims[path.source]);
  for (std::size_t a : path.arrows) action = m.arrow_maps[a] * action;
  return action;
}

void validate(const BoundQuiver& bq, const Representation& m) {
  const Quiver& q = bq.quiver();
  if (m.dims.size() != q.num_vertices()) throw std::invalid_argument("representation: wrong number of vertex spaces");
  if (m.arrow_maps.size() != q.num_arrows()) throw std::invalid_argument("representation: wrong number of arrow maps");
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrows()[k];
    const Matrix& map = m.arrow_maps[k];
    if (map.rows() != m.dims[a.target] || map.cols() != m.dims[a.source]) {
      throw std::invalid_argument("representation: map for arrow '" + a.label + "' has the wrong shape");
    }
  }
  for (const Path& r : bq.relations()) {
    if (!path_action(m, r).is_zero()) {
      throw std::invalid_argument("representation: relation " + format_path(q, r) + " does not act as zero");
    }
  }
}

Representation direct_sum(const Quiver& quiver, const std::vector<Representation>& summands) {
  Representation out = zero_representation(quiver);
  for (const auto& s : summands)
    for (std::size_t v = 0; v < quiver.num_vertices(); ++v) out.dims[v] += s.dims[v];

  for (std::size_t k = 0; k < quiver.num_arrows(); ++k) {
    const Arrow& a = quiver.arrows()[k];
    Matrix block(out.dims[a.target], out.dims[a.source]);
    std::size_t row = 0;
    std::size_t col = 0;
    for (const auto& s : summands) {
      const Matrix& piece = s.arrow_maps[k];
      for (std::size_t r = 0; r < piece.rows(); ++r)
        for (std::size_t c = 0; c < piece.cols(); ++c) block(row + r, col + c) = piece(r, c);
      row += s.dims[a.target];
      col += s.dims[a.source];
    }
    out.arrow_maps[k] = std::move(block);
  }
  return out;
}

bool is_homomorphism(const Quiver& quiver, const ModuleMap& f) {
  if (f.blocks.size() != quiver.num_vertices()) return false;
  for (std::size_t v = 0; v < quiver.num_vertices(); ++v) {
    if (f.blocks[v].rows() != f.codomain.dims[v] || f.blocks[v].cols() != f.domain.dims[v]) return false;
  }
  for (std::size_t k = 0; k < quiver.num_arrows(); ++k) {
    const Arrow& a = quiver.arrows()[k];
    if (!(f.blocks[a.target] * f.domain.arrow_maps[k] == f.codomain.arrow_maps[k] * f.blocks[a.source])) {
      return false;
    }
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.codomain.dims == g.domain.dims)) throw std::invalid_argument("compose: maps are not composable");
  ModuleMap out{f.domain, g.codomain, {}};
  out.blocks.reserve(f.blocks.size());
  for (std::size_t v = 0; v < f.blocks.size(); ++v) out.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return out;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap out{m, m, {}};
  for (std::size_t d : m.dims) out.blocks.push_back(Matrix::identity(d));
  return out;
}

}  // namespace quivermag
