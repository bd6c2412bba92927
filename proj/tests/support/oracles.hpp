#pragma once

// Independent reference computations for tests. Nothing here calls into the
// elimination, automaton or resolution code it is used to check.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "quivermag/matrix.hpp"
#include "quivermag/quiver.hpp"

namespace quivermag::oracle {

// Laplace expansion along the first row.
inline Rational cofactor_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational term = m(0, c) * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

inline bool has_forbidden_factor(const BoundQuiver& bq, const std::vector<std::size_t>& word) {
  for (const Path& r : bq.relations()) {
    if (std::search(word.begin(), word.end(), r.arrows.begin(), r.arrows.end()) != word.end()) return true;
  }
  return false;
}

// Every relation-avoiding path of length <= max_length, by depth-first
// extension with a full factor rescan at each step.
inline std::vector<Path> enumerate_avoiding_paths(const BoundQuiver& bq, std::size_t max_length) {
  const Quiver& q = bq.quiver();
  std::vector<Path> out;
  std::vector<Path> stack;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) stack.push_back(Path{v, v, {}});
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    if (p.length() < max_length) {
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows()[a].source != p.target) continue;
        Path longer{p.source, q.arrows()[a].target, p.arrows};
        longer.arrows.push_back(a);
        if (!has_forbidden_factor(bq, longer.arrows)) stack.push_back(std::move(longer));
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline std::size_t total_relation_length(const BoundQuiver& bq) {
  std::size_t t = 0;
  for (const Path& r : bq.relations()) t += r.length();
  return t;
}

// Any avoiding path longer than #vertices * (1 + total relation length)
// revisits a (vertex, matched-prefix) configuration and can be pumped.
inline std::size_t pumping_length(const BoundQuiver& bq) {
  return bq.quiver().num_vertices() * (1 + total_relation_length(bq));
}

// Depth-first search for one avoiding path of exactly `length` arrows.
inline bool avoiding_path_exists(const BoundQuiver& bq, std::vector<std::size_t>& word, std::size_t at,
                                 std::size_t length) {
  if (word.size() == length) return true;
  const Quiver& q = bq.quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (q.arrows()[a].source != at) continue;
    word.push_back(a);
    if (!has_forbidden_factor(bq, word) && avoiding_path_exists(bq, word, q.arrows()[a].target, length)) return true;
    word.pop_back();
  }
  return false;
}

inline bool brute_force_finite(const BoundQuiver& bq) {
  const std::size_t len = pumping_length(bq);
  for (std::size_t v = 0; v < bq.quiver().num_vertices(); ++v) {
    std::vector<std::size_t> word;
    if (avoiding_path_exists(bq, word, v, len)) return false;
  }
  return true;
}

// count[i][j] = number of paths from i to j in a quiver without relations,
// as the sum of powers of the adjacency matrix (terminates when acyclic).
inline std::vector<std::vector<long>> acyclic_path_counts(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  std::vector<std::vector<long>> adjacency(n, std::vector<long>(n, 0));
  for (const Arrow& a : q.arrows()) ++adjacency[a.source][a.target];
  std::vector<std::vector<long>> total(n, std::vector<long>(n, 0));
  std::vector<std::vector<long>> power(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t step = 0; step <= n; ++step) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total[i][j] += power[i][j];
    std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (power[i][k])
          for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * adjacency[k][j];
    power = std::move(next);
  }
  return total;
}

}  // namespace quivermag::oracle
