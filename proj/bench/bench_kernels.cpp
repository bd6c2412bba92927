// Parallel kernels against their serial references.
//   quivermag_bench [repeats]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "quivermag/linalg.hpp"
#include "quivermag/path_algebra.hpp"
#include "quivermag/resolutions.hpp"

using namespace quivermag;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& kernel, double parallel, double serial, bool agree) {
  std::printf("%-28s parallel %9.4f s   serial %9.4f s   speedup %5.2fx   %s\n", kernel.c_str(), parallel, serial,
              serial / parallel, agree ? "agree" : "MISMATCH");
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

// Zigzag A_n with every other length-two path killed.
BoundQuiver zigzag(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back("z" + std::to_string(v));
  for (std::size_t v = 0; v + 1 < n; ++v) arrows.push_back(Arrow{"a" + std::to_string(v), v, v + 1});
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Path> relations;
  for (std::size_t v = 0; v + 2 < n; v += 2) relations.push_back(make_path(q, v, {v, v + 1}));
  return BoundQuiver(std::move(q), std::move(relations));
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, repeats: %d\n", omp_get_max_threads(), repeats);
  std::mt19937 rng(99);

  for (std::size_t n : {64u, 128u}) {
    const Matrix m = random_matrix(rng, n, n);
    std::vector<Integer> entries;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) entries.push_back(m(r, c).get_num());
    Integer a, b;
    const double p = best_of(repeats, [&] { a = bareiss_determinant(entries, n); });
    const double s = best_of(repeats, [&] { b = reference::bareiss_determinant(entries, n); });
    report("bareiss " + std::to_string(n) + "x" + std::to_string(n), p, s, a == b);
  }

  for (std::size_t n : {48u, 96u}) {
    const Matrix m = random_matrix(rng, n, n + n / 2);
    RowEchelon a, b;
    const double p = best_of(repeats, [&] { a = row_reduce(m); });
    const double s = best_of(repeats, [&] { b = reference::row_reduce(m); });
    report("row_reduce " + std::to_string(n) + "x" + std::to_string(n + n / 2), p, s, a.reduced == b.reduced);
  }

  for (std::size_t n : {16u, 32u}) {
    const Algebra alg(zigzag(n));
    ExtTable a, b;
    const double p = best_of(repeats, [&] { a = ext_table(alg); });
    const double s = best_of(repeats, [&] { b = reference::ext_table(alg); });
    report("ext_table zigzag " + std::to_string(n), p, s, a.degrees == b.degrees);
  }
}
