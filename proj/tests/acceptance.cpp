// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quivermag/euler_magnitude.hpp"
#include "quivermag/linalg.hpp"
#include "quivermag/path_algebra.hpp"
#include "quivermag/quiver_io.hpp"
#include "quivermag/resolutions.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace quivermag;

namespace {

constexpr unsigned kSeed = 20240917;
constexpr std::size_t kCorpusSize = 200;

// Acyclic quivers without relations, together with their computed data.
struct Member {
  Algebra algebra;
  ExtTable ext;
};

std::vector<Member> build_corpus() {
  std::mt19937 rng(kSeed);
  std::vector<Member> corpus;
  corpus.reserve(kCorpusSize);
  for (std::size_t k = 0; k < kCorpusSize; ++k) {
    Algebra alg{BoundQuiver(gen::random_acyclic_quiver(rng, 8, 12))};
    ExtTable ext = ext_table(alg);
    corpus.push_back({std::move(alg), std::move(ext)});
  }
  return corpus;
}

// 1 -> 2 -> 3 with b*a = 0.
Algebra bound_a3() {
  return Algebra(parse_quiver("quiver { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; relations: b*a; }"));
}

std::size_t arrows_between(const Quiver& q, std::size_t i, std::size_t j) {
  std::size_t count = 0;
  for (const auto& a : q.arrows()) count += a.source == i && a.target == j;
  return count;
}

struct Criterion {
  int number;
  std::string name;
  std::function<std::string()> run;  // empty string on success, else the first counterexample
};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Member> corpus = build_corpus();
  const double corpus_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const Algebra bound = bound_a3();
  const ExtTable bound_ext = ext_table(bound);

  const std::vector<Criterion> criteria{
      {1, "acyclic magnitude equals |I| - |E|",
       [&]() -> std::string {
         for (std::size_t k = 0; k < corpus.size(); ++k) {
           const Quiver& q = corpus[k].algebra.quiver();
           const MagnitudeResult mag = magnitude(corpus[k].algebra.cartan());
           const Rational expected = static_cast<long>(q.num_vertices()) - static_cast<long>(q.num_arrows());
           if (mag.status != MagnitudeStatus::invertible || mag.value != expected)
             return "member " + std::to_string(k) + ": got " + (mag.value ? to_string(*mag.value) : "none") +
                    ", expected " + to_string(expected);
         }
         return {};
       }},
      {2, "Z * E = I with E from resolutions",
       [&]() -> std::string {
         for (std::size_t k = 0; k < corpus.size(); ++k) {
           const Matrix& z = corpus[k].algebra.cartan();
           const Matrix e = euler_matrix(corpus[k].ext);
           if (!(z * e).is_identity() || !(e * z).is_identity()) return "member " + std::to_string(k);
         }
         if (!(bound.cartan() * euler_matrix(bound_ext)).is_identity()) return "bound example";
         return {};
       }},
      {3, "sum of Z^-1 entries equals chi(S, S)",
       [&]() -> std::string {
         auto check = [](const Algebra& alg, const ExtTable& ext) {
           const auto inverse = invert(alg.cartan());
           const std::size_t n = alg.num_vertices();
           const GrothClass s{std::vector<long>(n, 1)};
           return inverse && inverse->sum() == Rational(euler_form(s, s, ext));
         };
         for (std::size_t k = 0; k < corpus.size(); ++k)
           if (!check(corpus[k].algebra, corpus[k].ext)) return "member " + std::to_string(k);
         if (!check(bound, bound_ext)) return "bound example";
         const auto inverse = invert(bound.cartan());
         if (inverse->sum() != 2) return "bound example magnitude " + to_string(inverse->sum()) + ", expected 2";
         return {};
       }},
      {4, "Ext of acyclic quivers: identity, arrow counts, then zero",
       [&]() -> std::string {
         for (std::size_t k = 0; k < corpus.size(); ++k) {
           const Quiver& q = corpus[k].algebra.quiver();
           const ExtTable& ext = corpus[k].ext;
           const std::size_t n = q.num_vertices();
           if (!ext.complete() || *ext.global_dimension > 1) return "member " + std::to_string(k) + " gldim";
           for (std::size_t i = 0; i < n; ++i)
             for (std::size_t j = 0; j < n; ++j) {
               if (ext.dim(0, i, j) != (i == j ? 1u : 0u) || ext.dim(1, i, j) != arrows_between(q, i, j))
                 return "member " + std::to_string(k) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
               for (std::size_t d = 2; d < ext.num_degrees(); ++d)
                 if (ext.dim(d, i, j) != 0) return "member " + std::to_string(k) + " degree " + std::to_string(d);
             }
         }
         return {};
       }},
      {5, "truncated n-cycles: all-ones Z, singular, weighted magnitude 1",
       [&]() -> std::string {
         for (std::size_t n : {3u, 4u, 5u}) {
           const Algebra alg(gen::truncated_cycle(n));
           const Matrix& z = alg.cartan();
           for (std::size_t r = 0; r < n; ++r)
             for (std::size_t c = 0; c < n; ++c)
               if (z(r, c) != 1) return "n=" + std::to_string(n) + " Cartan entry";
           if (invert(z)) return "n=" + std::to_string(n) + " inverted";
           const MagnitudeResult mag = magnitude(z);
           if (mag.status != MagnitudeStatus::weighted || mag.value != 1)
             return "n=" + std::to_string(n) + " magnitude " + (mag.value ? to_string(*mag.value) : "none");
         }
         return {};
       }},
      {6, "det Z = 1",
       [&]() -> std::string {
         for (std::size_t k = 0; k < corpus.size(); ++k)
           if (determinant(corpus[k].algebra.cartan()) != 1) return "member " + std::to_string(k);
         if (determinant(bound.cartan()) != 1) return "bound example";
         return {};
       }},
      {7, "chi(P_i, S_j) = delta_ij",
       [&]() -> std::string {
         auto check = [](const Algebra& alg, const ExtTable& ext) {
           const std::size_t n = alg.num_vertices();
           for (std::size_t i = 0; i < n; ++i)
             for (std::size_t j = 0; j < n; ++j)
               if (euler_form(class_of_projective(alg.basis(), i), simple_class(n, j), ext) != (i == j ? 1 : 0))
                 return false;
           return true;
         };
         for (std::size_t k = 0; k < corpus.size(); ++k)
           if (!check(corpus[k].algebra, corpus[k].ext)) return "member " + std::to_string(k);
         if (!check(bound, bound_ext)) return "bound example";
         return {};
       }},
      {8, "resolutions are exact and minimal; alternating sum of classes is [X]",
       [&]() -> std::string {
         std::size_t complete = 0;
         auto check = [&](const Algebra& alg, const Representation& x, std::size_t bound_degree) -> bool {
           const MinimalResolution res = minimal_projective_resolution(alg, x, bound_degree);
           if (!resolution_is_exact(res) || !resolution_is_minimal(alg.bound_quiver(), res)) return false;
           if (!res.complete) return true;
           ++complete;
           return alternating_dimension_sum(res) == class_of(x).coeffs;
         };
         auto check_algebra = [&](const Algebra& alg, std::size_t bound_degree) -> bool {
           for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
             if (!check(alg, simple_module(alg.bound_quiver(), v), bound_degree)) return false;
             const Representation& p = alg.projective(v);
             if (!check(alg, p, bound_degree)) return false;
             if (!check(alg, radical(alg.bound_quiver(), p).module, bound_degree)) return false;
           }
           return true;
         };
         for (std::size_t k = 0; k < corpus.size(); ++k)
           if (!check_algebra(corpus[k].algebra, corpus[k].algebra.dimension()))
             return "member " + std::to_string(k);
         if (!check_algebra(bound, bound.dimension())) return "bound example";
         for (std::size_t n : {3u, 4u, 5u})
           if (!check_algebra(Algebra(gen::truncated_cycle(n)), 6)) return "truncated " + std::to_string(n) + "-cycle";
         // Random finite-dimensional bound quivers, cycles allowed.
         std::mt19937 rng(kSeed + 1);
         for (std::size_t tried = 0, accepted = 0; accepted < 60 && tried < 2000; ++tried) {
           Quiver q = gen::random_quiver(rng, 5, 7);
           auto rel = gen::random_relations(rng, q, 6, 3);
           BoundQuiver bq(std::move(q), std::move(rel));
           if (!is_finite_dimensional(bq)) continue;
           ++accepted;
           const Algebra alg(std::move(bq));
           if (!check_algebra(alg, std::min<std::size_t>(alg.dimension(), 12)))
             return "random bound quiver " + std::to_string(accepted);
         }
         if (complete == 0) return "no complete resolutions were checked";
         return {};
       }},
      {9, "Bareiss matches cofactor expansion; inverse times matrix is I",
       [&]() -> std::string {
         std::mt19937 rng(kSeed + 2);
         std::uniform_int_distribution<std::size_t> size(1, 6);
         std::uniform_int_distribution<int> range(1, 3);
         for (int k = 0; k < 500; ++k) {
           const std::size_t n = size(rng);
           const long r = range(rng);  // small ranges give plenty of singular samples
           const Matrix m = gen::random_integer_matrix(rng, n, n, -r, r);
           std::vector<Integer> entries;
           for (std::size_t i = 0; i < n; ++i)
             for (std::size_t j = 0; j < n; ++j) entries.push_back(m(i, j).get_num());
           const Rational expected = oracle::cofactor_determinant(m);
           if (Rational(bareiss_determinant(entries, n)) != expected || determinant(m) != expected)
             return "sample " + std::to_string(k);
           const auto inverse = invert(m);
           if (inverse.has_value() != (expected != 0)) return "sample " + std::to_string(k) + " invertibility";
           if (inverse && (!(*inverse * m).is_identity() || !(m * *inverse).is_identity()))
             return "sample " + std::to_string(k) + " inverse";
         }
         return {};
       }},
      {10, "weighted Euler sum with unit weights equals magnitude",
       [&]() -> std::string {
         auto check = [](const Algebra& alg, const ExtTable& ext) {
           const MagnitudeResult mag = magnitude(alg.cartan());
           if (mag.status != MagnitudeStatus::invertible) return true;
           const std::vector<Integer> ones(alg.num_vertices(), 1);
           return weighted_euler_sum(euler_matrix(ext), ones) == *mag.value;
         };
         for (std::size_t k = 0; k < corpus.size(); ++k)
           if (!check(corpus[k].algebra, corpus[k].ext)) return "member " + std::to_string(k);
         if (!check(bound, bound_ext)) return "bound example";
         return {};
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.number == 1) seconds += corpus_seconds;  // corpus construction is part of criterion 1
    const bool ok = problem.empty() && !(c.number == 1 && seconds >= 10.0);
    if (problem.empty() && !ok) problem = "took " + std::to_string(seconds) + " s";
    failures += !ok;
    std::printf("[%s] %2d. %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                ok ? "" : ": ", problem.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
