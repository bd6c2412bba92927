#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivermag/matrix.hpp"
#include "quivermag/path_algebra.hpp"
#include "quivermag/resolutions.hpp"

namespace quivermag {

// Class in the Grothendieck group, written in the basis of simples [S_i].
struct GrothClass {
  std::vector<long> coeffs;

  friend bool operator==(const GrothClass&, const GrothClass&) = default;
};

GrothClass simple_class(std::size_t num_vertices, std::size_t vertex);

// Composition factors: simples are one-dimensional, so [M] = dims(M).
GrothClass class_of(const Representation& m);

// [P_j] = sum_k Z_{kj} [S_k], column j of the Cartan matrix.
GrothClass class_of_projective(const PathBasis& basis, std::size_t vertex);

// [S_j] in the basis ([P_k]): column j of the Euler matrix.
std::vector<Rational> simple_in_projective_basis(const Matrix& euler, std::size_t vertex);

// The alternating sum over Ext degrees is only meaningful when every
// simple has a finite resolution within the degree bound.
class IncompleteExtError : public std::runtime_error {
 public:
  explicit IncompleteExtError(std::size_t bound);
};

// chi(X, Y) = sum_{i,j} x_i y_j sum_n (-1)^n dim Ext^n(S_i, S_j).
long euler_form(const GrothClass& x, const GrothClass& y, const ExtTable& ext);

// E_{ij} = chi(S_j, S_i).
Matrix euler_matrix(const ExtTable& ext);

enum class MagnitudeStatus { invertible, weighted, undefined };

const char* to_string(MagnitudeStatus status);

struct MagnitudeResult {
  MagnitudeStatus status = MagnitudeStatus::undefined;
  std::optional<Rational> value;
  std::optional<Matrix> inverse;
  // Z w = 1 and v^T Z = 1^T, as column vectors.
  std::optional<Matrix> weighting;
  std::optional<Matrix> coweighting;
  std::string reason;
};

// Sum of the entries of Z^{-1} when Z is invertible. Otherwise falls back to
// a weighting/coweighting pair, whose sums must agree; if either is missing
// the result is undefined and carries whatever was found.
MagnitudeResult magnitude(const Matrix& z);

// sum_{ij} E_{ij} / (d_i d_j): the magnitude when simple S_i has
// endomorphism algebra of dimension d_i. Throws std::invalid_argument for a
// nonpositive weight or a length mismatch.
Rational weighted_euler_sum(const Matrix& euler, const std::vector<Integer>& endomorphism_dims);

enum class CheckOutcome { passed, failed, skipped };

const char* to_string(CheckOutcome outcome);

struct CheckResult {
  std::string name;
  CheckOutcome outcome;
  std::string detail;
};

struct VerificationReport {
  std::size_t dimension = 0;  // dim_K A
  std::size_t degree_bound = 0;
  std::optional<std::size_t> global_dimension;
  Matrix cartan;
  Rational cartan_determinant;
  std::optional<Matrix> euler;
  std::optional<long> euler_characteristic;  // chi(S, S)
  MagnitudeResult magnitude;
  std::vector<CheckResult> checks;

  bool any_failed() const;
  bool any_skipped() const;
};

// Checks, exactly: Z E = E Z = I; the magnitude of Z equals chi(S, S);
// det Z = +-1. All three are skipped when the global dimension is not
// confirmed finite within the bound (default dim_K A). Throws
// InfiniteDimensionalError for infinite-dimensional algebras.
VerificationReport verify(const BoundQuiver& bq, std::optional<std::size_t> max_degree = std::nullopt);

// Same checks with `cartan` standing in for the computed Z (E still comes
// from resolutions). Throws std::invalid_argument on a shape mismatch.
VerificationReport verify(const Algebra& algebra, const Matrix& cartan,
                          std::optional<std::size_t> max_degree = std::nullopt);

}  // namespace quivermag
