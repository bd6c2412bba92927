#include "quivermag/euler_magnitude.hpp"

#include "quivermag/linalg.hpp"

namespace quivermag {

GrothClass simple_class(std::size_t num_vertices, std::size_t vertex) {
  GrothClass c{std::vector<long>(num_vertices, 0)};
  c.coeffs.at(vertex) = 1;
  return c;
}

GrothClass class_of(const Representation& m) {
  GrothClass c;
  for (std::size_t d : m.dims) c.coeffs.push_back(static_cast<long>(d));
  return c;
}

GrothClass class_of_projective(const PathBasis& basis, std::size_t vertex) {
  GrothClass c;
  for (std::size_t k = 0; k < basis.num_vertices(); ++k) c.coeffs.push_back(static_cast<long>(basis.count(vertex, k)));
  return c;
}

std::vector<Rational> simple_in_projective_basis(const Matrix& euler, std::size_t vertex) {
  return euler.column(vertex);
}

IncompleteExtError::IncompleteExtError(std::size_t bound)
    : std::runtime_error("Euler form undefined: global dimension not confirmed finite within degree bound " +
                         std::to_string(bound)) {}

long euler_form(const GrothClass& x, const GrothClass& y, const ExtTable& ext) {
  if (!ext.complete()) throw IncompleteExtError(ext.degree_bound);
  const std::size_t n = ext.num_vertices;
  if (x.coeffs.size() != n || y.coeffs.size() != n) throw std::invalid_argument("euler_form: class has the wrong rank");
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeffs[j] == 0) continue;
      long chi = 0;
      for (std::size_t d = 0; d < ext.num_degrees(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(ext.dim(d, i, j));
      }
      total += x.coeffs[i] * y.coeffs[j] * chi;
    }
  }
  return total;
}

Matrix euler_matrix(const ExtTable& ext) {
  const std::size_t n = ext.num_vertices;
  Matrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = euler_form(simple_class(n, j), simple_class(n, i), ext);
  return e;
}

const char* to_string(MagnitudeStatus status) {
  switch (status) {
    case MagnitudeStatus::invertible: return "invertible";
    case MagnitudeStatus::weighted: return "weighted";
    case MagnitudeStatus::undefined: return "undefined";
  }
  return "undefined";
}

MagnitudeResult magnitude(const Matrix& z) {
  if (!z.is_square()) throw std::invalid_argument("magnitude: matrix is not square");
  MagnitudeResult result;
  if (auto inverse = invert(z)) {
    result.status = MagnitudeStatus::invertible;
    result.value = inverse->sum();
    result.inverse = std::move(inverse);
    return result;
  }

  const Matrix ones = Matrix::ones(z.rows(), 1);
  result.weighting = solve(z, ones);
  result.coweighting = solve(z.transpose(), ones);
  if (!result.weighting || !result.coweighting) {
    result.reason = std::string("matrix is singular and has no ") +
                    (!result.weighting && !result.coweighting ? "weighting or coweighting"
                     : !result.weighting                      ? "weighting"
                                                              : "coweighting");
    return result;
  }
  const Rational w = result.weighting->sum();
  const Rational v = result.coweighting->sum();
  if (w != v) {
    result.reason = "weighting sum " + to_string(w) + " differs from coweighting sum " + to_string(v);
    return result;
  }
  result.status = MagnitudeStatus::weighted;
  result.value = w;
  result.reason = "matrix is singular; value from a weighting/coweighting pair";
  return result;
}

Rational weighted_euler_sum(const Matrix& euler, const std::vector<Integer>& endomorphism_dims) {
  if (!euler.is_square() || endomorphism_dims.size() != euler.rows()) {
    throw std::invalid_argument("weighted_euler_sum: need one weight per vertex");
  }
  for (const Integer& d : endomorphism_dims) {
    if (d <= 0) throw std::invalid_argument("weighted_euler_sum: weights must be positive, got " + d.get_str());
  }
  Rational total = 0;
  for (std::size_t i = 0; i < euler.rows(); ++i)
    for (std::size_t j = 0; j < euler.cols(); ++j)
      total += euler(i, j) / Rational(endomorphism_dims[i] * endomorphism_dims[j]);
  return total;
}

const char* to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::passed: return "passed";
    case CheckOutcome::failed: return "failed";
    case CheckOutcome::skipped: return "skipped";
  }
  return "skipped";
}

bool VerificationReport::any_failed() const {
  for (const auto& c : checks)
    if (c.outcome == CheckOutcome::failed) return true;
  return false;
}

bool VerificationReport::any_skipped() const {
  for (const auto& c : checks)
    if (c.outcome == CheckOutcome::skipped) return true;
  return false;
}

VerificationReport verify(const BoundQuiver& bq, std::optional<std::size_t> max_degree) {
  const Algebra algebra(bq);
  return verify(algebra, algebra.cartan(), max_degree);
}

VerificationReport verify(const Algebra& algebra, const Matrix& cartan, std::optional<std::size_t> max_degree) {
  const std::size_t n = algebra.num_vertices();
  if (cartan.rows() != n || cartan.cols() != n) {
    throw std::invalid_argument("verify: Cartan matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  VerificationReport report;
  report.dimension = algebra.dimension();
  report.cartan = cartan;
  report.cartan_determinant = determinant(cartan);
  report.magnitude = magnitude(cartan);

  const ExtTable ext = ext_table(algebra, max_degree);
  report.degree_bound = ext.degree_bound;
  report.global_dimension = ext.global_dimension;

  const char* kInverse = "cartan_inverse_is_euler_matrix";
  const char* kMagnitude = "magnitude_equals_euler_form";
  const char* kUnimodular = "cartan_unimodular";

  if (!ext.complete()) {
    const std::string why = "global dimension not confirmed finite within degree bound " + std::to_string(ext.degree_bound);
    for (const char* name : {kInverse, kMagnitude, kUnimodular}) {
      report.checks.push_back({name, CheckOutcome::skipped, why});
    }
    return report;
  }

  const Matrix e = euler_matrix(ext);
  report.euler = e;
  GrothClass all_simples{std::vector<long>(n, 1)};
  report.euler_characteristic = euler_form(all_simples, all_simples, ext);

  const bool inverse_ok = (cartan * e).is_identity() && (e * cartan).is_identity();
  report.checks.push_back({kInverse, inverse_ok ? CheckOutcome::passed : CheckOutcome::failed,
                           inverse_ok ? "Z*E = E*Z = I" : "Z*E or E*Z differs from the identity"});

  const Rational chi(*report.euler_characteristic);
  if (!report.magnitude.value) {
    report.checks.push_back({kMagnitude, CheckOutcome::failed, "magnitude undefined: " + report.magnitude.reason});
  } else {
    const bool equal = *report.magnitude.value == chi;
    report.checks.push_back({kMagnitude, equal ? CheckOutcome::passed : CheckOutcome::failed,
                             "magnitude " + to_string(*report.magnitude.value) + ", chi(S,S) " + to_string(chi)});
  }

  const bool unimodular = report.cartan_determinant == 1 || report.cartan_determinant == -1;
  report.checks.push_back({kUnimodular, unimodular ? CheckOutcome::passed : CheckOutcome::failed,
                           "det Z = " + to_string(report.cartan_determinant)});
  return report;
}

}  // namespace quivermag
