#include "quivermag/report_json.hpp"

namespace quivermag {

using nlohmann::ordered_json;

ordered_json to_json(const Rational& q) { return to_string(q); }

ordered_json to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

ordered_json vector_json(const Matrix& column) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < column.rows(); ++r) out.push_back(to_string(column(r, 0)));
  return out;
}

}  // namespace

ordered_json to_json(const MagnitudeResult& result) {
  ordered_json out;
  out["status"] = to_string(result.status);
  out["value"] = result.value ? ordered_json(to_string(*result.value)) : ordered_json(nullptr);
  if (result.inverse) out["inverse"] = to_json(*result.inverse);
  if (result.weighting) out["weighting"] = vector_json(*result.weighting);
  if (result.coweighting) out["coweighting"] = vector_json(*result.coweighting);
  if (!result.reason.empty()) out["reason"] = result.reason;
  return out;
}

ordered_json to_json(const ExtTable& ext) {
  ordered_json out;
  out["degree_bound"] = ext.degree_bound;
  out["global_dimension"] = ext.global_dimension ? ordered_json(*ext.global_dimension) : ordered_json(nullptr);
  ordered_json degrees = ordered_json::array();
  for (std::size_t d = 0; d < ext.num_degrees(); ++d) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < ext.num_vertices; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < ext.num_vertices; ++j) row.push_back(ext.dim(d, i, j));
      rows.push_back(std::move(row));
    }
    degrees.push_back(std::move(rows));
  }
  out["ext"] = std::move(degrees);
  return out;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json out;
  out["dimension"] = report.dimension;
  out["degree_bound"] = report.degree_bound;
  out["global_dimension"] =
      report.global_dimension ? ordered_json(*report.global_dimension) : ordered_json(nullptr);
  out["cartan"] = to_json(report.cartan);
  out["cartan_determinant"] = to_string(report.cartan_determinant);
  out["euler_matrix"] = report.euler ? to_json(*report.euler) : ordered_json(nullptr);
  out["euler_characteristic"] =
      report.euler_characteristic ? ordered_json(std::to_string(*report.euler_characteristic)) : ordered_json(nullptr);
  out["magnitude"] = to_json(report.magnitude);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace quivermag
