#include "hqc/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace hqc {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size()) fail(ErrorCode::MalformedInput, "row width does not match the columns");
  rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

nlohmann::json Table::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json rec = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) rec[columns[i]] = row[i];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::string> contact_columns() {
  return {"x",       "y",       "t",       "R1_re",   "R1_im", "R2_re", "R2_im",
          "R3_minus_lambda", "lambda_star", "lambda1", "lambda2", "K", "mu_re", "mu_im", "jacobian_residual"};
}

std::vector<double> contact_row(const ContactReport& r) {
  return {r.point.x(),     r.point.y(),        r.point.t,     r.R1.real(),      r.R1.imag(),
          r.R2.real(),     r.R2.imag(),        r.R3_minus_lambda, r.lambda_star, r.lambda1,
          r.lambda2,       r.K,                r.mu.real(),   r.mu.imag(),      r.jacobian_residual};
}

nlohmann::json to_json(const ContactReport& r) {
  return {{"point", {r.point.x(), r.point.y(), r.point.t}},
          {"R1", {r.R1.real(), r.R1.imag()}},
          {"R2", {r.R2.real(), r.R2.imag()}},
          {"R3_minus_lambda", r.R3_minus_lambda},
          {"lambda_star", r.lambda_star},
          {"lambda1", r.lambda1},
          {"lambda2", r.lambda2},
          {"K", r.K},
          {"mu_re", r.mu.real()},
          {"mu_im", r.mu.imag()},
          {"jacobian_residual", r.jacobian_residual}};
}

nlohmann::json to_json(const HolonomyReport& r) {
  return {{"delta", r.delta}, {"area_oracle", r.area_oracle}, {"area_check", r.area_check}, {"residual", r.residual}};
}

}  // namespace hqc
