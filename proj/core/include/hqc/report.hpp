#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hqc/contact.hpp"
#include "hqc/curves.hpp"

namespace hqc {

/// 17 significant digits, '.' decimal point, independent of the locale.
std::string format_number(double v);

/// Column-labelled numeric rows, emitted either as CSV or as an array of
/// JSON records.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
};

std::vector<std::string> contact_columns();
std::vector<double> contact_row(const ContactReport& r);

nlohmann::json to_json(const ContactReport& r);
nlohmann::json to_json(const HolonomyReport& r);

}  // namespace hqc
