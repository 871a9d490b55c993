#include "hqc/curve_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hqc/report.hpp"

namespace hqc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& cell, std::size_t line) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || cell.empty())
    fail(ErrorCode::MalformedInput, "line " + std::to_string(line) + ": bad number '" + cell + "'");
  return v;
}

bool group_space(CurveSpace space) { return space == CurveSpace::heis || space == CurveSpace::star; }

}  // namespace

Curve read_curve_csv(std::istream& in, CurveSpace space) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) {
      header = split(line);
      break;
    }
  }
  const std::vector<std::string> plane{"s", "re", "im"};
  const std::vector<std::string> group{"s", "re", "im", "t"};
  const auto& expected = group_space(space) ? group : plane;
  if (header != expected) fail(ErrorCode::MalformedInput, "unexpected CSV header");

  std::vector<double> s;
  std::vector<cplx> z;
  std::vector<double> t;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != expected.size())
      fail(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": wrong column count");
    s.push_back(parse_number(cells[0], lineno));
    z.emplace_back(parse_number(cells[1], lineno), parse_number(cells[2], lineno));
    if (group_space(space)) t.push_back(parse_number(cells[3], lineno));
  }
  return make_curve(space, std::move(s), std::move(z), std::move(t));
}

void write_curve_csv(std::ostream& out, const Curve& c) {
  out << (c.is_group() ? "s,re,im,t\n" : "s,re,im\n");
  for (std::size_t k = 0; k < c.size(); ++k) {
    out << format_number(c.s[k]) << ',' << format_number(c.z[k].real()) << ',' << format_number(c.z[k].imag());
    if (c.is_group()) out << ',' << format_number(c.t[k]);
    out << '\n';
  }
}

Curve curve_from_json(const nlohmann::json& j, CurveSpace space) {
  if (!j.is_array()) fail(ErrorCode::MalformedInput, "curve JSON must be an array of records");
  std::vector<double> s;
  std::vector<cplx> z;
  std::vector<double> t;
  for (const auto& rec : j) {
    auto num = [&](const char* key) {
      if (!rec.is_object() || !rec.contains(key) || !rec[key].is_number())
        fail(ErrorCode::MalformedInput, std::string("curve record lacks numeric '") + key + "'");
      return rec[key].get<double>();
    };
    s.push_back(num("s"));
    z.emplace_back(num("re"), num("im"));
    if (group_space(space)) t.push_back(num("t"));
  }
  return make_curve(space, std::move(s), std::move(z), std::move(t));
}

nlohmann::json curve_to_json(const Curve& c) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    nlohmann::json rec{{"s", c.s[k]}, {"re", c.z[k].real()}, {"im", c.z[k].imag()}};
    if (c.is_group()) rec["t"] = c.t[k];
    out.push_back(std::move(rec));
  }
  return out;
}

Curve load_curve(const std::string& path, CurveSpace space) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedInput, "cannot open " + path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::MalformedInput, e.what());
    }
    return curve_from_json(j, space);
  }
  return read_curve_csv(in, space);
}

}  // namespace hqc
