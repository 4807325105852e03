#include "grac/report.hpp"

#include <sstream>

#include "grac/error.hpp"

namespace grac {

void Report::add_row(std::vector<nlohmann::ordered_json> row) {
  if (row.size() != columns.size())
    throw Error(Errc::invalid_argument, "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream out;
  for (std::size_t c = 0; c < r.columns.size(); ++c) out << (c ? "," : "") << r.columns[c];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Report& r) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[r.columns[c]] = row[c];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void emit_report(const Report& r, std::ostream& out, bool json) {
  out << (json ? to_json(r) : to_csv(r));
  if (!out) throw Error(Errc::io_error, "failed to write report");
}

}  // namespace grac
