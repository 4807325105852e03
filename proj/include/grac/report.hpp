#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace grac {

/// Homogeneous record table. Cells are JSON scalars so the same rows can be
/// written as CSV or as a JSON array of objects.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  void add_row(std::vector<nlohmann::ordered_json> row);
};

/// Header line then one line per row; strings are written verbatim.
std::string to_csv(const Report& r);

/// Array of objects keyed by column, in column order.
std::string to_json(const Report& r);

void emit_report(const Report& r, std::ostream& out, bool json);

}  // namespace grac
