#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace floqlat::cli {

using Cell = std::variant<double, long long, std::string>;

/// A result table plus the extra JSON objects a command attaches to it.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

/// %.12g, with -0 written as 0.
std::string format_number(double v);

/// Header row, one line per row, LF endings. Strings are written verbatim.
void write_csv(const Table& t, std::ostream& out);

/// {"schema": 1, "meta": meta, "columns": [...], "data": [[...]...], extra...}
void write_json(const Table& t, const nlohmann::ordered_json& meta, std::ostream& out);

}  // namespace floqlat::cli
