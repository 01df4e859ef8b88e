#include "floqlat/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace floqlat::cli {
namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d == 0.0 ? 0.0 : *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>)
              out << format_number(v);
            else
              out << v;
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& t, const nlohmann::ordered_json& meta, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["meta"] = meta;
  doc["columns"] = t.columns;
  auto data = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    data.push_back(std::move(r));
  }
  doc["data"] = std::move(data);
  for (const auto& [key, value] : t.extra.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
}

}  // namespace floqlat::cli
