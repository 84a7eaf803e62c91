#include "bfly/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "json.hpp"

namespace bfly {

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table::add_row: width mismatch");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out = "#";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    out += i ? "," : " ";
    out += meta[i].first + '=' + meta[i].second;
  }
  out += '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) j["meta"][k] = v;
  j["columns"] = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      const auto& cell = row[c];
      double v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      const bool integral = cell.find_first_of(".eE") == std::string::npos;
      // Large integers (exact numerators) stay strings so no digits are lost.
      if (!cell.empty() && ec == std::errc{} && ptr == cell.data() + cell.size() && std::isfinite(v) &&
          (!integral || std::abs(v) < 0x1.0p53))
        integral ? arr.push_back(static_cast<std::int64_t>(v)) : arr.push_back(v);
      else
        arr.push_back(cell);
    }
    j["columns"][columns[c]] = std::move(arr);
  }
  return j.dump(2) + '\n';
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return {buf, ptr};
}

}  // namespace bfly
