#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bfly {

/// Column-oriented experiment output. `meta` carries the subcommand, its
/// parameters and the seed; CSV writes it as a leading "# key=value,..." line
/// followed by the column header, JSON as a "meta" object beside "columns"
/// (one array per column).
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string to_csv() const;
  std::string to_json() const;
};

/// Shortest round-trip decimal for finite values; "nan"/"inf" otherwise.
std::string format_double(double x);

}  // namespace bfly
