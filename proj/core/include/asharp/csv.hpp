#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace asharp {

// shortest round-trippable decimal; all emitted numbers go through here so
// outputs are byte-stable across platforms and worker counts
inline std::string g17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

// one comment line carrying the schema version, then a header row
inline void csv_begin(std::ostream& os, const std::string& schema,
                      const std::vector<std::string>& columns) {
  os << "# schema: " << schema << "\n";
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ",";
    os << columns[i];
  }
  os << "\n";
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    os << cells[i];
  }
  os << "\n";
}

}  // namespace asharp
