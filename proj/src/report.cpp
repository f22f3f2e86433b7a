#include "schneider/report.hpp"

#include <cstdio>

namespace schneider {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const ExperimentReport& r, std::ostream& os) {
  for (std::size_t i = 0; i < r.table_header.size(); ++i) {
    os << (i ? "," : "") << r.table_header[i];
  }
  os << "\n";
  for (const auto& row : r.table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << row[i];
    }
    os << "\n";
  }
}

}  // namespace schneider
