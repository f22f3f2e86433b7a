#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace schneider {

/// Outcome of one experiment: a flat statistics map plus a boolean verdict
/// per named criterion, and an optional CSV table. A report is a pure
/// function of (name, parameters, seed).
struct ExperimentReport {
  std::string name;
  std::int64_t p = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> statistics;
  std::map<std::string, bool> criteria;
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table;

  bool pass() const {
    for (const auto& [k, ok] : criteria) {
      if (!ok) return false;
    }
    return true;
  }
};

/// Canonical double formatting shared by every emitter ("%.17g").
std::string format_double(double v);

/// Header row plus table rows, UTF-8, LF line endings.
void write_csv(const ExperimentReport& r, std::ostream& os);

}  // namespace schneider
