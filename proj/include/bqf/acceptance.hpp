#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bqf::acceptance {

struct Result {
  int id;
  std::string name;
  bool passed;
  double seconds;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds, 0 for none
};

const std::vector<Criterion>& criteria();

/// Comma separated ids or names; a name matches by substring. Empty selects
/// everything.
bool selected(const Criterion& c, const std::string& filter);

/// Runs the selected criteria, printing one PASS/FAIL line per criterion to
/// `out` as it finishes.
std::vector<Result> run(const std::string& filter, std::ostream& out);

}  // namespace bqf::acceptance
