#pragma once

#include <string>
#include <vector>

namespace fourfold {

// One recomputable line of evidence in a certificate or report.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<CheckLine>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace fourfold
