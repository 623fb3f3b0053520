#pragma once

#include <string>
#include <vector>

namespace mumbound {

/// Outcome of a family of numerical identity checks. Failures are recorded
/// here rather than thrown.
struct ValidationReport {
  struct Check {
    std::string name;
    double max_deviation = 0.0;
    bool passed = true;
  };

  double tolerance = 0.0;
  std::vector<Check> checks;

  void add(std::string name, double max_deviation);

  bool passed() const;
  double max_deviation() const;
  const Check* find(const std::string& name) const;
  std::string summary() const;
};

}  // namespace mumbound
