#include "mumbound/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mumbound {

void ValidationReport::add(std::string name, double max_deviation) {
  // NaN deviations never pass.
  const bool ok = max_deviation <= tolerance;
  checks.push_back({std::move(name), max_deviation, ok});
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double ValidationReport::max_deviation() const {
  double m = 0.0;
  for (const auto& c : checks) {
    if (std::isnan(c.max_deviation)) return c.max_deviation;
    m = std::max(m, c.max_deviation);
  }
  return m;
}

const ValidationReport::Check* ValidationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

std::string ValidationReport::summary() const {
  std::string out;
  char buf[160];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "  %-34s max deviation %.12g  %s\n", c.name.c_str(), c.max_deviation,
                  c.passed ? "ok" : "FAIL");
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "  tolerance %.3g: %s\n", tolerance, passed() ? "PASS" : "FAIL");
  out += buf;
  return out;
}

}  // namespace mumbound
