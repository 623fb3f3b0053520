#include "mumbound/measurement.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mumbound/error.hpp"

namespace mumbound {

ProbabilityTable::ProbabilityTable(int dim, std::vector<std::vector<double>> rows)
    : dim_(dim), rows_(std::move(rows)) {
  if (dim_ < 1) throw ValidationError("ProbabilityTable: dimension must be positive");
  if (rows_.empty()) throw ValidationError("ProbabilityTable: no rows");
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    auto& row = rows_[b];
    if (row.empty()) throw ValidationError("ProbabilityTable: empty row " + std::to_string(b));
    for (double& p : row) {
      if (!std::isfinite(p) || p < -kClampTolerance || p > 1.0 + kClampTolerance) {
        throw ValidationError("ProbabilityTable: entry " + std::to_string(p) + " in row " +
                              std::to_string(b) + " is not a probability");
      }
      if (p < 0.0) p = 0.0;
      if (p > 1.0) p = 1.0;
    }
    const double s = std::accumulate(row.begin(), row.end(), 0.0);
    if (!(std::abs(s - 1.0) <= kRowSumTolerance)) {
      throw ValidationError("ProbabilityTable: row " + std::to_string(b) + " sums to " + std::to_string(s));
    }
  }
}

double coincidence_bruteforce(const ProbabilityTable& table) {
  double c = 0.0;
  for (const auto& row : table.rows())
    for (double p : row) c += p * p;
  return c;
}

}  // namespace mumbound
