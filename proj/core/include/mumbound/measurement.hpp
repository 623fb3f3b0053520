#pragma once

#include <span>
#include <vector>

namespace mumbound {

/// Outcome distributions of one or more measurements on a fixed state.
///
/// For a MUM set there are d+1 rows of d entries; for a SIC measurement one
/// row of d^2 entries. Entries in [-kClampTolerance, 0) are clamped to zero
/// and entries in (1, 1 + kClampTolerance] to one; anything further outside
/// [0, 1], or a row whose sum differs from 1 by more than kRowSumTolerance, is
/// rejected.
class ProbabilityTable {
 public:
  static constexpr double kClampTolerance = 1e-12;
  static constexpr double kRowSumTolerance = 1e-10;

  ProbabilityTable(int dim, std::vector<std::vector<double>> rows);

  int dim() const { return dim_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::span<const double> row(std::size_t b) const { return rows_.at(b); }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  int dim_;
  std::vector<std::vector<double>> rows_;
};

/// Sum of squared probabilities over every row of the table.
double coincidence_bruteforce(const ProbabilityTable& table);

}  // namespace mumbound
