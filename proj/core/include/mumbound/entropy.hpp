#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace mumbound {

enum class LogBase { Two, E };

/// "2"/"bits" or "e"/"nats"; anything else is a ValidationError.
LogBase parse_log_base(std::string_view text);
std::string_view to_string(LogBase base);

/// A probability distribution. Entries within 1e-12 below zero are clamped,
/// and entries below 1e-15 are stored as exact zeros.
class ProbVector {
 public:
  static constexpr double kSumTolerance = 1e-10;
  static constexpr double kClampTolerance = 1e-12;
  static constexpr double kZeroThreshold = 1e-15;

  explicit ProbVector(std::vector<double> entries);
  explicit ProbVector(std::span<const double> entries);

  std::span<const double> values() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<double> entries_;
};

double shannon(const ProbVector& p, LogBase base);

/// Renyi entropy in nats. Switches to Shannon for |alpha - 1| <= 1e-8 and to
/// the min-entropy for alpha = +inf.
double renyi(const ProbVector& p, double alpha);

double min_entropy(const ProbVector& p);

/// ln_alpha(x) = (x^(1-alpha) - 1) / (1 - alpha); ln x for |alpha - 1| <= 1e-8.
double alpha_log(double x, double alpha);

/// Tsallis entropy (sum p^alpha - 1) / (1 - alpha); alpha = 1 is rejected.
double tsallis(const ProbVector& p, double alpha);

double index_of_coincidence(const ProbVector& p);

}  // namespace mumbound
