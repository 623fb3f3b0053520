#include "mumbound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mumbound/error.hpp"

namespace mumbound {
namespace {

constexpr double kAlphaOneWindow = 1e-8;

void require_alpha(double alpha, const char* fn) {
  if (!(alpha > 0.0)) throw ValidationError(std::string(fn) + ": alpha must be > 0, got " + std::to_string(alpha));
}

}  // namespace

LogBase parse_log_base(std::string_view text) {
  if (text == "2" || text == "bits") return LogBase::Two;
  if (text == "e" || text == "nats") return LogBase::E;
  throw ValidationError("unsupported log base '" + std::string(text) + "' (expected 2 or e)");
}

std::string_view to_string(LogBase base) { return base == LogBase::Two ? "bits" : "nats"; }

ProbVector::ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("ProbVector: empty distribution");
  for (double& p : entries_) {
    if (!std::isfinite(p) || p < -kClampTolerance) {
      throw ValidationError("ProbVector: invalid entry " + std::to_string(p));
    }
    if (p < kZeroThreshold) p = 0.0;
  }
  const double s = std::accumulate(entries_.begin(), entries_.end(), 0.0);
  if (!(std::abs(s - 1.0) <= kSumTolerance)) {
    throw ValidationError("ProbVector: entries sum to " + std::to_string(s));
  }
}

ProbVector::ProbVector(std::span<const double> entries)
    : ProbVector(std::vector<double>(entries.begin(), entries.end())) {}

double shannon(const ProbVector& p, LogBase base) {
  double h = 0.0;
  for (double x : p.values())
    if (x > 0.0) h -= x * std::log(x);
  return base == LogBase::Two ? h / std::log(2.0) : h;
}

double renyi(const ProbVector& p, double alpha) {
  require_alpha(alpha, "renyi");
  if (std::isinf(alpha)) return min_entropy(p);
  if (std::abs(alpha - 1.0) <= kAlphaOneWindow) return shannon(p, LogBase::E);
  if (alpha == 2.0) return -std::log(index_of_coincidence(p));
  double s = 0.0;
  for (double x : p.values())
    if (x > 0.0) s += std::pow(x, alpha);
  return std::log(s) / (1.0 - alpha);
}

double min_entropy(const ProbVector& p) {
  return -std::log(*std::max_element(p.values().begin(), p.values().end()));
}

double alpha_log(double x, double alpha) {
  if (!(x > 0.0)) throw ValidationError("alpha_log: x must be > 0, got " + std::to_string(x));
  require_alpha(alpha, "alpha_log");
  if (std::abs(alpha - 1.0) <= kAlphaOneWindow) return std::log(x);
  return (std::pow(x, 1.0 - alpha) - 1.0) / (1.0 - alpha);
}

double tsallis(const ProbVector& p, double alpha) {
  require_alpha(alpha, "tsallis");
  if (alpha == 1.0) throw ValidationError("tsallis: alpha = 1 is the Shannon entropy; use shannon()");
  double s = 0.0;
  for (double x : p.values())
    if (x > 0.0) s += std::pow(x, alpha);
  return (s - 1.0) / (1.0 - alpha);
}

double index_of_coincidence(const ProbVector& p) {
  double c = 0.0;
  for (double x : p.values()) c += x * x;
  return c;
}

}  // namespace mumbound
