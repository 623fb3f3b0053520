#include "mumbound/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mumbound/entropy.hpp"
#include "mumbound/error.hpp"
#include "mumbound/mum.hpp"
#include "mumbound/sic.hpp"

namespace mumbound {
namespace {

constexpr double kRangeSlack = 1e-12;
// Relative nudge so that q = n / C computed as k - ulp still floors to k.
constexpr double kFloorSlack = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double ht_value(double c, const HtSplit& s) {
  const double h = static_cast<double>(s.h);
  return s.w * c * xlog2x(h + 1.0) + (1.0 - s.w) * c * xlog2x(h);
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

HtSplit ht_split(double numerator, double c_upper, long max_h) {
  if (!(c_upper > 0.0)) throw ValidationError("ht_split: C must be positive");
  const double q = numerator / c_upper;
  HtSplit s;
  s.h = static_cast<long>(std::floor(q * (1.0 + kFloorSlack)));
  s.w = std::max(0.0, q - static_cast<double>(s.h));
  if (s.h < 1 || s.h > max_h) {
    throw ValidationError("Harremoes-Topsoe parameter h = floor(" + num(q) + ") = " + std::to_string(s.h) +
                          " outside [1, " + std::to_string(max_h) + "]");
  }
  return s;
}

double shannon_bound_state_dependent(int d, double kappa, double purity) {
  return std::log2((d + 1.0) / coincidence_closed_form(d, kappa, purity));
}

double shannon_bound_state_independent(int d, double kappa) {
  detail::require_dimension(d);
  detail::require_kappa(d, kappa);
  return std::log2((d + 1.0) / (kappa + 1.0));
}

double ht_bound_total(int d, double c_upper) {
  detail::require_dimension(d);
  const double lo = (d + 1.0) / d;
  const double hi = d + 1.0;
  if (!(c_upper >= lo - kRangeSlack && c_upper <= hi + kRangeSlack)) {
    throw ValidationError("ht_bound_total: C = " + num(c_upper) + " outside [(d+1)/d, d+1] = [" + num(lo) + ", " +
                          num(hi) + "]");
  }
  return ht_value(c_upper, ht_split(d + 1.0, c_upper, d));
}

double corollary_bound_avg(int d, double kappa) {
  detail::require_dimension(d);
  detail::require_kappa(d, kappa);
  const HtSplit s = ht_split(d + 1.0, kappa + 1.0, d);
  const double h = static_cast<double>(s.h);
  const double weight = 1.0 - (kappa + 1.0) / (d + 1.0) * h;
  return std::log2(h) + weight * (h + 1.0) * std::log2(1.0 + 1.0 / h);
}

double renyi_bound(int d, double kappa, double purity, double alpha) {
  if (!(alpha >= 2.0)) throw ValidationError("renyi_bound: alpha must be >= 2, got " + num(alpha));
  const double c = coincidence_closed_form(d, kappa, purity);
  const double coeff = std::isinf(alpha) ? -0.5 : alpha / (2.0 * (1.0 - alpha));
  return coeff * std::log(c / (d + 1.0));
}

double g_d(int d, double x) {
  detail::require_dimension(d);
  const double lo = 1.0 / d;
  if (!(x >= lo - kRangeSlack)) throw ValidationError("g_d: x = " + num(x) + " below 1/d = " + num(lo));
  const double inner = std::max(0.0, x * d - 1.0);
  return (1.0 + std::sqrt(d - 1.0) * std::sqrt(inner)) / d;
}

double min_entropy_bound(int d, double kappa, double purity) {
  const double c = coincidence_closed_form(d, kappa, purity);
  return -std::log(g_d(d, c / (d + 1.0)));
}

double tsallis_bound(int d, double kappa, double purity, double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw ValidationError("tsallis_bound: alpha must be in (0, 2], got " + num(alpha));
  const double c = coincidence_closed_form(d, kappa, purity);
  return alpha_log((d + 1.0) / c, alpha);
}

double sic_ht_bound(int d, double c_upper) {
  detail::require_dimension(d);
  const double d2 = static_cast<double>(d) * d;
  if (!(c_upper >= 1.0 / d2 - kRangeSlack && c_upper < 1.0)) {
    throw ValidationError("sic_ht_bound: C = " + num(c_upper) + " outside [1/d^2, 1)");
  }
  return ht_value(c_upper, ht_split(1.0, c_upper, static_cast<long>(d) * d));
}

double sic_ht_bound_for_state(int d, double a, double purity) {
  return sic_ht_bound(d, sic_coincidence_closed_form(d, a, purity));
}

}  // namespace mumbound
