#include "mumbound/sic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "mumbound/error.hpp"
#include "mumbound/mum.hpp"

namespace mumbound {
namespace {

constexpr double kRangeSlack = 1e-12;
constexpr double kFiducialTolerance = 1e-9;
constexpr double kUniformityTolerance = 1e-10;

}  // namespace

void require_sic_parameter(int d, double a) {
  const double lo = 1.0 / (static_cast<double>(d) * d * d);
  const double hi = 1.0 / (static_cast<double>(d) * d);
  if (!(a > lo && a <= hi * (1.0 + kRangeSlack))) {
    throw ValidationError("SIC parameter a = " + std::to_string(a) + " outside (1/d^3, 1/d^2]");
  }
}

SicSet::SicSet(int d, double a, std::vector<HermitianOperator> elements)
    : d_(d), a_(a), elements_(std::move(elements)) {
  detail::require_dimension(d_);
  if (!std::isfinite(a_)) throw ValidationError("SicSet: non-finite a");
  if (elements_.size() != static_cast<std::size_t>(d_ * d_)) {
    throw ValidationError("SicSet: expected " + std::to_string(d_ * d_) + " elements, got " +
                          std::to_string(elements_.size()));
  }
  for (const auto& p : elements_)
    if (p.dim() != d_) throw ValidationError("SicSet: element dimension mismatch");
}

SicSet tetrahedron_sic() {
  const double s = 1.0 / std::sqrt(3.0);
  const std::array<std::array<double, 3>, 4> bloch{{{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}}};
  std::vector<HermitianOperator> elements;
  for (const auto& b : bloch) {
    Matrix m(2, 2);
    m(0, 0) = 1.0 + b[2];
    m(1, 1) = 1.0 - b[2];
    m(0, 1) = Complex(b[0], -b[1]);
    m(1, 0) = Complex(b[0], b[1]);
    elements.emplace_back(m / 4.0);
  }
  return SicSet(2, 0.25, std::move(elements));
}

SicSet depolarized_sic(const SicSet& fiducial, double x) {
  if (!(x > 0.0 && x <= 1.0)) throw ValidationError("depolarized_sic: x = " + std::to_string(x) + " outside (0, 1]");
  const int d = fiducial.d();
  const double d2 = static_cast<double>(d) * d;
  if (std::abs(fiducial.a() - 1.0 / d2) > kFiducialTolerance) {
    throw ValidationError("depolarized_sic: fiducial is not rank one (a != 1/d^2)");
  }
  const ValidationReport report = validate_sic(fiducial, kFiducialTolerance);
  if (!report.passed()) throw ValidationError("depolarized_sic: fiducial failed validation\n" + report.summary());

  const HermitianOperator noise = HermitianOperator::identity(d) * ((1.0 - x) / d2);
  std::vector<HermitianOperator> elements;
  elements.reserve(fiducial.elements().size());
  double a_min = std::numeric_limits<double>::infinity();
  double a_max = -std::numeric_limits<double>::infinity();
  for (const auto& p : fiducial.elements()) {
    HermitianOperator q = x * p + noise;
    const double self = hs_inner(q, q);
    a_min = std::min(a_min, self);
    a_max = std::max(a_max, self);
    elements.push_back(std::move(q));
  }
  if (a_max - a_min > kUniformityTolerance) {
    throw InternalError("depolarized_sic: self-overlap not uniform across elements");
  }
  const double a = x == 1.0 ? fiducial.a() : 0.5 * (a_min + a_max);
  require_sic_parameter(d, a);
  return SicSet(d, a, std::move(elements));
}

ValidationReport validate_sic(const SicSet& set, double tol) {
  const int d = set.d();
  const double a = set.a();
  const auto& el = set.elements();
  ValidationReport report;
  report.tolerance = tol;

  const double cross_expected = (1.0 - d * a) / (d * (static_cast<double>(d) * d - 1.0));
  Matrix total = Matrix::Zero(d, d);
  double dev_trace = 0.0, dev_self = 0.0, dev_cross = 0.0, dev_psd = 0.0;
  for (std::size_t j = 0; j < el.size(); ++j) {
    total += el[j].matrix();
    dev_trace = std::max(dev_trace, std::abs(el[j].trace() - 1.0 / d));
    dev_self = std::max(dev_self, std::abs(hs_inner(el[j], el[j]) - a));
    dev_psd = std::max(dev_psd, -min_eigenvalue(el[j]));
    for (std::size_t k = j + 1; k < el.size(); ++k)
      dev_cross = std::max(dev_cross, std::abs(hs_inner(el[j], el[k]) - cross_expected));
  }
  report.add("identity_resolution", (total - Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
  report.add("element_trace", dev_trace);
  report.add("self_overlap", dev_self);
  report.add("cross_overlap", dev_cross);
  report.add("positivity", std::max(0.0, dev_psd));

  const double lo = 1.0 / (static_cast<double>(d) * d * d);
  const double hi = 1.0 / (static_cast<double>(d) * d);
  double dev_range = 0.0;
  if (!(a > lo)) dev_range = std::numeric_limits<double>::infinity();
  else dev_range = std::max(0.0, a - hi);
  report.add("a_range", dev_range);
  return report;
}

ProbabilityTable sic_measure(const SicSet& set, const DensityMatrix& rho) {
  if (rho.dim() != set.d()) {
    throw ValidationError("sic_measure: state dimension " + std::to_string(rho.dim()) + " does not match d = " +
                          std::to_string(set.d()));
  }
  std::vector<double> row;
  row.reserve(set.elements().size());
  for (const auto& p : set.elements()) row.push_back(hs_inner(p, rho.op()));
  return ProbabilityTable(set.d(), {std::move(row)});
}

double sic_coincidence_closed_form(int d, double a, double purity) {
  detail::require_dimension(d);
  require_sic_parameter(d, a);
  detail::require_purity(d, purity);
  const double d3 = static_cast<double>(d) * d * d;
  return ((a * d3 - 1.0) * purity + d * (1.0 - a * d)) / (d * (static_cast<double>(d) * d - 1.0));
}

}  // namespace mumbound
