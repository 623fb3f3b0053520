#include "mumbound/mum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mumbound/error.hpp"

namespace mumbound {
namespace {

constexpr double kRangeSlack = 1e-12;
constexpr double kBuildTolerance = 1e-9;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

HermitianOperator sum_of(const std::vector<HermitianOperator>& ops, int d) {
  HermitianOperator s = HermitianOperator::zero(d);
  for (const auto& op : ops) s += op;
  return s;
}

void check_groups(const OperatorGroups& groups, int d, std::size_t per_group, const char* what) {
  if (groups.size() != static_cast<std::size_t>(d + 1)) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(d + 1) + " groups, got " +
                          std::to_string(groups.size()));
  }
  for (const auto& g : groups) {
    if (g.size() != per_group) {
      throw ValidationError(std::string(what) + ": expected " + std::to_string(per_group) +
                            " operators per group, got " + std::to_string(g.size()));
    }
    for (const auto& op : g) {
      if (op.dim() != d) throw ValidationError(std::string(what) + ": operator dimension mismatch");
    }
  }
}

}  // namespace

namespace detail {

void require_dimension(int d) {
  if (d < 2) throw ValidationError("dimension d must be >= 2, got " + std::to_string(d));
}

void require_kappa(int d, double kappa) {
  const double lo = 1.0 / d;
  if (!(kappa > lo && kappa <= 1.0 + kRangeSlack)) {
    throw ValidationError("kappa = " + num(kappa) + " outside (1/d, 1] = (" + num(lo) + ", 1]");
  }
}

void require_purity(int d, double purity) {
  const double lo = 1.0 / d;
  if (!(purity >= lo - kRangeSlack && purity <= 1.0 + kRangeSlack)) {
    throw ValidationError("purity = " + num(purity) + " outside [1/d, 1] = [" + num(lo) + ", 1]");
  }
}

}  // namespace detail

OperatorBasis::OperatorBasis(int d, OperatorGroups groups, std::string label)
    : d_(d), groups_(std::move(groups)), label_(std::move(label)) {
  detail::require_dimension(d_);
  check_groups(groups_, d_, static_cast<std::size_t>(d_ - 1), "OperatorBasis");

  std::vector<const HermitianOperator*> flat;
  for (const auto& g : groups_)
    for (const auto& op : g) flat.push_back(&op);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (std::abs(flat[i]->trace()) > kTraceTolerance) {
      throw ValidationError("OperatorBasis: element " + std::to_string(i) + " is not traceless");
    }
    for (std::size_t j = i; j < flat.size(); ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(hs_inner(*flat[i], *flat[j]) - expected) > kOrthonormalityTolerance) {
        throw ValidationError("OperatorBasis: elements " + std::to_string(i) + ", " + std::to_string(j) +
                              " are not Hilbert-Schmidt orthonormal");
      }
    }
  }
}

OperatorBasis gellmann_basis(int d) {
  detail::require_dimension(d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<HermitianOperator> flat;
  flat.reserve(static_cast<std::size_t>(d * d - 1));

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      flat.emplace_back(std::move(m));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = Complex(0.0, -inv_sqrt2);
      m(k, j) = Complex(0.0, inv_sqrt2);
      flat.emplace_back(std::move(m));
    }
  }
  for (int l = 1; l < d; ++l) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    Matrix m = Matrix::Zero(d, d);
    for (int j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -static_cast<double>(l) * norm;
    flat.emplace_back(std::move(m));
  }

  OperatorGroups groups(static_cast<std::size_t>(d + 1));
  for (std::size_t i = 0; i < flat.size(); ++i) {
    groups[i / static_cast<std::size_t>(d - 1)].push_back(std::move(flat[i]));
  }
  return OperatorBasis(d, std::move(groups), "gell-mann");
}

OperatorGroups build_f_operators(const OperatorBasis& basis) {
  const int d = basis.d();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  OperatorGroups f_ops;
  f_ops.reserve(basis.groups().size());
  for (const auto& group : basis.groups()) {
    const HermitianOperator total = sum_of(group, d);
    std::vector<HermitianOperator> fb;
    fb.reserve(static_cast<std::size_t>(d));
    for (const auto& fnb : group) fb.push_back(total - (d + sqrt_d) * fnb);
    fb.push_back((1.0 + sqrt_d) * total);
    f_ops.push_back(std::move(fb));
  }
  return f_ops;
}

double max_t(const OperatorGroups& f_ops) {
  if (f_ops.empty() || f_ops.front().empty()) throw ValidationError("max_t: no operators");
  const int d = f_ops.front().front().dim();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& group : f_ops) {
    for (const auto& f : group) {
      const double lmin = min_eigenvalue(f);
      if (lmin < 0.0) best = std::min(best, (1.0 / d) / -lmin);
    }
  }
  if (!std::isfinite(best)) throw InternalError("max_t: every F operator is positive semidefinite");
  return best;
}

double max_t(int d) { return max_t(build_f_operators(gellmann_basis(d))); }

double kappa_from_t(int d, double t) {
  const double a = 1.0 + std::sqrt(static_cast<double>(d));
  return 1.0 / d + t * t * a * a * (d - 1);
}

MumSet::MumSet(int d, double t, double kappa, OperatorGroups elements, OperatorGroups f_ops,
               std::string basis_label)
    : d_(d),
      t_(t),
      kappa_(kappa),
      elements_(std::move(elements)),
      f_ops_(std::move(f_ops)),
      basis_label_(std::move(basis_label)) {
  detail::require_dimension(d_);
  if (!std::isfinite(t_) || !std::isfinite(kappa_)) throw ValidationError("MumSet: non-finite t or kappa");
  check_groups(elements_, d_, static_cast<std::size_t>(d_), "MumSet elements");
  check_groups(f_ops_, d_, static_cast<std::size_t>(d_), "MumSet F operators");
}

MumSet MumSet::from_elements(int d, double t, double kappa, OperatorGroups elements, std::string basis_label) {
  detail::require_dimension(d);
  if (!(t > 0.0)) throw ValidationError("MumSet: t must be positive to recover F operators");
  check_groups(elements, d, static_cast<std::size_t>(d), "MumSet elements");
  const HermitianOperator centre = HermitianOperator::identity(d) * (1.0 / d);
  OperatorGroups f_ops;
  for (const auto& group : elements) {
    std::vector<HermitianOperator> fb;
    for (const auto& p : group) fb.push_back((p - centre) * (1.0 / t));
    f_ops.push_back(std::move(fb));
  }
  return MumSet(d, t, kappa, std::move(elements), std::move(f_ops), std::move(basis_label));
}

MumSet build_mums(const OperatorBasis& basis, double t) {
  const int d = basis.d();
  OperatorGroups f_ops = build_f_operators(basis);
  const double t_max = max_t(f_ops);
  if (!(t > 0.0 && t <= t_max)) {
    throw ValidationError("t = " + num(t) + " outside allowed interval (0, t_max] = (0, " + num(t_max) + "]");
  }
  const HermitianOperator centre = HermitianOperator::identity(d) * (1.0 / d);
  OperatorGroups elements;
  elements.reserve(f_ops.size());
  for (const auto& group : f_ops) {
    std::vector<HermitianOperator> pb;
    pb.reserve(group.size());
    for (const auto& f : group) pb.push_back(centre + t * f);
    elements.push_back(std::move(pb));
  }
  MumSet set(d, t, kappa_from_t(d, t), std::move(elements), std::move(f_ops), basis.label());
  const ValidationReport report = validate_mums(set, kBuildTolerance);
  if (!report.passed()) {
    throw InternalError("build_mums: constructed set failed validation (d=" + std::to_string(d) +
                        ", t=" + num(t) + ")\n" + report.summary());
  }
  return set;
}

MumSet build_mums(int d, double t) { return build_mums(gellmann_basis(d), t); }

ValidationReport validate_mums(const MumSet& set, double tol) {
  const int d = set.d();
  const double kappa = set.kappa();
  const auto& el = set.elements();
  const auto& f = set.f_ops();
  const std::size_t nb = el.size();
  const std::size_t nn = static_cast<std::size_t>(d);

  ValidationReport report;
  report.tolerance = tol;

  double dev_trace = 0.0, dev_identity = 0.0, dev_cross = 0.0, dev_diag = 0.0, dev_off = 0.0, dev_psd = 0.0;
  const Matrix id = Matrix::Identity(d, d);
  const double off_expected = (1.0 - kappa) / (d - 1);
  for (std::size_t b = 0; b < nb; ++b) {
    Matrix total = Matrix::Zero(d, d);
    for (std::size_t n = 0; n < nn; ++n) {
      const auto& p = el[b][n];
      dev_trace = std::max(dev_trace, std::abs(p.trace() - 1.0));
      total += p.matrix();
      dev_psd = std::max(dev_psd, -min_eigenvalue(p));
      for (std::size_t n2 = n; n2 < nn; ++n2) {
        const double v = hs_inner(p, el[b][n2]);
        if (n2 == n)
          dev_diag = std::max(dev_diag, std::abs(v - kappa));
        else
          dev_off = std::max(dev_off, std::abs(v - off_expected));
      }
      for (std::size_t b2 = b + 1; b2 < nb; ++b2)
        for (std::size_t n2 = 0; n2 < nn; ++n2)
          dev_cross = std::max(dev_cross, std::abs(hs_inner(p, el[b2][n2]) - 1.0 / d));
    }
    dev_identity = std::max(dev_identity, (total - id).cwiseAbs().maxCoeff());
  }
  report.add("unit_trace", dev_trace);
  report.add("identity_resolution", dev_identity);
  report.add("cross_measurement_overlap", dev_cross);
  report.add("same_measurement_diagonal", dev_diag);
  report.add("same_measurement_off_diagonal", dev_off);
  report.add("positivity", std::max(0.0, dev_psd));

  double dev_kappa_range = 0.0;
  if (!(kappa > 1.0 / d)) dev_kappa_range = std::numeric_limits<double>::infinity();
  else dev_kappa_range = std::max(0.0, kappa - 1.0);
  report.add("kappa_range", dev_kappa_range);
  report.add("kappa_vs_t", std::abs(kappa - kappa_from_t(d, set.t())));

  const double a = 1.0 + std::sqrt(static_cast<double>(d));
  const double gram_scale = a * a;
  double dev_gram = 0.0, dev_sum = 0.0, dev_orth = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    Matrix total = Matrix::Zero(d, d);
    for (std::size_t n = 0; n < nn; ++n) {
      total += f[b][n].matrix();
      for (std::size_t n2 = n; n2 < nn; ++n2) {
        const double expected = gram_scale * (n == n2 ? (d - 1.0) : -1.0);
        dev_gram = std::max(dev_gram, std::abs(hs_inner(f[b][n], f[b][n2]) - expected));
      }
      for (std::size_t b2 = b + 1; b2 < nb; ++b2)
        for (std::size_t n2 = 0; n2 < nn; ++n2) dev_orth = std::max(dev_orth, std::abs(hs_inner(f[b][n], f[b2][n2])));
    }
    dev_sum = std::max(dev_sum, total.cwiseAbs().maxCoeff());
  }
  report.add("f_same_measurement_gram", dev_gram);
  report.add("f_sum_zero", dev_sum);
  report.add("f_cross_orthogonal", dev_orth);
  return report;
}

ProbabilityTable measure(const MumSet& set, const DensityMatrix& rho) {
  if (rho.dim() != set.d()) {
    throw ValidationError("measure: state dimension " + std::to_string(rho.dim()) + " does not match d = " +
                          std::to_string(set.d()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(set.elements().size());
  for (const auto& group : set.elements()) {
    std::vector<double> row;
    row.reserve(group.size());
    for (const auto& p : group) row.push_back(hs_inner(p, rho.op()));
    rows.push_back(std::move(row));
  }
  return ProbabilityTable(set.d(), std::move(rows));
}

double coincidence_closed_form(int d, double kappa, double purity) {
  detail::require_dimension(d);
  detail::require_kappa(d, kappa);
  detail::require_purity(d, purity);
  return ((d * kappa - 1.0) * (d * purity - 1.0) + d * d - 1.0) / (d * (d - 1.0));
}

}  // namespace mumbound
