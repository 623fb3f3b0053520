#pragma once

#include <string>
#include <vector>

#include "mumbound/measurement.hpp"
#include "mumbound/operator.hpp"
#include "mumbound/validation.hpp"

namespace mumbound {

/// (d+1) groups of operators; group b holds either the d-1 basis operators
/// F_{n,b}, the d operators F_n^(b), or the d POVM elements P_n^(b).
using OperatorGroups = std::vector<std::vector<HermitianOperator>>;

/// d^2 - 1 traceless Hermitian operators, Hilbert-Schmidt orthonormal,
/// partitioned into d+1 groups of d-1.
class OperatorBasis {
 public:
  static constexpr double kOrthonormalityTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-12;

  OperatorBasis(int d, OperatorGroups groups, std::string label);

  int d() const { return d_; }
  const OperatorGroups& groups() const { return groups_; }
  const std::string& label() const { return label_; }

 private:
  int d_;
  OperatorGroups groups_;
  std::string label_;
};

/// Generalized Gell-Mann matrices scaled to unit Hilbert-Schmidt norm.
///
/// Ordering: symmetric (E_jk + E_kj)/sqrt2 for j<k lexicographically, then
/// antisymmetric (-i E_jk + i E_kj)/sqrt2 in the same order, then diagonal
/// (sum_{j<l} E_jj - l E_ll)/sqrt(l(l+1)) for l = 1..d-1. Group b receives
/// elements [b(d-1), (b+1)(d-1)) of that sequence. For d = 2 the groups are
/// {sigma_x/sqrt2}, {sigma_y/sqrt2}, {sigma_z/sqrt2}.
OperatorBasis gellmann_basis(int d);

/// F_n^(b) = F^(b) - (d + sqrt d) F_{n,b} for n < d, F_d^(b) = (1 + sqrt d) F^(b),
/// with F^(b) the sum of group b.
OperatorGroups build_f_operators(const OperatorBasis& basis);

/// Largest t > 0 keeping every I/d + t F_n^(b) positive semidefinite.
double max_t(const OperatorGroups& f_ops);

/// max_t for the Gell-Mann construction in dimension d.
double max_t(int d);

/// kappa = 1/d + t^2 (1 + sqrt d)^2 (d - 1).
double kappa_from_t(int d, double t);

/// A complete set of d+1 mutually unbiased measurements P_n^(b) = I/d + t F_n^(b).
///
/// The constructor only checks shapes and dimensions; numerical identities are
/// checked by validate_mums so that faulty sets can be represented and reported.
class MumSet {
 public:
  MumSet(int d, double t, double kappa, OperatorGroups elements, OperatorGroups f_ops,
         std::string basis_label);

  /// Recovers F_n^(b) = (P_n^(b) - I/d) / t from the elements.
  static MumSet from_elements(int d, double t, double kappa, OperatorGroups elements,
                              std::string basis_label);

  int d() const { return d_; }
  double t() const { return t_; }
  double kappa() const { return kappa_; }
  const OperatorGroups& elements() const { return elements_; }
  const OperatorGroups& f_ops() const { return f_ops_; }
  const std::string& basis_label() const { return basis_label_; }

 private:
  int d_;
  double t_;
  double kappa_;
  OperatorGroups elements_;
  OperatorGroups f_ops_;
  std::string basis_label_;
};

/// Builds and validates (at tolerance 1e-9) the Gell-Mann MUM set. t must lie
/// in (0, max_t(d)].
MumSet build_mums(int d, double t);
MumSet build_mums(const OperatorBasis& basis, double t);

/// Checks the defining trace identities of the set, the algebraic identities
/// of its F operators, identity resolution and positivity.
ValidationReport validate_mums(const MumSet& set, double tol);

/// p_n^(b) = Tr(P_n^(b) rho), one row per measurement.
ProbabilityTable measure(const MumSet& set, const DensityMatrix& rho);

/// Closed-form index of coincidence of a complete MUM set:
/// ((d kappa - 1)(d purity - 1) + d^2 - 1) / (d (d - 1)).
double coincidence_closed_form(int d, double kappa, double purity);

namespace detail {
void require_dimension(int d);
void require_kappa(int d, double kappa);
void require_purity(int d, double purity);
}  // namespace detail

}  // namespace mumbound
