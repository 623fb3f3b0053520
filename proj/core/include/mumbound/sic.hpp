#pragma once

#include <vector>

#include "mumbound/measurement.hpp"
#include "mumbound/operator.hpp"
#include "mumbound/validation.hpp"

namespace mumbound {

/// General symmetric informationally complete measurement: d^2 PSD operators
/// resolving the identity with uniform self-overlap a and cross-overlap
/// (1 - d a) / (d (d^2 - 1)). Shapes are checked on construction, the numeric
/// identities by validate_sic.
class SicSet {
 public:
  SicSet(int d, double a, std::vector<HermitianOperator> elements);

  int d() const { return d_; }
  double a() const { return a_; }
  const std::vector<HermitianOperator>& elements() const { return elements_; }

 private:
  int d_;
  double a_;
  std::vector<HermitianOperator> elements_;
};

/// Qubit SIC-POVM (I + b_j . sigma) / 4 with tetrahedral Bloch vectors
/// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1) over sqrt3.
SicSet tetrahedron_sic();

/// P_j' = x P_j + (1 - x) I / d^2 for a rank-one fiducial SIC-POVM and x in (0, 1].
/// The resulting a is measured from the elements and required to be uniform.
SicSet depolarized_sic(const SicSet& fiducial, double x);

ValidationReport validate_sic(const SicSet& set, double tol);

/// Single row of d^2 probabilities Tr(P_j rho).
ProbabilityTable sic_measure(const SicSet& set, const DensityMatrix& rho);

/// ((a d^3 - 1) purity + d (1 - a d)) / (d (d^2 - 1)).
double sic_coincidence_closed_form(int d, double a, double purity);

/// Requires 1/d^3 < a <= 1/d^2.
void require_sic_parameter(int d, double a);

}  // namespace mumbound
