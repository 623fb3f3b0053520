#include "mumbound/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mumbound/error.hpp"

namespace mumbound {

HermitianOperator::HermitianOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw ValidationError("HermitianOperator: matrix must be square and non-empty, got " +
                          std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kHermiticityTolerance * scale)) {
    throw ValidationError("HermitianOperator: matrix is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(asym) + ")");
  }
  Matrix sym = 0.5 * (m_ + m_.adjoint());
  m_ = std::move(sym);
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& rhs) {
  if (rhs.dim() != dim()) throw ValidationError("HermitianOperator: dimension mismatch in +");
  m_ += rhs.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& rhs) {
  if (rhs.dim() != dim()) throw ValidationError("HermitianOperator: dimension mismatch in -");
  m_ -= rhs.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.trace();
  if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
    throw ValidationError("DensityMatrix: trace must be 1, got " + std::to_string(tr));
  }
  const double lmin = min_eigenvalue(op_);
  if (lmin < -kPositivityTolerance) {
    throw ValidationError("DensityMatrix: not positive semidefinite (min eigenvalue " +
                          std::to_string(lmin) + ")");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw ValidationError("DensityMatrix: dimension must be positive");
  return DensityMatrix(HermitianOperator(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n2 = psi.squaredNorm();
  if (psi.size() == 0 || !(n2 > 0.0)) throw ValidationError("DensityMatrix::pure: zero vector");
  Matrix m = psi * psi.adjoint() / n2;
  return DensityMatrix(HermitianOperator(std::move(m)));
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    throw ValidationError("hs_inner: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
  }
  // Tr(AB) = sum_ij A_ij B_ji; for Hermitian B, B_ji = conj(B_ij).
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

double purity(const DensityMatrix& rho) { return hs_inner(rho.op(), rho.op()); }

DensityMatrix random_density_matrix(int dim, int rank, std::mt19937_64& rng) {
  if (dim < 1) throw ValidationError("random_density_matrix: dimension must be positive");
  if (rank < 1 || rank > dim) {
    throw ValidationError("random_density_matrix: rank must be in [1, " + std::to_string(dim) +
                          "], got " + std::to_string(rank));
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  Matrix sym = 0.5 * (m + m.adjoint());
  return DensityMatrix(HermitianOperator(std::move(sym)));
}

DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density_matrix(dim, rank, rng);
}

}  // namespace mumbound
