#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace mumbound {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Maximum entrywise asymmetry |M - M^dagger| absorbed by symmetrization.
inline constexpr double kHermiticityTolerance = 1e-12;

/// Dense complex square matrix that is Hermitian by construction.
///
/// The constructor accepts a matrix whose asymmetry is within
/// kHermiticityTolerance (relative to max(1, largest entry)), replaces it by
/// (M + M^dagger)/2 and rejects anything further from Hermitian.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(Matrix m);

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.norm(); }

  HermitianOperator& operator+=(const HermitianOperator& rhs);
  HermitianOperator& operator-=(const HermitianOperator& rhs);
  HermitianOperator& operator*=(double s);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

 private:
  Matrix m_;
};

/// Unit-trace positive semidefinite Hermitian operator.
class DensityMatrix {
 public:
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPositivityTolerance = 1e-12;

  explicit DensityMatrix(HermitianOperator op);

  /// I/d.
  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| for a (not necessarily normalized) nonzero vector.
  static DensityMatrix pure(const Vector& psi);

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

struct Eigensystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns match values
};

/// Eigenvalues in ascending order, computed by cyclic complex Jacobi
/// rotations.
std::vector<double> hermitian_eigenvalues(const HermitianOperator& m);

/// Same, for a raw matrix; throws ValidationError if it is not square or not
/// Hermitian.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

Eigensystem hermitian_eigensystem(const HermitianOperator& m);

double min_eigenvalue(const HermitianOperator& m);

/// Tr(a b).
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

double purity(const DensityMatrix& rho);

/// Random state of the given rank: G G^dagger / Tr(G G^dagger) with G a
/// dim x rank matrix of i.i.d. standard complex Gaussians. rank = 1 is a
/// Haar-random pure state, rank = dim the Hilbert-Schmidt ensemble.
DensityMatrix random_density_matrix(int dim, int rank, std::mt19937_64& rng);
DensityMatrix random_density_matrix(int dim, int rank, std::uint64_t seed);

}  // namespace mumbound
