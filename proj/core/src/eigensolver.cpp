// Cyclic Jacobi diagonalization for small dense Hermitian matrices.
//
// Each rotation first removes the phase of the pivot A(p,q) with a diagonal
// unitary, then applies the classical real Jacobi rotation to the resulting
// real symmetric 2x2 block. Sweeps continue until the off-diagonal Frobenius
// norm drops below kOffDiagonalTolerance * max(1, ||A||_F).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mumbound/error.hpp"
#include "mumbound/operator.hpp"

namespace mumbound {
namespace {

constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

Eigensystem jacobi(const Matrix& input, bool want_vectors) {
  const Eigen::Index n = input.rows();
  Matrix a = input;
  Matrix v;
  if (want_vectors) v = Matrix::Identity(n, n);

  const double threshold = kOffDiagonalTolerance * std::max(1.0, input.norm());
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Complex phase = std::conj(a(p, q)) / r;  // e^{-i arg a_pq}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U restricted to (p,q): diag(1, phase) * [[c, s], [-s, c]].
        const Complex u_pp = c;
        const Complex u_pq = s;
        const Complex u_qp = -s * phase;
        const Complex u_qq = c * phase;

        // A <- A U (columns p, q).
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        // A <- U^dagger A (rows p, q).
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * u_pp + vkq * u_qp;
            v(k, q) = vkp * u_pq + vkq * u_qq;
          }
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > threshold) {
    throw InternalError("hermitian eigensolver: no convergence after " + std::to_string(kMaxSweeps) +
                        " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out;
  out.values.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const HermitianOperator& m) {
  return jacobi(m.matrix(), false).values;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  // The HermitianOperator constructor rejects non-square and non-Hermitian input.
  return hermitian_eigenvalues(HermitianOperator(m));
}

Eigensystem hermitian_eigensystem(const HermitianOperator& m) { return jacobi(m.matrix(), true); }

double min_eigenvalue(const HermitianOperator& m) { return hermitian_eigenvalues(m).front(); }

}  // namespace mumbound
