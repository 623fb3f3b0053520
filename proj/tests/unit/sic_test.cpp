#include <doctest.h>

#include <cmath>

#include "mumbound/error.hpp"
#include "mumbound/io.hpp"
#include "mumbound/sic.hpp"
#include "test_support.hpp"

using namespace mumbound;
namespace mt = mumbound::testing;

namespace {

// Weyl-Heisenberg orbit of the d = 3 fiducial (0, 1, -1)/sqrt2, built
// directly from shift and clock matrices.
std::vector<mt::M> qutrit_sic_elements() {
  const double pi = std::acos(-1.0);
  const mt::C w = std::polar(1.0, 2 * pi / 3);
  mt::M X = mt::M::Zero(3, 3), Z = mt::M::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    X((i + 1) % 3, i) = 1.0;
    Z(i, i) = std::pow(w, i);
  }
  Eigen::VectorXcd psi(3);
  psi << 0, 1, -1;
  psi /= std::sqrt(2.0);
  std::vector<mt::M> out;
  mt::M Xa = mt::M::Identity(3, 3);
  for (int a = 0; a < 3; ++a) {
    mt::M Zb = mt::M::Identity(3, 3);
    for (int b = 0; b < 3; ++b) {
      const Eigen::VectorXcd v = Xa * Zb * psi;
      out.push_back(v * v.adjoint() / 3.0);
      Zb = Zb * Z;
    }
    Xa = Xa * X;
  }
  return out;
}

}  // namespace

TEST_CASE("tetrahedron SIC-POVM") {
  const SicSet sic = tetrahedron_sic();
  CHECK(sic.d() == 2);
  CHECK(sic.a() == 0.25);
  mt::M total = mt::M::Zero(2, 2);
  for (std::size_t j = 0; j < 4; ++j) {
    total += sic.elements()[j].matrix();
    CHECK(std::abs(sic.elements()[j].trace() - 0.5) <= 1e-12);
    for (std::size_t k = 0; k < 4; ++k) {
      const double v = mt::trace_product(sic.elements()[j].matrix(), sic.elements()[k].matrix());
      CHECK(std::abs(v - (j == k ? 0.25 : 1.0 / 12.0)) <= 1e-12);
    }
  }
  CHECK((total - mt::M::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(validate_sic(sic, 1e-10).passed());
}

TEST_CASE("negating one Bloch vector breaks cross-overlap uniformity") {
  const SicSet sic = tetrahedron_sic();
  auto elements = sic.elements();
  // (I + b.sigma)/4 -> (I - b.sigma)/4 = I/2 - P
  elements[1] = HermitianOperator(mt::M::Identity(2, 2) * 0.5 - elements[1].matrix());
  const ValidationReport r = validate_sic(SicSet(2, 0.25, elements), 1e-9);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("cross_overlap")->passed);
}

TEST_CASE("depolarized SIC") {
  const SicSet fid = tetrahedron_sic();
  const SicSet same = depolarized_sic(fid, 1.0);
  CHECK(same.a() == fid.a());
  for (std::size_t j = 0; j < 4; ++j) CHECK(same.elements()[j].matrix() == fid.elements()[j].matrix());

  const SicSet half = depolarized_sic(fid, 0.5);
  // Tr((xP + (1-x)I/4)^2) = x^2/4 + 2x(1-x)/8 + (1-x)^2/8 expanded by hand.
  const double expected = 0.25 * 0.25 + 2 * 0.5 * 0.5 / 8 + 0.25 / 8;
  CHECK(std::abs(half.a() - expected) <= 1e-12);
  CHECK(half.a() > 1.0 / 8);
  CHECK(half.a() < 1.0 / 4);
  for (const auto& p : half.elements()) CHECK(std::abs(mt::trace_product(p.matrix(), p.matrix()) - half.a()) <= 1e-12);

  CHECK_THROWS_AS(depolarized_sic(fid, 0.0), ValidationError);
  CHECK_THROWS_AS(depolarized_sic(fid, 1.5), ValidationError);
  CHECK_THROWS_AS(depolarized_sic(half, 0.5), ValidationError);  // not rank one
}

TEST_CASE("depolarized sets validate and a(x) increases strictly") {
  const SicSet fid = tetrahedron_sic();
  double prev = 1.0 / 8;
  for (int i = 1; i <= 10; ++i) {
    const double x = i / 10.0;
    const SicSet s = depolarized_sic(fid, x);
    const ValidationReport r = validate_sic(s, 1e-10);
    CHECK_MESSAGE(r.passed(), "x=" << x << "\n" << r.summary());
    CHECK(s.a() > prev);
    prev = s.a();
  }
}

TEST_CASE("sic_measure") {
  const SicSet sic = tetrahedron_sic();
  const ProbabilityTable mixed = sic_measure(sic, DensityMatrix::maximally_mixed(2));
  REQUIRE(mixed.num_rows() == 1);
  for (double p : mixed.row(0)) CHECK(std::abs(p - 0.25) <= 1e-12);

  Eigen::VectorXcd zero(2);
  zero << 1, 0;
  const ProbabilityTable t = sic_measure(sic, DensityMatrix::pure(zero));
  // p_j = (1 + b . b_j)/4 with b = (0, 0, 1).
  const double s = 1.0 / std::sqrt(3.0);
  const double expected[] = {(1 + s) / 4, (1 - s) / 4, (1 - s) / 4, (1 + s) / 4};
  for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(t.row(0)[j] - expected[j]) <= 1e-12);

  CHECK_THROWS_AS(sic_measure(sic, DensityMatrix::maximally_mixed(3)), ValidationError);
}

TEST_CASE("SIC coincidence closed form") {
  CHECK(std::abs(sic_coincidence_closed_form(2, 0.25, 1.0) - 1.0 / 3.0) <= 1e-12);
  Eigen::VectorXcd zero(2);
  zero << 1, 0;
  CHECK(std::abs(coincidence_bruteforce(sic_measure(tetrahedron_sic(), DensityMatrix::pure(zero))) - 1.0 / 3.0) <= 1e-12);

  for (int d = 2; d <= 6; ++d) {
    const double d2 = d * d;
    for (double a : {1.0 / d2, 0.5 / d2 + 0.5 / (d2 * d), 1.0 / (d2 * d) * 1.01}) {
      CHECK(std::abs(sic_coincidence_closed_form(d, a, 1.0 / d) - 1.0 / d2) <= 1e-12);
      CHECK(std::abs(sic_coincidence_closed_form(d, a, 1.0) - (a * d2 + 1.0) / (d * (d + 1.0))) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(sic_coincidence_closed_form(2, 0.3, 1.0), ValidationError);
  CHECK_THROWS_AS(sic_coincidence_closed_form(2, 0.125, 1.0), ValidationError);
}

TEST_CASE("property: SIC closed form equals brute force on random qubit states") {
  std::mt19937_64 rng(77);
  for (double x : {0.2, 0.6, 1.0}) {
    const SicSet s = depolarized_sic(tetrahedron_sic(), x);
    for (int k = 0; k < 1000; ++k) {
      const DensityMatrix rho = random_density_matrix(2, 1 + k % 2, rng);
      const double brute = coincidence_bruteforce(sic_measure(s, rho));
      CHECK(std::abs(sic_coincidence_closed_form(2, s.a(), purity(rho)) - brute) <= 1e-10);
    }
  }
}

TEST_CASE("imported qutrit fiducial validates, depolarizes, and matches the closed form") {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& m : qutrit_sic_elements()) elements.push_back(matrix_to_json(m));
  const nlohmann::json j = {{"d", 3}, {"a", 1.0 / 9.0}, {"elements", elements}};
  const SicSet fid = sic_set_from_json(j);
  CHECK(validate_sic(fid, 1e-10).passed());

  std::mt19937_64 rng(3);
  for (double x : {0.5, 1.0}) {
    const SicSet s = depolarized_sic(fid, x);
    CHECK(validate_sic(s, 1e-10).passed());
    for (int k = 0; k < 1000; ++k) {
      const DensityMatrix rho = random_density_matrix(3, 1 + k % 3, rng);
      const double brute = coincidence_bruteforce(sic_measure(s, rho));
      CHECK(std::abs(sic_coincidence_closed_form(3, s.a(), purity(rho)) - brute) <= 1e-10);
    }
  }
}
