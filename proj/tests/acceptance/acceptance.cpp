// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion; with
// --criterion N only that criterion runs. Exit status is nonzero if any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "mumbound/bounds.hpp"
#include "mumbound/entropy.hpp"
#include "mumbound/mum.hpp"
#include "mumbound/sic.hpp"
#include "mumbound/verify.hpp"

using namespace mumbound;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

const double kTFractions[] = {1.0, 0.5, 0.25};

// Sum of squared outcome probabilities, with each probability taken as
// Re Tr(P rho) from a plain matrix product.
double coincidence_oracle(const std::vector<std::vector<HermitianOperator>>& groups, const DensityMatrix& rho) {
  double sum = 0.0;
  for (const auto& group : groups)
    for (const auto& p : group) {
      const double prob = (p.matrix() * rho.matrix()).trace().real();
      sum += prob * prob;
    }
  return sum;
}

Outcome criterion1() {
  double worst = 0.0;
  for (int d = 2; d <= 6; ++d) {
    for (double f : kTFractions) {
      const MumSet set = build_mums(d, f * max_t(d));
      const SamplerSpec spec{1000, std::nullopt, 1000u + static_cast<unsigned>(d)};
      for (std::size_t i = 0; i < spec.count; ++i) {
        const DensityMatrix rho = sample_state(d, spec, i);
        const double closed = coincidence_closed_form(d, set.kappa(), purity(rho));
        worst = std::max(worst, std::abs(closed - coincidence_oracle(set.elements(), rho)));
      }
    }
  }
  return {worst <= 1e-10, "max |closed form - brute force| = " + num(worst) + " (tol 1e-10, 15 cells x 1000 states)"};
}

Outcome criterion2() {
  std::string failures;
  double worst = 0.0;
  for (int d = 2; d <= 6; ++d) {
    for (double f : kTFractions) {
      const ValidationReport report = validate_mums(build_mums(d, f * max_t(d)), 1e-9);
      worst = std::max(worst, report.max_deviation());
      if (!report.passed()) failures += " d=" + std::to_string(d) + ",t=" + num(f) + "*t_max";
    }
  }
  const MumSet qubit = build_mums(2, max_t(2));
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd paulis[3];
  paulis[0] << 0, 1, 1, 0;
  paulis[1] << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  paulis[2] << 1, 0, 0, -1;
  double pauli_dev = 0.0;
  for (int b = 0; b < 3; ++b) {
    // The two outcomes of each measurement are the -1 and +1 eigenprojectors.
    pauli_dev = std::max(pauli_dev, (qubit.elements()[b][0].matrix() - 0.5 * (id - paulis[b])).cwiseAbs().maxCoeff());
    pauli_dev = std::max(pauli_dev, (qubit.elements()[b][1].matrix() - 0.5 * (id + paulis[b])).cwiseAbs().maxCoeff());
  }
  const double kappa_dev = std::abs(qubit.kappa() - 1.0);
  const bool ok = failures.empty() && pauli_dev <= 1e-9 && kappa_dev <= 1e-12;
  return {ok, "max identity deviation = " + num(worst) + (failures.empty() ? "" : ", failing:" + failures) +
                  "; Pauli projector deviation = " + num(pauli_dev) + "; |kappa - 1| = " + num(kappa_dev)};
}

Outcome criterion3() {
  double worst_pure = 0.0;
  double worst_mub = 0.0;
  for (int d = 2; d <= 12; ++d) {
    for (int j = 1; j <= 50; ++j) {
      const double kappa = 1.0 / d + (1.0 - 1.0 / d) * j / 50.0;
      worst_pure = std::max(worst_pure, std::abs(coincidence_closed_form(d, kappa, 1.0) - (kappa + 1.0)));
      const double pur = 1.0 / d + (1.0 - 1.0 / d) * (j - 1) / 49.0;
      worst_mub = std::max(worst_mub, std::abs(coincidence_closed_form(d, 1.0, pur) - (pur + 1.0)));
    }
  }
  return {worst_pure <= 1e-12 && worst_mub <= 1e-12,
          "pure state: max |C - (kappa+1)| = " + num(worst_pure) + "; kappa = 1: max |C - (purity+1)| = " +
              num(worst_mub)};
}

Outcome criterion4() {
  VerifyOptions options;
  options.workers = workers();
  options.renyi_alphas = {2.0, 3.0, 5.0};
  options.tsallis_alphas = {0.5, 1.5, 2.0};
  std::size_t violations = 0;
  std::size_t checks = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int d = 2; d <= 6; ++d) {
    const VerificationResult r = verify_bounds(build_mums(d, max_t(d)), SamplerSpec{10000, std::nullopt, 4000u + d},
                                               options);
    violations += r.violations;
    checks += r.reports.size();
    for (const auto& s : r.summaries) min_gap = std::min(min_gap, s.min_gap);
  }
  return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) +
                               " bound checks (5 x 10^4 states); min gap = " + num(min_gap)};
}

Outcome criterion5() {
  double worst_mixed = 0.0;
  for (int d = 2; d <= 6; ++d) {
    for (double f : kTFractions) {
      for (const auto& r : evaluate_state_bounds(build_mums(d, f * max_t(d)), DensityMatrix::maximally_mixed(d))) {
        const bool tight = r.bound_name == "shannon_state_dependent" || r.bound_name == "ht_state_dependent" ||
                           r.bound_name == "min_entropy_state_dependent" || r.bound_name == "tsallis_state_dependent";
        if (tight) worst_mixed = std::max(worst_mixed, std::abs(r.gap));
      }
    }
  }
  // Eigenstate of the last measurement: one deterministic and two uniform distributions.
  const MumSet qubit = build_mums(2, max_t(2));
  const DensityMatrix eigenstate{qubit.elements()[2][1]};
  double ht_gap = std::numeric_limits<double>::infinity();
  double tsallis_gap = std::numeric_limits<double>::infinity();
  double ht_bound = 0.0;
  double tsallis_value = 0.0;
  for (const auto& r : evaluate_state_bounds(qubit, eigenstate)) {
    if (r.bound_name == "ht_state_independent") {
      ht_gap = r.gap;
      ht_bound = r.bound;
    }
    if (r.bound_name == "tsallis_state_dependent" && r.alpha == 2.0) {
      tsallis_gap = r.gap;
      tsallis_value = r.bound;
    }
  }
  const bool ok = worst_mixed <= 1e-9 && std::abs(ht_gap) <= 1e-10 && std::abs(ht_bound - 2.0 / 3.0) <= 1e-10 &&
                  std::abs(tsallis_gap) <= 1e-10 && std::abs(tsallis_value - 1.0 / 3.0) <= 1e-10;
  return {ok, "I/d max |gap| = " + num(worst_mixed) + "; eigenstate HT average bound " + num(ht_bound) + " gap " +
                  num(ht_gap) + "; Tsallis-2 bound " + num(tsallis_value) + " gap " + num(tsallis_gap)};
}

std::vector<std::pair<int, double>> kappa_pairs() {
  // 10 dimensions x 100 kappa values in (1/d, 1].
  std::vector<std::pair<int, double>> pairs;
  for (int d = 2; d <= 11; ++d)
    for (int j = 1; j <= 100; ++j) pairs.emplace_back(d, 1.0 / d + (1.0 - 1.0 / d) * j / 100.0);
  return pairs;
}

Outcome criterion6() {
  double worst_ht = std::numeric_limits<double>::infinity();
  double worst_cor = std::numeric_limits<double>::infinity();
  const auto pairs = kappa_pairs();
  for (const auto& [d, kappa] : pairs) {
    for (double pur : {1.0 / d, 0.5 * (1.0 + 1.0 / d), 1.0}) {
      const double c = coincidence_closed_form(d, kappa, pur);
      worst_ht = std::min(worst_ht, ht_bound_total(d, c) / (d + 1.0) - std::log2((d + 1.0) / c));
    }
    worst_cor = std::min(worst_cor, corollary_bound_avg(d, kappa) - shannon_bound_state_independent(d, kappa));
  }
  return {worst_ht >= -1e-12 && worst_cor >= -1e-12,
          std::to_string(pairs.size()) + " (d, kappa) pairs; min HT-average minus Shannon = " + num(worst_ht) +
              "; min state-independent HT minus Shannon = " + num(worst_cor)};
}

// Checked exactly as stated: each state-independent bound must be
// non-decreasing in kappa. Every one of these bounds is a decreasing function
// of kappa, so this criterion fails; the failing pairs are printed.
Outcome criterion7() {
  struct Family {
    const char* name;
    std::function<double(int, double)> f;
  };
  const std::vector<Family> families{
      {"shannon_state_independent", [](int d, double k) { return shannon_bound_state_independent(d, k); }},
      {"ht_state_independent", [](int d, double k) { return corollary_bound_avg(d, k); }},
      {"renyi_state_independent(2)", [](int d, double k) { return renyi_bound(d, k, 1.0, 2.0); }},
      {"renyi_state_independent(inf)",
       [](int d, double k) { return renyi_bound(d, k, 1.0, std::numeric_limits<double>::infinity()); }},
      {"min_entropy_state_independent", [](int d, double k) { return min_entropy_bound(d, k, 1.0); }},
      {"tsallis_state_independent(2)", [](int d, double k) { return tsallis_bound(d, k, 1.0, 2.0); }},
  };
  std::size_t steps = 0;
  std::size_t decreasing = 0;
  std::ostringstream example;
  for (int d = 2; d <= 6; ++d) {
    for (const auto& fam : families) {
      double prev_k = 1.0 / d + (1.0 - 1.0 / d) / 100.0;
      double prev = fam.f(d, prev_k);
      for (int j = 2; j <= 100; ++j) {
        const double k = 1.0 / d + (1.0 - 1.0 / d) * j / 100.0;
        const double v = fam.f(d, k);
        ++steps;
        if (v < prev) {
          if (decreasing == 0)
            example << fam.name << " d=" << d << ": " << num(prev) << " at kappa=" << num(prev_k) << " > " << num(v)
                    << " at kappa=" << num(k);
          ++decreasing;
        }
        prev = v;
        prev_k = k;
      }
    }
  }
  std::string detail = std::to_string(decreasing) + " of " + std::to_string(steps) + " grid steps decrease";
  if (decreasing > 0)
    detail += " (first: " + example.str() + "); each of these bounds decreases as kappa grows";
  return {decreasing == 0, detail};
}

Outcome criterion8() {
  const SicSet tetra = tetrahedron_sic();
  const ValidationReport tetra_report = validate_sic(tetra, 1e-10);

  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  double formula_dev = 0.0;
  double brute_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Vector psi(2);
    psi << std::complex<double>(g(rng), g(rng)), std::complex<double>(g(rng), g(rng));
    const DensityMatrix rho = DensityMatrix::pure(psi.normalized());
    formula_dev = std::max(formula_dev, std::abs(sic_coincidence_closed_form(2, 0.25, purity(rho)) - 1.0 / 3.0));
    double sum = 0.0;
    for (const auto& p : tetra.elements()) {
      const double prob = (p.matrix() * rho.matrix()).trace().real();
      sum += prob * prob;
    }
    brute_dev = std::max(brute_dev, std::abs(sum - 1.0 / 3.0));
  }

  const double log2_3 = std::log2(3.0);
  const double bound = sic_ht_bound_for_state(2, 0.25, 1.0);
  VerifyOptions options;
  options.workers = workers();
  const VerificationResult sweep = verify_bounds(tetra, SamplerSpec{10000, std::nullopt, 8}, options);
  std::size_t below_log2_3 = 0;
  for (const auto& r : sweep.reports)
    if (r.bound_name == "sic_ht_state_independent" && r.achieved - log2_3 < kViolationTolerance) ++below_log2_3;

  std::string depolarized_failures;
  for (int k = 1; k <= 10; ++k) {
    const double x = k / 10.0;
    if (!validate_sic(depolarized_sic(tetra, x), 1e-10).passed()) depolarized_failures += " x=" + num(x);
  }

  const bool ok = tetra_report.passed() && formula_dev <= 1e-12 && brute_dev <= 1e-12 &&
                  std::abs(bound - log2_3) <= 1e-12 && sweep.violations == 0 && below_log2_3 == 0 &&
                  depolarized_failures.empty();
  return {ok, "tetrahedron deviation " + num(tetra_report.max_deviation()) + "; |C - 1/3| formula " +
                  num(formula_dev) + ", brute force " + num(brute_dev) + "; bound " + num(bound) + " bits, " +
                  std::to_string(sweep.violations + below_log2_3) + " violations over 10^4 states; depolarized x grid " +
                  (depolarized_failures.empty() ? "valid" : "invalid at" + depolarized_failures)};
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  std::exponential_distribution<double> e;
  std::uniform_int_distribution<int> len(2, 16);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_limit = 0.0;
  std::size_t order_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> v(static_cast<std::size_t>(len(rng)));
    double total = 0.0;
    for (double& x : v) {
      x = u(rng) < 0.1 ? 0.0 : e(rng);
      total += x;
    }
    if (total == 0.0) v[0] = total = 1.0;
    for (double& x : v) x /= total;
    const ProbVector p(v);

    double h = 0.0;
    for (double x : v)
      if (x > 0.0) h -= x * std::log(x);
    for (double a : {1.0 - 1e-6, 1.0 + 1e-6}) {
      worst_limit = std::max(worst_limit, std::abs(renyi(p, a) - h));
      worst_limit = std::max(worst_limit, std::abs(tsallis(p, a) - h));
    }
    const double r_inf = min_entropy(p);
    const double r_2 = renyi(p, 2.0);
    const double shannon_nats = shannon(p, LogBase::E);
    if (!(r_inf <= r_2 + 1e-12 && r_2 <= shannon_nats + 1e-12)) ++order_failures;
  }
  return {worst_limit <= 1e-5 && order_failures == 0,
          "max |alpha->1 limit - Shannon| = " + num(worst_limit) + " (tol 1e-5); ordering failures " +
              std::to_string(order_failures) + " of 10^4"};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "coincidence closed form matches brute force", criterion1},
    {2, "MUM identity suite and qubit MUB degeneration", criterion2},
    {3, "closed-form degenerations at purity 1 and kappa 1", criterion3},
    {4, "no bound violations on 10^4 states per d = 2..6", criterion4},
    {5, "tightness witnesses", criterion5},
    {6, "HT bounds dominate the Shannon bounds", criterion6},
    {7, "state-independent bounds non-decreasing in kappa", criterion7},
    {8, "SIC suite", criterion8},
    {9, "entropy functional limits and ordering", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 9) {
    std::fprintf(stderr, "criterion must be in 1..9\n");
    return 2;
  }

  int failed = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s: %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
