#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mumbound/entropy.hpp"
#include "mumbound/mum.hpp"
#include "mumbound/operator.hpp"
#include "mumbound/sic.hpp"

namespace mumbound {

/// A bound counts as violated when achieved - bound < kViolationTolerance.
/// This sits one order of magnitude above the 1e-10 noise floor of the
/// eigensolver and the probability tables.
inline constexpr double kViolationTolerance = -1e-9;

inline constexpr double kNoAlpha = std::numeric_limits<double>::quiet_NaN();

/// One lower bound compared against the achieved entropy on one state.
struct BoundReport {
  std::string bound_name;
  LogBase base = LogBase::Two;
  int d = 0;
  double parameter = 0.0;  // kappa for MUM sets, a for SIC sets
  double alpha = kNoAlpha;
  double purity = 0.0;
  double bound = 0.0;
  double achieved = 0.0;
  double gap = 0.0;
  bool violated = false;
};

BoundReport make_report(std::string name, LogBase base, int d, double parameter, double alpha, double purity,
                        double bound, double achieved);

struct BoundSummary {
  std::string bound_name;
  LogBase base = LogBase::Two;
  double alpha = kNoAlpha;
  std::size_t count = 0;
  double min_gap = 0.0;
  double mean_gap = 0.0;
  std::size_t violations = 0;
};

/// Random states to test: `count` states, each of rank `rank`, or of rank
/// 1 + (index mod d) when rank is unset. State i uses its own generator
/// seeded from (seed, i).
struct SamplerSpec {
  std::size_t count = 0;
  std::optional<int> rank;
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  unsigned workers = 1;
  std::vector<double> renyi_alphas{2.0, 3.0, 5.0, std::numeric_limits<double>::infinity()};
  std::vector<double> tsallis_alphas{0.5, 1.0, 1.5, 2.0};
};

struct VerificationResult {
  std::size_t states = 0;
  std::size_t violations = 0;
  std::vector<BoundReport> reports;  // ordered by state index, then bound
  std::vector<BoundSummary> summaries;
};

DensityMatrix sample_state(int d, const SamplerSpec& spec, std::size_t index);

/// Every Shannon, Harremoes-Topsoe, Renyi, min-entropy and Tsallis bound,
/// state-dependent and state-independent, against the averaged entropies of
/// the set's distributions on rho.
std::vector<BoundReport> evaluate_state_bounds(const MumSet& set, const DensityMatrix& rho,
                                               const VerifyOptions& options = {});

/// State-dependent and state-independent single-measurement HT bounds.
std::vector<BoundReport> evaluate_state_bounds(const SicSet& set, const DensityMatrix& rho);

VerificationResult verify_bounds(const MumSet& set, const SamplerSpec& spec, const VerifyOptions& options = {});
VerificationResult verify_bounds(const SicSet& set, const SamplerSpec& spec, const VerifyOptions& options = {});

/// Aggregates per (bound_name, alpha) in first-appearance order.
std::vector<BoundSummary> summarize(const std::vector<BoundReport>& reports);

/// Header: bound_name,base,d,kappa_or_a,alpha,purity,bound,achieved,gap,violated.
/// Doubles are written with 17 significant digits so they parse back exactly.
void write_csv(std::ostream& out, const std::vector<BoundReport>& reports);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const BoundSummary& summary);
nlohmann::json to_json(const VerificationResult& result);

}  // namespace mumbound
