#include "mumbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

#include "mumbound/bounds.hpp"
#include "mumbound/error.hpp"

namespace mumbound {

using nlohmann::json;

namespace {

std::vector<ProbVector> rows_of(const ProbabilityTable& table) {
  std::vector<ProbVector> out;
  out.reserve(table.num_rows());
  for (std::size_t b = 0; b < table.num_rows(); ++b) out.emplace_back(table.row(b));
  return out;
}

template <typename F>
double average(const std::vector<ProbVector>& rows, F&& entropy) {
  double s = 0.0;
  for (const auto& p : rows) s += entropy(p);
  return s / static_cast<double>(rows.size());
}

// Rounding can push Tr(rho^2) a hair outside [1/d, 1].
double clamped_purity(const DensityMatrix& rho) {
  const double d = rho.dim();
  return std::clamp(purity(rho), 1.0 / d, 1.0);
}

void require_spec(const SamplerSpec& spec, int d) {
  if (spec.count == 0) throw ValidationError("sampler: state count must be positive");
  if (spec.rank && (*spec.rank < 1 || *spec.rank > d)) {
    throw ValidationError("sampler: rank must be in [1, " + std::to_string(d) + "], got " + std::to_string(*spec.rank));
  }
}

template <typename Set, typename Eval>
VerificationResult run_sweep(const Set& set, const SamplerSpec& spec, unsigned workers, Eval&& eval) {
  const int d = set.d();
  require_spec(spec, d);
  std::vector<std::vector<BoundReport>> per_state(spec.count);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) per_state[i] = eval(set, sample_state(d, spec, i));
  };

  const std::size_t n_workers = std::clamp<std::size_t>(workers, 1, spec.count);
  if (n_workers == 1) {
    work(0, spec.count);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_workers);
    const std::size_t chunk = (spec.count + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(spec.count, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  VerificationResult result;
  result.states = spec.count;
  for (auto& rows : per_state) {
    for (auto& r : rows) {
      if (r.violated) ++result.violations;
      result.reports.push_back(std::move(r));
    }
  }
  result.summaries = summarize(result.reports);
  return result;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json alpha_json(double alpha) {
  if (std::isnan(alpha)) return nullptr;
  if (std::isinf(alpha)) return "inf";
  return alpha;
}

bool same_alpha(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

}  // namespace

BoundReport make_report(std::string name, LogBase base, int d, double parameter, double alpha, double purity,
                        double bound, double achieved) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.base = base;
  r.d = d;
  r.parameter = parameter;
  r.alpha = alpha;
  r.purity = purity;
  r.bound = bound;
  r.achieved = achieved;
  r.gap = achieved - bound;
  r.violated = !(r.gap >= kViolationTolerance);
  return r;
}

DensityMatrix sample_state(int d, const SamplerSpec& spec, std::size_t index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::mt19937_64 rng(seq);
  const int rank = spec.rank ? *spec.rank : 1 + static_cast<int>(index % static_cast<std::size_t>(d));
  return random_density_matrix(d, rank, rng);
}

std::vector<BoundReport> evaluate_state_bounds(const MumSet& set, const DensityMatrix& rho,
                                               const VerifyOptions& options) {
  const int d = set.d();
  const double kappa = set.kappa();
  const double pur = clamped_purity(rho);
  const double c_state = coincidence_closed_form(d, kappa, pur);
  const auto rows = rows_of(measure(set, rho));

  const double h_bits = average(rows, [](const ProbVector& p) { return shannon(p, LogBase::Two); });
  const double h_nats = average(rows, [](const ProbVector& p) { return shannon(p, LogBase::E); });

  std::vector<BoundReport> out;
  auto add = [&](const char* name, LogBase base, double alpha, double bound, double achieved) {
    out.push_back(make_report(name, base, d, kappa, alpha, pur, bound, achieved));
  };

  add("shannon_state_dependent", LogBase::Two, kNoAlpha, shannon_bound_state_dependent(d, kappa, pur), h_bits);
  add("shannon_state_independent", LogBase::Two, kNoAlpha, shannon_bound_state_independent(d, kappa), h_bits);
  add("ht_state_dependent", LogBase::Two, kNoAlpha, ht_bound_total(d, c_state) / (d + 1.0), h_bits);
  add("ht_state_independent", LogBase::Two, kNoAlpha, corollary_bound_avg(d, kappa), h_bits);

  for (double alpha : options.renyi_alphas) {
    const double achieved = average(rows, [&](const ProbVector& p) { return renyi(p, alpha); });
    add("renyi_state_dependent", LogBase::E, alpha, renyi_bound(d, kappa, pur, alpha), achieved);
    add("renyi_state_independent", LogBase::E, alpha, renyi_bound(d, kappa, 1.0, alpha), achieved);
  }

  const double r_inf = average(rows, [](const ProbVector& p) { return min_entropy(p); });
  add("min_entropy_state_dependent", LogBase::E, kNoAlpha, min_entropy_bound(d, kappa, pur), r_inf);
  add("min_entropy_state_independent", LogBase::E, kNoAlpha, min_entropy_bound(d, kappa, 1.0), r_inf);

  for (double alpha : options.tsallis_alphas) {
    const double achieved =
        alpha == 1.0 ? h_nats : average(rows, [&](const ProbVector& p) { return tsallis(p, alpha); });
    add("tsallis_state_dependent", LogBase::E, alpha, tsallis_bound(d, kappa, pur, alpha), achieved);
    add("tsallis_state_independent", LogBase::E, alpha, tsallis_bound(d, kappa, 1.0, alpha), achieved);
  }
  return out;
}

std::vector<BoundReport> evaluate_state_bounds(const SicSet& set, const DensityMatrix& rho) {
  const int d = set.d();
  const double pur = clamped_purity(rho);
  const ProbabilityTable table = sic_measure(set, rho);
  const double h = shannon(ProbVector(table.row(0)), LogBase::Two);
  return {
      make_report("sic_ht_state_dependent", LogBase::Two, d, set.a(), kNoAlpha, pur,
                  sic_ht_bound_for_state(d, set.a(), pur), h),
      make_report("sic_ht_state_independent", LogBase::Two, d, set.a(), kNoAlpha, pur,
                  sic_ht_bound_for_state(d, set.a(), 1.0), h),
  };
}

VerificationResult verify_bounds(const MumSet& set, const SamplerSpec& spec, const VerifyOptions& options) {
  return run_sweep(set, spec, options.workers,
                   [&](const MumSet& s, const DensityMatrix& rho) { return evaluate_state_bounds(s, rho, options); });
}

VerificationResult verify_bounds(const SicSet& set, const SamplerSpec& spec, const VerifyOptions& options) {
  return run_sweep(set, spec, options.workers,
                   [](const SicSet& s, const DensityMatrix& rho) { return evaluate_state_bounds(s, rho); });
}

std::vector<BoundSummary> summarize(const std::vector<BoundReport>& reports) {
  std::vector<BoundSummary> out;
  std::vector<double> sums;
  for (const auto& r : reports) {
    auto it = std::find_if(out.begin(), out.end(), [&](const BoundSummary& s) {
      return s.bound_name == r.bound_name && same_alpha(s.alpha, r.alpha);
    });
    if (it == out.end()) {
      out.push_back({r.bound_name, r.base, r.alpha, 0, r.gap, 0.0, 0});
      sums.push_back(0.0);
      it = std::prev(out.end());
    }
    const auto k = static_cast<std::size_t>(it - out.begin());
    ++it->count;
    it->min_gap = std::min(it->min_gap, r.gap);
    sums[k] += r.gap;
    if (r.violated) ++it->violations;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].mean_gap = sums[k] / static_cast<double>(out[k].count);
  return out;
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << "bound_name,base,d,kappa_or_a,alpha,purity,bound,achieved,gap,violated\n";
  for (const auto& r : reports) {
    out << r.bound_name << ',' << to_string(r.base) << ',' << r.d << ',' << format_double(r.parameter) << ','
        << format_double(r.alpha) << ',' << format_double(r.purity) << ',' << format_double(r.bound) << ','
        << format_double(r.achieved) << ',' << format_double(r.gap) << ',' << (r.violated ? "true" : "false")
        << '\n';
  }
}

json to_json(const BoundReport& r) {
  return {{"bound_name", r.bound_name}, {"base", to_string(r.base)}, {"d", r.d},
          {"kappa_or_a", r.parameter},  {"alpha", alpha_json(r.alpha)}, {"purity", r.purity},
          {"bound", r.bound},           {"achieved", r.achieved},      {"gap", r.gap},
          {"violated", r.violated}};
}

json to_json(const BoundSummary& s) {
  return {{"bound_name", s.bound_name}, {"base", to_string(s.base)}, {"alpha", alpha_json(s.alpha)},
          {"count", s.count},           {"min_gap", s.min_gap},      {"mean_gap", s.mean_gap},
          {"violations", s.violations}};
}

json to_json(const VerificationResult& result) {
  json summaries = json::array();
  for (const auto& s : result.summaries) summaries.push_back(to_json(s));
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  return {{"violation_tolerance", kViolationTolerance},
          {"tolerance_note",
           "a bound is violated when achieved - bound < violation_tolerance; the tolerance is one order of "
           "magnitude above the 1e-10 numerical noise floor"},
          {"weight_note", "w is the Harremoes-Topsoe fractional weight (q - floor(q))"},
          {"states", result.states},
          {"violations", result.violations},
          {"summary", std::move(summaries)},
          {"reports", std::move(reports)}};
}

}  // namespace mumbound
