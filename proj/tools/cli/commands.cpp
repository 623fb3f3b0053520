#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mumbound/bounds.hpp"
#include "mumbound/error.hpp"
#include "mumbound/io.hpp"
#include "mumbound/mum.hpp"
#include "mumbound/sic.hpp"
#include "mumbound/verify.hpp"

namespace mumbound::cli {

using nlohmann::json;

namespace {

constexpr double kDefaultBuildTolerance = 1e-9;

std::string fmt(double x) {
  if (std::isnan(x)) return "-";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Raised for parameter combinations the command rejects as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a constructed or imported set fails its identities.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_d(const RunConfig& c) {
  if (c.d < 2) throw UsageError("--d must be >= 2, got " + std::to_string(c.d));
}

void require_format(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json, got '" + c.format + "'");
}

void split_alphas(const RunConfig& c, VerifyOptions& options) {
  if (c.alphas.empty()) return;
  options.renyi_alphas.clear();
  options.tsallis_alphas.clear();
  for (double a : c.alphas) {
    if (!(a > 0.0)) throw UsageError("--alpha values must be > 0, got " + fmt(a));
    if (a >= 2.0) options.renyi_alphas.push_back(a);
    if (a <= 2.0) options.tsallis_alphas.push_back(a);
  }
}

/// t from the config, checked against t_max. t > t_max is a validation failure.
double resolve_t(const RunConfig& c, double t_max) {
  if (!c.t) return t_max;
  const double t = *c.t;
  if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("--t must be a positive number or 'max', got " + fmt(t));
  if (t > t_max) throw ValidationFailure("t exceeds t_max: t = " + fmt(t) + " > t_max = " + fmt(t_max));
  return t;
}

void emit(const RunConfig& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty()) return;
  if (c.out == "-") {
    out << payload;
    return;
  }
  write_text_file(c.out, payload);
}

// stdout carries the JSON payload when --out is "-"; the summary then goes to stderr.
std::ostream& summary_stream(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return c.out == "-" ? err : out;
}

int cmd_construct(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_d(c);
  const OperatorBasis basis = gellmann_basis(c.d);
  const double t_max = max_t(build_f_operators(basis));
  const double t = resolve_t(c, t_max);
  const MumSet set = build_mums(basis, t);
  const ValidationReport report = validate_mums(set, c.tol.value_or(kDefaultBuildTolerance));

  std::ostream& s = summary_stream(c, out, err);
  s << "d = " << set.d() << '\n'
    << "t = " << fmt(set.t()) << '\n'
    << "t_max = " << fmt(t_max) << '\n'
    << "kappa = " << fmt(set.kappa()) << '\n'
    << "basis = " << set.basis_label() << '\n'
    << "max validation deviation = " << fmt(report.max_deviation()) << '\n'
    << "validation = " << (report.passed() ? "PASS" : "FAIL") << '\n';
  if (!report.passed()) s << report.summary();
  emit(c, to_json(set).dump(2) + "\n", out);
  return report.passed() ? kExitOk : kExitValidation;
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.in.empty()) throw UsageError("validate requires --in <file>");
  const json j = read_json_file(c.in);
  const double tol = c.tol.value_or(kImportTolerance);
  ValidationReport report;
  if (j.contains("kappa")) {
    const MumSet set = mum_set_from_json(j, false);
    report = validate_mums(set, tol);
    out << "MUM set: d = " << set.d() << ", t = " << fmt(set.t()) << ", kappa = " << fmt(set.kappa()) << '\n';
  } else if (j.contains("a")) {
    const SicSet set = sic_set_from_json(j, false);
    report = validate_sic(set, tol);
    out << "SIC set: d = " << set.d() << ", a = " << fmt(set.a()) << '\n';
  } else {
    throw ValidationFailure("input is neither a MUM set (kappa) nor a SIC set (a)");
  }
  out << report.summary();
  return report.passed() ? kExitOk : kExitValidation;
}

struct BoundRow {
  std::string name;
  LogBase base;
  double alpha;
  double value;
};

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream&) {
  require_d(c);
  require_format(c);
  double kappa = 0.0;
  if (c.kappa) {
    kappa = *c.kappa;
    if (!(kappa > 1.0 / c.d && kappa <= 1.0)) {
      throw UsageError("--kappa = " + fmt(kappa) + " outside (1/d, 1] = (" + fmt(1.0 / c.d) + ", 1]");
    }
  } else {
    kappa = kappa_from_t(c.d, resolve_t(c, max_t(c.d)));
  }
  if (!(c.purity >= 1.0 / c.d - 1e-12 && c.purity <= 1.0 + 1e-12)) {
    throw UsageError("--purity = " + fmt(c.purity) + " outside [1/d, 1] = [" + fmt(1.0 / c.d) + ", 1]");
  }
  VerifyOptions grid;
  split_alphas(c, grid);

  const int d = c.d;
  const double pur = c.purity;
  const double coincidence = coincidence_closed_form(d, kappa, pur);
  std::vector<BoundRow> rows{
      {"shannon_state_dependent", LogBase::Two, kNoAlpha, shannon_bound_state_dependent(d, kappa, pur)},
      {"shannon_state_independent", LogBase::Two, kNoAlpha, shannon_bound_state_independent(d, kappa)},
      {"ht_state_dependent", LogBase::Two, kNoAlpha, ht_bound_total(d, coincidence) / (d + 1.0)},
      {"ht_state_independent", LogBase::Two, kNoAlpha, corollary_bound_avg(d, kappa)},
  };
  for (double a : grid.renyi_alphas) {
    rows.push_back({"renyi_state_dependent", LogBase::E, a, renyi_bound(d, kappa, pur, a)});
    rows.push_back({"renyi_state_independent", LogBase::E, a, renyi_bound(d, kappa, 1.0, a)});
  }
  rows.push_back({"min_entropy_state_dependent", LogBase::E, kNoAlpha, min_entropy_bound(d, kappa, pur)});
  rows.push_back({"min_entropy_state_independent", LogBase::E, kNoAlpha, min_entropy_bound(d, kappa, 1.0)});
  for (double a : grid.tsallis_alphas) {
    rows.push_back({"tsallis_state_dependent", LogBase::E, a, tsallis_bound(d, kappa, pur, a)});
    rows.push_back({"tsallis_state_independent", LogBase::E, a, tsallis_bound(d, kappa, 1.0, a)});
  }

  out << "d = " << d << ", kappa = " << fmt(kappa) << ", purity = " << fmt(pur)
      << ", coincidence = " << fmt(coincidence) << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-32s %-5s %-6s %s\n", "bound", "base", "alpha", "value");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-32s %-5s %-6s %s\n", r.name.c_str(), std::string(to_string(r.base)).c_str(),
                  fmt(r.alpha).c_str(), fmt(r.value).c_str());
    out << line;
  }

  if (!c.out.empty()) {
    std::ostringstream payload;
    if (c.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"bound_name", r.name},
                       {"base", to_string(r.base)},
                       {"d", d},
                       {"kappa", kappa},
                       {"alpha", std::isnan(r.alpha) ? json(nullptr) : (std::isinf(r.alpha) ? json("inf") : json(r.alpha))},
                       {"purity", pur},
                       {"bound", r.value}});
      }
      payload << arr.dump(2) << '\n';
    } else {
      payload << "bound_name,base,d,kappa,alpha,purity,bound\n";
      char buf[64];
      auto full = [&](double v) {
        if (std::isnan(v)) return std::string();
        if (std::isinf(v)) return std::string("inf");
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
      };
      for (const auto& r : rows) {
        payload << r.name << ',' << to_string(r.base) << ',' << d << ',' << full(kappa) << ',' << full(r.alpha) << ','
                << full(pur) << ',' << full(r.value) << '\n';
      }
    }
    emit(c, payload.str(), out);
  }
  return kExitOk;
}

void print_summary(const VerificationResult& result, std::ostream& s) {
  s << "states = " << result.states << '\n';
  char line[200];
  std::snprintf(line, sizeof line, "%-32s %-5s %-6s %-20s %-20s %s\n", "bound", "base", "alpha", "min_gap", "mean_gap",
                "violations");
  s << line;
  for (const auto& b : result.summaries) {
    std::snprintf(line, sizeof line, "%-32s %-5s %-6s %-20s %-20s %zu\n", b.bound_name.c_str(),
                  std::string(to_string(b.base)).c_str(), fmt(b.alpha).c_str(), fmt(b.min_gap).c_str(),
                  fmt(b.mean_gap).c_str(), b.violations);
    s << line;
  }
  s << "violations = " << result.violations << '\n';
}

std::string serialize(const RunConfig& c, const VerificationResult& result) {
  std::ostringstream payload;
  if (c.format == "json")
    payload << to_json(result).dump(2) << '\n';
  else
    write_csv(payload, result.reports);
  return payload.str();
}

SamplerSpec sampler(const RunConfig& c) {
  if (c.states == 0) throw UsageError("--states must be positive");
  return SamplerSpec{c.states, c.rank, c.seed};
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c);
  VerifyOptions options;
  options.workers = c.workers;
  split_alphas(c, options);
  const SamplerSpec spec = sampler(c);

  VerificationResult result;
  std::ostream& s = summary_stream(c, out, err);
  if (!c.in.empty()) {
    const json j = read_json_file(c.in);
    if (j.contains("kappa")) {
      const MumSet set = mum_set_from_json(j);
      s << "set = MUM (imported), d = " << set.d() << ", kappa = " << fmt(set.kappa()) << '\n';
      result = verify_bounds(set, spec, options);
    } else {
      const SicSet set = sic_set_from_json(j);
      s << "set = SIC (imported), d = " << set.d() << ", a = " << fmt(set.a()) << '\n';
      result = verify_bounds(set, spec, options);
    }
  } else {
    require_d(c);
    const OperatorBasis basis = gellmann_basis(c.d);
    const double t = resolve_t(c, max_t(build_f_operators(basis)));
    const MumSet set = build_mums(basis, t);
    s << "set = MUM, d = " << set.d() << ", t = " << fmt(set.t()) << ", kappa = " << fmt(set.kappa()) << '\n';
    result = verify_bounds(set, spec, options);
  }
  print_summary(result, s);
  emit(c, serialize(c, result), out);
  return result.violations == 0 ? kExitOk : kExitValidation;
}

int cmd_sic(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SicSet fiducial = tetrahedron_sic();
  if (!c.in.empty()) {
    fiducial = sic_set_from_json(read_json_file(c.in));
  } else if (c.d != 2) {
    throw UsageError("only the qubit (d = 2) SIC-POVM is built in; pass a rank-one fiducial set with --in");
  }
  if (!(c.x > 0.0 && c.x <= 1.0)) throw UsageError("--x must be in (0, 1], got " + fmt(c.x));
  const SicSet set = depolarized_sic(fiducial, c.x);
  const ValidationReport report = validate_sic(set, c.tol.value_or(kDefaultBuildTolerance));
  const int d = set.d();
  if (!(c.purity >= 1.0 / d - 1e-12 && c.purity <= 1.0 + 1e-12)) {
    throw UsageError("--purity = " + fmt(c.purity) + " outside [1/d, 1]");
  }

  std::ostream& s = summary_stream(c, out, err);
  const double coincidence = sic_coincidence_closed_form(d, set.a(), c.purity);
  s << "d = " << d << '\n'
    << "x = " << fmt(c.x) << '\n'
    << "a = " << fmt(set.a()) << '\n'
    << "max validation deviation = " << fmt(report.max_deviation()) << '\n'
    << "validation = " << (report.passed() ? "PASS" : "FAIL") << '\n'
    << "purity = " << fmt(c.purity) << '\n'
    << "coincidence = " << fmt(coincidence) << '\n'
    << "sic_ht_state_dependent (bits) = " << fmt(sic_ht_bound(d, coincidence)) << '\n'
    << "sic_ht_state_independent (bits) = " << fmt(sic_ht_bound_for_state(d, set.a(), 1.0)) << '\n';
  if (!report.passed()) {
    s << report.summary();
    return kExitValidation;
  }
  emit(c, to_json(set).dump(2) + "\n", out);
  const VerificationResult result = verify_bounds(set, sampler(c));
  print_summary(result, s);
  return result.violations == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "construct") return cmd_construct(c, out, err);
    if (c.command == "validate") return cmd_validate(c, out, err);
    if (c.command == "bounds") return cmd_bounds(c, out, err);
    if (c.command == "sweep") return cmd_sweep(c, out, err);
    if (c.command == "sic") return cmd_sic(c, out, err);
    err << "error: unknown command '" << c.command << "'\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    // Imported sets failing their identities are validation failures; other
    // precondition violations are parameter errors.
    err << "error: " << e.what() << '\n';
    const std::string what = e.what();
    return what.find("failed validation") != std::string::npos ? kExitValidation : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitValidation;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutually unbiased measurements: construction, statistics and entropic uncertainty bounds", "mumbound"};
  app.require_subcommand(1, 1);

  struct Flags {
    int d = 0;
    std::string t, kappa, alpha_list, tol;
    double x = 0, purity = 0;
    std::size_t states = 0;
    int rank = 0;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string in, out, format, config;
  } f;
  struct Handles {
    CLI::Option *d, *t, *x, *kappa, *purity, *alpha, *states, *rank, *seed, *workers, *in, *out, *format, *tol, *config;
  };
  std::vector<std::pair<CLI::App*, Handles>> subs;

  const std::pair<const char*, const char*> commands[] = {
      {"construct", "Build and validate the d+1 MUM set; --out writes its JSON"},
      {"validate", "Validate a MUM or SIC set JSON file (--in)"},
      {"bounds", "Evaluate every entropic lower bound for (d, kappa, purity)"},
      {"sweep", "Check every bound on random states and report gaps"},
      {"sic", "Build a depolarized qubit SIC (or import a fiducial) and report its bounds"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    Handles h{};
    h.d = sub->add_option("--d", f.d, "Hilbert space dimension (>= 2)");
    h.t = sub->add_option("--t", f.t, "MUM parameter t, or 'max'");
    h.x = sub->add_option("--x", f.x, "SIC depolarizing weight in (0, 1]");
    h.kappa = sub->add_option("--kappa", f.kappa, "MUM parameter kappa in (1/d, 1]");
    h.purity = sub->add_option("--purity", f.purity, "State purity Tr(rho^2) in [1/d, 1]");
    h.alpha = sub->add_option("--alpha", f.alpha_list, "Comma-separated alpha grid (may include inf)");
    h.states = sub->add_option("--states", f.states, "Number of random states");
    h.rank = sub->add_option("--rank", f.rank, "Rank of sampled states (default: cycle 1..d)");
    h.seed = sub->add_option("--seed", f.seed, "Sampler seed (MUM_SEED overrides)");
    h.workers = sub->add_option("--workers", f.workers, "Worker threads (output is independent of this)");
    h.in = sub->add_option("--in", f.in, "Input JSON file");
    h.out = sub->add_option("--out", f.out, "Output file ('-' for stdout)");
    h.format = sub->add_option("--format", f.format, "Output format: csv or json");
    h.tol = sub->add_option("--tol", f.tol, "Validation tolerance override");
    h.config = sub->add_option("--config", f.config, "JSON config file (flags take precedence)");
    subs.emplace_back(sub, h);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  RunConfig cfg;
  try {
    for (const auto& [sub, h] : subs) {
      if (!sub->parsed()) continue;
      cfg.command = sub->get_name();
      if (h.config->count()) {
        cfg = merge_json(cfg, read_json_file(f.config));
        cfg.command = sub->get_name();
      }
      if (h.d->count()) cfg.d = f.d;
      if (h.t->count()) {
        if (f.t == "max") cfg.t.reset();
        else cfg.t = parse_real(f.t, "--t");
      }
      if (h.x->count()) cfg.x = f.x;
      if (h.kappa->count()) cfg.kappa = parse_real(f.kappa, "--kappa");
      if (h.purity->count()) cfg.purity = f.purity;
      if (h.alpha->count()) {
        cfg.alphas.clear();
        std::stringstream ss(f.alpha_list);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.alphas.push_back(parse_real(item, "--alpha"));
      }
      if (h.states->count()) cfg.states = f.states;
      if (h.rank->count()) cfg.rank = f.rank;
      if (h.seed->count()) cfg.seed = f.seed;
      if (h.workers->count()) cfg.workers = f.workers;
      if (h.in->count()) cfg.in = f.in;
      if (h.out->count()) cfg.out = f.out;
      if (h.format->count()) cfg.format = f.format;
      if (h.tol->count()) cfg.tol = parse_real(f.tol, "--tol");
    }
    if (const char* env = std::getenv("MUM_SEED"); env != nullptr && *env != '\0') {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw ValidationError(std::string("MUM_SEED is not an unsigned integer: '") + env + "'");
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return execute(cfg, out, err);
}

}  // namespace mumbound::cli
