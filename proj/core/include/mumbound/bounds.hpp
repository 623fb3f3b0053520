#pragma once

namespace mumbound {

/// Integer split of the Harremoes-Topsoe optimum: h = floor(q), w = q - h,
/// where q = (number of measurements) / C.
struct HtSplit {
  long h = 0;
  double w = 0.0;
};

/// Splits q = numerator / c_upper; throws ValidationError when h falls outside
/// [1, max_h] instead of clamping.
HtSplit ht_split(double numerator, double c_upper, long max_h);

// Entropic lower bounds for a complete set of d+1 mutually unbiased
// measurements with parameter kappa. Shannon and Harremoes-Topsoe bounds are
// in bits, Renyi, min-entropy and Tsallis bounds in nats. Unless noted, a
// bound is on the entropy averaged over the d+1 measurements; passing
// purity = 1 yields the state-independent form.

/// log2((d+1) / C(kappa, rho)).
double shannon_bound_state_dependent(int d, double kappa, double purity);

/// log2((d+1) / (kappa+1)).
double shannon_bound_state_independent(int d, double kappa);

/// Harremoes-Topsoe bound on the *total* Shannon entropy over the d+1
/// measurements, for any upper bound C of the index of coincidence in
/// [(d+1)/d, d+1].
double ht_bound_total(int d, double c_upper);

/// Average-entropy form with C = kappa + 1:
/// log2 h + [1 - (kappa+1) h / (d+1)] (h+1) log2(1 + 1/h), h = floor((d+1)/(kappa+1)).
double corollary_bound_avg(int d, double kappa);

/// (alpha / (2 (1 - alpha))) ln(C / (d+1)) for alpha >= 2; alpha = +inf gives
/// the limit -ln(C / (d+1)) / 2.
double renyi_bound(int d, double kappa, double purity, double alpha);

/// (1 + sqrt(d-1) sqrt(x d - 1)) / d for x >= 1/d.
double g_d(int d, double x);

/// -ln g_d(C / (d+1)).
double min_entropy_bound(int d, double kappa, double purity);

/// ln_alpha((d+1) / C) for 0 < alpha <= 2.
double tsallis_bound(int d, double kappa, double purity, double alpha);

/// Harremoes-Topsoe bound on the Shannon entropy (bits) of a single general
/// SIC measurement, for C in [1/d^2, 1).
double sic_ht_bound(int d, double c_upper);

/// sic_ht_bound at C(a, rho); purity = 1 gives C = (a d^2 + 1) / (d (d+1)).
double sic_ht_bound_for_state(int d, double a, double purity);

}  // namespace mumbound
