#pragma once

namespace clinsynth::metrics {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

/// Chi-square survival function: P(X >= x) for X ~ chi2(df).
/// Throws std::invalid_argument for x < 0 or df < 1.
double chi2_sf(double x, int df);

/// Two-sided tail probability of Student's t at |t| with df degrees of
/// freedom (df need not be integral; Welch-Satterthwaite gives real df).
double t_two_sided_p(double t, double df);

}  // namespace clinsynth::metrics
