#pragma once

#include <cstdint>
#include <utility>

#include "slitbm/random.hpp"
#include "slitbm/statistics.hpp"

namespace slitbm {

// Everything here lives under VAR2T with the drifted horizontal coordinate
// B_t - 2 mu t, matching the exponential (hyperbolic vertical) coordinate
// X_t = y e^{B_t - 2 mu t}.

/// Joint exit law of the drifted process from (y,0):
/// h(y,z) g_{y-z}(s) e^{mu(y-z)} e^{-mu^2 s}; its s-marginal is h(y,z) for
/// every drift.
double drift_joint_density(double mu, double y, double s, double z);

/// Level-crossing time density of the drifted coordinate:
/// g_a(s) e^{mu a} e^{-mu^2 s}; a probability density in s.
double drift_level_density(double mu, double a, double s);

/// Joint exit law of the hyperbolic vertical coordinate from y through the
/// barrier a (0 < z < a < y):
/// z^{-1} h(ln(y/a), ln(z/a)) g^{2mu}_{ln(y/z)}(s).
double hyp_exit_joint(double mu, double a, double y, double s, double z);

/// Exit-place density of the hyperbolic coordinate: drift-free,
/// (1/(pi z)) (ln(y/a)/ln(a/z))^{1/2} / ln(y/z).
double hyp_exit_place(double a, double y, double z);

/// E A_y(t) for A_y(t) = y^2 int_0^t e^{2(B_s-2mu s)} ds:
/// y^2 (1-e^{4(1-mu)t})/(4(mu-1)). Pass t = infinity for the stationary
/// value y^2/(4(mu-1)); requires mu > 1 there.
double exp_functional_mean(double mu, double y, double t);

struct ExpFunctionalSample {
    double a = 0.0; // A_y truncated at the policy horizon
    double x = 0.0; // X at that horizon
};

/// Policy horizon T = ln(tail_eps) / (4(1-mu)): the truncated mean tail is
/// tail_eps of the stationary mean.
double exp_functional_horizon(double mu, double tail_eps);

/// Euler draw of (A_y(T), X_T) on the exponent scale.
ExpFunctionalSample sample_exp_functional(double mu, double y, double step,
                                          double tail_eps, Rng& rng);

/// Dependence probe between A(inf)-truncation and the hyperbolic exit place
/// X_{tau}. Reports statistics only; asserts nothing.
struct DependenceReport {
    long n = 0;
    double pearson = 0.0;
    std::pair<double, double> pearson_ci{0.0, 0.0};
    double spearman = 0.0;
    std::pair<double, double> spearman_ci{0.0, 0.0};
    double chi2 = 0.0; // 4x4 quartile contingency, 9 df under independence
    long censored = 0; // paths whose exit was not seen before the horizon
    double mu = 0.0;
    double y = 0.0;
    std::uint64_t seed = 0;
};

/// Computes the report statistics for given paired observations (used both
/// by the probe and by its synthetic calibration runs).
DependenceReport dependence_report(const std::vector<double>& a,
                                   const std::vector<double>& x,
                                   std::uint64_t seed);

/// Simulates the paired observations and reports. Requires mu > 1 and y > 1
/// (the exit problem starts at (ln y, 0), which must lie inside the slit
/// domain).
DependenceReport conjecture_probe(double mu, double y, long paths,
                                  std::uint64_t seed);

} // namespace slitbm
