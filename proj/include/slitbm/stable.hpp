#pragma once

#include <span>

namespace slitbm {

/// Parameters of the relativistic Cauchy semigroup (stability index fixed
/// to 1; that is the only case with a closed-form density here).
struct RelParams {
    int d = 1;      // dimension, 1..3
    double m = 1.0; // relativistic mass parameter
    double t = 1.0; // time
};

void validate(const RelParams& p);

/// Density theta_t(u) of the 1/2-stable subordinator:
/// t/sqrt(4 pi) u^{-3/2} e^{-t^2/4u}.
double subordinator_density(double t, double u);

/// Exponentially tilted subordinator density e^{mt} theta_t(u) e^{-m^2 u}.
double tilted_subordinator_density(double m, double t, double u);

/// Transition density of the d-dimensional relativistic Cauchy process:
/// 2 (m/2pi)^{(d+1)/2} t e^{mt} K_{(d+1)/2}(m sqrt(|x|^2+t^2))
///   / (|x|^2+t^2)^{(d+1)/4}.
double rel_cauchy_density(const RelParams& p, std::span<const double> x);

/// m-potential of the relativistic alpha-stable process at radius r = |x|:
/// 2^{1-(d+alpha)/2} / (Gamma(alpha/2) pi^{d/2})
///   * m^{(d-alpha)/(2 alpha)} K_{(d-alpha)/2}(m^{1/alpha} r) / r^{(d-alpha)/2}.
double rel_potential(int d, double alpha, double m, double r);

} // namespace slitbm
