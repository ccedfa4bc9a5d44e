#include "slitbm/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slitbm/special_functions.hpp"

namespace slitbm {

using std::numbers::pi;

void validate(const RelParams& p) {
    if (p.d < 1 || p.d > 3) throw std::domain_error("RelParams: d must be 1, 2 or 3");
    if (!(p.m > 0.0) || !std::isfinite(p.m))
        throw std::domain_error("RelParams: m must be finite and > 0");
    if (!(p.t > 0.0) || !std::isfinite(p.t))
        throw std::domain_error("RelParams: t must be finite and > 0");
}

double subordinator_density(double t, double u) {
    if (!(t > 0.0) || !(u > 0.0))
        throw std::domain_error("subordinator_density: t, u must be > 0");
    return t / std::sqrt(4.0 * pi) * std::pow(u, -1.5) * std::exp(-t * t / (4.0 * u));
}

double tilted_subordinator_density(double m, double t, double u) {
    if (!(m > 0.0)) throw std::domain_error("tilted_subordinator_density: m must be > 0");
    return std::exp(m * t - m * m * u) * subordinator_density(t, u);
}

double rel_cauchy_density(const RelParams& p, std::span<const double> x) {
    validate(p);
    if (static_cast<int>(x.size()) != p.d)
        throw std::domain_error("rel_cauchy_density: x has wrong dimension");

    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    const double rho = std::sqrt(r2 + p.t * p.t);
    const double index = 0.5 * (p.d + 1.0);
    return 2.0 * std::pow(p.m / (2.0 * pi), index) * p.t * std::exp(p.m * p.t) *
           bessel_k(index, p.m * rho) / std::pow(rho, index);
}

double rel_potential(int d, double alpha, double m, double r) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("rel_potential: alpha must lie in (0,2)");
    if (d < 1) throw std::domain_error("rel_potential: d must be >= 1");
    if (static_cast<double>(d) < alpha)
        throw std::domain_error("rel_potential: requires d >= alpha");
    if (!(m > 0.0)) throw std::domain_error("rel_potential: m must be > 0");
    if (!(r > 0.0)) throw std::domain_error("rel_potential: r must be > 0");

    const double index = 0.5 * (d - alpha);
    const double coeff = std::pow(2.0, 1.0 - 0.5 * (d + alpha)) /
                         (std::tgamma(0.5 * alpha) * std::pow(pi, 0.5 * d));
    return coeff * std::pow(m, index / alpha) *
           bessel_k(index, std::pow(m, 1.0 / alpha) * r) / std::pow(r, index);
}

} // namespace slitbm
