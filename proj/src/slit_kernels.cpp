#include "slitbm/slit_kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slitbm {

using std::numbers::pi;

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_slit_target(double z, const char* who) {
    if (!(z < 0.0)) throw std::domain_error(std::string(who) + ": target must be < 0");
}

// |z| - z1 and |z| + z1 without cancellation on either side of the axis.
double norm_minus_first(const Point& z) {
    if (z.x1 <= 0.0) return z.norm() - z.x1;
    return z.x2 * z.x2 / (z.norm() + z.x1);
}

double norm_plus_first(const Point& z) {
    if (z.x1 >= 0.0) return z.norm() + z.x1;
    return z.x2 * z.x2 / (z.norm() - z.x1);
}

QuadSpec scaled_spec() {
    QuadSpec spec;
    spec.abs_tol = 1e-280;
    spec.rel_tol = 1e-12;
    spec.tail_cut = 1e-12;
    return spec;
}

// J(p,q,lambda) = int_lambda^inf e^{-pu} cosh(q sqrt(u^2-lambda^2)) du,
// with the e^{-p lambda} envelope factored out. Requires p > q >= 0 (which
// holds: p^2 - q^2 = (z1-w)^2 + z2^2 > 0 for z in D).
double laplace_kernel_integral(double p, double q, double lambda) {
    auto f = [=](double v) {
        const double theta = std::sqrt(v * (v + 2.0 * lambda));
        return 0.5 * (std::exp(-p * v + q * theta) + std::exp(-p * v - q * theta));
    };
    return integrate_semiinf(f, 0.0, scaled_spec(), p - q);
}

} // namespace

double hit_place_density_axis(double x, double z) {
    if (!(x > 0.0)) throw std::domain_error("hit_place_density_axis: x must be > 0");
    require_slit_target(z, "hit_place_density_axis");
    return std::sqrt(x / -z) / (pi * (x - z));
}

double hit_place_cdf_axis(double x, double z0) {
    if (!(x > 0.0) || !(z0 > 0.0))
        throw std::domain_error("hit_place_cdf_axis: x, z0 must be > 0");
    return 2.0 / pi * std::atan(std::sqrt(z0 / x));
}

double hit_place_density(const Point& w, double z) {
    require_in_slit_domain(w, "hit_place_density");
    require_slit_target(z, "hit_place_density");
    const double r = w.norm();
    const double denom = sq(w.x1 - z) + sq(w.x2);
    return std::sqrt(norm_plus_first(w) / -z) * (r - z) / (kSqrt2 * pi * denom);
}

double hit_place_density_halfplane_route(const Point& w, double z,
                                         const QuadSpec& spec) {
    require_in_slit_domain(w, "hit_place_density_halfplane_route");
    require_slit_target(z, "hit_place_density_halfplane_route");
    if (w.x2 == 0.0)
        throw std::domain_error("hit_place_density_halfplane_route: needs x2 != 0");
    const double y = std::fabs(w.x2);
    auto poisson = [&](double v) { return y / (pi * (sq(w.x1 - v) + y * y)); };
    const double swept = integrate_semiinf(
        [&](double v) { return poisson(v) * hit_place_density_axis(v, z); }, 0.0, spec);
    return swept + poisson(z);
}

double hit_place_density_general(const Point& zstart, double w) {
    return hit_place_density(zstart, w);
}

double hit_place_density_interval(double x, double z) {
    if (!(std::fabs(x) < 1.0))
        throw std::domain_error("hit_place_density_interval: needs |x| < 1");
    if (!(std::fabs(z) > 1.0))
        throw std::domain_error("hit_place_density_interval: needs |z| > 1");
    return std::sqrt((1.0 - x * x) / (z * z - 1.0)) / (pi * std::fabs(x - z));
}

double level_hit_density(double a, double s) {
    if (!(a > 0.0) || !(s > 0.0))
        throw std::domain_error("level_hit_density: a, s must be > 0");
    return a * std::pow(s, -1.5) * std::exp(-a * a / (4.0 * s)) / (2.0 * std::sqrt(pi));
}

double joint_density_axis(double x, double s, double z) {
    return hit_place_density_axis(x, z) * level_hit_density(x - z, s);
}

double coordinate_hit_joint_density(const Point& start, double s, double w,
                                    HitLine which) {
    if (!(s > 0.0))
        throw std::domain_error("coordinate_hit_joint_density: s must be > 0");
    const double off = which == HitLine::vertical ? start.x2 : start.x1;
    if (off == 0.0)
        throw std::domain_error("coordinate_hit_joint_density: start on target line");
    const Point target = which == HitLine::vertical ? Point{w, 0.0} : Point{0.0, w};
    const double d2 = sq(start.x1 - target.x1) + sq(start.x2 - target.x2);
    const double kernel = std::exp(-d2 / (4.0 * s)) / (4.0 * pi * s);
    return std::fabs(off) / s * kernel;
}

double joint_laplace_general(const Point& zstart, double lambda, double w) {
    require_in_slit_domain(zstart, "joint_laplace_general");
    require_slit_target(w, "joint_laplace_general");
    if (lambda < 0.0)
        throw std::domain_error("joint_laplace_general: lambda must be >= 0");
    const double r = zstart.norm();
    const double aw = -w;
    const double p = r + aw;
    const double q = std::sqrt(2.0 * aw * norm_minus_first(zstart));
    const double J = std::exp(-p * lambda) * laplace_kernel_integral(p, q, lambda);
    return std::sqrt(norm_plus_first(zstart) / aw) / (kSqrt2 * pi) * J;
}

double joint_density_general(const Point& zstart, double s, double w) {
    require_in_slit_domain(zstart, "joint_density_general");
    require_slit_target(w, "joint_density_general");
    if (!(s > 0.0)) throw std::domain_error("joint_density_general: s must be > 0");

    const double aw = -w;
    const double q = std::sqrt(2.0 * aw * norm_minus_first(zstart));
    // (p^2 - q^2) without cancellation
    const double p2q2 = sq(zstart.x1 - w) + sq(zstart.x2);
    const double expo = p2q2 / (2.0 * s);
    if (expo > 745.0) return 0.0;

    // e^{-q^2/2s} int_0^inf t e^{-s t^2/2} cosh(qt) dt, square completed:
    // int_0^inf (t/2) [e^{-s(t-c)^2/2} + e^{-s(t+c)^2/2}] dt,  c = q/s.
    const double c = q / s;
    const double width = 1.0 / std::sqrt(s);
    auto f = [&](double t) {
        return 0.5 * t *
               (std::exp(-0.5 * s * sq(t - c)) + std::exp(-0.5 * s * sq(t + c)));
    };
    const double upper = c + 12.0 * width;
    const double inner = integrate_finite(f, 0.0, upper, scaled_spec());

    return std::sqrt(norm_plus_first(zstart)) /
           (2.0 * std::pow(pi, 1.5) * std::sqrt(aw * s)) * std::exp(-expo) * inner;
}

double conditional_gauge(const Point& zstart, double w, double lambda) {
    require_in_slit_domain(zstart, "conditional_gauge");
    require_slit_target(w, "conditional_gauge");
    if (lambda < 0.0) throw std::domain_error("conditional_gauge: lambda must be >= 0");
    if (zstart.x2 == 0.0) {
        // exact algebraic reduction on the axis (cosh term is 1)
        return std::exp(-lambda * (zstart.x1 - w));
    }
    const double r = zstart.norm();
    const double aw = -w;
    const double p = r + aw;
    const double q = std::sqrt(2.0 * aw * norm_minus_first(zstart));
    const double p2q2 = sq(zstart.x1 - w) + sq(zstart.x2);
    return p2q2 / p * std::exp(-p * lambda) * laplace_kernel_integral(p, q, lambda);
}

double psi_kernel(double v, double y) {
    if (y == 0.0) throw std::domain_error("psi_kernel: y must be nonzero");
    const double ay = std::fabs(y);
    const double rho2 = v * v + y * y;
    const double rho = std::sqrt(rho2);
    // e^{-s - rho^2/4s} = e^{-rho} e^{-(sqrt(s) - rho/2sqrt(s))^2}
    auto f = [&](double s) {
        const double root = std::sqrt(s) - 0.5 * rho / std::sqrt(s);
        return std::exp(-root * root) / (s * s);
    };
    const double integral = integrate_semiinf(f, 0.0, scaled_spec(), 1.0);
    return ay / (4.0 * pi) * std::exp(-rho) * integral;
}

double gauge_mass_offaxis(const Point& w, double wtarget, const QuadSpec& spec) {
    require_in_slit_domain(w, "gauge_mass_offaxis");
    require_slit_target(wtarget, "gauge_mass_offaxis");
    if (w.x2 == 0.0) throw std::domain_error("gauge_mass_offaxis: needs x2 != 0");

    auto axis_gauge_mass = [&](double z) {
        return hit_place_density_axis(z, wtarget) * std::exp(-(z - wtarget));
    };
    auto f = [&](double z) { return psi_kernel(w.x1 - z, w.x2) * axis_gauge_mass(z); };
    const double swept = integrate_semiinf(f, 0.0, spec, 1.0, Endpoint::inv_sqrt_lower);
    return swept + psi_kernel(w.x1 - wtarget, w.x2);
}

double stable_poisson_halfspace(std::span<const double> x, std::span<const double> u,
                                double alpha) {
    if (x.size() != u.size() || x.empty())
        throw std::domain_error("stable_poisson_halfspace: dimension mismatch");
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("stable_poisson_halfspace: alpha must lie in (0,2)");
    if (!(x[0] > 0.0 && u[0] < 0.0))
        throw std::domain_error("stable_poisson_halfspace: needs u1 < 0 < x1");
    const auto d = static_cast<double>(x.size());
    double dist2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dist2 += sq(x[i] - u[i]);
    const double constant = std::tgamma(0.5 * d) * std::sin(0.5 * pi * alpha) /
                            std::pow(pi, 1.0 + 0.5 * d);
    return constant * std::pow(x[0] / -u[0], 0.5 * alpha) / std::pow(dist2, 0.5 * d);
}

double sample_hit_place_exact(const Point& w, Rng& rng) {
    require_in_slit_domain(w, "sample_hit_place_exact");
    const double scale = std::sqrt(0.5 * norm_plus_first(w));
    const double spread = std::sqrt(0.5 * norm_minus_first(w));
    const double location = w.x2 >= 0.0 ? spread : -spread;
    const double v = location + scale * std::tan(pi * (rng.uniform() - 0.5));
    return -v * v;
}

HitSample sample_hit_axis(double x, Rng& rng) {
    if (!(x > 0.0)) throw std::domain_error("sample_hit_axis: x must be > 0");
    const double z = sample_hit_place_exact({x, 0.0}, rng);
    const double a = x - z;
    double n = 0.0;
    do {
        n = rng.normal();
    } while (n == 0.0);
    return {a * a / (2.0 * n * n), z};
}

} // namespace slitbm
