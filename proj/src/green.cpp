#include "slitbm/green.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slitbm/slit_kernels.hpp"
#include "slitbm/special_functions.hpp"

namespace slitbm {

using std::numbers::pi;

namespace {

QuadSpec relative_spec() {
    QuadSpec spec;
    spec.abs_tol = 1e-280;
    spec.rel_tol = 1e-12;
    spec.tail_cut = 1e-12;
    return spec;
}

// (lambda |a2| / pi) K_1(lambda r) / r with r = |a - (w,0)|: the
// e^{-lambda^2 s/2}-weighted first-hit kernel of the horizontal axis (VAR1T).
double axis_hit_kernel(double lambda, const Point& a, double w) {
    const double r = std::hypot(a.x1 - w, a.x2);
    return lambda * std::fabs(a.x2) / pi * bessel_k(1.0, lambda * r) / r;
}

// Integral of f over (0,inf) when f has a log singularity at s > 0 and an
// optional further breakpoint b > 0 (a kernel peak, not a singularity).
double integrate_axis_log_point(const Integrand& f, double s, double b,
                                double decay_hint, const QuadSpec& spec) {
    double total = 0.0;
    if (b > 0.0 && b < s) {
        total += integrate_finite(f, 0.0, b, spec);
        total += integrate_finite(f, b, s, spec, Endpoint::log_upper);
    } else {
        total += integrate_finite(f, 0.0, s, spec, Endpoint::log_upper);
    }
    const double c = std::max(1.0, 0.5 * s);
    total += integrate_finite(f, s, s + c, spec, Endpoint::log_lower);
    if (b > s + c) {
        total += integrate_finite(f, s + c, b, spec);
        total += integrate_semiinf(f, b, spec, decay_hint);
    } else {
        total += integrate_semiinf(f, s + c, spec, decay_hint);
    }
    return total;
}

} // namespace

double potential_lambda(double lambda, double r) {
    if (!(lambda > 0.0)) throw std::domain_error("potential_lambda: lambda must be > 0");
    if (!(r > 0.0)) throw std::domain_error("potential_lambda: r must be > 0");
    const double sl = std::sqrt(lambda);
    return sl / (std::sqrt(2.0) * pi * r) * bessel_k(1.0, sl * r);
}

double potential_lambda_corrected(double lambda, double r) {
    if (!(lambda > 0.0) || !(r > 0.0))
        throw std::domain_error("potential_lambda_corrected: lambda, r must be > 0");
    return bessel_k(0.0, std::sqrt(lambda) * r) / (2.0 * pi);
}

double green_halfplane_lambda(double lambda, const Point& p, const Point& q) {
    if (!(lambda > 0.0))
        throw std::domain_error("green_halfplane_lambda: lambda must be > 0");
    if (p.x2 * q.x2 < 0.0)
        throw std::domain_error("green_halfplane_lambda: points on opposite sides");
    if (p.x2 == 0.0 || q.x2 == 0.0) return 0.0;
    const double r = distance(p, q);
    if (r == 0.0)
        throw divergence_error("green_halfplane_lambda: singular at p = q");
    const double rstar = std::hypot(p.x1 - q.x1, p.x2 + q.x2);
    return potential_lambda_corrected(lambda, r) -
           potential_lambda_corrected(lambda, rstar);
}

double green_halfplane_lambda2(double lambda, const Point& p, const Point& q) {
    if (!(lambda > 0.0))
        throw std::domain_error("green_halfplane_lambda2: lambda must be > 0");
    if (p.x2 * q.x2 <= 0.0) return 0.0;
    const double r = distance(p, q);
    if (r == 0.0)
        throw divergence_error("green_halfplane_lambda2: singular at p = q");
    const double rstar = std::hypot(p.x1 - q.x1, p.x2 + q.x2);
    return (bessel_k(0.0, lambda * r) - bessel_k(0.0, lambda * rstar)) / pi;
}

double green_lambda_axis(double lambda, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("green_lambda_axis: x, y must be > 0");
    if (lambda < 0.0)
        throw std::domain_error("green_lambda_axis: lambda must be >= 0");
    if (x == y)
        throw divergence_error("green_lambda_axis: logarithmic singularity at x = y");
    const double a = std::fabs(x - y);
    const double theta_max = std::acosh((x + y) / a);
    if (lambda == 0.0) return theta_max / pi;
    auto f = [&](double theta) { return std::exp(-lambda * a * std::cosh(theta)); };
    return integrate_finite(f, 0.0, theta_max, relative_spec()) / pi;
}

double green_lambda_offaxis(double lambda, const Point& p, double y,
                            const QuadSpec& spec) {
    if (!(lambda > 0.0))
        throw std::domain_error("green_lambda_offaxis: lambda must be > 0");
    if (p.x2 == 0.0)
        throw std::domain_error("green_lambda_offaxis: needs x2 != 0");
    if (!(y > 0.0)) throw std::domain_error("green_lambda_offaxis: y must be > 0");
    auto f = [&](double w) {
        return axis_hit_kernel(lambda, p, w) * green_lambda_axis(lambda, w, y);
    };
    return integrate_axis_log_point(f, y, p.x1, lambda, spec);
}

double green_lambda_general(double lambda, const Point& p, const Point& q,
                            const QuadSpec& spec) {
    if (!(lambda > 0.0))
        throw std::domain_error("green_lambda_general: lambda must be > 0");
    if (p.x2 == 0.0 || q.x2 == 0.0)
        throw std::domain_error("green_lambda_general: both points must be off-axis");

    auto inner = [&](double w) {
        auto g = [&](double z) {
            return axis_hit_kernel(lambda, q, z) * green_lambda_axis(lambda, w, z);
        };
        return integrate_axis_log_point(g, w, q.x1, lambda, spec);
    };
    auto outer = [&](double w) { return axis_hit_kernel(lambda, p, w) * inner(w); };

    double swept = 0.0;
    if (p.x1 > 0.0) {
        swept += integrate_finite(outer, 0.0, p.x1, spec);
        swept += integrate_finite(outer, p.x1, 2.0 * p.x1, spec);
        swept += integrate_semiinf(outer, 2.0 * p.x1, spec, lambda);
    } else {
        swept += integrate_semiinf(outer, 0.0, spec, lambda);
    }
    return swept + green_halfplane_lambda2(lambda, p, q);
}

double killed_density_axis(double t, double x, double y) {
    if (!(t > 0.0) || !(x > 0.0) || !(y > 0.0))
        throw std::domain_error("killed_density_axis: t, x, y must be > 0");
    // int_0^{2 sqrt(xy)} e^{-u^2/2t} du = sqrt(pi t/2) erf(sqrt(2xy/t))
    return std::exp(-sq(x - y) / (2.0 * t)) * std::erf(std::sqrt(2.0 * x * y / t)) /
           (2.0 * pi * t);
}

double killed_density_offaxis(double t, const Point& p, double y,
                              const QuadSpec& spec) {
    if (!(t > 0.0) || !(y > 0.0))
        throw std::domain_error("killed_density_offaxis: t, y must be > 0");
    if (p.x2 == 0.0) throw std::domain_error("killed_density_offaxis: needs x2 != 0");

    // Nested quadrature keeps this evaluator at ~1e-7 relative no matter how
    // tight the caller's spec is; clamp the outer request to that floor.
    QuadSpec outer = spec;
    outer.rel_tol = std::max(outer.rel_tol, 1e-7);
    outer.abs_tol = std::max(outer.abs_tol, 1e-11);
    outer.tail_cut = std::min(outer.rel_tol, std::max(outer.tail_cut, 1e-7));

    const double d2 = sq(p.x2);
    auto time_conv = [&](double w_raw) {
        // The outer integrand is log-singular at w = y; its own evaluation is
        // a quadrature, so probing arbitrarily close to y is wasted effort.
        // Clamping at 1e-7 leaves an outer mass error of order 1e-6 relative.
        double w = w_raw;
        if (std::fabs(w - y) < 1e-7) w = w_raw >= y ? y + 1e-7 : y - 1e-7;
        const double r2 = sq(p.x1 - w) + d2;
        auto ghit = [&](double s) {
            return std::fabs(p.x2) / s * std::exp(-r2 / (2.0 * s)) / (2.0 * pi * s);
        };
        // Split at t/2 and integrate each half in its natural variable: the
        // killed kernel accumulates logarithmically as u -> 0, and the
        // first-hit kernel can spike as s -> 0 (small |p - (w,0)|); working
        // near t in the other variable would lose the small scale to
        // cancellation in t - u.
        auto in_u = [&](double u) { return ghit(t - u) * killed_density_axis(u, w, y); };
        auto in_s = [&](double s) { return ghit(s) * killed_density_axis(t - s, w, y); };
        return integrate_finite(in_u, 0.0, 0.5 * t, relative_spec(), Endpoint::log_lower) +
               integrate_finite(in_s, 0.0, 0.5 * t, relative_spec());
    };
    return integrate_axis_log_point(time_conv, y, p.x1, 0.0, outer);
}

double cauchy_halfline_green(double v, double y) {
    if (!(v > 0.0) || !(y > 0.0))
        throw std::domain_error("cauchy_halfline_green: v, y must be > 0");
    if (v == y)
        throw divergence_error("cauchy_halfline_green: singular at v = y");
    return 2.0 / pi * std::log((std::sqrt(v) + std::sqrt(y)) / std::sqrt(std::fabs(v - y)));
}

namespace {

// shared integral of (GfD2): int_0^inf |x2|/(x2^2+(x1-z)^2) ln(...) dz
double log_axis_integral(double y, const Point& p, const QuadSpec& spec) {
    auto f = [&](double z) {
        const double poisson = std::fabs(p.x2) / (sq(p.x2) + sq(p.x1 - z));
        const double lg =
            std::log((std::sqrt(z) + std::sqrt(y)) / std::sqrt(std::fabs(z - y)));
        return poisson * lg;
    };
    return integrate_axis_log_point(f, y, p.x1, 0.0, spec);
}

} // namespace

double green_log_axis(double y, const Point& p, const QuadSpec& spec) {
    if (!(y > 0.0)) throw std::domain_error("green_log_axis: y must be > 0");
    if (p.x2 == 0.0) {
        if (p.x1 <= 0.0) return 0.0; // on the slit
        return cauchy_halfline_green(p.x1, y);
    }
    return 2.0 / (pi * pi) * log_axis_integral(y, p, spec);
}

ConstantAudit green_log_axis_audit(double y, const Point& p, const QuadSpec& spec) {
    const double corrected = green_log_axis(y, p, spec);
    return {0.5 * corrected, corrected};
}

double green_log_from_vertical(double y, const Point& p, const QuadSpec& spec) {
    if (!(y > 0.0)) throw std::domain_error("green_log_from_vertical: y must be > 0");
    require_in_slit_domain(p, "green_log_from_vertical");
    const double num = sq(p.x1) + sq(p.x2 - y);
    if (num == 0.0)
        throw divergence_error("green_log_from_vertical: singular at p = (0,y)");
    // ln(|p-exit|^2 / |p-start|^2): oriented so the kernel blows up
    // positively as p approaches the start, as a Green function must.
    auto f = [&](double u) {
        const double z = -u;
        const double ratio = (sq(p.x2) + sq(p.x1 - z)) / num;
        return std::log(ratio) * hit_place_density({0.0, y}, z);
    };
    return integrate_semiinf(f, 0.0, spec, 0.0, Endpoint::inv_sqrt_lower) / (2.0 * pi);
}

double greenfact(const Point& p, double y, const QuadSpec& spec) {
    if (!(y > 0.0)) throw std::domain_error("greenfact: y must be > 0");
    if (p.x2 == 0.0) {
        if (p.x1 <= 0.0) return 0.0;
        return cauchy_halfline_green(p.x1, y);
    }
    auto f = [&](double v) {
        const double harm = std::fabs(p.x2) / (pi * (sq(p.x2) + sq(p.x1 - v)));
        return harm * cauchy_halfline_green(v, y);
    };
    return integrate_axis_log_point(f, y, p.x1, 0.0, spec);
}

} // namespace slitbm
