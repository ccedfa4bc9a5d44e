#pragma once

#include <span>

#include "slitbm/geometry.hpp"
#include "slitbm/quadrature.hpp"
#include "slitbm/random.hpp"

namespace slitbm {

/// One exit observation: hitting time s and hitting place z < 0 on the slit.
struct HitSample {
    double s = 0.0;
    double z = 0.0;
};

// ---------------------------------------------------------------------------
// Hitting place (time-free; convention independent)
// ---------------------------------------------------------------------------

/// Exit-place density from (x,0), x > 0, at z < 0:
/// h(x,z) = (1/pi) sqrt(x/-z) / (x-z).
double hit_place_density_axis(double x, double z);

/// P^{(x,0)}(B_tau > -z0) = (2/pi) arctan sqrt(z0/x), x, z0 > 0.
double hit_place_cdf_axis(double x, double z0);

/// Exit-place density from a general start w in D at z < 0 (closed form):
/// (2^{-1/2}/pi) sqrt((|w|+x)/-z) (|w|-z) / ((x-z)^2 + y^2).
double hit_place_density(const Point& w, double z);

/// Same density computed through the half-plane decomposition (sweep to the
/// vertical axis first); used for cross-validation of the closed form.
/// Requires x2 != 0.
double hit_place_density_halfplane_route(const Point& w, double z,
                                         const QuadSpec& spec = {});

/// General-start notation of the same kernel: start zstart in D, target w<0.
double hit_place_density_general(const Point& zstart, double w);

/// Exit-place density for the two-ray set ((-inf,-1] u [1,inf)) x {0} from
/// (x,0), |x| < 1, at |z| > 1, as a density in z on the line:
/// (1/pi) sqrt((1-x^2)/(z^2-1)) / |x-z|.
/// (Half this value is the one-sided density, counting the two faces of each
/// ray separately.)
double hit_place_density_interval(double x, double z);

// ---------------------------------------------------------------------------
// Joint time/place, start on the positive axis. Convention VAR2T.
// ---------------------------------------------------------------------------

/// Density of the hitting time of level 0 from level a > 0 (VAR2T):
/// g_a(s) = a s^{-3/2} e^{-a^2/4s} / (2 sqrt(pi)).
double level_hit_density(double a, double s);

/// Joint density of (tau_D, B_{tau_D}) from (x,0) (VAR2T):
/// h_x(s,z) = h(x,z) g_{x-z}(s), exactly factorized.
double joint_density_axis(double x, double s, double z);

/// Which coordinate line is hit first.
enum class HitLine { vertical, horizontal };

/// Joint density of the first hit of a coordinate line (VAR2T):
/// vertical:   (|y|/s) p(s,(x,y),(w,0))   -- W reaches 0, B at w
/// horizontal: (|x|/s) p(s,(x,y),(0,w))   -- B reaches 0, W at w
double coordinate_hit_joint_density(const Point& start, double s, double w,
                                    HitLine which);

// ---------------------------------------------------------------------------
// General starting point. Convention VAR1T (killing written lambda^2/2).
// ---------------------------------------------------------------------------

/// E^z[e^{-lambda^2 tau_D / 2}; B(tau_D) in dw] / dw for zstart in D, w < 0.
double joint_laplace_general(const Point& zstart, double lambda, double w);

/// Joint density of (tau_D, B(tau_D)) from a general start (VAR1T).
double joint_density_general(const Point& zstart, double s, double w);

/// Conditional gauge u(z,w) = E^z_w[e^{-lambda^2 tau_D/2}] in (0,1].
/// On the axis this reduces exactly to e^{-lambda (x-w)}.
double conditional_gauge(const Point& zstart, double w, double lambda);

// ---------------------------------------------------------------------------
// Unit-killing gauge family. Convention VAR2T.
// ---------------------------------------------------------------------------

/// Psi(v,y) = int_0^inf e^{-s} g^tau_{(v+z,y)}(s,z) ds, the e^{-tau}-weighted
/// first-hit kernel of the horizontal axis; depends on the offset v only.
double psi_kernel(double v, double y);

/// Gauge mass E^{(x,y)}[e^{-tau_D}; B(tau_D) in dw]/dw for x2 != 0, assembled
/// from Psi and the axis gauge mass h(z,w) e^{-(z-w)}:
///   int_0^inf Psi(x-z,y) h(z,w) e^{-(z-w)} dz + Psi(x-w,y).
double gauge_mass_offaxis(const Point& w, double wtarget,
                          const QuadSpec& spec = {});

// ---------------------------------------------------------------------------
// d-dimensional alpha-stable half-space Poisson kernel
// ---------------------------------------------------------------------------

/// P(x,u) = C_alpha^d (x1/-u1)^{alpha/2} / |x-u|^d for x1 > 0 > u1,
/// C_alpha^d = Gamma(d/2) sin(pi alpha/2) / pi^{1+d/2}.
double stable_poisson_halfspace(std::span<const double> x,
                                std::span<const double> u, double alpha);

// ---------------------------------------------------------------------------
// Exact samplers
// ---------------------------------------------------------------------------

/// Exact draw of B_{tau_D} from start w in D: -V^2 with V Cauchy of location
/// Im sqrt(w) and scale Re sqrt(w) (conformal square-root map).
double sample_hit_place_exact(const Point& w, Rng& rng);

/// Exact draw of (tau_D, B_{tau_D}) from (x,0) under VAR2T: place from the
/// conformal sampler, then time as (x-z)^2 / (2 N^2) with N standard normal.
HitSample sample_hit_axis(double x, Rng& rng);

} // namespace slitbm
