#pragma once

#include "slitbm/geometry.hpp"
#include "slitbm/quadrature.hpp"

namespace slitbm {

// ---------------------------------------------------------------------------
// Lambda-potentials of free planar Brownian motion
// ---------------------------------------------------------------------------

/// As-printed form (1/(sqrt(2) pi)) (sqrt(lambda)/r) K_1(sqrt(lambda) r).
/// Kept verbatim for reference; it does not satisfy the resolvent
/// normalization lambda * int U = 1 (see potential_lambda_corrected).
double potential_lambda(double lambda, double r);

/// Resolvent kernel of the VAR2T semigroup: K_0(sqrt(lambda) r) / (2 pi).
/// This is the form that passes the half-plane mass identity
/// lambda int G_H = 1 - e^{-sqrt(lambda) a} and is what the half-plane Green
/// function below is built from.
double potential_lambda_corrected(double lambda, double r);

/// Lambda-Green function of the upper (or lower) half-plane by reflection
/// across the horizontal axis (VAR2T):
/// G_H^lambda(p,q) = U(|p-q|) - U(|p-q*|), q* = (q1,-q2).
/// Requires p, q strictly on the same side.
double green_halfplane_lambda(double lambda, const Point& p, const Point& q);

// ---------------------------------------------------------------------------
// lambda^2/2-Green functions of the slit domain (VAR1T family)
// ---------------------------------------------------------------------------

/// Half-plane lambda^2/2-Green function under VAR1T:
/// [K_0(lambda|p-q|) - K_0(lambda|p-q*|)] / pi; zero across the axis.
double green_halfplane_lambda2(double lambda, const Point& p, const Point& q);

/// Both arguments on the positive axis:
/// G_D^{lambda^2/2}(x,y) = (1/pi) int_{|x-y|}^{x+y} e^{-lambda u}
///   (u^2-|x-y|^2)^{-1/2} du, evaluated via u = |x-y| cosh(theta).
/// lambda = 0 gives the logarithmic Green function of the Cauchy half-line.
double green_lambda_axis(double lambda, double x, double y);

/// First argument off the axis, second at (y,0):
/// (lambda |x2| / pi) int_0^inf K_1(lambda |p-(w,0)|)/|p-(w,0)|
///   G_D^{lambda^2/2}(w,y) dw.
double green_lambda_offaxis(double lambda, const Point& p, double y,
                            const QuadSpec& spec = {});

/// Both arguments off the axis: half-plane part plus the double sweep of the
/// axis-to-axis Green function through the first-hit kernels.
double green_lambda_general(double lambda, const Point& p, const Point& q,
                            const QuadSpec& spec = {});

/// Transition density of the killed process, both points on the positive
/// axis (VAR1T): e^{-(x-y)^2/2t}/(sqrt(2)(pi t)^{3/2}) int_0^{2 sqrt(xy)}
/// e^{-u^2/2t} du (the inner integral in closed form via erf).
double killed_density_axis(double t, double x, double y);

/// Killed density from an off-axis start to (y,0): time-convolution of the
/// axis killed density with the first-hit kernel of the axis. Nested
/// quadrature limits the achievable accuracy to about 1e-7 relative;
/// tighter specs are clamped to that floor.
double killed_density_offaxis(double t, const Point& p, double y,
                              const QuadSpec& spec = {});

// ---------------------------------------------------------------------------
// Logarithmic (recurrent-case) Green functions
// ---------------------------------------------------------------------------

/// Green function of the one-dimensional Cauchy process on (0,inf):
/// (2/pi) ln((sqrt(v)+sqrt(y)) / sqrt(|v-y|)).
double cauchy_halfline_green(double v, double y);

/// G_D((y,0), p) by sweeping the Cauchy half-line Green function to p with
/// the half-plane harmonic measure. Returns the normalization-consistent
/// value (constant 2/pi^2); the as-printed constant is available through
/// green_log_axis_audit. For p on the positive axis this reduces to
/// cauchy_halfline_green; on the slit it vanishes.
double green_log_axis(double y, const Point& p, const QuadSpec& spec = {});

struct ConstantAudit {
    double verbatim;  // value with the as-printed constant
    double corrected; // value with the normalization-consistent constant
};
ConstantAudit green_log_axis_audit(double y, const Point& p,
                                   const QuadSpec& spec = {});

/// G_D((0,y), p) from a vertical-axis start, by compensated-potential
/// sweeping against the exit-place density of (0,y).
double green_log_from_vertical(double y, const Point& p,
                               const QuadSpec& spec = {});

/// E^p[G^Y_{(0,inf)}(B_tau, y)]: harmonic measure of the horizontal axis
/// composed with the Cauchy half-line Green function. Equal to
/// green_log_axis by construction; kept as the independently-coded route.
double greenfact(const Point& p, double y, const QuadSpec& spec = {});

} // namespace slitbm
