#pragma once

#include <complex>
#include <functional>

#include "slitbm/errors.hpp"

namespace slitbm {

/// Tolerance/effort contract for the adaptive integrators.
/// Accepted when the accumulated error bound is below
/// abs_tol + rel_tol*|result|; tail_cut bounds the relative mass allowed
/// in the truncated tail of semi-infinite integrals.
struct QuadSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 60;
    double tail_cut = 1e-10;
};

void validate(const QuadSpec& spec);

/// Built-in endpoint variable changes. inv_sqrt_* handles u^{-1/2}-type
/// singularities (u = v^2), log_* handles log|u-c| (u = c +- e^{-v}).
/// These are the only singularity types the implemented integrals produce.
enum class Endpoint {
    none,
    inv_sqrt_lower,
    inv_sqrt_upper,
    log_lower,
    log_upper,
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // accumulated error bound
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod on [a,b]. Throws tolerance_error (carrying the
/// best estimate and its error bound) when max_depth is exhausted.
QuadResult integrate_finite_full(const Integrand& f, double a, double b,
                                 const QuadSpec& spec = {},
                                 Endpoint endpoint = Endpoint::none);

double integrate_finite(const Integrand& f, double a, double b,
                        const QuadSpec& spec = {},
                        Endpoint endpoint = Endpoint::none);

/// Integral over (a, inf) for integrands with eventually monotone decay.
/// The truncation point is pushed until the tail estimate, inferred from the
/// last-octave ratio (or from decay_hint when supplied), drops below
/// tail_cut of the running total. Detected non-decay raises divergence_error.
/// A singularity at a itself is handled by passing the matching *_lower flag.
QuadResult integrate_semiinf_full(const Integrand& f, double a,
                                  const QuadSpec& spec = {},
                                  double decay_hint = 0.0,
                                  Endpoint endpoint = Endpoint::none);

double integrate_semiinf(const Integrand& f, double a,
                         const QuadSpec& spec = {},
                         double decay_hint = 0.0,
                         Endpoint endpoint = Endpoint::none);

/// Laplace transform value int_0^inf e^{-theta s} f(s) ds, theta > 0.
double laplace_at(const Integrand& f, double theta, const QuadSpec& spec = {});

/// Fourier transform value int_R e^{i xi x} f(x) dx for absolutely
/// integrable f with decaying tails.
std::complex<double> fourier_at(const Integrand& f, double xi,
                                const QuadSpec& spec = {});

} // namespace slitbm
