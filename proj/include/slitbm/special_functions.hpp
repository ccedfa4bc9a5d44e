#pragma once

namespace slitbm {

/// Largest supported |order| for the modified Bessel evaluators.
inline constexpr double kMaxBesselOrder = 50.0;

/// True when nu is exactly representable as n + 1/2 for integer n >= 0.
bool is_half_integer_order(double nu);

/// Modified Bessel function of the first kind, by its power series.
/// Requires z > 0 and nu not a negative integer (negative integer orders are
/// reflected to |nu|, which is the same function).
double bessel_i(double nu, double z);

/// Macdonald function K_nu(z), z > 0, evaluated from the integral
/// representation int_0^inf e^{-t - z^2/4t} t^{-nu-1} dt (taken on the
/// exponential scale t = (z/2)e^u and with the e^{-z} envelope factored out,
/// so large z keeps full relative accuracy). Symmetric in the order.
double bessel_k(double nu, double z);

/// Exact finite-sum form of K_{n+1/2}(z), n >= 0 integer, z > 0.
double bessel_k_half(int n, double z);

} // namespace slitbm
