#pragma once

// Test-only oracles, deliberately independent of the library's quadrature:
// fixed-grid composite rules and a handful of closed forms. Slow and dumb on
// purpose.

#include <cmath>
#include <functional>

namespace oracle {

inline double trapezoid(const std::function<double(double)>& f, double a, double b,
                        long n) {
    const double h = (b - a) / static_cast<double>(n);
    double sum = 0.5 * (f(a) + f(b));
    for (long i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i));
    return sum * h;
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      long n) {
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double sum = f(a) + f(b);
    for (long i = 1; i < n; ++i)
        sum += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// Trapezoid over (0, inf) truncated where the integrand has decayed; the
/// caller supplies a cutoff known to bound the tail below the comparison
/// tolerance.
inline double trapezoid_semiinf(const std::function<double(double)>& f, double cutoff,
                                long n) {
    return trapezoid(f, 0.0, cutoff, n);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

} // namespace oracle
