#pragma once

#include <stdexcept>
#include <string>

namespace slitbm {

/// Quadrature failed to reach the requested tolerance. Carries the best
/// estimate obtained and the associated error bound so callers can decide
/// whether the partial answer is still usable.
class tolerance_error : public std::runtime_error {
public:
    tolerance_error(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

/// An integral was detected to diverge (non-decaying tail, or a closed form
/// that is infinite for the requested parameters).
class divergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace slitbm
