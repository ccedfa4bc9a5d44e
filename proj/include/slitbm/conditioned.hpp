#pragma once

#include "slitbm/geometry.hpp"
#include "slitbm/quadrature.hpp"

namespace slitbm {

/// Raised when an h-transformed density evaluates negative beyond numerical
/// tolerance, which indicates inconsistent conventions in the inputs.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Free planar transition density (VAR2T): e^{-|u-v|^2/4t} / (4 pi t).
double free_density(double t, const Point& u, const Point& v);

/// r_z^D(t,(y,0),w) = E^{y-z}[tau < t; p(t-tau,(z,0),w)]: the part of the
/// free kernel that has already passed through the conditioned exit point.
/// VAR2T; y > 0 > z.
double r_zD(double t, double y, double z, const Point& w);

/// Transition density of the process conditioned to exit D at (z,0), as the
/// h-transform of the killed kernel: h(y,z)^{-1} p^D(t,(y,0),w) h(w,z).
/// Nonnegative; integrates over w to the conditional survival probability.
double conditioned_density(double t, double y, double z, const Point& w,
                           const QuadSpec& spec = {});

/// The difference representation h(y,z)^{-1} p(t,(y,0),w) h(w,z) - r_z^D.
/// Its disintegration over exit points reproduces the killed kernel exactly,
/// but pointwise it degrades away from small times (it can go genuinely
/// negative for large t and blows up near the conditioned exit point);
/// negatives beyond tolerance raise consistency_error.
double conditioned_density_difference_form(double t, double y, double z,
                                           const Point& w);

/// Transition density of the process killed on the slit (VAR2T):
/// p(t,start,w) minus the mass that has already exited, swept over the joint
/// exit law. Off-axis starts use the general-start exit law with its exact
/// VAR1T -> VAR2T time rescaling (density 2 g(2s, .)).
double killed_density_2d(double t, const Point& start, const Point& w,
                         const QuadSpec& spec = {});

} // namespace slitbm
