#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace slitbm {

/// Brownian normalization conventions used across the formula families.
/// VAR2T: each coordinate has variance 2t (heat kernel exponent /4t).
/// VAR1T: standard variance t (exponent /2t, killing written as lambda^2/2).
enum class Convention { VAR2T, VAR1T };

inline const char* to_string(Convention c) {
    return c == Convention::VAR2T ? "VAR2T" : "VAR1T";
}

/// Planar coordinate. The slit domain D is the plane with the ray
/// (-inf,0] x {0} removed.
struct Point {
    double x1 = 0.0;
    double x2 = 0.0;

    double norm() const { return std::hypot(x1, x2); }
};

/// True iff p lies in the open slit domain D (i.e. not on the closed ray).
inline bool in_slit_domain(const Point& p) {
    return !(p.x2 == 0.0 && p.x1 <= 0.0);
}

inline void require_in_slit_domain(const Point& p, const char* who) {
    if (!in_slit_domain(p))
        throw std::domain_error(std::string(who) + ": start point lies on the slit");
}

inline double sq(double v) { return v * v; }

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x1 - b.x1, a.x2 - b.x2);
}

} // namespace slitbm
