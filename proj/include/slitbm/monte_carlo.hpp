#pragma once

#include <cstdint>
#include <vector>

#include "slitbm/geometry.hpp"
#include "slitbm/slit_kernels.hpp"
#include "slitbm/statistics.hpp"

namespace slitbm {

/// Euler simulation configuration. sigma2 is the variance per unit time per
/// coordinate (2 matches the VAR2T closed forms, 1 is the standard clock);
/// drift_mu > 0 adds the drift -2 mu t to the horizontal coordinate.
struct MCConfig {
    long paths = 10000;
    double step = 1e-4;
    double horizon = 50.0;
    std::uint64_t seed = 1;
    double sigma2 = 2.0;
    double drift_mu = 0.0;
    int workers = 0; // 0: SLITBM_WORKERS env var, else hardware concurrency
};

void validate(const MCConfig& cfg);

/// One simulated path outcome. Censored paths carry hit_time = horizon and
/// an unset (NaN) hit_place.
struct PathOutcome {
    double hit_time = 0.0;
    double hit_place = 0.0;
    bool censored = false;
};

/// Simulates planar Brownian paths from start until they hit the slit or the
/// horizon. Zero-crossings of the vertical coordinate are detected both by
/// sign change and by the Brownian-bridge crossing probability
/// exp(-2 w_i w_{i+1} / (sigma2 dt)) for same-sign endpoints; at a detected
/// crossing the horizontal position is drawn from its conditional bridge law
/// (interpolated mean plus the bridge fluctuation) and a hit is recorded iff
/// it is negative. Near the slit tip, where the exit law concentrates like
/// |z|^{-1/2}, the step is refined recursively (16x per zone level, floored
/// at step/16^4). Results are deterministic in (seed, cfg) and independent
/// of the worker count.
std::vector<PathOutcome> simulate_hits(const MCConfig& cfg, const Point& start);

/// Fraction of paths with no hit before t, with a binomial standard error
/// and a Wilson 95% interval.
MCEstimate estimate_survival(const MCConfig& cfg, const Point& start, double t);

/// Sample mean of f(hit_time, hit_place), with censored paths contributing
/// censored_value (e.g. ~0 for e^{-tau} weights once the horizon is large).
MCEstimate estimate_hit_functional(const std::vector<PathOutcome>& outcomes,
                                   const std::function<double(double, double)>& f,
                                   double censored_value);

/// Sorted hit places of the uncensored paths.
std::vector<double> hit_places_sorted(const std::vector<PathOutcome>& outcomes);

/// Worker count resolution used by the parallel driver (exposed for tests).
int resolve_workers(int requested);

} // namespace slitbm
