#include "slitbm/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "slitbm/random.hpp"

namespace slitbm {

void validate(const MCConfig& cfg) {
    if (cfg.paths < 1) throw std::domain_error("MCConfig: paths must be >= 1");
    if (!(cfg.step > 0.0)) throw std::domain_error("MCConfig: step must be > 0");
    if (!(cfg.horizon >= cfg.step))
        throw std::domain_error("MCConfig: horizon must be >= step");
    if (cfg.sigma2 != 1.0 && cfg.sigma2 != 2.0)
        throw std::domain_error("MCConfig: sigma2 must be 1 or 2");
    if (cfg.drift_mu < 0.0) throw std::domain_error("MCConfig: drift_mu must be >= 0");
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SLITBM_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct StepState {
    double b, w, t;
    bool hit = false;
    double hit_time = 0.0, hit_place = 0.0;
};

// One Euler step of length dt with bridge-corrected crossing detection.
inline void advance(StepState& st, double dt, double sigma, double drift, Rng& rng) {
    double n1, n2;
    rng.normal_pair(n1, n2);
    const double sdt = sigma * std::sqrt(dt);
    const double db = sdt * n1 - drift * dt;
    const double dw = sdt * n2;
    const double w2 = st.w + dw;

    bool crossed = false;
    double theta = 0.0;
    if (st.w == 0.0) {
        crossed = true;
        theta = 0.0;
    } else if (st.w * w2 < 0.0) {
        crossed = true;
        theta = st.w / (st.w - w2);
    } else {
        // bridge crossing for same-sign endpoints
        const double expo = 2.0 * st.w * w2 / (sigma * sigma * dt);
        if (expo < 40.0 && rng.uniform() < std::exp(-expo)) {
            crossed = true;
            theta = st.w / (st.w + w2);
        }
    }
    if (crossed) {
        // B at the crossing time, conditional on the step endpoints: linear
        // interpolation plus the Brownian-bridge fluctuation around it. The
        // fluctuation term matters: without it the recorded places pile up
        // near the tip at the sqrt(dt) scale.
        const double mean = st.b + theta * db;
        const double bridge_sd = sigma * std::sqrt(theta * (1.0 - theta) * dt);
        if (mean < 8.0 * bridge_sd) { // otherwise a hit has probability < 1e-15
            const double b_cross = mean + bridge_sd * rng.normal();
            if (b_cross < 0.0) {
                st.hit = true;
                st.hit_time = st.t + theta * dt;
                st.hit_place = b_cross;
                return;
            }
        }
    }
    st.b += db;
    st.w = w2;
    st.t += dt;
}

PathOutcome run_path(const MCConfig& cfg, const Point& start, std::uint64_t index) {
    Rng rng = Rng::stream(cfg.seed, index);
    const double sigma = std::sqrt(cfg.sigma2);
    const double drift = 2.0 * cfg.drift_mu;
    // Near the slit tip the exit law concentrates like |z|^{-1/2}, so the
    // step is refined recursively: within radius 10 sqrt(sigma2 dt) the step
    // drops 16x, and again as the tip gets closer, floored at dt/16^4. The
    // zone area shrinks as fast as the local step count grows, so the extra
    // cost stays bounded.
    const double zone = 100.0 * cfg.sigma2 * cfg.step;
    const double dt_floor = cfg.step / 65536.0;

    StepState st{start.x1, start.x2, 0.0};
    while (!st.hit && st.t < cfg.horizon) {
        const double dist2 = st.b * st.b + st.w * st.w;
        double dt = cfg.step;
        if (dist2 < zone)
            dt = std::max(cfg.step * (dist2 / zone), dt_floor);
        advance(st, dt, sigma, drift, rng);
    }
    if (st.hit) return {st.hit_time, st.hit_place, false};
    return {cfg.horizon, std::numeric_limits<double>::quiet_NaN(), true};
}

} // namespace

std::vector<PathOutcome> simulate_hits(const MCConfig& cfg, const Point& start) {
    validate(cfg);
    require_in_slit_domain(start, "simulate_hits");

    std::vector<PathOutcome> out(static_cast<std::size_t>(cfg.paths));
    const int workers = std::min<long>(resolve_workers(cfg.workers), cfg.paths);
    if (workers <= 1) {
        for (long i = 0; i < cfg.paths; ++i)
            out[static_cast<std::size_t>(i)] =
                run_path(cfg, start, static_cast<std::uint64_t>(i));
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int wk = 0; wk < workers; ++wk) {
        pool.emplace_back([&, wk] {
            for (long i = wk; i < cfg.paths; i += workers)
                out[static_cast<std::size_t>(i)] =
                    run_path(cfg, start, static_cast<std::uint64_t>(i));
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

MCEstimate estimate_survival(const MCConfig& cfg, const Point& start, double t) {
    if (!(t > 0.0) || t > cfg.horizon)
        throw std::domain_error("estimate_survival: need 0 < t <= horizon");
    MCConfig run = cfg;
    run.horizon = t; // survival to t needs no simulation beyond it
    const auto outcomes = simulate_hits(run, start);
    long survived = 0;
    for (const auto& o : outcomes)
        if (o.censored || o.hit_time > t) ++survived;
    return proportion_estimate(survived, cfg.paths);
}

MCEstimate estimate_hit_functional(const std::vector<PathOutcome>& outcomes,
                                   const std::function<double(double, double)>& f,
                                   double censored_value) {
    std::vector<double> vals;
    vals.reserve(outcomes.size());
    for (const auto& o : outcomes)
        vals.push_back(o.censored ? censored_value : f(o.hit_time, o.hit_place));
    return mean_estimate(vals);
}

std::vector<double> hit_places_sorted(const std::vector<PathOutcome>& outcomes) {
    std::vector<double> places;
    places.reserve(outcomes.size());
    for (const auto& o : outcomes)
        if (!o.censored) places.push_back(o.hit_place);
    std::sort(places.begin(), places.end());
    return places;
}

} // namespace slitbm
