#include "slitbm/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "slitbm/errors.hpp"
#include "slitbm/slit_kernels.hpp"
#include "slitbm/statistics.hpp"

namespace slitbm {

double drift_joint_density(double mu, double y, double s, double z) {
    if (!(mu >= 0.0)) throw std::domain_error("drift_joint_density: mu must be >= 0");
    return joint_density_axis(y, s, z) * std::exp(mu * (y - z) - mu * mu * s);
}

double drift_level_density(double mu, double a, double s) {
    if (!(mu >= 0.0)) throw std::domain_error("drift_level_density: mu must be >= 0");
    return level_hit_density(a, s) * std::exp(mu * a - mu * mu * s);
}

double hyp_exit_joint(double mu, double a, double y, double s, double z) {
    if (!(0.0 < z && z < a && a < y))
        throw std::domain_error("hyp_exit_joint: needs 0 < z < a < y");
    if (!(s > 0.0)) throw std::domain_error("hyp_exit_joint: s must be > 0");
    return hyp_exit_place(a, y, z) * drift_level_density(2.0 * mu, std::log(y / z), s);
}

double hyp_exit_place(double a, double y, double z) {
    if (!(0.0 < z && z < a && a < y))
        throw std::domain_error("hyp_exit_place: needs 0 < z < a < y");
    return hit_place_density_axis(std::log(y / a), std::log(z / a)) / z;
}

double exp_functional_mean(double mu, double y, double t) {
    if (!(mu > 0.0)) throw std::domain_error("exp_functional_mean: mu must be > 0");
    if (!(y > 0.0)) throw std::domain_error("exp_functional_mean: y must be > 0");
    if (t < 0.0) throw std::domain_error("exp_functional_mean: t must be >= 0");
    if (std::isinf(t)) {
        if (!(mu > 1.0))
            throw divergence_error("exp_functional_mean: infinite for mu <= 1");
        return y * y / (4.0 * (mu - 1.0));
    }
    if (mu == 1.0) return y * y * t; // E e^{2 B_s} = e^{4s} cancels the drift
    return y * y * (1.0 - std::exp(4.0 * (1.0 - mu) * t)) / (4.0 * (mu - 1.0));
}

double exp_functional_horizon(double mu, double tail_eps) {
    if (!(mu > 1.0)) throw std::domain_error("exp_functional_horizon: needs mu > 1");
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw std::domain_error("exp_functional_horizon: tail_eps in (0,1)");
    return std::log(tail_eps) / (4.0 * (1.0 - mu));
}

ExpFunctionalSample sample_exp_functional(double mu, double y, double step,
                                          double tail_eps, Rng& rng) {
    const double horizon = exp_functional_horizon(mu, tail_eps);
    const auto steps = static_cast<long>(std::ceil(horizon / step));
    const double dt = horizon / static_cast<double>(steps);
    const double sdt = std::sqrt(2.0 * dt); // VAR2T increments

    double exponent = 0.0; // B_s - 2 mu s
    double a = 0.0;
    double prev = 1.0; // e^{2 exponent}
    for (long i = 0; i < steps; ++i) {
        exponent += sdt * rng.normal() - 2.0 * mu * dt;
        const double cur = std::exp(2.0 * exponent);
        a += 0.5 * dt * (prev + cur);
        prev = cur;
    }
    return {y * y * a, y * std::exp(exponent)};
}

DependenceReport dependence_report(const std::vector<double>& a,
                                   const std::vector<double>& x,
                                   std::uint64_t seed) {
    DependenceReport rep;
    rep.n = static_cast<long>(a.size());
    rep.seed = seed;
    rep.pearson = pearson_correlation(a, x);
    rep.spearman = spearman_correlation(a, x);
    rep.chi2 = quartile_chi2(a, x);
    rep.pearson_ci = bootstrap_ci(a, x, pearson_correlation, 200, seed ^ 0x9d2c5680ULL);
    rep.spearman_ci = bootstrap_ci(a, x, spearman_correlation, 200, seed ^ 0x5bd1e995ULL);
    return rep;
}

DependenceReport conjecture_probe(double mu, double y, long paths,
                                  std::uint64_t seed) {
    if (!(mu > 1.0)) throw std::domain_error("conjecture_probe: needs mu > 1");
    if (!(y > 1.0))
        throw std::domain_error(
            "conjecture_probe: needs y > 1 (start (ln y, 0) must lie in D)");
    if (paths < 16) throw std::domain_error("conjecture_probe: too few paths");

    const double tail_eps = 1e-4;
    const double horizon_a = exp_functional_horizon(mu, tail_eps);
    const double dt = 2e-3;
    const double tau_horizon = 50.0;
    const double sdt = std::sqrt(2.0 * dt);
    const double l0 = std::log(y);

    std::vector<double> a_vals, x_vals;
    a_vals.reserve(paths);
    x_vals.reserve(paths);
    long censored = 0;

    for (long p = 0; p < paths; ++p) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(p));
        double l = l0;  // ln X_t = ln y + B_t - 2 mu t
        double w = 0.0; // vertical coordinate
        double a = 0.0;
        double prev = std::exp(2.0 * (l - l0)); // e^{2(B-2mu t)} = (X/y)^2
        double t = 0.0;
        bool hit = false;
        double x_at_hit = 0.0;

        while (t < tau_horizon && (!hit || t < horizon_a)) {
            double n1, n2;
            rng.normal_pair(n1, n2);
            const double dl = sdt * n1 - 2.0 * mu * dt;
            const double w2 = w + sdt * n2;
            if (!hit) {
                bool crossed = false;
                double theta = 0.0;
                if (w == 0.0 || w * w2 < 0.0) {
                    crossed = true;
                    theta = (w == 0.0 && w2 == 0.0) ? 0.0 : w / (w - w2);
                } else {
                    const double expo = w * w2 / dt; // sigma2 = 2
                    if (expo < 20.0 && rng.uniform() < std::exp(-expo)) {
                        crossed = true;
                        theta = w / (w + w2);
                    }
                }
                if (crossed) {
                    const double l_cross = l + theta * dl;
                    if (l_cross < 0.0) {
                        hit = true;
                        x_at_hit = std::exp(l_cross);
                    }
                }
            }
            l += dl;
            w = w2;
            t += dt;
            if (t <= horizon_a + 0.5 * dt) {
                const double cur = std::exp(2.0 * (l - l0));
                a += 0.5 * dt * (prev + cur);
                prev = cur;
            }
        }
        if (!hit) {
            ++censored;
            continue;
        }
        a_vals.push_back(y * y * a);
        x_vals.push_back(x_at_hit);
    }

    DependenceReport rep = dependence_report(a_vals, x_vals, seed);
    rep.censored = censored;
    rep.mu = mu;
    rep.y = y;
    return rep;
}

} // namespace slitbm
