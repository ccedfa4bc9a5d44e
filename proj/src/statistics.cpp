#include "slitbm/statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "slitbm/random.hpp"

namespace slitbm {

MCEstimate mean_estimate(const std::vector<double>& sample) {
    if (sample.empty()) throw std::domain_error("mean_estimate: empty sample");
    const auto n = static_cast<double>(sample.size());
    double mean = 0.0;
    for (double v : sample) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : sample) var += (v - mean) * (v - mean);
    var /= std::max(n - 1.0, 1.0);
    const double se = std::sqrt(var / n);
    return {mean, se, static_cast<long>(sample.size()),
            {mean - 1.96 * se, mean + 1.96 * se}};
}

MCEstimate proportion_estimate(long successes, long n) {
    if (n <= 0) throw std::domain_error("proportion_estimate: n must be > 0");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double se = std::sqrt(p * (1.0 - p) / nn);
    const double z = 1.96, z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {p, se, n, {center - half, center + half}};
}

double ks_statistic(const std::vector<double>& sorted_sample,
                    const std::function<double(double)>& cdf) {
    if (sorted_sample.empty()) throw std::domain_error("ks_statistic: empty sample");
    const auto n = static_cast<double>(sorted_sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = cdf(sorted_sample[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_statistic_two_sample(const std::vector<double>& a,
                               const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::domain_error("ks_statistic_two_sample: empty sample");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    return d;
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("pearson_correlation: need paired samples");
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return v[a] < v[b];
    });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

} // namespace

double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson_correlation(ranks(x), ranks(y));
}

double quartile_chi2(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 16)
        throw std::domain_error("quartile_chi2: need at least 16 paired samples");
    auto cuts = [](const std::vector<double>& v) {
        std::vector<double> s(v);
        std::sort(s.begin(), s.end());
        const std::size_t n = s.size();
        return std::array<double, 3>{s[n / 4], s[n / 2], s[3 * n / 4]};
    };
    const auto cx = cuts(x);
    const auto cy = cuts(y);
    auto bin = [](const std::array<double, 3>& c, double v) {
        if (v < c[0]) return 0;
        if (v < c[1]) return 1;
        if (v < c[2]) return 2;
        return 3;
    };
    double table[4][4] = {};
    double rowsum[4] = {}, colsum[4] = {};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int bx = bin(cx, x[i]);
        const int by = bin(cy, y[i]);
        table[bx][by] += 1.0;
        rowsum[bx] += 1.0;
        colsum[by] += 1.0;
    }
    const auto n = static_cast<double>(x.size());
    double chi2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double expected = rowsum[i] * colsum[j] / n;
            if (expected > 0.0) {
                const double d = table[i][j] - expected;
                chi2 += d * d / expected;
            }
        }
    }
    return chi2;
}

std::pair<double, double> bootstrap_ci(
    const std::vector<double>& x, const std::vector<double>& y,
    const std::function<double(const std::vector<double>&, const std::vector<double>&)>&
        statistic,
    int resamples, std::uint64_t seed) {
    if (x.size() != y.size() || x.empty())
        throw std::domain_error("bootstrap_ci: need paired samples");
    std::vector<double> stats(resamples);
    std::vector<double> rx(x.size()), ry(y.size());
    for (int b = 0; b < resamples; ++b) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(b));
        for (std::size_t i = 0; i < x.size(); ++i) {
            const auto k = static_cast<std::size_t>(rng.uniform() *
                                                    static_cast<double>(x.size()));
            const std::size_t j = std::min(k, x.size() - 1);
            rx[i] = x[j];
            ry[i] = y[j];
        }
        stats[b] = statistic(rx, ry);
    }
    std::sort(stats.begin(), stats.end());
    const auto lo = static_cast<std::size_t>(0.025 * (resamples - 1));
    const auto hi = static_cast<std::size_t>(0.975 * (resamples - 1));
    return {stats[lo], stats[hi]};
}

} // namespace slitbm
