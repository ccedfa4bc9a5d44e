#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace slitbm {

/// Monte Carlo point estimate with its sampling uncertainty.
struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long n = 0;
    std::pair<double, double> ci95{0.0, 0.0};
};

/// Estimate of a mean from raw draws; ci95 = value +- 1.96 se.
MCEstimate mean_estimate(const std::vector<double>& sample);

/// Binomial proportion with a Wilson 95% interval (stable near 0 and 1).
MCEstimate proportion_estimate(long successes, long n);

/// Kolmogorov-Smirnov sup-distance between the empirical cdf of a sorted
/// sample and a model cdf.
double ks_statistic(const std::vector<double>& sorted_sample,
                    const std::function<double(double)>& cdf);

/// Two-sample KS distance (both samples sorted).
double ks_statistic_two_sample(const std::vector<double>& sorted_a,
                               const std::vector<double>& sorted_b);

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// Spearman rank correlation (average ranks on ties).
double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// Chi-square statistic of the 4x4 contingency table built from sample
/// quartiles; 9 degrees of freedom under independence.
double quartile_chi2(const std::vector<double>& x, const std::vector<double>& y);

/// Percentile bootstrap 95% CI of a paired statistic.
std::pair<double, double> bootstrap_ci(
    const std::vector<double>& x, const std::vector<double>& y,
    const std::function<double(const std::vector<double>&, const std::vector<double>&)>&
        statistic,
    int resamples, std::uint64_t seed);

} // namespace slitbm
