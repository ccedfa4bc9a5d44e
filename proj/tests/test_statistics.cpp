#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "slitbm/random.hpp"
#include "slitbm/statistics.hpp"

using namespace slitbm;

TEST_CASE("ks_statistic basics") {
    // single observation at the model median
    std::vector<double> one{0.0};
    CHECK(ks_statistic(one, [](double x) { return x < 0.0 ? 0.25 : 0.5; }) ==
          doctest::Approx(0.5));

    // a large sample drawn from the model itself stays within the DKW band
    Rng rng(1u);
    std::vector<double> u(100000);
    for (auto& v : u) v = rng.uniform();
    std::sort(u.begin(), u.end());
    auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_statistic(u, uniform_cdf) < 0.002 * 3.16); // ~2/sqrt(n)

    // translating the sample shifts the statistic by the translation
    auto shifted_cdf = [&](double x) { return uniform_cdf(x - 0.2); };
    CHECK(ks_statistic(u, shifted_cdf) == doctest::Approx(0.2).epsilon(0.05));
}

TEST_CASE("two-sample ks") {
    Rng rng(2u);
    std::vector<double> a(50000), b(50000);
    for (auto& v : a) v = rng.uniform();
    for (auto& v : b) v = rng.uniform();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(ks_statistic_two_sample(a, b) < 0.012);
    for (auto& v : b) v += 0.1;
    CHECK(ks_statistic_two_sample(a, b) == doctest::Approx(0.1).epsilon(0.1));
}

TEST_CASE("proportion estimate: Wilson interval") {
    const auto est = proportion_estimate(400, 1000);
    CHECK(est.value == doctest::Approx(0.4));
    CHECK(est.std_error == doctest::Approx(std::sqrt(0.4 * 0.6 / 1000.0)).epsilon(1e-12));
    CHECK(est.ci95.first < est.value);
    CHECK(est.ci95.second > est.value);
    // interval width tracks value +- 1.96 se for moderate p
    CHECK(est.ci95.first == doctest::Approx(est.value - 1.96 * est.std_error).epsilon(0.01));
    // stabilized near the boundary: stays inside [0,1]
    const auto edge = proportion_estimate(0, 50);
    CHECK(edge.ci95.first >= 0.0);
    CHECK(edge.ci95.second > 0.0);
}

TEST_CASE("correlation statistics: calibration and sensitivity") {
    Rng rng(7u);
    const int n = 20000;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = rng.normal();
        y[i] = rng.normal();
    }
    const double bound = 3.5 / std::sqrt(static_cast<double>(n));
    CHECK(std::fabs(pearson_correlation(x, y)) < bound);
    CHECK(std::fabs(spearman_correlation(x, y)) < bound);
    CHECK(quartile_chi2(x, y) < 27.88); // chi2_{9} 99.9% quantile

    // perfect monotone dependence
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::exp(x[i]);
    CHECK(spearman_correlation(x, z) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quartile_chi2(x, z) > 1000.0);
}

TEST_CASE("bootstrap CI") {
    Rng rng(11u);
    const int n = 2000;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = rng.normal();
        y[i] = 0.5 * x[i] + rng.normal();
    }
    const double point = pearson_correlation(x, y);
    const auto ci = bootstrap_ci(x, y, pearson_correlation, 200, 99u);
    CHECK(ci.first < point);
    CHECK(ci.second > point);
    CHECK(ci.second - ci.first < 0.2);
    // deterministic in the seed
    const auto ci2 = bootstrap_ci(x, y, pearson_correlation, 200, 99u);
    CHECK(ci.first == ci2.first);
    CHECK(ci.second == ci2.second);
}
