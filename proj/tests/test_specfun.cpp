#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slitbm/quadrature.hpp"
#include "slitbm/special_functions.hpp"

using namespace slitbm;
using std::numbers::pi;

namespace {

// (K_definition1) composition, valid away from integer orders; test oracle.
double k_from_i(double nu, double z) {
    return pi / (2.0 * std::sin(nu * pi)) * (bessel_i(-nu, z) - bessel_i(nu, z));
}

// Second integral representation of K_nu (test oracle), with the e^{-z}
// envelope factored out so large z keeps relative accuracy:
// K_nu(z) = (z/2)^nu Gamma(1/2)/Gamma(nu+1/2) e^{-z}
//           * int_1^inf e^{-z(t-1)} (t^2-1)^{nu-1/2} dt
double k_alt_representation(double nu, double z) {
    QuadSpec spec;
    spec.abs_tol = 1e-280;
    spec.rel_tol = 1e-12;
    spec.tail_cut = 1e-12;
    auto f = [nu, z](double t) {
        return std::exp(-z * (t - 1.0)) * std::pow(t * t - 1.0, nu - 0.5);
    };
    const Endpoint ep = nu - 0.5 < 0.0 ? Endpoint::inv_sqrt_lower : Endpoint::none;
    const double integral = integrate_semiinf(f, 1.0, spec, z, ep);
    return std::pow(0.5 * z, nu) * std::tgamma(0.5) / std::tgamma(nu + 0.5) *
           std::exp(-z) * integral;
}

} // namespace

TEST_CASE("bessel_i: series values") {
    CHECK(bessel_i(0.0, 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
    // half-integer closed form I_{1/2}(z) = sqrt(2/(pi z)) sinh z
    CHECK(bessel_i(0.5, 1.0) ==
          doctest::Approx(std::sqrt(2.0 / pi) * std::sinh(1.0)).epsilon(1e-13));
    // integer order against the independent cosine-integral representation
    auto i1_rep = [](double z) {
        return oracle::simpson([z](double t) { return std::exp(z * std::cos(t)) * std::cos(t); },
                               0.0, pi, 20000) / pi;
    };
    CHECK(bessel_i(1.0, 1.0) == doctest::Approx(i1_rep(1.0)).epsilon(1e-11));
    CHECK(bessel_i(1.0, 1.0) == doctest::Approx(0.565159).epsilon(1e-6));
}

TEST_CASE("bessel_i: domain and range errors") {
    CHECK_THROWS_AS(bessel_i(0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(60.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(0.0, 1000.0), std::range_error);
}

TEST_CASE("bessel_k: reference values") {
    CHECK(bessel_k(0.5, 1.0) ==
          doctest::Approx(std::sqrt(pi / 2.0) * std::exp(-1.0)).epsilon(1e-11));
    CHECK(bessel_k(1.0, 1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-10));
    CHECK(bessel_k(1.0, 1.0) == doctest::Approx(std::cyl_bessel_k(1.0, 1.0)).epsilon(1e-11));
    CHECK(bessel_k(0.0, 2.0) == doctest::Approx(std::cyl_bessel_k(0.0, 2.0)).epsilon(1e-11));
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(1.0, -2.0), std::domain_error);
}

TEST_CASE("bessel_k: order symmetry") {
    for (double nu : {0.3, 0.5, 1.0, 2.7}) {
        for (double z : {0.2, 1.0, 5.0}) {
            CHECK(bessel_k(-nu, z) == doctest::Approx(bessel_k(nu, z)).epsilon(1e-14));
        }
    }
}

TEST_CASE("bessel_k_half: exact finite sums") {
    CHECK(bessel_k_half(0, 1.0) == doctest::Approx(0.4610685055).epsilon(1e-9));
    CHECK(bessel_k_half(1, 2.0) ==
          doctest::Approx(std::sqrt(pi / 4.0) * std::exp(-2.0) * 1.5).epsilon(1e-14));
    // large-z asymptote: the sum tends to its leading term
    const double z = 700.0;
    CHECK(bessel_k_half(3, z) / (std::sqrt(pi / (2.0 * z)) * std::exp(-z)) ==
          doctest::Approx(1.0).epsilon(1e-2));
    CHECK_THROWS_AS(bessel_k_half(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_half(0, 0.0), std::domain_error);
}

TEST_CASE("invariant: integral representation matches half-integer closed form") {
    for (int n : {0, 1, 2, 5, 10}) {
        for (double z : {0.1, 0.5, 1.0, 2.0, 10.0}) {
            const double via_integral = bessel_k(n + 0.5, z);
            const double exact = bessel_k_half(n, z);
            CHECK(via_integral == doctest::Approx(exact).epsilon(1e-10));
        }
    }
}

TEST_CASE("invariant: I-difference composition away from integer orders") {
    for (double nu : {0.25, 0.6, 1.3, 2.5, 5.75}) {
        for (double z : {0.1, 1.0, 2.0, 5.0}) {
            CHECK(bessel_k(nu, z) == doctest::Approx(k_from_i(nu, z)).epsilon(1e-8));
        }
    }
}

TEST_CASE("invariant: the two integral representations agree") {
    for (double nu : {0.0, 0.5, 1.0, 1.5}) {
        for (double z : {0.1, 1.0, 10.0}) {
            CHECK(bessel_k(nu, z) ==
                  doctest::Approx(k_alt_representation(nu, z)).epsilon(1e-8));
        }
    }
}

TEST_CASE("half-integer order detection") {
    CHECK(is_half_integer_order(0.5));
    CHECK(is_half_integer_order(10.5));
    CHECK(!is_half_integer_order(1.0));
    CHECK(!is_half_integer_order(0.4999999));
}
