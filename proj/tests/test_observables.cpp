#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "fho/observables.hpp"

using namespace fho;

namespace {

OscillatorParams base_params() {
    OscillatorParams p;
    p.mass = 1.6726219e-27;
    p.omega0 = 2.0 * M_PI * 1e9;
    p.omega = 0.5 * p.omega0;
    return p;
}

}  // namespace

TEST_CASE("probabilities") {
    std::vector<Complex> ground{Complex{1.0, 0.0}, {}, {}};
    CHECK(probabilities(ground) == std::vector<double>{1.0, 0.0, 0.0});

    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Complex> super{Complex{r, 0.0}, Complex{0.0, r}, {}};
    const std::vector<double> p = probabilities(super);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p[2] == 0.0);

    // a global phase changes nothing
    const Complex phase = std::polar(1.0, 1.234);
    std::vector<Complex> rotated = super;
    for (Complex& c : rotated) c *= phase;
    const std::vector<double> q = probabilities(rotated);
    for (size_t k = 0; k < p.size(); ++k) CHECK(q[k] == doctest::Approx(p[k]).epsilon(1e-15));
}

TEST_CASE("entropy") {
    CHECK(entropy({1.0, 0.0, 0.0}) == 0.0);
    CHECK(entropy({0.5, 0.5}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    std::vector<double> uniform11(11, 1.0 / 11.0);
    CHECK(entropy(uniform11) == doctest::Approx(std::log(11.0)).epsilon(1e-14));
    CHECK(entropy(uniform11) == doctest::Approx(2.398).epsilon(1e-4));

    SUBCASE("permutation invariance and bounds on random distributions") {
        std::mt19937_64 rng(123);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> p(12);
            double sum = 0.0;
            for (double& x : p) sum += (x = u(rng));
            for (double& x : p) x /= sum;
            const double s = entropy(p);
            CHECK(s >= 0.0);
            CHECK(s <= std::log(12.0) + 1e-12);
            std::vector<double> shuffled = p;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(entropy(shuffled) == doctest::Approx(s).epsilon(1e-12));
        }
    }
    SUBCASE("negative probabilities are rejected") {
        CHECK_THROWS_AS(entropy({-0.1, 1.1}), std::invalid_argument);
    }
}

TEST_CASE("energy expectation") {
    const OscillatorParams p = base_params();
    const double e0 = p.hbar * p.omega0;
    CHECK(energy_expectation({1.0, 0.0, 0.0}, p) == doctest::Approx(0.5 * e0).epsilon(1e-15));
    CHECK(energy_expectation({0.0, 1.0, 0.0}, p) == doctest::Approx(1.5 * e0).epsilon(1e-15));
    CHECK(energy_expectation({0.5, 0.5}, p) == doctest::Approx(e0).epsilon(1e-15));
}

TEST_CASE("time average") {
    SUBCASE("constant series is exact") {
        std::vector<double> t{0.0, 1.0, 2.0, 3.0};
        std::vector<double> v(4, 4.2);
        CHECK(time_average(t, v) == doctest::Approx(4.2).epsilon(1e-15));
    }
    SUBCASE("zero-mean sine over one period") {
        const int n = 2001;
        std::vector<double> t(n), v(n);
        const double dt = 2.0 * M_PI / (n - 1);
        for (int i = 0; i < n; ++i) {
            t[i] = i * dt;
            v[i] = std::sin(t[i]);
        }
        CHECK(std::abs(time_average(t, v)) < dt * dt);
    }
    SUBCASE("linear ramp averages to half its final value") {
        const int n = 11;
        std::vector<double> t(n), v(n);
        for (int i = 0; i < n; ++i) t[i] = v[i] = 0.3 * i;
        CHECK(time_average(t, v) == doctest::Approx(0.5 * v.back()).epsilon(1e-14));
    }
    SUBCASE("time reversal leaves the average unchanged") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const int n = 101;
        std::vector<double> t(n), v(n);
        for (int i = 0; i < n; ++i) {
            t[i] = 0.1 * i;
            v[i] = u(rng);
        }
        std::vector<double> rev(v.rbegin(), v.rend());
        CHECK(time_average(t, rev) == doctest::Approx(time_average(t, v)).epsilon(1e-13));
    }
    SUBCASE("degenerate inputs are rejected") {
        CHECK_THROWS_AS(time_average({0.0}, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(time_average({}, {}), std::invalid_argument);
        CHECK_THROWS_AS(time_average({0.0, 1.0, 3.0}, {1.0, 1.0, 1.0}), std::invalid_argument);
    }
}
