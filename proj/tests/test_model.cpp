#include "doctest.h"

#include <cmath>

#include "fho/model.hpp"

using namespace fho;

namespace {

OscillatorParams reference_params(double omega_ratio) {
    OscillatorParams p;
    p.mass = 1.6726219e-27;
    p.omega0 = 2.0 * M_PI * 1e9;
    p.alpha = 1e-13;
    p.omega = omega_ratio * p.omega0;
    p.phi = 0.0;
    return p;
}

// Trapezoid quadrature of f over [-L, L]; spectrally accurate here because
// every integrand decays like a Gaussian well inside the window.
template <typename F>
double quad(F&& f, double L, int n = 4001) {
    const double h = 2.0 * L / (n - 1);
    double acc = 0.5 * (f(-L) + f(L));
    for (int i = 1; i + 1 < n; ++i) acc += f(-L + i * h);
    return acc * h;
}

}  // namespace

TEST_CASE("eigen energies are hbar w0 (n + 1/2) with exact spacing") {
    const OscillatorParams p = reference_params(0.5);
    const double e0 = p.hbar * p.omega0;
    CHECK(eigen_energy(0, p) == 0.5 * e0);
    CHECK(eigen_energy(1, p) == 1.5 * e0);
    CHECK(transition_frequency(1, 0, p) == doctest::Approx(p.omega0).epsilon(1e-15));
    for (int n = 0; n < 30; ++n)
        CHECK(eigen_energy(n + 1, p) - eigen_energy(n, p) == doctest::Approx(e0).epsilon(1e-15));
    CHECK_THROWS_AS(eigen_energy(-1, p), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    OscillatorParams p = reference_params(0.5);
    CHECK_NOTHROW(p.validate());
    p.mass = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reference_params(0.5);
    p.alpha = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reference_params(0.5);
    p.hbar = -1e-34;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK_THROWS_AS(Truncation{1}.validate(), std::invalid_argument);
    CHECK(Truncation{11}.max_entropy() == doctest::Approx(2.3978952727983705).epsilon(1e-15));
}

TEST_CASE("dimensionless scaling") {
    SUBCASE("zero drive gives exactly zero couplings") {
        OscillatorParams p = reference_params(0.5);
        p.alpha = 0.0;
        CHECK(scale_to_dimensionless(p).epsilon == 0.0);
    }
    SUBCASE("round trip is an identity to 1e-15 relative") {
        const OscillatorParams p = reference_params(0.9);
        const OscillatorParams q = scale_to_dimensionless(p).to_si();
        CHECK(q.mass == doctest::Approx(p.mass).epsilon(1e-15));
        CHECK(q.omega0 == doctest::Approx(p.omega0).epsilon(1e-15));
        CHECK(q.omega == doctest::Approx(p.omega).epsilon(1e-15));
        CHECK(q.alpha == doctest::Approx(p.alpha).epsilon(1e-15));
        CHECK(q.phi == p.phi);
        CHECK(q.hbar == doctest::Approx(p.hbar).epsilon(1e-15));
    }
    SUBCASE("drive strength at the reference constants") {
        // frozen from tests/tools/reference_values.py
        const ScaledParams s = scale_to_dimensionless(reference_params(0.5));
        CHECK(s.epsilon == doctest::Approx(338.04789022691722).epsilon(1e-12));
    }
    SUBCASE("rejects non-positive scale anchors") {
        OscillatorParams p = reference_params(0.5);
        p.omega0 = -1.0;
        CHECK_THROWS_AS(scale_to_dimensionless(p), std::invalid_argument);
    }
}

TEST_CASE("hermite recurrence matches the low-order polynomials") {
    for (double xi : {-1.7, -0.3, 0.0, 0.42, 2.5}) {
        CHECK(hermite_value(0, xi) == 1.0);
        CHECK(hermite_value(1, xi) == 2.0 * xi);
        CHECK(hermite_value(2, xi) == doctest::Approx(4.0 * xi * xi - 2.0).epsilon(1e-14));
        CHECK(hermite_value(3, xi) ==
              doctest::Approx(8.0 * xi * xi * xi - 12.0 * xi).epsilon(1e-14));
    }
}

TEST_CASE("eigenfunctions") {
    const OscillatorParams p = reference_params(0.5);
    const double len = oscillator_length(p);

    SUBCASE("odd levels vanish at the origin") {
        CHECK(eigenfunction(1, 0.0, p) == 0.0);
        CHECK(eigenfunction(3, 0.0, p) == 0.0);
    }
    SUBCASE("ground state is a positive Gaussian peaked at the origin") {
        const double peak = eigenfunction(0, 0.0, p);
        CHECK(peak > 0.0);
        CHECK(peak > eigenfunction(0, 0.3 * len, p));
        CHECK(peak > eigenfunction(0, -0.4 * len, p));
        CHECK(eigenfunction(0, 0.3 * len, p) ==
              doctest::Approx(eigenfunction(0, -0.3 * len, p)).epsilon(1e-14));
    }
    SUBCASE("normalization by quadrature") {
        for (int n : {0, 1, 2}) {
            const double norm = quad(
                [&](double x) { return eigenfunction(n, x, p) * eigenfunction(n, x, p); },
                10.0 * len);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
    SUBCASE("orthonormality up to n = 5") {
        for (int m = 0; m <= 5; ++m) {
            for (int n = 0; n <= m; ++n) {
                const double overlap = quad(
                    [&](double x) { return eigenfunction(m, x, p) * eigenfunction(n, x, p); },
                    10.0 * len);
                CHECK(std::abs(overlap - (m == n ? 1.0 : 0.0)) < 1e-6);
            }
        }
    }
    SUBCASE("level above the supported range is rejected") {
        CHECK_THROWS_AS(eigenfunction(kMaxEigenfunctionLevel + 1, 0.0, p), std::invalid_argument);
        CHECK_NOTHROW(eigenfunction(kMaxEigenfunctionLevel, 0.2 * len, p));
    }
}
