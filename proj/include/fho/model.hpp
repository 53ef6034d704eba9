#pragma once

#include <complex>
#include <vector>

namespace fho {

using Complex = std::complex<double>;

/// Physical parameters of the forced oscillator, SI units throughout:
/// m xḋot = -m w0^2 x + alpha cos(w t + phi).
struct OscillatorParams {
    double mass = 1.6726219e-27;        // m   [kg]
    double omega0 = 6.283185307179586e9;  // w0  [rad/s]
    double alpha = 0.0;                 // drive amplitude [N]
    double omega = 0.0;                 // drive frequency [rad/s]
    double phi = 0.0;                   // drive phase [rad]
    double hbar = 1.054571817e-34;      // [J s]

    // Exact equality of the configured values; the integration schemes take
    // an explicit case flag instead of relying on this predicate.
    bool is_resonant() const { return omega == omega0; }

    // Throws std::invalid_argument on non-positive mass/omega0/hbar,
    // negative alpha/omega, or non-finite fields.
    void validate() const;
};

/// Basis truncation: coefficients are indexed k = 0 .. n_states-1.
struct Truncation {
    int n_states = 12;

    void validate() const;           // n_states >= 2
    double max_entropy() const;      // ln(n_states), upper bound for S(t)
};

/// Dimensionless parameter set the integrator works in: time tau = w0 t,
/// energies in units of hbar w0. `epsilon` is the drive strength
/// lambda/(hbar w0) with lambda = alpha sqrt(hbar / 2 m w0); every coupling
/// constant of the coefficient equations is a polynomial in epsilon and
/// omega_ratio, so alpha = 0 makes all of them exactly zero.
struct ScaledParams {
    double epsilon = 0.0;      // lambda / (hbar w0)
    double omega_ratio = 0.0;  // w / w0
    double phi = 0.0;

    // SI anchors kept for exact round-trips and unit restoration.
    double mass = 0.0;
    double omega0 = 0.0;
    double hbar = 0.0;

    bool is_resonant() const { return omega_ratio == 1.0; }

    // Inverse of scale_to_dimensionless; exact to a few ulp per field.
    OscillatorParams to_si() const;
};

ScaledParams scale_to_dimensionless(const OscillatorParams& p);

/// E_n = hbar w0 (n + 1/2)  [J]
double eigen_energy(int n, const OscillatorParams& p);

/// w_mn = (E_m - E_n)/hbar = (m - n) w0  [rad/s]
double transition_frequency(int m, int n, const OscillatorParams& p);

/// H_n(xi) by the three-term recurrence H_{n+1} = 2 xi H_n - 2 n H_{n-1}.
double hermite_value(int n, double xi);

/// Oscillator length sqrt(hbar / m w0) [m]; xi = x / oscillator_length.
double oscillator_length(const OscillatorParams& p);

inline constexpr int kMaxEigenfunctionLevel = 20;

/// Normalized eigenfunction A_n e^{-xi^2/2} H_n(xi)  [m^-1/2].
/// Supported for n <= kMaxEigenfunctionLevel.
double eigenfunction(int n, double x, const OscillatorParams& p);

}  // namespace fho
