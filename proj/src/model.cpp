#include "fho/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fho {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void OscillatorParams::validate() const {
    require(std::isfinite(mass) && mass > 0.0, "mass must be positive");
    require(std::isfinite(omega0) && omega0 > 0.0, "omega0 must be positive");
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive");
    require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be non-negative");
    require(std::isfinite(omega) && omega >= 0.0, "omega must be non-negative");
    require(std::isfinite(phi), "phi must be finite");
}

void Truncation::validate() const {
    require(n_states >= 2, "n_states must be at least 2");
}

double Truncation::max_entropy() const {
    return std::log(static_cast<double>(n_states));
}

ScaledParams scale_to_dimensionless(const OscillatorParams& p) {
    p.validate();
    ScaledParams s;
    // epsilon = lambda/(hbar w0), lambda = alpha sqrt(hbar / 2 m w0)
    s.epsilon = p.alpha * std::sqrt(p.hbar / (2.0 * p.mass * p.omega0)) / (p.hbar * p.omega0);
    s.omega_ratio = p.omega / p.omega0;
    s.phi = p.phi;
    s.mass = p.mass;
    s.omega0 = p.omega0;
    s.hbar = p.hbar;
    return s;
}

OscillatorParams ScaledParams::to_si() const {
    OscillatorParams p;
    p.mass = mass;
    p.omega0 = omega0;
    p.hbar = hbar;
    p.omega = omega_ratio * omega0;
    p.phi = phi;
    p.alpha = epsilon * (hbar * omega0) / std::sqrt(hbar / (2.0 * mass * omega0));
    return p;
}

double eigen_energy(int n, const OscillatorParams& p) {
    if (n < 0) throw std::invalid_argument("level must be non-negative");
    return p.hbar * p.omega0 * (static_cast<double>(n) + 0.5);
}

double transition_frequency(int m, int n, const OscillatorParams& p) {
    return (eigen_energy(m, p) - eigen_energy(n, p)) / p.hbar;
}

double hermite_value(int n, double xi) {
    if (n < 0) throw std::invalid_argument("level must be non-negative");
    double hm = 1.0;  // H_0
    if (n == 0) return hm;
    double h = 2.0 * xi;  // H_1
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * xi * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

double oscillator_length(const OscillatorParams& p) {
    return std::sqrt(p.hbar / (p.mass * p.omega0));
}

double eigenfunction(int n, double x, const OscillatorParams& p) {
    if (n < 0) throw std::invalid_argument("level must be non-negative");
    if (n > kMaxEigenfunctionLevel)
        throw std::invalid_argument("eigenfunction level above supported range");
    p.validate();
    const double xi = x / oscillator_length(p);
    // A_n = (m w0 / pi hbar)^{1/4} / sqrt(2^n n!)
    double norm = std::pow(p.mass * p.omega0 / (M_PI * p.hbar), 0.25);
    for (int k = 1; k <= n; ++k) norm /= std::sqrt(2.0 * k);
    return norm * std::exp(-0.5 * xi * xi) * hermite_value(n, xi);
}

}  // namespace fho
