#include "fho/oracles.hpp"

#include <cmath>

namespace fho {

Complex coherent_displacement(const ScaledParams& sp, double tau) {
    const double w = sp.omega_ratio;
    const Complex i{0.0, 1.0};
    const Complex ep = std::polar(1.0, sp.phi);
    // Int_0^tau cos(w s + phi) e^{i s} ds split into e^{i(1+w)s} and
    // e^{i(1-w)s} halves; the 1-w half degenerates to s at resonance.
    const Complex plus = (std::polar(1.0, (1.0 + w) * tau) - 1.0) / (i * (1.0 + w)) * ep;
    Complex minus;
    if (w == 1.0) {
        minus = Complex{tau, 0.0} * std::conj(ep);
    } else {
        minus = (std::polar(1.0, (1.0 - w) * tau) - 1.0) / (i * (1.0 - w)) * std::conj(ep);
    }
    return i * sp.epsilon * 0.5 * (plus + minus);
}

std::vector<double> coherent_populations(Complex eta, int n_states) {
    Truncation{n_states}.validate();
    const double n2 = std::norm(eta);
    std::vector<double> p(static_cast<size_t>(n_states));
    double term = std::exp(-n2);  // P_0
    p[0] = term;
    for (int n = 1; n < n_states; ++n) {
        term *= n2 / double(n);
        p[static_cast<size_t>(n)] = term;
    }
    return p;
}

}  // namespace fho
