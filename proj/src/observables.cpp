#include "fho/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace fho {

std::vector<double> probabilities(const std::vector<Complex>& coeffs) {
    std::vector<double> p(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) p[k] = std::norm(coeffs[k]);
    return p;
}

double entropy(const std::vector<double>& p) {
    double s = 0.0;
    for (double pk : p) {
        if (pk < 0.0) throw std::invalid_argument("negative probability");
        if (pk > 0.0) s -= pk * std::log(pk);
    }
    return s;
}

double energy_expectation(const std::vector<double>& p, const OscillatorParams& params) {
    double n_mean = 0.0;
    for (size_t n = 0; n < p.size(); ++n) n_mean += double(n) * p[n];
    return params.hbar * params.omega0 * (n_mean + 0.5);
}

double time_average(const std::vector<double>& times, const std::vector<double>& values) {
    if (times.size() != values.size())
        throw std::invalid_argument("times and values must have equal length");
    if (times.size() < 2)
        throw std::invalid_argument("time average needs at least two samples");

    const double span = times.back() - times.front();
    if (!(span > 0.0)) throw std::invalid_argument("times must be increasing");
    const double dt = span / double(times.size() - 1);
    for (size_t i = 1; i < times.size(); ++i) {
        const double step = times[i] - times[i - 1];
        if (std::abs(step - dt) > 1e-9 * dt)
            throw std::invalid_argument("time average requires a uniform grid");
    }

    double acc = 0.5 * (values.front() + values.back());
    for (size_t i = 1; i + 1 < values.size(); ++i) acc += values[i];
    return acc * dt / span;
}

}  // namespace fho
