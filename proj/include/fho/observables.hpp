#pragma once

#include <vector>

#include "fho/model.hpp"

namespace fho {

/// p_k = |D_k|^2.
std::vector<double> probabilities(const std::vector<Complex>& coeffs);

/// Boltzmann-Shannon entropy S = -sum p_k ln p_k in nats, with 0 ln 0 = 0.
double entropy(const std::vector<double>& p);

/// <E> = hbar w0 (sum_n n p_n + 1/2)  [J]
double energy_expectation(const std::vector<double>& p, const OscillatorParams& params);

/// (1/T) integral of f over the sampled interval by the trapezoid rule.
/// Requires at least two samples on a uniform grid.
double time_average(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace fho
