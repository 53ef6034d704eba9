#pragma once

#include <vector>

#include "fho/model.hpp"

namespace fho {

/// Closed-form coherent displacement of the driven oscillator started in the
/// ground state (canonical quantization, untruncated):
///   eta(tau) = i eps Int_0^tau cos(w sigma + phi) e^{i sigma} d sigma,
/// with the sign convention of the drive potential -alpha x cos(w t + phi).
/// Populations depend only on |eta|.
Complex coherent_displacement(const ScaledParams& sp, double tau);

/// Poisson populations P_n = e^{-|eta|^2} |eta|^{2n} / n! of a coherent
/// state, restricted to the first n_states levels.
std::vector<double> coherent_populations(Complex eta, int n_states);

}  // namespace fho
