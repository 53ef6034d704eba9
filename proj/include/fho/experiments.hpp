#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fho/dynamics.hpp"
#include "fho/model.hpp"

namespace fho {

/// A fully specified run: parameters, scheme, truncation and grid.
/// Times are SI seconds at this boundary; the integrator works in tau = w0 t.
struct Scenario {
    OscillatorParams params;
    SchemeKind scheme = SchemeKind::Hamiltonian;
    int n_states = 12;
    double t_end = 0.0;   // [s]; <= 0 means 50 natural periods
    double dt = 0.0;      // [s]; <= 0 means w0 dt = 1e-3
    int stride = 10;
    std::vector<Complex> initial;  // empty means ground state

    void resolve_defaults();
    void validate() const;

    // Step count rounded up to a stride multiple so the sample grid is
    // uniform; t_end is adjusted accordingly (echoed in manifests).
    long long total_steps() const;
};

struct ObservableSeries {
    std::vector<double> t;                            // [s]
    std::vector<std::vector<double>> probabilities;   // [sample][k]
    std::vector<double> entropy_nats;
    std::vector<double> energy_joule;
    std::vector<double> norm;                         // sum |D_k|^2
    double max_norm_error = 0.0;
    long long steps = 0;
    double dt = 0.0;  // [s]

    double average_entropy() const;
    double average_energy() const;
};

ObservableSeries run_scenario(const Scenario& sc);

/// Sign changes of the finite-difference derivative of a sampled signal,
/// ignoring increments below dead_band.
int count_oscillations(const std::vector<double>& signal, double dead_band = 1e-6);

struct SchemeComparison {
    double max_p0_difference = 0.0;
    int oscillations_a = 0;
    int oscillations_b = 0;
    double entropy_avg_a = 0.0, entropy_avg_b = 0.0;
    double energy_avg_a = 0.0, energy_avg_b = 0.0;
};

/// Runs two scenarios that must differ only in scheme and reports the
/// ground-state probability gap, oscillation counts and averaged observables.
SchemeComparison compare_schemes(const Scenario& a, const Scenario& b);

struct SweepRow {
    double alpha = 0.0;
    double entropy_avg_k = 0.0, entropy_avg_h = 0.0;
    double energy_avg_k = 0.0, energy_avg_h = 0.0;
    double dt = 0.0;            // effective step used for the row [s]
    std::string error;          // non-empty if either run of the row failed
};

struct SweepResult {
    std::vector<SweepRow> rows;

    bool any_failed() const;
};

/// One row per alpha, running the K scheme matching the base scenario's case
/// and the H scheme on a shared grid. The base step acts as an upper bound;
/// rows clamp it with stable_dtau so strongly driven rows stay integrable.
/// Rows are independent and may run on up to `jobs` threads; results are
/// ordered like the input list regardless of thread count.
SweepResult sweep_alpha(const Scenario& base, const std::vector<double>& alphas, int jobs = 1);

/// Named parameter presets for the reference scenario (proton, GHz trap).
std::optional<Scenario> preset_scenario(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace fho
