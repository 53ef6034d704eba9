#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fho/model.hpp"

namespace fho {

/// Which coefficient system is integrated.
///  KNonResonant : (x,v) quantization of the constant of motion, w != w0
///  KResonant    : same with the secular resonant perturbation, w == w0,
///                 in the phase-transformed variables (quadratic drift removed)
///  Hamiltonian  : canonical (x,p) quantization with the dipole drive
enum class SchemeKind { KNonResonant, KResonant, Hamiltonian };

std::string scheme_name(SchemeKind s);

/// Truncated interaction-picture state: coefficients D_k at dimensionless
/// time tau = w0 t. Sum_k |D_k|^2 stays 1 up to integrator error because the
/// projected coupling matrix is Hermitian.
struct CoefficientState {
    double tau = 0.0;
    std::vector<Complex> coeffs;

    double norm_squared() const;
};

/// Ground-state start D_k(0) = delta_k0.
CoefficientState ground_state(int n_states);

/// Coupling constants of the non-resonant system [rad/s]:
///   a1 = alpha^2 w0^2 / (2 m hbar (w0^2-w^2)^2)
///   b1 = alpha^2 w^2  / (2 m hbar (w0^2-w^2)^2)
///   c  = alpha w0^2 / (w0^2-w^2) / sqrt(2 m hbar w0)
///   d  = alpha w / (w0^2-w^2) * sqrt(w0 / 2 m hbar)
struct NonresonantCouplings {
    double a1 = 0.0, b1 = 0.0, c = 0.0, d = 0.0;
};

NonresonantCouplings couplings_nonresonant(const OscillatorParams& p);

/// Time-dependent couplings of the resonant system [rad/s], evaluated at t:
///   f = alpha^2/(8 m hbar w0^2) sin^2(w0 t+phi)
///       + alpha^2 t/(4 m hbar w0) cos(w0 t+phi) sin(w0 t+phi)
///   g = alpha/(2 sqrt(2 m hbar w0)) [sin(w0 t+phi) + w0 t cos(w0 t+phi)]
///   h = alpha/(2 sqrt(2 m hbar w0)) w0 t sin(w0 t+phi)
struct ResonantCouplings {
    double f = 0.0, g = 0.0, h = 0.0;
};

ResonantCouplings resonant_fgh(const OscillatorParams& p, double t);

/// lambda = alpha sqrt(hbar / 2 m w0)  [J]
double lambda_coupling(const OscillatorParams& p);

enum class PhaseDirection { Forward, Backward };

/// Multiplies every coefficient by the phase exp(+-i eps^2 tau^3 / 12):
/// Forward maps the plain coefficients to the transformed ones, Backward
/// inverts it. Pure phase: probabilities are untouched and Forward followed
/// by Backward is the identity.
void resonant_phase_transform(std::vector<Complex>& coeffs, const ScaledParams& sp,
                              double tau, PhaseDirection dir);

/// Hand-coded right-hand sides of the three systems in dimensionless time,
/// dD/dtau. Allocation-free; one instance is safe to share across threads.
class SchemeRhs {
  public:
    SchemeRhs(SchemeKind scheme, const ScaledParams& sp, int n_states);

    void operator()(double tau, const Complex* d, Complex* out) const;
    int size() const { return n_; }
    SchemeKind scheme() const { return scheme_; }

  private:
    SchemeKind scheme_;
    int n_;
    double eps_, eps2_, w_, phi_;
    double a1_ = 0.0, b1_ = 0.0, c_ = 0.0, d_ = 0.0;  // non-resonant, in units of w0
    std::vector<double> root_;                        // root_[k] = sqrt(k)
};

/// Independent reconstruction of the same right-hand sides from the ladder
/// operator matrix elements of x and v: builds the truncated coupling matrix
/// W_mn(tau) numerically, applies the interaction-picture phases
/// e^{i (m-n) tau} and returns -i (phased W) D. For the resonant scheme the
/// quadratic scalar drift (eps tau / 2)^2 is removed from the diagonal to
/// match the phase-transformed variables. Holds mutable scratch: use one
/// instance per thread.
class LadderMatrixRhs {
  public:
    static constexpr int kMaxStates = 64;

    LadderMatrixRhs(SchemeKind scheme, const ScaledParams& sp, int n_states);

    void operator()(double tau, const Complex* d, Complex* out) const;
    int size() const { return n_; }

    /// Coupling matrix in units of hbar w0, row-major, no phases applied.
    void coupling_matrix(double tau, std::vector<Complex>& w) const;

    /// max_mn |W_mn - conj(W_nm)| at time tau.
    double hermiticity_residual(double tau) const;

  private:
    SchemeKind scheme_;
    int n_;
    double eps_, w_, phi_;
    std::vector<double> ladder_;  // sqrt(k)
    mutable std::vector<Complex> wbuf_, phase_;
};

/// Vector-returning wrappers over SchemeRhs / LadderMatrixRhs.
std::vector<Complex> rhs_k_nonresonant(const CoefficientState& s, const ScaledParams& sp);
std::vector<Complex> rhs_k_resonant(const CoefficientState& s, const ScaledParams& sp);
std::vector<Complex> rhs_hamiltonian(const CoefficientState& s, const ScaledParams& sp);
std::vector<Complex> oracle_rhs(const CoefficientState& s, const ScaledParams& sp,
                                SchemeKind scheme);

struct Rk4Workspace {
    std::vector<Complex> k1, k2, k3, k4, tmp;

    void resize(size_t n) {
        k1.resize(n); k2.resize(n); k3.resize(n); k4.resize(n); tmp.resize(n);
    }
};

/// Classical RK4 update of y over [tau, tau+dtau]; local error O(dtau^5).
template <typename Rhs>
void rk4_step(Rhs&& rhs, double tau, double dtau, std::vector<Complex>& y, Rk4Workspace& w) {
    const size_t n = y.size();
    rhs(tau, y.data(), w.k1.data());
    for (size_t i = 0; i < n; ++i) w.tmp[i] = y[i] + 0.5 * dtau * w.k1[i];
    rhs(tau + 0.5 * dtau, w.tmp.data(), w.k2.data());
    for (size_t i = 0; i < n; ++i) w.tmp[i] = y[i] + 0.5 * dtau * w.k2[i];
    rhs(tau + 0.5 * dtau, w.tmp.data(), w.k3.data());
    for (size_t i = 0; i < n; ++i) w.tmp[i] = y[i] + dtau * w.k3[i];
    rhs(tau + dtau, w.tmp.data(), w.k4.data());
    const double s = dtau / 6.0;
    for (size_t i = 0; i < n; ++i)
        y[i] += s * (w.k1[i] + 2.0 * (w.k2[i] + w.k3[i]) + w.k4[i]);
}

/// Single-step convenience wrapper; throws on non-finite output.
CoefficientState rk4_step(const CoefficientState& s, const ScaledParams& sp,
                          SchemeKind scheme, double dtau);

/// Thrown when an integration loses normalization or produces non-finite
/// coefficients; carries a step-size suggestion.
class NumericalAbort : public std::runtime_error {
  public:
    NumericalAbort(const std::string& msg, double norm_error, double suggested_dtau)
        : std::runtime_error(msg), norm_error_(norm_error), suggested_dtau_(suggested_dtau) {}

    double norm_error() const { return norm_error_; }
    double suggested_dtau() const { return suggested_dtau_; }

  private:
    double norm_error_;
    double suggested_dtau_;
};

struct IntegrationOptions {
    double tau_end = 0.0;
    double dtau = 1e-3;
    int stride = 10;            // record every stride-th step
    double norm_abort = 1e-6;   // abort threshold on |sum |D|^2 - 1|
};

struct Trajectory {
    std::vector<double> tau;
    std::vector<std::vector<Complex>> states;
    double max_norm_error = 0.0;  // max |sum |D|^2 - 1| over samples
    long long steps = 0;
    double dtau = 0.0;
};

/// Fixed-step RK4 run sampling every `stride` steps. Never renormalizes:
/// norm drift is a diagnostic of integrator quality, not a correction.
Trajectory integrate(const std::vector<Complex>& initial, const ScaledParams& sp,
                     SchemeKind scheme, const IntegrationOptions& opt);

/// Upper bound on the coupling-matrix magnitude (in units of w0) over
/// [0, tau_end]; dtau must keep coupling_scale * dtau small for RK4 to hold
/// norm. Used to clamp step sizes for strongly driven runs.
double coupling_scale(const ScaledParams& sp, SchemeKind scheme, int n_states, double tau_end);

/// Largest step with coupling_scale * dtau <= 0.005, capped at dtau_max.
double stable_dtau(const ScaledParams& sp, SchemeKind scheme, int n_states, double tau_end,
                   double dtau_max);

}  // namespace fho
