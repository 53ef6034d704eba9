#pragma once

#include <vector>

#include "fho/model.hpp"

namespace fho {

/// Which branch of the classical solution applies. The split is a
/// configuration choice: the non-resonant formulas divide by w0^2 - w^2.
enum class DriveCase { NonResonant, Resonant };

DriveCase drive_case_for(const OscillatorParams& p);

struct ClassicalState {
    double x = 0.0;  // [m]
    double v = 0.0;  // [m/s]
    double t = 0.0;  // [s]
};

/// Free-oscillation amplitudes C1, C2 [m]; constant along exact trajectories.
struct IntegrationConstants {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Drive-response constants of the particular solution:
///   non-resonant  x_p(t) = A cos(w t + phi),  B = A w / w0
///   resonant      x_p(t) = a(t) sin(w0 t + phi),  a(t) = alpha t / 2 m w0,
///                 b = alpha / 2 m w0^2
struct DriveShape {
    double A = 0.0;             // [m], non-resonant only
    double B = 0.0;             // [m], non-resonant only
    double secular_slope = 0.0; // da/dt = alpha / 2 m w0 [m/s]
    double b = 0.0;             // [m]

    double a(double t) const { return secular_slope * t; }
};

DriveShape drive_shape(const OscillatorParams& p, DriveCase c);

/// x(t), v(t) from the integration constants; v is the analytic derivative
/// of the matching branch. Throws if the non-resonant branch is requested
/// with w == w0.
ClassicalState trajectory(const OscillatorParams& p, const IntegrationConstants& ic,
                          double t, DriveCase c);

/// Inverse of trajectory(): recovers C1, C2 from a state at time t.
IntegrationConstants integration_constants(const OscillatorParams& p,
                                           const ClassicalState& s, DriveCase c);

/// K = (1/2) m w0^2 (C1^2 + C2^2)  [J]; constant of motion of the forced
/// oscillator, reduces to the oscillator energy as alpha -> 0.
double constant_of_motion(const OscillatorParams& p, const ClassicalState& s, DriveCase c);

/// K0 = (1/2) m v^2 + (1/2) m w0^2 x^2  [J]
double oscillator_energy(const OscillatorParams& p, const ClassicalState& s);

/// W such that K = K0 + W pointwise  [J]
double perturbation_w(const OscillatorParams& p, const ClassicalState& s, DriveCase c);

/// Fixed-step RK4 integration of Newton's equation
/// xdot = v, vdot = -w0^2 x + (alpha/m) cos(w t + phi); independent of the
/// closed-form solution, used as an oracle for K-invariance checks.
std::vector<ClassicalState> integrate_newton(const OscillatorParams& p, double x0, double v0,
                                             double t_end, double dt, int stride = 1);

}  // namespace fho
