#include "fho/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace fho {

DriveCase drive_case_for(const OscillatorParams& p) {
    return p.is_resonant() ? DriveCase::Resonant : DriveCase::NonResonant;
}

namespace {

void check_case(const OscillatorParams& p, DriveCase c) {
    p.validate();
    if (c == DriveCase::NonResonant && p.omega == p.omega0)
        throw std::invalid_argument("non-resonant branch requested with omega == omega0");
}

}  // namespace

DriveShape drive_shape(const OscillatorParams& p, DriveCase c) {
    check_case(p, c);
    DriveShape d;
    d.secular_slope = p.alpha / (2.0 * p.mass * p.omega0);
    d.b = p.alpha / (2.0 * p.mass * p.omega0 * p.omega0);
    if (c == DriveCase::NonResonant) {
        const double det = p.omega0 * p.omega0 - p.omega * p.omega;
        d.A = p.alpha / (p.mass * det);
        d.B = p.alpha * p.omega / (p.mass * p.omega0 * det);
    }
    return d;
}

ClassicalState trajectory(const OscillatorParams& p, const IntegrationConstants& ic,
                          double t, DriveCase c) {
    const DriveShape d = drive_shape(p, c);
    const double c0 = std::cos(p.omega0 * t);
    const double s0 = std::sin(p.omega0 * t);
    ClassicalState s;
    s.t = t;
    if (c == DriveCase::NonResonant) {
        const double cd = std::cos(p.omega * t + p.phi);
        const double sd = std::sin(p.omega * t + p.phi);
        s.x = ic.c1 * c0 + ic.c2 * s0 + d.A * cd;
        s.v = -ic.c1 * p.omega0 * s0 + ic.c2 * p.omega0 * c0 - d.A * p.omega * sd;
    } else {
        const double cd = std::cos(p.omega0 * t + p.phi);
        const double sd = std::sin(p.omega0 * t + p.phi);
        s.x = ic.c1 * c0 + ic.c2 * s0 + d.a(t) * sd;
        s.v = -ic.c1 * p.omega0 * s0 + ic.c2 * p.omega0 * c0 + d.secular_slope * sd +
              d.a(t) * p.omega0 * cd;
    }
    return s;
}

IntegrationConstants integration_constants(const OscillatorParams& p,
                                           const ClassicalState& s, DriveCase c) {
    const DriveShape d = drive_shape(p, c);
    const double c0 = std::cos(p.omega0 * s.t);
    const double s0 = std::sin(p.omega0 * s.t);
    IntegrationConstants ic;
    if (c == DriveCase::NonResonant) {
        const double cd = std::cos(p.omega * s.t + p.phi);
        const double sd = std::sin(p.omega * s.t + p.phi);
        const double r = p.omega / p.omega0;
        ic.c1 = s.x * c0 - (s.v / p.omega0) * s0 - d.A * (cd * c0 + r * sd * s0);
        ic.c2 = s.x * s0 + (s.v / p.omega0) * c0 - d.A * (cd * s0 - r * sd * c0);
    } else {
        const double cd = std::cos(p.omega0 * s.t + p.phi);
        const double sd = std::sin(p.omega0 * s.t + p.phi);
        const double g = p.alpha / (2.0 * p.mass * p.omega0);
        ic.c1 = s.x * c0 - (s.v / p.omega0) * s0 +
                g * (-s.t * sd * c0 + s.t * cd * s0 + sd * s0 / p.omega0);
        ic.c2 = s.x * s0 + (s.v / p.omega0) * c0 -
                g * (s.t * sd * s0 + s.t * cd * c0 + sd * c0 / p.omega0);
    }
    return ic;
}

double constant_of_motion(const OscillatorParams& p, const ClassicalState& s, DriveCase c) {
    const IntegrationConstants ic = integration_constants(p, s, c);
    return 0.5 * p.mass * p.omega0 * p.omega0 * (ic.c1 * ic.c1 + ic.c2 * ic.c2);
}

double oscillator_energy(const OscillatorParams& p, const ClassicalState& s) {
    return 0.5 * p.mass * s.v * s.v + 0.5 * p.mass * p.omega0 * p.omega0 * s.x * s.x;
}

double perturbation_w(const OscillatorParams& p, const ClassicalState& s, DriveCase c) {
    const DriveShape d = drive_shape(p, c);
    const double half_mw2 = 0.5 * p.mass * p.omega0 * p.omega0;
    if (c == DriveCase::NonResonant) {
        const double cd = std::cos(p.omega * s.t + p.phi);
        const double sd = std::sin(p.omega * s.t + p.phi);
        return half_mw2 * (d.A * d.A * cd * cd - 2.0 * d.A * s.x * cd + d.B * d.B * sd * sd +
                           2.0 * d.B * s.v * sd / p.omega0);
    }
    const double cd = std::cos(p.omega0 * s.t + p.phi);
    const double sd = std::sin(p.omega0 * s.t + p.phi);
    const double a = d.a(s.t);
    return half_mw2 * (a * a - 2.0 * a * s.v * cd / p.omega0 - 2.0 * d.b * s.v * sd / p.omega0 +
                       2.0 * a * d.b * cd * sd - 2.0 * a * s.x * sd + d.b * d.b * sd * sd);
}

std::vector<ClassicalState> integrate_newton(const OscillatorParams& p, double x0, double v0,
                                             double t_end, double dt, int stride) {
    p.validate();
    if (!(t_end > 0.0) || !(dt > 0.0)) throw std::invalid_argument("t_end and dt must be positive");
    if (stride < 1) throw std::invalid_argument("stride must be at least 1");

    const double w2 = p.omega0 * p.omega0;
    const double am = p.alpha / p.mass;
    auto accel = [&](double x, double t) { return -w2 * x + am * std::cos(p.omega * t + p.phi); };

    const long long steps = std::llround(t_end / dt);
    std::vector<ClassicalState> out;
    out.reserve(static_cast<size_t>(steps / stride) + 2);
    double x = x0, v = v0;
    out.push_back({x, v, 0.0});
    for (long long i = 0; i < steps; ++i) {
        const double t = i * dt;
        const double k1x = v, k1v = accel(x, t);
        const double k2x = v + 0.5 * dt * k1v, k2v = accel(x + 0.5 * dt * k1x, t + 0.5 * dt);
        const double k3x = v + 0.5 * dt * k2v, k3v = accel(x + 0.5 * dt * k2x, t + 0.5 * dt);
        const double k4x = v + dt * k3v, k4v = accel(x + dt * k3x, t + dt);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if ((i + 1) % stride == 0 || i + 1 == steps)
            out.push_back({x, v, (i + 1) * dt});
    }
    return out;
}

}  // namespace fho
