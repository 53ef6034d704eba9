#include "fho/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fho {

std::string scheme_name(SchemeKind s) {
    switch (s) {
        case SchemeKind::KNonResonant: return "K-nonresonant";
        case SchemeKind::KResonant: return "K-resonant";
        case SchemeKind::Hamiltonian: return "H-hamiltonian";
    }
    return "unknown";
}

double CoefficientState::norm_squared() const {
    double n = 0.0;
    for (const Complex& c : coeffs) n += std::norm(c);
    return n;
}

CoefficientState ground_state(int n_states) {
    Truncation{n_states}.validate();
    CoefficientState s;
    s.coeffs.assign(static_cast<size_t>(n_states), Complex{0.0, 0.0});
    s.coeffs[0] = Complex{1.0, 0.0};
    return s;
}

NonresonantCouplings couplings_nonresonant(const OscillatorParams& p) {
    p.validate();
    if (p.omega == p.omega0)
        throw std::invalid_argument("non-resonant couplings undefined at omega == omega0");
    const double det = p.omega0 * p.omega0 - p.omega * p.omega;
    const double root = std::sqrt(2.0 * p.mass * p.hbar * p.omega0);
    NonresonantCouplings k;
    k.a1 = (p.alpha / det) * (p.alpha / det) * p.omega0 * p.omega0 / (2.0 * p.mass * p.hbar);
    k.b1 = (p.alpha / det) * (p.alpha / det) * p.omega * p.omega / (2.0 * p.mass * p.hbar);
    k.c = p.alpha * p.omega0 * p.omega0 / det / root;
    k.d = p.alpha * p.omega / det * p.omega0 / root;
    return k;
}

ResonantCouplings resonant_fgh(const OscillatorParams& p, double t) {
    p.validate();
    const double s = std::sin(p.omega0 * t + p.phi);
    const double c = std::cos(p.omega0 * t + p.phi);
    const double root = std::sqrt(2.0 * p.mass * p.hbar * p.omega0);
    ResonantCouplings k;
    k.f = p.alpha * p.alpha / (8.0 * p.mass * p.hbar * p.omega0 * p.omega0) * s * s +
          p.alpha * p.alpha * t / (4.0 * p.mass * p.hbar * p.omega0) * c * s;
    k.g = p.alpha / (2.0 * root) * (s + p.omega0 * t * c);
    k.h = p.alpha / (2.0 * root) * p.omega0 * t * s;
    return k;
}

double lambda_coupling(const OscillatorParams& p) {
    p.validate();
    return p.alpha * std::sqrt(p.hbar / (2.0 * p.mass * p.omega0));
}

void resonant_phase_transform(std::vector<Complex>& coeffs, const ScaledParams& sp,
                              double tau, PhaseDirection dir) {
    // D_k = e^{-i theta} Dtilde_k with theta = eps^2 tau^3 / 12
    const double theta = sp.epsilon * sp.epsilon * tau * tau * tau / 12.0;
    const double sign = (dir == PhaseDirection::Forward) ? +1.0 : -1.0;
    const Complex phase = std::polar(1.0, sign * theta);
    for (Complex& c : coeffs) c *= phase;
}

SchemeRhs::SchemeRhs(SchemeKind scheme, const ScaledParams& sp, int n_states)
    : scheme_(scheme), n_(n_states), eps_(sp.epsilon), eps2_(sp.epsilon * sp.epsilon),
      w_(sp.omega_ratio), phi_(sp.phi) {
    Truncation{n_states}.validate();
    if (scheme == SchemeKind::KNonResonant) {
        if (w_ == 1.0)
            throw std::invalid_argument("K-nonresonant scheme configured with omega == omega0");
        const double det = 1.0 - w_ * w_;
        a1_ = eps2_ / (det * det);
        b1_ = eps2_ * w_ * w_ / (det * det);
        c_ = eps_ / det;
        d_ = eps_ * w_ / det;
    } else if (scheme == SchemeKind::KResonant) {
        if (w_ != 1.0)
            throw std::invalid_argument("K-resonant scheme configured with omega != omega0");
    }
    root_.resize(static_cast<size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k) root_[static_cast<size_t>(k)] = std::sqrt(double(k));
}

void SchemeRhs::operator()(double tau, const Complex* d, Complex* out) const {
    const double c0 = std::cos(tau);
    const double s0 = std::sin(tau);
    switch (scheme_) {
        case SchemeKind::KNonResonant: {
            const double cd = std::cos(w_ * tau + phi_);
            const double sd = std::sin(w_ * tau + phi_);
            const double diag = a1_ * cd * cd + b1_ * sd * sd;
            const double cc = c_ * cd;
            const double dd = d_ * sd;
            for (int k = 0; k < n_; ++k) {
                const double xk = d[k].real(), yk = d[k].imag();
                double dx = diag * yk;
                double dy = -diag * xk;
                if (k > 0) {
                    const double r = root_[static_cast<size_t>(k)];
                    const double xm = d[k - 1].real(), ym = d[k - 1].imag();
                    dx += -cc * r * (c0 * ym + s0 * xm) + dd * r * (c0 * xm - s0 * ym);
                    dy += cc * r * (c0 * xm - s0 * ym) + dd * r * (c0 * ym + s0 * xm);
                }
                if (k + 1 < n_) {
                    const double r = root_[static_cast<size_t>(k) + 1];
                    const double xp = d[k + 1].real(), yp = d[k + 1].imag();
                    dx += -cc * r * (c0 * yp - s0 * xp) - dd * r * (c0 * xp + s0 * yp);
                    dy += cc * r * (c0 * xp + s0 * yp) - dd * r * (c0 * yp - s0 * xp);
                }
                out[k] = Complex{dx, dy};
            }
            break;
        }
        case SchemeKind::KResonant: {
            const double sp_ = std::sin(tau + phi_);
            const double cp = std::cos(tau + phi_);
            const double f = 0.25 * eps2_ * sp_ * sp_ + 0.5 * eps2_ * tau * cp * sp_;
            const double g = 0.5 * eps_ * (sp_ + tau * cp);
            const double h = 0.5 * eps_ * tau * sp_;
            for (int k = 0; k < n_; ++k) {
                const double xk = d[k].real(), yk = d[k].imag();
                double dx = f * yk;
                double dy = -f * xk;
                if (k > 0) {
                    const double r = root_[static_cast<size_t>(k)];
                    const double xm = d[k - 1].real(), ym = d[k - 1].imag();
                    dx += -r * ((h * xm - g * ym) * s0 + (h * ym + g * xm) * c0);
                    dy += r * ((h * xm - g * ym) * c0 - (h * ym + g * xm) * s0);
                }
                if (k + 1 < n_) {
                    const double r = root_[static_cast<size_t>(k) + 1];
                    const double xp = d[k + 1].real(), yp = d[k + 1].imag();
                    dx += r * ((h * xp + g * yp) * s0 - (h * yp - g * xp) * c0);
                    dy += r * ((h * xp + g * yp) * c0 + (h * yp - g * xp) * s0);
                }
                out[k] = Complex{dx, dy};
            }
            break;
        }
        case SchemeKind::Hamiltonian: {
            const double lc = eps_ * std::cos(w_ * tau + phi_);
            const double ls = lc * s0;
            const double lco = lc * c0;
            for (int k = 0; k < n_; ++k) {
                double dx = 0.0, dy = 0.0;
                if (k > 0) {
                    const double r = root_[static_cast<size_t>(k)];
                    const double xm = d[k - 1].real(), ym = d[k - 1].imag();
                    dx += -ls * r * xm - lco * r * ym;
                    dy += -ls * r * ym + lco * r * xm;
                }
                if (k + 1 < n_) {
                    const double r = root_[static_cast<size_t>(k) + 1];
                    const double xp = d[k + 1].real(), yp = d[k + 1].imag();
                    dx += ls * r * xp - lco * r * yp;
                    dy += ls * r * yp + lco * r * xp;
                }
                out[k] = Complex{dx, dy};
            }
            break;
        }
    }
}

LadderMatrixRhs::LadderMatrixRhs(SchemeKind scheme, const ScaledParams& sp, int n_states)
    : scheme_(scheme), n_(n_states), eps_(sp.epsilon), w_(sp.omega_ratio), phi_(sp.phi) {
    Truncation{n_states}.validate();
    if (n_states > kMaxStates)
        throw std::invalid_argument("ladder-matrix oracle supports at most 64 states");
    if (scheme == SchemeKind::KNonResonant && w_ == 1.0)
        throw std::invalid_argument("K-nonresonant scheme configured with omega == omega0");
    if (scheme == SchemeKind::KResonant && w_ != 1.0)
        throw std::invalid_argument("K-resonant scheme configured with omega != omega0");
    ladder_.resize(static_cast<size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k) ladder_[static_cast<size_t>(k)] = std::sqrt(double(k));
    wbuf_.resize(static_cast<size_t>(n_) * static_cast<size_t>(n_));
    phase_.resize(static_cast<size_t>(n_));
}

void LadderMatrixRhs::coupling_matrix(double tau, std::vector<Complex>& w) const {
    w.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), Complex{0.0, 0.0});

    // Scalar diagonal, coefficient of x = a + adag, coefficient of
    // v = i (adag - a); everything in units of hbar w0.
    double diag = 0.0, wx = 0.0, wv = 0.0;
    switch (scheme_) {
        case SchemeKind::KNonResonant: {
            const double cd = std::cos(w_ * tau + phi_);
            const double sd = std::sin(w_ * tau + phi_);
            const double det = 1.0 - w_ * w_;
            const double a1 = eps_ * eps_ / (det * det);
            const double b1 = a1 * w_ * w_;
            diag = a1 * cd * cd + b1 * sd * sd;
            wx = -(eps_ / det) * cd;
            wv = (eps_ * w_ / det) * sd;
            break;
        }
        case SchemeKind::KResonant: {
            const double sd = std::sin(tau + phi_);
            const double cd = std::cos(tau + phi_);
            const double at = 0.5 * eps_ * tau;   // a(t) in ladder units
            const double bt = 0.5 * eps_;         // b in ladder units
            // Full scalar a^2 + 2ab cos sin + b^2 sin^2, then remove the
            // quadratic drift a^2 absorbed by the phase transform.
            diag = at * at + 2.0 * at * bt * cd * sd + bt * bt * sd * sd;
            diag -= at * at;
            wx = -at * sd;
            wv = -(at * cd + bt * sd);
            break;
        }
        case SchemeKind::Hamiltonian: {
            // Drive potential -alpha x cos(w t + phi), the sign that makes
            // the Hamiltonian generate the classical forced equation.
            wx = -eps_ * std::cos(w_ * tau + phi_);
            wv = 0.0;
            break;
        }
    }

    const size_t n = static_cast<size_t>(n_);
    for (size_t m = 0; m < n; ++m) {
        w[m * n + m] = Complex{diag, 0.0};
        if (m + 1 < n) {
            const double r = ladder_[m + 1];  // sqrt(m+1)
            // <m|x|m+1> = r, <m|v|m+1> = -i r ; <m+1|x|m> = r, <m+1|v|m> = +i r
            w[m * n + (m + 1)] = Complex{wx * r, -wv * r};
            w[(m + 1) * n + m] = Complex{wx * r, wv * r};
        }
    }
}

double LadderMatrixRhs::hermiticity_residual(double tau) const {
    coupling_matrix(tau, wbuf_);
    const size_t n = static_cast<size_t>(n_);
    double res = 0.0;
    for (size_t m = 0; m < n; ++m)
        for (size_t k = 0; k < n; ++k)
            res = std::max(res, std::abs(wbuf_[m * n + k] - std::conj(wbuf_[k * n + m])));
    return res;
}

void LadderMatrixRhs::operator()(double tau, const Complex* d, Complex* out) const {
    coupling_matrix(tau, wbuf_);
    const size_t n = static_cast<size_t>(n_);
    for (size_t m = 0; m < n; ++m) phase_[m] = std::polar(1.0, double(m) * tau);
    // dD_m/dtau = -i sum_n e^{i(m-n) tau} W_mn D_n
    for (size_t m = 0; m < n; ++m) {
        Complex acc{0.0, 0.0};
        for (size_t k = 0; k < n; ++k)
            acc += phase_[m] * std::conj(phase_[k]) * wbuf_[m * n + k] * d[k];
        out[m] = Complex{0.0, -1.0} * acc;
    }
}

namespace {

template <typename Rhs>
std::vector<Complex> eval_rhs(const Rhs& rhs, const CoefficientState& s) {
    if (static_cast<int>(s.coeffs.size()) != rhs.size())
        throw std::invalid_argument("state dimension does not match n_states");
    std::vector<Complex> out(s.coeffs.size());
    rhs(s.tau, s.coeffs.data(), out.data());
    return out;
}

}  // namespace

std::vector<Complex> rhs_k_nonresonant(const CoefficientState& s, const ScaledParams& sp) {
    return eval_rhs(SchemeRhs(SchemeKind::KNonResonant, sp, static_cast<int>(s.coeffs.size())), s);
}

std::vector<Complex> rhs_k_resonant(const CoefficientState& s, const ScaledParams& sp) {
    return eval_rhs(SchemeRhs(SchemeKind::KResonant, sp, static_cast<int>(s.coeffs.size())), s);
}

std::vector<Complex> rhs_hamiltonian(const CoefficientState& s, const ScaledParams& sp) {
    return eval_rhs(SchemeRhs(SchemeKind::Hamiltonian, sp, static_cast<int>(s.coeffs.size())), s);
}

std::vector<Complex> oracle_rhs(const CoefficientState& s, const ScaledParams& sp,
                                SchemeKind scheme) {
    return eval_rhs(LadderMatrixRhs(scheme, sp, static_cast<int>(s.coeffs.size())), s);
}

CoefficientState rk4_step(const CoefficientState& s, const ScaledParams& sp,
                          SchemeKind scheme, double dtau) {
    if (!(dtau > 0.0)) throw std::invalid_argument("dtau must be positive");
    SchemeRhs rhs(scheme, sp, static_cast<int>(s.coeffs.size()));
    Rk4Workspace work;
    work.resize(s.coeffs.size());
    CoefficientState next = s;
    rk4_step(rhs, s.tau, dtau, next.coeffs, work);
    next.tau = s.tau + dtau;
    for (const Complex& c : next.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NumericalAbort("non-finite coefficient after RK4 step", 0.0, dtau / 10.0);
    return next;
}

Trajectory integrate(const std::vector<Complex>& initial, const ScaledParams& sp,
                     SchemeKind scheme, const IntegrationOptions& opt) {
    if (!(opt.tau_end > 0.0)) throw std::invalid_argument("tau_end must be positive");
    if (!(opt.dtau > 0.0)) throw std::invalid_argument("dtau must be positive");
    if (opt.stride < 1) throw std::invalid_argument("stride must be at least 1");

    SchemeRhs rhs(scheme, sp, static_cast<int>(initial.size()));

    double norm0 = 0.0;
    for (const Complex& c : initial) norm0 += std::norm(c);
    if (std::abs(norm0 - 1.0) > 1e-9)
        throw std::invalid_argument("initial state is not normalized");

    long long steps = std::llround(opt.tau_end / opt.dtau);
    if (steps < 1) steps = 1;

    Trajectory traj;
    traj.steps = steps;
    traj.dtau = opt.dtau;
    traj.tau.reserve(static_cast<size_t>(steps / opt.stride) + 2);
    traj.states.reserve(static_cast<size_t>(steps / opt.stride) + 2);

    std::vector<Complex> y = initial;
    Rk4Workspace work;
    work.resize(y.size());

    auto record = [&](long long step) {
        double n2 = 0.0;
        bool finite = true;
        for (const Complex& c : y) {
            n2 += std::norm(c);
            finite = finite && std::isfinite(c.real()) && std::isfinite(c.imag());
        }
        const double err = std::abs(n2 - 1.0);
        traj.max_norm_error = std::max(traj.max_norm_error, err);
        if (!finite || err > opt.norm_abort) {
            std::ostringstream msg;
            msg << scheme_name(rhs.scheme()) << ": norm drift " << err << " at tau = "
                << step * opt.dtau << " exceeds " << opt.norm_abort
                << "; reduce the step (try dtau <= " << opt.dtau / 10.0 << ")";
            throw NumericalAbort(msg.str(), err, opt.dtau / 10.0);
        }
        traj.tau.push_back(step * opt.dtau);
        traj.states.push_back(y);
    };

    record(0);
    for (long long i = 0; i < steps; ++i) {
        rk4_step(rhs, double(i) * opt.dtau, opt.dtau, y, work);
        if ((i + 1) % opt.stride == 0 || i + 1 == steps) record(i + 1);
    }
    return traj;
}

double coupling_scale(const ScaledParams& sp, SchemeKind scheme, int n_states, double tau_end) {
    const double eps = sp.epsilon;
    const double rn = 2.0 * std::sqrt(double(n_states));
    switch (scheme) {
        case SchemeKind::KNonResonant: {
            const double det = std::abs(1.0 - sp.omega_ratio * sp.omega_ratio);
            const double c = eps / det;
            const double d = eps * sp.omega_ratio / det;
            const double a1 = eps * eps / (det * det);
            const double b1 = a1 * sp.omega_ratio * sp.omega_ratio;
            return a1 + b1 + rn * (c + d);
        }
        case SchemeKind::KResonant: {
            const double g = 0.5 * eps * (1.0 + tau_end);
            const double h = 0.5 * eps * tau_end;
            const double f = 0.25 * eps * eps * (1.0 + tau_end);
            return f + rn * (g + h);
        }
        case SchemeKind::Hamiltonian:
            return rn * eps;
    }
    return eps;
}

double stable_dtau(const ScaledParams& sp, SchemeKind scheme, int n_states, double tau_end,
                   double dtau_max) {
    const double kappa = coupling_scale(sp, scheme, n_states, tau_end);
    if (kappa <= 0.0) return dtau_max;
    return std::min(dtau_max, 0.005 / kappa);
}

}  // namespace fho
