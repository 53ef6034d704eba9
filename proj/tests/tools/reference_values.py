#!/usr/bin/env python3
"""High-precision reference values for the frozen test constants.

Evaluates the coupling-constant formulas with mpmath at 60 digits and
prints them rounded to double precision. Test files quote these outputs.
"""
import mpmath as mp

mp.mp.dps = 60

# Scenario constants (proton in a GHz trap, CODATA-2018 hbar)
HBAR = mp.mpf('1.054571817e-34')
MASS = mp.mpf('1.6726219e-27')
OMEGA0 = 2 * mp.pi * mp.mpf('1e9')
ALPHA = mp.mpf('1e-13')

def lam(alpha, m, w0, hbar):
    return alpha * mp.sqrt(hbar / (2 * m * w0))

def epsilon(alpha, m, w0, hbar):
    return lam(alpha, m, w0, hbar) / (hbar * w0)

def nonresonant_couplings(alpha, m, w0, w, hbar):
    det = w0**2 - w**2
    a1 = alpha**2 * w0**2 / (2 * m * hbar * det**2)
    b1 = alpha**2 * w**2 / (2 * m * hbar * det**2)
    c = alpha * w0**2 / det / mp.sqrt(2 * m * hbar * w0)
    d = alpha * w / det * mp.sqrt(w0 / (2 * m * hbar))
    return a1, b1, c, d

def resonant_fgh(alpha, m, w0, hbar, t, phi):
    s = mp.sin(w0 * t + phi)
    c = mp.cos(w0 * t + phi)
    f = alpha**2 / (8 * m * hbar * w0**2) * s**2 \
        + alpha**2 * t / (4 * m * hbar * w0) * c * s
    g = alpha / (2 * mp.sqrt(2 * m * hbar * w0)) * (s + w0 * t * c)
    h = alpha / (2 * mp.sqrt(2 * m * hbar * w0)) * w0 * t * s
    return f, g, h

def p(name, v):
    print(f"{name} = {mp.nstr(v, 17)}")

print("# scale_to_dimensionless at scenario constants")
p("lambda [J]", lam(ALPHA, MASS, OMEGA0, HBAR))
p("epsilon = lambda/(hbar*omega0)", epsilon(ALPHA, MASS, OMEGA0, HBAR))

print("\n# non-resonant couplings at omega = 0.9*omega0 [rad/s]")
a1, b1, c, d = nonresonant_couplings(ALPHA, MASS, OMEGA0, mp.mpf('0.9') * OMEGA0, HBAR)
p("a1", a1); p("b1", b1); p("c", c); p("d", d)
print("# dimensionless (divided by omega0)")
p("a1/w0", a1 / OMEGA0); p("b1/w0", b1 / OMEGA0)
p("c/w0", c / OMEGA0); p("d/w0", d / OMEGA0)

print("\n# resonant f,g,h at t = pi/(2*omega0), phi = 0 [rad/s]")
f, g, h = resonant_fgh(ALPHA, MASS, OMEGA0, HBAR, mp.pi / (2 * OMEGA0), 0)
p("f", f); p("g", g); p("h", h)
p("f/w0", f / OMEGA0); p("g/w0", g / OMEGA0); p("h/w0", h / OMEGA0)

print("\n# misc")
p("ln(11)", mp.log(11))
p("hbar*omega0 [J]", HBAR * OMEGA0)
