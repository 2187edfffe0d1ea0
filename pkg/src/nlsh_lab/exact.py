"""Closed-form standing waves of NLS and its hyperbolic relaxation.

The standing-wave ansatz q(x,t) = exp(i*mu*t) * qtilde(x) reduces the
relaxed system to the planar ODE

    qtilde0' = (1 - mu*tau) * qtilde1
    qtilde1' = (mu - kappa*qtilde0^2) * qtilde0

whose homoclinic (focusing) and heteroclinic (defocusing) orbits give
sech-type solitary waves and tanh-type fronts in closed form. At tau = 0
these reduce to the NLS ground states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class StandingWaveParams:
    """Frequency mu, nonlinearity kappa, relaxation tau (0 = NLS limit),
    branch sign, and the phase-shift constant (K1 for solitary waves,
    K0 for fronts)."""

    mu: float
    kappa: float
    tau: float = 0.0
    branch: int = +1
    k_const: float = 0.0

    def __post_init__(self):
        if self.mu * self.kappa <= 0:
            raise ValueError("mu and kappa must have the same sign")
        if self.tau < 0:
            raise ValueError("tau must be nonnegative")
        if self.branch not in (+1, -1):
            raise ValueError("branch must be +1 or -1")

    @property
    def sigma(self) -> float:
        return float(np.sqrt(self.mu / self.kappa))


def _sech(x):
    return 1.0 / np.cosh(x)


def nls_ground_state(x, p: StandingWaveParams):
    """Real amplitude of the NLS ground state e^{i mu t} u(x).

    Bright sech profile for mu, kappa > 0; dark tanh front for mu, kappa < 0.
    """
    x = np.asarray(x, dtype=float)
    s = p.branch
    if p.mu > 0 and p.kappa > 0:
        return np.sqrt(2.0) * p.sigma * _sech(np.sqrt(p.mu) * x
                                              + s * p.k_const)
    if p.mu < 0 and p.kappa < 0:
        return p.sigma * np.tanh(s * p.sigma * np.sqrt(-p.kappa / 2.0) * x
                                 + s * p.k_const)
    raise ValueError("ground state requires mu, kappa both positive "
                     "(solitary) or both negative (front)")


def nls_ground_state_derivative(x, p: StandingWaveParams):
    """Analytic x-derivative of nls_ground_state."""
    x = np.asarray(x, dtype=float)
    s = p.branch
    if p.mu > 0 and p.kappa > 0:
        arg = np.sqrt(p.mu) * x + s * p.k_const
        return -np.sqrt(2.0 * p.mu) * p.sigma * _sech(arg) * np.tanh(arg)
    a = p.sigma * np.sqrt(-p.kappa / 2.0)
    arg = s * a * x + s * p.k_const
    return p.sigma * s * a * _sech(arg) ** 2


def nlsh_solitary(x, p: StandingWaveParams):
    """(qtilde0, qtilde1) solitary-wave amplitudes; needs mu*tau < 1."""
    if not (p.mu > 0 and p.kappa > 0):
        raise ValueError("solitary wave requires mu > 0 and kappa > 0")
    if p.mu * p.tau >= 1:
        raise ValueError(f"solitary wave requires mu*tau < 1, got "
                         f"{p.mu * p.tau}")
    x = np.asarray(x, dtype=float)
    w = np.sqrt(p.mu * (1.0 - p.mu * p.tau))
    arg = w * x + p.branch * p.k_const
    q0 = np.sqrt(2.0) * p.sigma * _sech(arg)
    q1 = (-np.sqrt(2.0 * p.mu) * p.sigma / np.sqrt(1.0 - p.mu * p.tau)
          * _sech(arg) * np.tanh(arg))
    return q0, q1


def nlsh_front(x, p: StandingWaveParams, allow_focusing: bool = False):
    """(qtilde0, qtilde1) front amplitudes for the defocusing regime.

    The focusing mu*tau > 1 front exists only as an artifact of the
    hyperbolic approximation and must be opted into explicitly.
    """
    if p.mu < 0 and p.kappa < 0:
        pass
    elif allow_focusing and p.mu > 0 and p.kappa > 0 and p.mu * p.tau > 1:
        pass
    else:
        raise ValueError("front requires mu < 0 and kappa < 0 (or the "
                         "opt-in focusing regime with mu*tau > 1)")
    x = np.asarray(x, dtype=float)
    s = p.branch
    a = np.sqrt(p.kappa * (p.mu * p.tau - 1.0) / 2.0)
    arg = s * p.sigma * a * x + s * p.k_const
    q0 = p.sigma * np.tanh(arg)
    q1 = (s * p.sigma**2 * a / (1.0 - p.mu * p.tau)) * _sech(arg) ** 2
    return q0, q1


def rotate_in_time(amplitude, mu: float, t: float):
    """Multiply a (real) amplitude state by the phase factor e^{i mu t}.

    Accepts a single array or a tuple/list of arrays; returns complex
    arrays of the same layout.
    """
    phase = np.exp(1j * mu * t)
    if isinstance(amplitude, (tuple, list)):
        return type(amplitude)(np.asarray(a) * phase for a in amplitude)
    return np.asarray(amplitude) * phase


def standing_wave_rhs(q, p: StandingWaveParams):
    """RHS of the planar standing-wave ODE system."""
    q0, q1 = q
    return ((1.0 - p.mu * p.tau) * q1, (p.mu - p.kappa * q0**2) * q0)


def first_integral(q0, q0_prime, p: StandingWaveParams):
    """Conserved quantity (1/(1-mu*tau)) q0'^2 - mu q0^2 + (kappa/2) q0^4."""
    return (q0_prime**2 / (1.0 - p.mu * p.tau)
            - p.mu * q0**2 + 0.5 * p.kappa * q0**4)


def equilibria_and_eigenvalues(p: StandingWaveParams):
    """Three equilibria with Jacobian eigenvalue pairs and a stability tag.

    Eigenvalues are +-sqrt((mu - 3 kappa q0^2)(1 - tau mu)): real pairs are
    saddles, imaginary pairs centers, zero degenerate.
    """
    out = []
    for q0 in (-p.sigma, 0.0, p.sigma):
        disc = (p.mu - 3.0 * p.kappa * q0**2) * (1.0 - p.tau * p.mu)
        lam = np.sqrt(complex(disc))
        if disc > 0:
            tag = "saddle"
        elif disc < 0:
            tag = "center"
        else:
            tag = "degenerate"
        out.append(((q0, 0.0), (lam, -lam), tag))
    return out


def k0_from_value(u_at_zero: float, sigma: float) -> float:
    """Front phase constant from the profile value at x = 0."""
    return float(np.arctanh(u_at_zero / sigma))


def k1_from_value(u_at_zero: float, sigma: float) -> float:
    """Solitary-wave phase constant from the profile value at x = 0."""
    return float(np.arccosh(np.sqrt(2.0) * sigma / u_at_zero))
