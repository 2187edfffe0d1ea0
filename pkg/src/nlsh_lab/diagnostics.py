"""Conserved-quantity functionals, error norms, and hydrodynamic variables."""

from __future__ import annotations

from dataclasses import dataclass
from math import log

import numpy as np

from .grid import ComplexField, first_derivative, norm_l2, quadrature
from .models import NLSHParams, NLSHState, NLSModel, NLSHModel, NLSParams


@dataclass(frozen=True)
class HydroVars:
    """Density rho = |u|^2 and velocity-like phi = grad(theta)."""

    rho: np.ndarray
    phi: np.ndarray


def nls_invariants(u: ComplexField, p: NLSParams) -> tuple[float, complex, float]:
    """(I1, I2, H): mass -int|u|^2, momentum -i int u* u_x, and the
    Hamiltonian int(|u_x|^2 - kappa/2 |u|^4)."""
    ux = first_derivative(u)
    i1 = -quadrature(ComplexField(u.grid, np.abs(u.values) ** 2)).real
    i2 = -1j * quadrature(ComplexField(u.grid, np.conj(u.values) * ux.values))
    h = quadrature(ComplexField(
        u.grid,
        np.abs(ux.values) ** 2 - 0.5 * p.kappa * np.abs(u.values) ** 4,
    )).real
    return i1, i2, h


def nlsh_invariants(Q: NLSHState, p: NLSHParams) -> tuple[float, complex, float]:
    """(Ibar1, Ibar2, Hbar) of the relaxed system; all exactly conserved."""
    g = Q.grid
    q0, q1 = Q.q0.values, Q.q1.values
    dq0 = first_derivative(Q.q0).values
    dq1 = first_derivative(Q.q1).values
    i1 = -quadrature(ComplexField(
        g, np.abs(q0) ** 2 + p.tau * np.abs(q1) ** 2)).real
    i2 = -1j * quadrature(ComplexField(
        g, np.conj(q0) * dq0 + p.tau * np.conj(q1) * dq1))
    h = quadrature(ComplexField(
        g,
        np.conj(q1) * dq0 + q1 * np.conj(dq0)
        - np.abs(q1) ** 2 - 0.5 * p.kappa * np.abs(q0) ** 4,
    )).real
    return i1, i2, h


def model_invariants(model, y: np.ndarray) -> tuple[float, complex, float]:
    """Dispatch the invariant triple for an array-level model state."""
    if isinstance(model, NLSHModel):
        return nlsh_invariants(model.array_to_state(y), model.params)
    if isinstance(model, NLSModel):
        return nls_invariants(model.array_to_state(y).u, model.params)
    raise TypeError(f"unsupported model {type(model)!r}")


def hydro_transform(u: ComplexField, rho_floor: float = 1e-12) -> HydroVars:
    """phi = Im(u* u_x)/max(rho, floor): identical to grad(theta) where
    u != 0, with no phase unwrapping."""
    ux = first_derivative(u)
    rho = np.abs(u.values) ** 2
    phi = np.imag(np.conj(u.values) * ux.values) / np.maximum(rho, rho_floor)
    return HydroVars(rho=rho, phi=phi)


def hyperbolization_error(u: ComplexField, Q: NLSHState,
                          weighted: bool = True) -> tuple[float, float]:
    """(||u - q0||, ||Du - q1||) with the discrete spectral D."""
    if u.grid != Q.grid:
        raise ValueError("u and Q live on different grids")
    e0 = ComplexField(u.grid, u.values - Q.q0.values)
    e1 = ComplexField(u.grid,
                      first_derivative(u).values - Q.q1.values)
    return norm_l2(e0, weighted), norm_l2(e1, weighted)


def eoc(errors: list[tuple[float, float]]) -> list[float]:
    """Estimated orders of convergence from (parameter, error) pairs.

    Entry i compares rows i-1 and i; nonpositive errors yield NaN.
    """
    taus = [t for t, _ in errors]
    if any(t2 >= t1 for t1, t2 in zip(taus, taus[1:])):
        raise ValueError("parameter sequence must be strictly decreasing")
    out = []
    for (t_prev, e_prev), (t_cur, e_cur) in zip(errors, errors[1:]):
        if e_prev <= 0 or e_cur <= 0:
            out.append(float("nan"))
        else:
            out.append(log(e_prev / e_cur) / log(t_prev / t_cur))
    return out
