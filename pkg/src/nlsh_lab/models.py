"""Split right-hand sides and exact Fourier-space implicit solves.

The NLSH system

    i dq0/dt + dq1/dx = -kappa |q0|^2 q0
    i tau dq1/dt      =  dq0/dx - q1

is split with the cubic term explicit and all linear terms implicit:

    f(Q) = (i kappa |q0|^2 q0, 0)
    g(Q) = (i D q1, -i/tau (D q0 - q1))

and analogously for NLS, f(u) = i kappa |u|^2 u, g(u) = i u_xx. Because the
spectral derivative D is diagonal in Fourier space, the implicit stage
equation Q - alpha g(Q) = R decouples into 2x2 complex systems per mode and
is solved in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import ComplexField, GridSpec, first_derivative


@dataclass(frozen=True)
class NLSParams:
    """kappa > 0 focusing, kappa < 0 defocusing."""

    kappa: float


@dataclass(frozen=True)
class NLSHParams:
    kappa: float
    tau: float

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError(f"tau must be positive, got {self.tau}")


@dataclass(frozen=True)
class NLSState:
    u: ComplexField


@dataclass(frozen=True)
class NLSHState:
    q0: ComplexField
    q1: ComplexField

    def __post_init__(self):
        if self.q0.grid is not self.q1.grid and self.q0.grid != self.q1.grid:
            raise ValueError("q0 and q1 must share a grid")

    @property
    def grid(self) -> GridSpec:
        return self.q0.grid


def hyperbolic_speeds(p: NLSHParams) -> tuple[float, float]:
    """Characteristic speeds -1/sqrt(tau), +1/sqrt(tau) of the linear part."""
    s = 1.0 / np.sqrt(p.tau)
    return (-s, s)


def well_prepared_init(u0: ComplexField) -> NLSHState:
    """(q0, q1) = (u0, D u0): initial data on the equilibrium manifold."""
    return NLSHState(q0=u0, q1=first_derivative(u0))


def _dealias_mask(n: int) -> np.ndarray:
    m = np.abs(np.fft.fftfreq(n, d=1.0 / n))
    return (m <= n / 3).astype(float)


class NLSHModel:
    """Array-level NLSH operations used by the integrator.

    States are complex arrays of shape (2, n) holding (q0, q1) samples.
    All methods are pure; the instance just caches grid multipliers.
    """

    def __init__(self, grid: GridSpec, params: NLSHParams,
                 dealias: bool = False):
        self.grid = grid
        self.params = params
        self.ik = grid.ik_first
        self.mask = _dealias_mask(grid.n) if dealias else None

    def _cubic(self, q0: np.ndarray) -> np.ndarray:
        w = np.abs(q0) ** 2 * q0
        if self.mask is not None:
            w = np.fft.ifft(self.mask * np.fft.fft(w))
        return 1j * self.params.kappa * w

    def explicit_rhs(self, y: np.ndarray) -> np.ndarray:
        out = np.zeros_like(y)
        out[0] = self._cubic(y[0])
        return out

    def implicit_rhs(self, y: np.ndarray) -> np.ndarray:
        yh = np.fft.fft(y, axis=1)
        dq0 = np.fft.ifft(self.ik * yh[0])
        dq1 = np.fft.ifft(self.ik * yh[1])
        return np.stack([1j * dq1,
                         (-1j / self.params.tau) * (dq0 - y[1])])

    def implicit_solve(self, r: np.ndarray, alpha: float) -> np.ndarray:
        """Exact solve of Y - alpha*g(Y) = r, mode-by-mode."""
        if alpha == 0.0:
            return r.copy()
        tau = self.params.tau
        k = self.ik.imag
        rh = np.fft.fft(r, axis=1)
        diag = 1.0 - 1j * alpha / tau
        det = diag + alpha**2 * k**2 / tau
        q0h = (diag * rh[0] - alpha * k * rh[1]) / det
        q1h = (rh[1] + (alpha * k / tau) * rh[0]) / det
        return np.fft.ifft(np.stack([q0h, q1h]), axis=1)

    def mass_sq(self, y: np.ndarray) -> float:
        """Modified mass |Q|^2 = ||q0||^2 + tau ||q1||^2 (dx-weighted)."""
        return self.grid.dx * float(
            np.sum(np.abs(y[0]) ** 2)
            + self.params.tau * np.sum(np.abs(y[1]) ** 2)
        )

    def mass_dot(self, a: np.ndarray, b: np.ndarray) -> float:
        """Re of the tau-weighted inner product used by relaxation."""
        return self.grid.dx * float(
            np.real(np.vdot(a[0], b[0]))
            + self.params.tau * np.real(np.vdot(a[1], b[1]))
        )

    def state_to_array(self, state: NLSHState) -> np.ndarray:
        return np.stack([state.q0.values, state.q1.values])

    def array_to_state(self, y: np.ndarray) -> NLSHState:
        return NLSHState(ComplexField(self.grid, y[0]),
                         ComplexField(self.grid, y[1]))


class NLSModel:
    """Array-level NLS operations; states are shape (n,) complex arrays."""

    def __init__(self, grid: GridSpec, params: NLSParams,
                 dealias: bool = False):
        self.grid = grid
        self.params = params
        self.k2 = grid.k2_second
        self.mask = _dealias_mask(grid.n) if dealias else None

    def explicit_rhs(self, y: np.ndarray) -> np.ndarray:
        w = np.abs(y) ** 2 * y
        if self.mask is not None:
            w = np.fft.ifft(self.mask * np.fft.fft(w))
        return 1j * self.params.kappa * w

    def implicit_rhs(self, y: np.ndarray) -> np.ndarray:
        return 1j * np.fft.ifft(self.k2 * np.fft.fft(y))

    def implicit_solve(self, r: np.ndarray, alpha: float) -> np.ndarray:
        if alpha == 0.0:
            return r.copy()
        rh = np.fft.fft(r)
        return np.fft.ifft(rh / (1.0 - 1j * alpha * self.k2))

    def mass_sq(self, y: np.ndarray) -> float:
        return self.grid.dx * float(np.sum(np.abs(y) ** 2))

    def mass_dot(self, a: np.ndarray, b: np.ndarray) -> float:
        return self.grid.dx * float(np.real(np.vdot(a, b)))

    def state_to_array(self, state: NLSState) -> np.ndarray:
        return state.u.values.copy()

    def array_to_state(self, y: np.ndarray) -> NLSState:
        return NLSState(ComplexField(self.grid, y))


def nlsh_explicit_rhs(Q: NLSHState, p: NLSHParams) -> NLSHState:
    m = NLSHModel(Q.grid, p)
    return m.array_to_state(m.explicit_rhs(m.state_to_array(Q)))


def nlsh_implicit_rhs(Q: NLSHState, p: NLSHParams) -> NLSHState:
    m = NLSHModel(Q.grid, p)
    return m.array_to_state(m.implicit_rhs(m.state_to_array(Q)))


def nlsh_implicit_solve(R: NLSHState, alpha: float, p: NLSHParams) -> NLSHState:
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    m = NLSHModel(R.grid, p)
    return m.array_to_state(m.implicit_solve(m.state_to_array(R), alpha))


def nls_explicit_rhs(u: ComplexField, p: NLSParams) -> ComplexField:
    m = NLSModel(u.grid, p)
    return ComplexField(u.grid, m.explicit_rhs(u.values))


def nls_implicit_rhs(u: ComplexField, p: NLSParams) -> ComplexField:
    m = NLSModel(u.grid, p)
    return ComplexField(u.grid, m.implicit_rhs(u.values))


def nls_implicit_solve(r: ComplexField, alpha: float,
                       p: NLSParams | None = None) -> ComplexField:
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    m = NLSModel(r.grid, p if p is not None else NLSParams(kappa=0.0))
    return ComplexField(r.grid, m.implicit_solve(r.values, alpha))
