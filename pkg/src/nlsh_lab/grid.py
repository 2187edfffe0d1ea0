"""Periodic uniform grids, FFT differentiation, and spectral quadrature.

All spatial operators act on fields sampled at the nodes of a periodic
uniform grid. Derivatives are computed in Fourier space; the first
derivative zeroes the Nyquist multiplier so that the resulting operator
is exactly skew-Hermitian in the discrete inner product, while the second
derivative keeps the full -k^2 multiplier.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic grid on [x_left, x_right) with n samples.

    The right endpoint is excluded (periodic identification). Wavenumbers
    follow the FFT bin ordering, k_m = 2*pi*m/L for m in {0..n/2-1, -n/2..-1}.
    """

    x_left: float
    x_right: float
    n: int
    dx: float = field(init=False)
    nodes: np.ndarray = field(init=False, repr=False)
    wavenumbers: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 4 or self.n % 2 != 0:
            raise ValueError(f"n must be even and >= 4, got {self.n}")
        if not self.x_right > self.x_left:
            raise ValueError("x_right must exceed x_left")
        L = self.x_right - self.x_left
        dx = L / self.n
        object.__setattr__(self, "dx", dx)
        nodes = self.x_left + dx * np.arange(self.n)
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        k = 2.0 * np.pi * np.fft.fftfreq(self.n, d=dx)
        k.setflags(write=False)
        object.__setattr__(self, "wavenumbers", k)

    @property
    def length(self) -> float:
        return self.x_right - self.x_left

    @property
    def ik_first(self) -> np.ndarray:
        """Fourier multiplier of the first-derivative operator D.

        The Nyquist mode (index n/2) is zeroed, which makes D exactly
        skew-Hermitian and real-skew-symmetric on real data.
        """
        k = self.wavenumbers.copy()
        k[self.n // 2] = 0.0
        return 1j * k

    @property
    def k2_second(self) -> np.ndarray:
        """Multiplier -k^2 of the second-derivative operator (Nyquist kept)."""
        return -self.wavenumbers**2


@dataclass(frozen=True)
class ComplexField:
    """Complex samples on a GridSpec."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (self.grid.n,):
            raise ValueError(
                f"field has {v.shape} values, grid has n={self.grid.n}"
            )
        if not np.all(np.isfinite(v.view(np.float64))):
            raise ValueError("field contains nonfinite samples")
        object.__setattr__(self, "values", v)


def _apply_multiplier(f: ComplexField, mult: np.ndarray) -> ComplexField:
    out = np.fft.ifft(mult * np.fft.fft(f.values))
    return ComplexField(f.grid, out)


def first_derivative(f: ComplexField) -> ComplexField:
    """Spectral first derivative D f with Nyquist-zeroed multiplier."""
    return _apply_multiplier(f, f.grid.ik_first)


def second_derivative(f: ComplexField) -> ComplexField:
    """Spectral second derivative with multiplier -k^2 (Nyquist included)."""
    return _apply_multiplier(f, f.grid.k2_second)


def quadrature(f: ComplexField) -> complex:
    """Rectangle-rule integral dx * sum(f); spectrally accurate for smooth
    periodic integrands."""
    return complex(f.grid.dx * np.sum(f.values))


def norm_l2(f: ComplexField, weighted: bool = True) -> float:
    """L2 norm; weighted includes the sqrt(dx) quadrature factor."""
    s = float(np.sqrt(np.sum(np.abs(f.values) ** 2)))
    return float(np.sqrt(f.grid.dx)) * s if weighted else s
