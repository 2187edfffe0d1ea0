import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlsh_lab.grid import (ComplexField, GridSpec, first_derivative,
                           norm_l2, quadrature, second_derivative)


@pytest.fixture
def grid32():
    return GridSpec(-16.0, 16.0, 2048)


def field(grid, fn):
    return ComplexField(grid, np.asarray(fn(grid.nodes), dtype=complex))


def test_gridspec_basic(grid32):
    assert grid32.dx == pytest.approx(32.0 / 2048)
    assert grid32.nodes[0] == -16.0
    assert grid32.nodes[-1] == pytest.approx(16.0 - grid32.dx)
    # wavenumbers follow FFT bin ordering
    assert grid32.wavenumbers[0] == 0.0
    assert grid32.wavenumbers[1] == pytest.approx(2 * np.pi / 32.0)
    assert grid32.wavenumbers[-1] == pytest.approx(-2 * np.pi / 32.0)
    assert grid32.wavenumbers[grid32.n // 2] == pytest.approx(
        -2 * np.pi * (grid32.n // 2) / 32.0)


@pytest.mark.parametrize("n", [3, 5, 2])
def test_gridspec_rejects_bad_n(n):
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, n)


def test_field_shape_mismatch(grid32):
    with pytest.raises(ValueError):
        ComplexField(grid32, np.zeros(7, dtype=complex))


def test_field_rejects_nonfinite(grid32):
    v = np.zeros(grid32.n, dtype=complex)
    v[3] = np.nan
    with pytest.raises(ValueError):
        ComplexField(grid32, v)


def test_first_derivative_constant(grid32):
    d = first_derivative(field(grid32, lambda x: np.full_like(x, 2.7)))
    assert np.max(np.abs(d.values)) < 1e-13


def test_first_derivative_eigenfunction(grid32):
    k1 = 2 * np.pi / 32.0
    f = field(grid32, lambda x: np.exp(1j * k1 * x))
    d = first_derivative(f)
    assert np.max(np.abs(d.values - 1j * k1 * f.values)) < 1e-13


def test_first_derivative_sech():
    # wide box so the periodic wrap error e^{-L/2} sits below tolerance
    g = GridSpec(-32.0, 32.0, 2048)
    f = field(g, lambda x: 1 / np.cosh(x))
    d = first_derivative(f)
    x = g.nodes
    exact = -np.tanh(x) / np.cosh(x)
    assert np.max(np.abs(d.values - exact)) < 1e-11


def test_second_derivative_constant(grid32):
    d = second_derivative(field(grid32, lambda x: np.full_like(x, -1.0)))
    assert np.max(np.abs(d.values)) < 1e-12


def test_second_derivative_eigenfunction(grid32):
    k1 = 2 * np.pi / 32.0
    f = field(grid32, lambda x: np.exp(1j * k1 * x))
    d = second_derivative(f)
    assert np.max(np.abs(d.values + k1**2 * f.values)) < 1e-10


def test_second_derivative_sech():
    g = GridSpec(-32.0, 32.0, 2048)
    f = field(g, lambda x: 1 / np.cosh(x))
    d = second_derivative(f)
    x = g.nodes
    exact = 1 / np.cosh(x) - 2 / np.cosh(x) ** 3
    assert np.max(np.abs(d.values - exact)) < 1e-9


def test_quadrature_constant(grid32):
    assert quadrature(field(grid32, lambda x: np.ones_like(x))) == \
        pytest.approx(32.0)


def test_quadrature_full_period(grid32):
    q = quadrature(field(grid32, lambda x: np.sin(2 * np.pi * x / 32.0)))
    assert abs(q) < 1e-13


def test_quadrature_sech2(grid32):
    q = quadrature(field(grid32, lambda x: 1 / np.cosh(x) ** 2))
    assert q.real == pytest.approx(2 * np.tanh(16.0), abs=1e-12)
    assert abs(q.imag) < 1e-14


def test_norm_l2():
    g = GridSpec(0.0, 2.0, 4)
    f = ComplexField(g, np.ones(4, dtype=complex))
    assert norm_l2(f, weighted=True) == pytest.approx(np.sqrt(2.0))
    assert norm_l2(f, weighted=False) == pytest.approx(2.0)
    z = ComplexField(g, np.zeros(4, dtype=complex))
    assert norm_l2(z) == 0.0


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=20, deadline=None)
def test_weighted_unweighted_ratio(seed):
    rng = np.random.default_rng(seed)
    g = GridSpec(-3.0, 5.0, 64)
    f = ComplexField(g, rng.standard_normal(64) + 1j * rng.standard_normal(64))
    w, u = norm_l2(f, True), norm_l2(f, False)
    assert w == pytest.approx(np.sqrt(g.dx) * u, rel=1e-13)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=20, deadline=None)
def test_skew_hermitian_identity(seed):
    rng = np.random.default_rng(seed)
    g = GridSpec(-16.0, 16.0, 128)
    u = ComplexField(
        g, rng.standard_normal(128) + 1j * rng.standard_normal(128))
    v = ComplexField(
        g, rng.standard_normal(128) + 1j * rng.standard_normal(128))
    lhs = quadrature(ComplexField(g, np.conj(u.values)
                                  * first_derivative(v).values))
    rhs = -quadrature(ComplexField(g, np.conj(first_derivative(u).values)
                                   * v.values))
    scale = norm_l2(u) * norm_l2(v)
    assert abs(lhs - rhs) < 1e-12 * max(scale, 1.0)


def test_fft_round_trip(grid32):
    rng = np.random.default_rng(7)
    v = rng.standard_normal(grid32.n) + 1j * rng.standard_normal(grid32.n)
    back = np.fft.ifft(np.fft.fft(v))
    assert np.max(np.abs(back - v)) < 1e-13 * np.max(np.abs(v))


def test_band_limited_spectral_accuracy(grid32):
    # resolved trig polynomial differentiates to machine precision
    k1 = 2 * np.pi / 32.0
    f = field(grid32, lambda x: np.cos(5 * k1 * x) + 2 * np.sin(17 * k1 * x))
    d = first_derivative(f)
    x = grid32.nodes
    exact = -5 * k1 * np.sin(5 * k1 * x) + 34 * k1 * np.cos(17 * k1 * x)
    assert np.max(np.abs(d.values - exact)) < 1e-12
