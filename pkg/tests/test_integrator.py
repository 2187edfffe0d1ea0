import numpy as np
import pytest

from nlsh_lab.grid import ComplexField, GridSpec
from nlsh_lab.integrator import (DiagnosticsRecord, StepConfig, StepFailure,
                                 evolve, imex_step, relaxation_gamma)
from nlsh_lab.models import NLSHModel, NLSHParams, well_prepared_init
from nlsh_lab.tableaux import get_method, method_names


@pytest.fixture
def grid():
    return GridSpec(-16.0, 16.0, 256)


def soliton_state(grid, model):
    u = ComplexField(grid, (np.sqrt(2.0) / np.cosh(grid.nodes))
                     .astype(complex))
    return model.state_to_array(well_prepared_init(u))


def hand_coded_backward_euler_split(y, dt, model):
    """Independent oracle for one first-order step: explicit Euler on the
    cubic term, then a dense per-mode backward-Euler solve of the linear
    hyperbolic part."""
    tau = model.params.tau
    k = model.grid.ik_first.imag
    r = y + dt * model.explicit_rhs(y)
    rh = np.fft.fft(r, axis=1)
    out = np.empty_like(rh)
    for idx in range(model.grid.n):
        # q0 - i dt (ik) q1 = r0 ; q1 + i dt/tau ((ik) q0 - q1) = r1
        mat = np.array([[1.0, -1j * dt * 1j * k[idx]],
                        [1j * dt / tau * 1j * k[idx], 1.0 - 1j * dt / tau]])
        out[:, idx] = np.linalg.solve(mat, rh[:, idx])
    return np.fft.ifft(out, axis=1)


def test_step_config_validation():
    with pytest.raises(ValueError):
        StepConfig(dt=0.0)
    with pytest.raises(ValueError):
        StepConfig(dt=0.1, relaxation="energy")


def test_first_order_step_matches_hand_coded_solve(grid):
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-2))
    y = soliton_state(grid, model)
    dt = 1e-3
    got, adv = imex_step(y, get_method("ARS(1,1,1)"), StepConfig(dt=dt),
                         model)
    want = hand_coded_backward_euler_split(y, dt, model)
    assert adv == dt
    assert np.max(np.abs(got - want)) < 1e-12 * np.max(np.abs(want))


@pytest.mark.parametrize("name", method_names())
def test_zero_state_is_fixed_point(grid, name):
    model = NLSHModel(grid, NLSHParams(kappa=1.0, tau=1e-3))
    y = np.zeros((2, grid.n), dtype=complex)
    out, _ = imex_step(y, get_method(name), StepConfig(dt=0.1), model)
    assert np.all(out == 0.0)


@pytest.mark.parametrize("name", method_names())
def test_small_tau_steps_stay_finite(grid, name):
    # the stable stage-derivative recovery must not amplify 1/tau noise
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-10))
    y = soliton_state(grid, model)
    cfg = StepConfig(dt=1e-3)
    tab = get_method(name)
    for _ in range(5):
        y, _ = imex_step(y, tab, cfg, model)
    assert np.all(np.isfinite(y.view(np.float64)))
    assert model.mass_sq(y) == pytest.approx(
        model.mass_sq(soliton_state(grid, model)), rel=1e-2)


class ToyModel:
    def mass_sq(self, y):
        return float(np.sum(np.abs(y) ** 2))

    def mass_dot(self, a, b):
        return float(np.real(np.vdot(a, b)))


def test_relaxation_gamma_degenerate_increment():
    y = np.array([1.0 + 0.0j])
    assert relaxation_gamma(y, y, ToyModel()) == 1.0


def test_relaxation_gamma_reflection():
    # increment straight through the sphere: gamma = 1 restores the norm
    qn = np.array([1.0 + 0.0j, 0.0j])
    qnext = np.array([-1.0 + 0.0j, 0.0j])
    assert relaxation_gamma(qn, qnext, ToyModel()) == pytest.approx(1.0)


def test_relaxation_gamma_restores_norm():
    rng = np.random.default_rng(3)
    qn = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    qnext = qn + 0.1 * (rng.standard_normal(8) + 1j * rng.standard_normal(8))
    m = ToyModel()
    g = relaxation_gamma(qn, qnext, m)
    relaxed = qn + g * (qnext - qn)
    assert m.mass_sq(relaxed) == pytest.approx(m.mass_sq(qn), rel=1e-12)


def test_relaxed_step_preserves_modified_mass(grid):
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-3))
    y = soliton_state(grid, model)
    m0 = model.mass_sq(y)
    cfg = StepConfig(dt=0.01, relaxation="mass")
    tab = get_method("ARS(4,4,3)")
    for _ in range(50):
        y, _ = imex_step(y, tab, cfg, model)
    assert abs(model.mass_sq(y) - m0) < 1e-12 * m0


def test_gamma_close_to_one(grid):
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-3))
    y = soliton_state(grid, model)
    _, adv = imex_step(y, get_method("ARS(4,4,3)"),
                       StepConfig(dt=0.002, relaxation="mass"), model)
    assert abs(adv / 0.002 - 1.0) < 1e-3


def test_evolve_lands_on_t_end(grid):
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-3))
    y = soliton_state(grid, model)
    # dt does not divide t_end; relaxation makes increments irregular
    _, recs = evolve(y, 0.25, get_method("ARS(4,4,3)"),
                     StepConfig(dt=0.03, relaxation="mass"), model,
                     record_every=1)
    assert recs[-1].t == pytest.approx(0.25, abs=1e-10)


def test_evolve_zero_horizon(grid):
    model = NLSHModel(grid, NLSHParams(kappa=1.0, tau=1e-3))
    y = soliton_state(grid, model)
    out, recs = evolve(y, 0.0, get_method("ARS(1,1,1)"), StepConfig(dt=0.1),
                       model, record_every=1)
    assert np.array_equal(out, y)
    assert len(recs) == 1 and recs[0].t == 0.0


def test_evolve_records_cadence(grid):
    model = NLSHModel(grid, NLSHParams(kappa=1.0, tau=1e-3))
    y = soliton_state(grid, model)
    _, recs = evolve(y, 0.1, get_method("ARS(4,4,3)"), StepConfig(dt=0.01),
                     model, record_every=2)
    assert isinstance(recs[0], DiagnosticsRecord)
    assert recs[0].t == 0.0
    assert recs[-1].t == pytest.approx(0.1)
    assert len(recs) == 1 + 5


def test_evolve_is_deterministic(grid):
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-4))
    y = soliton_state(grid, model)
    tab = get_method("SSP2-ImEx(3,3,2)")
    a, _ = evolve(y, 0.2, tab, StepConfig(dt=0.01), model)
    b, _ = evolve(y, 0.2, tab, StepConfig(dt=0.01), model)
    assert np.array_equal(a, b)


def test_step_failure_reports_stage(grid):
    model = NLSHModel(grid, NLSHParams(kappa=1.0, tau=1e-3))
    y = np.full((2, grid.n), 1e200, dtype=complex)
    with np.errstate(over="ignore", invalid="ignore"):
        with pytest.raises(StepFailure) as exc:
            imex_step(y, get_method("ARS(4,4,3)"), StepConfig(dt=1.0), model)
    assert exc.value.stage is not None


def test_evolve_wraps_failure_with_time(grid):
    model = NLSHModel(grid, NLSHParams(kappa=1.0, tau=1e-3))
    y = np.full((2, grid.n), 1e200, dtype=complex)
    with np.errstate(over="ignore", invalid="ignore"):
        with pytest.raises(StepFailure) as exc:
            evolve(y, 1.0, get_method("ARS(4,4,3)"), StepConfig(dt=1.0),
                   model)
    assert exc.value.step == 0
    assert exc.value.t == 0.0


def test_relaxation_stall_raises(grid):
    # the first-order pair overdamps here and the mass-restoring root goes
    # negative; evolve must fail loudly instead of stepping backward in time
    model = NLSHModel(grid, NLSHParams(kappa=8.0, tau=1e-3))
    y = soliton_state(grid, model)
    with pytest.raises(StepFailure, match="stalled"):
        evolve(y, 1.0, get_method("ARS(1,1,1)"),
               StepConfig(dt=2e-3, relaxation="mass"), model)


def test_observer_called(grid):
    model = NLSHModel(grid, NLSHParams(kappa=1.0, tau=1e-3))
    y = soliton_state(grid, model)
    seen = []
    evolve(y, 0.05, get_method("ARS(1,1,1)"), StepConfig(dt=0.01), model,
           observer=lambda t, state: seen.append(t), record_every=1)
    assert seen[0] == 0.0
    assert seen[-1] == pytest.approx(0.05)
