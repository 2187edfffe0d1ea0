"""ImEx Runge-Kutta stepping with optional mass-conserving relaxation.

Each step computes the s stage values

    Y_i = Y_n + dt * (sum_j a_ex[i,j] F_j + a_im[i,j] G_j)

where the implicit contribution with j = i is resolved by the model's exact
Fourier-space solve. Stage derivatives of the stiff part are recovered as
G_i = (Y_i - R_i)/(dt * a_ii) rather than by evaluating g directly, which
avoids the 1/tau cancellation amplification at small tau.

With relaxation enabled, each update is rescaled along its increment,
Y_gamma = Y_n + gamma * (Y_{n+1} - Y_n), with gamma the nontrivial root of
||Y_gamma||^2 = ||Y_n||^2 in the model's mass norm; time then advances by
gamma * dt.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from .diagnostics import model_invariants
from .tableaux import ImExTableau


class StepFailure(RuntimeError):
    """Nonfinite values appeared during a step."""

    def __init__(self, msg: str, stage: int | None = None,
                 step: int | None = None, t: float | None = None):
        super().__init__(msg)
        self.stage = stage
        self.step = step
        self.t = t


@dataclass(frozen=True)
class StepConfig:
    dt: float
    relaxation: Literal["off", "mass"] = "off"
    gamma_guard: float = 1e-14

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if self.relaxation not in ("off", "mass"):
            raise ValueError(f"unknown relaxation mode {self.relaxation!r}")


@dataclass(frozen=True)
class DiagnosticsRecord:
    t: float
    mass: float
    momentum: complex
    hamiltonian: float
    gamma: float


def _stage_usage(tableau: ImExTableau):
    """Which stage derivatives are actually consumed downstream."""
    s = tableau.s
    need_f = [bool(np.any(tableau.a_ex[i + 1:, i]) or tableau.b_ex[i])
              for i in range(s)]
    need_g = [bool(np.any(tableau.a_im[i + 1:, i]) or tableau.b_im[i])
              for i in range(s)]
    return need_f, need_g


def relaxation_gamma(qn: np.ndarray, qnext: np.ndarray, model,
                     gamma_guard: float = 1e-14) -> float:
    """Nontrivial root of ||qn + gamma d||^2 = ||qn||^2, d = qnext - qn.

    Degenerate increments (||d||^2 below guard * ||qn||^2) return 1.
    """
    d = qnext - qn
    dd = model.mass_dot(d, d)
    if dd < gamma_guard * max(model.mass_sq(qn), 1.0):
        return 1.0
    return -2.0 * model.mass_dot(qn, d) / dd


def imex_step(y: np.ndarray, tableau: ImExTableau, cfg: StepConfig,
              model) -> tuple[np.ndarray, float]:
    """One ImEx-RK step; returns (new state, time increment)."""
    dt = cfg.dt
    s = tableau.s
    a_ex, a_im = tableau.a_ex, tableau.a_im
    need_f, need_g = _stage_usage(tableau)
    F: list[np.ndarray | None] = [None] * s
    G: list[np.ndarray | None] = [None] * s

    for i in range(s):
        r = y.copy()
        for j in range(i):
            if a_ex[i, j] != 0.0:
                r += (dt * a_ex[i, j]) * F[j]
            if a_im[i, j] != 0.0:
                r += (dt * a_im[i, j]) * G[j]
        aii = a_im[i, i]
        if aii == 0.0:
            yi = r
        else:
            yi = model.implicit_solve(r, dt * aii)
        if not np.all(np.isfinite(yi.view(np.float64))):
            raise StepFailure(
                f"nonfinite state at stage {i + 1} of {tableau.name}",
                stage=i + 1,
            )
        if need_f[i]:
            F[i] = model.explicit_rhs(yi)
        if need_g[i]:
            G[i] = ((yi - r) / (dt * aii) if aii != 0.0
                    else model.implicit_rhs(yi))

    ynew = y.copy()
    for j in range(s):
        if tableau.b_ex[j] != 0.0:
            ynew += (dt * tableau.b_ex[j]) * F[j]
        if tableau.b_im[j] != 0.0:
            ynew += (dt * tableau.b_im[j]) * G[j]

    if cfg.relaxation == "mass":
        gamma = relaxation_gamma(y, ynew, model, cfg.gamma_guard)
        ynew = y + gamma * (ynew - y)
        return ynew, gamma * dt
    return ynew, dt


def evolve(
    y0: np.ndarray,
    t_end: float,
    tableau: ImExTableau,
    cfg: StepConfig,
    model,
    observer: Callable[[float, np.ndarray], None] | None = None,
    record_every: int = 0,
) -> tuple[np.ndarray, list[DiagnosticsRecord]]:
    """March from t=0 to t_end; the final step is shrunk to land on t_end.

    With relaxation on, the final step size is fixed-point adjusted so the
    relaxed increment gamma*dt still lands on t_end. ``record_every`` > 0
    samples a DiagnosticsRecord (and calls the observer) every that many
    steps, plus at t=0 and t_end.
    """
    if t_end < 0:
        raise ValueError("t_end must be nonnegative")
    y = y0.copy()
    t = 0.0
    records: list[DiagnosticsRecord] = []
    tol = 1e-12 * max(1.0, abs(t_end))

    def record(gamma: float):
        mass, mom, ham = model_invariants(model, y)
        records.append(DiagnosticsRecord(t=t, mass=mass, momentum=mom,
                                         hamiltonian=ham, gamma=gamma))
        if observer is not None:
            observer(t, y)

    if record_every > 0:
        record(1.0)

    step = 0
    while t < t_end - tol:
        dt_step = min(cfg.dt, t_end - t)
        step_cfg = (cfg if dt_step == cfg.dt
                    else StepConfig(dt_step, cfg.relaxation, cfg.gamma_guard))
        try:
            ynew, dt_adv = imex_step(y, tableau, step_cfg, model)
            if dt_step < cfg.dt and cfg.relaxation == "mass":
                # land exactly on t_end despite the gamma rescaling
                for _ in range(8):
                    if abs(t + dt_adv - t_end) <= tol:
                        break
                    gamma = dt_adv / dt_step
                    dt_step = (t_end - t) / gamma
                    step_cfg = StepConfig(dt_step, cfg.relaxation,
                                          cfg.gamma_guard)
                    ynew, dt_adv = imex_step(y, tableau, step_cfg, model)
        except StepFailure as exc:
            raise StepFailure(
                f"{exc} (step {step}, t={t:.6g})", stage=exc.stage,
                step=step, t=t,
            ) from None
        if dt_adv <= 0.0:
            raise StepFailure(
                f"relaxation stalled: time increment {dt_adv:.3g} "
                f"(gamma={dt_adv / dt_step:.3g}) at step {step}, t={t:.6g}",
                step=step, t=t,
            )
        y = ynew
        t += dt_adv
        step += 1
        if record_every > 0 and (step % record_every == 0
                                 or t >= t_end - tol):
            record(dt_adv / dt_step)

    return y, records
