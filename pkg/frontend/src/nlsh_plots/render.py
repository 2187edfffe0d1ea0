"""Renderers: one function per FigureSpec kind.

All rendering validates its inputs before the output file is opened, so a
bad CSV never leaves a partial image behind. Output is deterministic: fixed
figure geometry, no timestamps in metadata.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib
matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .spec import FigureSpec, Table, read_inputs

_SLOPE_GUIDES = (1, 2, 3)


def _tau_label(tau: str) -> str:
    if float(tau) == 0.0:
        return "NLS"
    return f"tau={float(tau):g}"


def _finish(fig, spec: FigureSpec) -> Path:
    out = Path(spec.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    if spec.title:
        fig.suptitle(spec.title)
    fig.savefig(out, dpi=spec.dpi, metadata={})
    plt.close(fig)
    return out


def render_profiles(spec: FigureSpec, table: Table) -> Path:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for variant in table.distinct("variant"):
        rows = [r for r in table.rows if r["variant"] == variant]
        taus = []
        for r in rows:
            if r["tau"] not in taus:
                taus.append(r["tau"])
        for tau in taus:
            sel = {"variant": variant, "tau": tau}
            x = table.floats("x", sel)
            y = table.floats("abs_u", sel)
            label = "NLS" if variant == "nls" else _tau_label(tau)
            style = dict(lw=2.2, color="k") if variant == "nls" else {}
            ax.plot(x, y, label=label, **style)
    ax.set_xlabel("x")
    ax.set_ylabel("|u|")
    ax.legend()
    return _finish(fig, spec)


def render_convergence_loglog(spec: FigureSpec, table: Table) -> Path:
    taus = table.distinct("tau")
    comps = ("err_q0", "err_q1")
    fig, axes = plt.subplots(len(comps), len(taus),
                             figsize=(4.2 * len(taus), 7.2),
                             squeeze=False)
    for col, tau in enumerate(taus):
        for row, comp in enumerate(comps):
            ax = axes[row][col]
            emin, emax = np.inf, 0.0
            for method in table.distinct("method"):
                sel = {"method": method, "tau": tau}
                dt = table.floats("dt", sel)
                err = table.floats("err", sel) if comp == "err" \
                    else table.floats(comp, sel)
                keep = np.isfinite(err) & (err > 0)
                if not np.any(keep):
                    continue
                ax.loglog(dt[keep], err[keep], "o-", label=method)
                emin = min(emin, float(np.min(err[keep])))
                emax = max(emax, float(np.max(err[keep])))
            dts = table.floats("dt", {"tau": tau})
            d0, d1 = float(np.min(dts)), float(np.max(dts))
            for p in _SLOPE_GUIDES:
                ref = emax * (np.array([d0, d1]) / d1) ** p
                ax.loglog([d0, d1], ref, "--", color="gray", lw=0.9)
                ax.annotate(f"{p}", (d0, ref[0]), fontsize=8, color="gray")
            ax.set_xlabel("dt")
            ax.set_ylabel(comp)
            ax.set_title(_tau_label(tau))
            if row == 0 and col == 0:
                ax.legend(fontsize=8)
    fig.tight_layout()
    return _finish(fig, spec)


def render_error_vs_time(spec: FigureSpec, table: Table) -> Path:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for variant in table.distinct("variant"):
        rows = [r for r in table.rows if r["variant"] == variant]
        taus = []
        for r in rows:
            if r["tau"] not in taus:
                taus.append(r["tau"])
        for tau in taus:
            sel = {"variant": variant, "tau": tau}
            t = table.floats("t", sel)
            e = table.floats("error", sel)
            label = variant if variant.startswith("nls_") \
                else f"{variant} {_tau_label(tau)}"
            ax.semilogy(t, e, label=label)
    ax.set_xlabel("t")
    ax.set_ylabel("error")
    ax.legend(fontsize=8)
    return _finish(fig, spec)


def render_dsw_profile(spec: FigureSpec, table: Table) -> Path:
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for variant in table.distinct("variant"):
        rows = [r for r in table.rows if r["variant"] == variant]
        taus = []
        for r in rows:
            if r["tau"] not in taus:
                taus.append(r["tau"])
        for tau in taus:
            sel = {"variant": variant, "tau": tau}
            x = table.floats("x", sel)
            rho = table.floats("rho", sel)
            label = "NLS" if variant == "nls" else _tau_label(tau)
            style = dict(lw=2.0, color="k") if variant == "nls" else {}
            ax.plot(x, rho, label=label, **style)
    ax.set_xlabel("x")
    ax.set_ylabel("density")
    ax.legend()
    return _finish(fig, spec)


def render_phase_portrait(spec: FigureSpec, field: Table,
                          orbits: Table) -> Path:
    fig, ax = plt.subplots(figsize=(6, 6))
    q0 = field.floats("q0")
    q1 = field.floats("q1")
    d0 = field.floats("dq0")
    d1 = field.floats("dq1")
    mag = np.hypot(d0, d1)
    mag[mag == 0.0] = 1.0
    ax.quiver(q0, q1, d0 / mag, d1 / mag, mag, cmap="viridis",
              scale=40, width=2.4e-3, alpha=0.6)
    for oid in orbits.distinct("orbit_id"):
        sel = {"orbit_id": oid}
        a = orbits.floats("q0", sel)
        b = orbits.floats("q1", sel)
        style = dict(lw=2.0, color="crimson") if "clinic" in oid \
            else dict(lw=1.2)
        ax.plot(a, b, label=oid, **style)
    ax.set_xlabel("q0")
    ax.set_ylabel("q1")
    ax.legend(fontsize=7)
    return _finish(fig, spec)


_RENDERERS = {
    "profiles": render_profiles,
    "convergence_loglog": render_convergence_loglog,
    "error_vs_time": render_error_vs_time,
    "dsw_profile": render_dsw_profile,
    "phase_portrait": render_phase_portrait,
}


def render(spec: FigureSpec) -> Path:
    tables = read_inputs(spec)
    return _RENDERERS[spec.kind](spec, *tables)
