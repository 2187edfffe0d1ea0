import json

import pytest


def write_csv(path, columns, rows, header_lines=()):
    with open(path, "w") as fh:
        for line in header_lines:
            fh.write(line + "\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(str(v) for v in row) + "\n")
    return path


@pytest.fixture
def spec_file(tmp_path):
    def make(**doc):
        path = tmp_path / "figure.json"
        path.write_text(json.dumps(doc))
        return path
    return make


@pytest.fixture
def bound_state_csv(tmp_path):
    rows = []
    xs = [-2.0, -1.0, 0.0, 1.0, 2.0]
    for x in xs:
        rows.append(("nls", 0.0, x, 1.0 / (1.0 + x * x)))
    for tau in (1e-2, 1e-3):
        for x in xs:
            rows.append(("nlsh", tau, x, 1.0 / (1.0 + x * x) + tau))
    return write_csv(tmp_path / "bound_state.csv",
                     ["variant", "tau", "x", "abs_u"], rows,
                     header_lines=["# experiment=bound_state"])


@pytest.fixture
def aa_csv(tmp_path):
    rows = []
    for method in ("M1", "M2"):
        power = 2 if method == "M1" else 3
        for tau in (1e-2, 1e-5):
            for j in range(5):
                dt = 0.1 / 2 ** j
                rows.append((method, tau, dt, dt ** power,
                             2.0 * dt ** power))
    return write_csv(tmp_path / "aa_study.csv",
                     ["method", "tau", "dt", "err_q0", "err_q1"], rows)


@pytest.fixture
def relaxation_csv(tmp_path):
    rows = []
    for variant in ("nls_plain", "nls_relaxed", "nlsh_plain", "nlsh_relaxed"):
        tau = 0.0 if variant.startswith("nls_") else 1e-3
        for i in range(6):
            rows.append((variant, tau, 0.5 * i, 1e-4 * (1.0 + i)))
    return write_csv(tmp_path / "relaxation_study.csv",
                     ["variant", "tau", "t", "error"], rows)


@pytest.fixture
def riemann_csv(tmp_path):
    rows = []
    xs = [-10.0, -5.0, 0.0, 5.0, 10.0]
    for x in xs:
        rows.append(("nls", 0.0, x, 1.5 - 0.5 * (x > 0), 0.0))
    for tau in (1e-2,):
        for x in xs:
            rows.append(("nlsh", tau, x, 1.5 - 0.5 * (x > 0) + 0.01, 0.0))
    return write_csv(tmp_path / "riemann.csv",
                     ["variant", "tau", "x", "rho", "phi"], rows)


@pytest.fixture
def portrait_csvs(tmp_path):
    field_rows = []
    for a in (-1.0, 0.0, 1.0):
        for b in (-1.0, 0.0, 1.0):
            field_rows.append((a, b, b, -a))
    field = write_csv(tmp_path / "phase_portrait_field.csv",
                      ["q0", "q1", "dq0", "dq1"], field_rows)
    orbit_rows = []
    for oid in ("homoclinic_plus", "orbit_0"):
        for i in range(8):
            orbit_rows.append((oid, i, 0.5 * i, 0.25 * i, 0.0))
    orbits = write_csv(tmp_path / "phase_portrait_orbits.csv",
                       ["orbit_id", "sample", "q0", "q1", "first_integral"],
                       orbit_rows)
    return field, orbits
