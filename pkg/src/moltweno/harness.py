"""Configuration-driven benchmark runner and convergence studies.

Configs are flat INI files with [problem], [scheme] and [output] sections
(see README for the key list).  ``run`` executes one case and writes a
diagnostics time series plus a final-state CSV; ``convergence_study``
repeats a case over a refinement list and tabulates observed orders.
"""
from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .grid import (Field1D, Field2D, ErrorNorms, error_norms,
                   make_uniform_grid, sample_function, sample_function_2d)
from .splitting import splitting_sequence, step_2d
from .sweep import BoundarySpec, constant_bc, dirichlet_bc, neumann_bc, periodic_bc
from .timestepping import StepConfig, advance_1d, make_step_config
from .vlasov import (PROBLEMS as VP_PROBLEMS, VpState, diagnostics,
                     initial_condition, reverse_velocity, suggested_dt, vp_step)


class ConfigError(ValueError):
    """Invalid run configuration."""


class RunFailure(RuntimeError):
    """Mid-run failure (non-finite state)."""


ADV_PROBLEMS = ("adv_smooth", "adv_square")
ROT_PROBLEMS = ("rigid_rotation", "rigid_rotation_square")
PROBLEM_NAMES = ADV_PROBLEMS + ROT_PROBLEMS + tuple(sorted(VP_PROBLEMS))

#: time-step multipliers of the scheme pairs (1D advection / 2D splitting)
CFL_DEFAULTS = {("rk23", 1): 1.5, ("rk23", 2): 1.5,
                ("rk44", 1): 2.9, ("rk44", 2): 1.6}
SPLIT_DEFAULTS = {"rk23": 3, "rk44": 4}


@dataclass
class RunConfig:
    problem: str
    bc: str = "periodic"
    nx: int = 64
    nv: Optional[int] = None
    resolutions: tuple = ()
    final_time: float = 2 * np.pi
    weno: int = 3
    tableau: Optional[str] = None
    splitting: Optional[int] = None
    cfl: Optional[float] = None
    pp_limiter: bool = True
    weno_mode: str = "nonlinear"
    reversibility: bool = False         # run forward-reverse instead of plain forward
    out_dir: str = "out"
    diag_every: int = 1

    def __post_init__(self):
        if self.problem not in PROBLEM_NAMES:
            raise ConfigError(f"unknown problem {self.problem!r}; "
                              f"choose from {PROBLEM_NAMES}")
        if self.weno not in (3, 5):
            raise ConfigError("weno must be 3 or 5")
        if self.tableau is None:
            self.tableau = "rk23" if self.weno == 3 else "rk44"
        if self.tableau not in ("rk23", "rk44"):
            raise ConfigError("tableau must be rk23 or rk44")
        if self.splitting is None:
            self.splitting = SPLIT_DEFAULTS[self.tableau]
        dim = 1 if self.problem in ADV_PROBLEMS else 2
        if self.cfl is None:
            self.cfl = CFL_DEFAULTS[(self.tableau, dim)]
        if self.cfl <= 0:
            raise ConfigError("cfl must be positive")
        if self.final_time <= 0:
            raise ConfigError("final_time must be positive")
        if self.diag_every < 1:
            raise ConfigError("diag_every must be >= 1")

    def step_config(self) -> StepConfig:
        return make_step_config(weno=self.weno, tableau_name=self.tableau,
                                use_pp_limiter=self.pp_limiter,
                                weno_mode=self.weno_mode)


def _parse_resolutions(text: str) -> tuple:
    out = []
    for tok in text.replace(";", ",").split(","):
        tok = tok.strip().lower()
        if not tok:
            continue
        if "x" in tok:
            nx, nv = tok.split("x")
            out.append((int(nx), int(nv)))
        else:
            out.append(int(tok))
    return tuple(out)


def parse_config(path) -> RunConfig:
    """Read a flat INI run configuration."""
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    if "problem" not in cp or "name" not in cp["problem"]:
        raise ConfigError("config needs a [problem] section with a name")
    prob = cp["problem"]
    scheme = cp["scheme"] if "scheme" in cp else {}
    output = cp["output"] if "output" in cp else {}

    def get(section, key, cast, default):
        if key not in section:
            return default
        return cast(section[key])

    kwargs = dict(
        problem=prob["name"].strip(),
        bc=get(prob, "bc", str.strip, "periodic"),
        nx=get(prob, "nx", int, 64),
        nv=get(prob, "nv", int, None),
        final_time=get(prob, "final_time", float, 2 * np.pi),
        reversibility=get(prob, "reversibility", _parse_bool, False),
        weno=get(scheme, "weno", int, 3),
        tableau=get(scheme, "tableau", str.strip, None),
        splitting=get(scheme, "splitting", int, None),
        cfl=get(scheme, "cfl", float, None),
        pp_limiter=get(scheme, "pp_limiter", _parse_bool, True),
        weno_mode=get(scheme, "weno_mode", str.strip, "nonlinear"),
        out_dir=get(output, "dir", str.strip, "out"),
        diag_every=get(output, "diag_every", int, 1),
    )
    if "resolutions" in prob:
        kwargs["resolutions"] = _parse_resolutions(prob["resolutions"])
    return RunConfig(**kwargs)


def _parse_bool(text: str) -> bool:
    val = text.strip().lower()
    if val in ("1", "true", "yes", "on"):
        return True
    if val in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {text!r}")


# --- problem definitions -------------------------------------------------

def _cos4_derivative(w: np.ndarray, l: int):
    c, s = np.cos(w), np.sin(w)
    if l == 0:
        return c**4
    if l == 1:
        return -4 * c**3 * s
    if l == 2:
        return 12 * c**2 * s**2 - 4 * c**4
    if l == 3:
        return -24 * c * s**3 + 40 * c**3 * s
    if l == 4:
        return 24 * s**4 - 192 * c**2 * s**2 + 40 * c**4
    raise ValueError(l)


def _square_wave(x):
    x = np.mod(np.asarray(x) + np.pi, 2 * np.pi) - np.pi
    return np.where(np.abs(x) <= np.pi / 4, 1.0, 0.0)


def _adv_bc(problem: str, bc_kind: str) -> BoundarySpec:
    """Boundary treatment of the 1D advection benchmarks (speed c = 1)."""
    if bc_kind == "periodic":
        return periodic_bc()
    if problem == "adv_smooth":
        if bc_kind == "dirichlet":
            derivs = tuple(
                (lambda l: (lambda t: (-1.0) ** l * _cos4_derivative(-np.pi - t, l)))(l)
                for l in range(5))
            return dirichlet_bc(left=derivs)
        if bc_kind == "neumann":
            derivs = tuple(
                (lambda l: (lambda t: (-1.0) ** l * _cos4_derivative(-np.pi - t, l + 1)))(l)
                for l in range(4))
            return neumann_bc(left=derivs)
    if problem == "adv_square" and bc_kind == "dirichlet":
        def gate(t):
            tm = np.mod(t, 2 * np.pi)
            return 1.0 if 0.75 * np.pi <= tm <= 1.25 * np.pi else 0.0
        derivs = (gate,) + tuple(lambda t: 0.0 for _ in range(4))
        return dirichlet_bc(left=derivs)
    raise ConfigError(f"unsupported bc {bc_kind!r} for problem {problem!r}")


def _adv_initial(problem: str):
    return (lambda x: np.cos(x) ** 4) if problem == "adv_smooth" else _square_wave


def _adv_exact(problem: str, t: float):
    ic = _adv_initial(problem)
    return lambda x: ic(x - t)


def _rot_initial(problem: str):
    if problem == "rigid_rotation":
        def B(r):
            return np.where(r <= np.pi / 2, np.cos(np.minimum(r, np.pi / 2)) ** 6, 0.0)

        def ic(x, y):
            return 0.5 * B(np.sqrt(x**2 + 8 * y**2)) + 0.5 * B(np.sqrt(8 * x**2 + y**2))
        return ic, (-np.pi / 2, np.pi / 2)

    def ic(x, y):
        inside = (((np.abs(x) <= 0.75) & (np.abs(y) <= 0.25))
                  | ((np.abs(x) <= 0.25) & (np.abs(y) <= 0.75)))
        return np.where(inside, 1.0, 0.0)
    return ic, (-1.0, 1.0)


# --- drivers --------------------------------------------------------------

@dataclass
class RunResult:
    final: object                      # Field1D | Field2D
    diag_rows: list
    min_over_run: float
    steps: int
    errors: Optional[ErrorNorms] = None


def _field_diag(t: float, values: np.ndarray, weights: np.ndarray) -> tuple:
    mass = float((weights * values).sum())
    l1 = float((weights * np.abs(values)).sum())
    l2 = float(np.sqrt((weights * values**2).sum()))
    return (t, mass, l1, l2, 0.5 * l2**2, 0.0, float(values.min()))


def _check_finite(values: np.ndarray, step: int) -> None:
    if not np.all(np.isfinite(values)):
        raise RunFailure(f"non-finite solution detected at step {step}")


def run_advection_1d(config: RunConfig, m: int = None) -> RunResult:
    m = m or config.nx
    grid = make_uniform_grid(-np.pi, np.pi, m)
    u = sample_function(grid, _adv_initial(config.problem))
    bc = _adv_bc(config.problem, config.bc)
    cfg = config.step_config()
    weights = np.full(m + 1, grid.dx)
    if config.bc == "periodic":
        weights[-1] = 0.0
    else:
        weights[0] = weights[-1] = 0.5 * grid.dx

    dt0 = config.cfl * grid.dx
    t, step, mn = 0.0, 0, float(u.values.min())
    rows = [_field_diag(t, u.values, weights)]
    while t < config.final_time - 1e-12:
        dt = min(dt0, config.final_time - t)
        u = advance_1d(u, 1.0, dt, cfg, bc, t)
        t += dt
        step += 1
        _check_finite(u.values, step)
        mn = min(mn, float(u.values.min()))
        if step % config.diag_every == 0:
            rows.append(_field_diag(t, u.values, weights))
    exact = sample_function(grid, _adv_exact(config.problem, config.final_time))
    return RunResult(final=u, diag_rows=rows, min_over_run=mn, steps=step,
                     errors=error_norms(u, exact))


def run_rotation_2d(config: RunConfig, n: int = None) -> RunResult:
    n = n or config.nx
    ic, (a, b) = _rot_initial(config.problem)
    gx = make_uniform_grid(a, b, n)
    gy = make_uniform_grid(a, b, n)
    f = sample_function_2d(gx, gy, ic)
    cfg = config.step_config()
    seq = splitting_sequence(config.splitting)
    bc = constant_bc("dirichlet", 0.0)
    cmax = max(abs(a), abs(b))
    dt0 = config.cfl / max(cmax / gx.dx, cmax / gy.dx)
    weights = np.full((n + 1, n + 1), gx.dx * gy.dx)

    t, step, mn = 0.0, 0, float(f.values.min())
    rows = [_field_diag(t, f.values, weights)]
    while t < config.final_time - 1e-12:
        dt = min(dt0, config.final_time - t)
        f = step_2d(f, lambda y, tt: y, lambda x, tt: -x, dt, seq, cfg, bc, bc, t)
        t += dt
        step += 1
        _check_finite(f.values, step)
        mn = min(mn, float(f.values.min()))
        if step % config.diag_every == 0:
            rows.append(_field_diag(t, f.values, weights))
    T = config.final_time
    exact = sample_function_2d(gx, gy, lambda x, y: ic(
        x * np.cos(T) - y * np.sin(T), x * np.sin(T) + y * np.cos(T)))
    return RunResult(final=f, diag_rows=rows, min_over_run=mn, steps=step,
                     errors=error_norms(f, exact))


def run_vlasov(config: RunConfig, nx: int = None, nv: int = None,
               reverse_at_half: bool = None) -> RunResult:
    nx = nx or config.nx
    nv = nv or config.nv
    if nv is None:
        raise ConfigError("phase-space problems need nv")
    reverse_at_half = (config.reversibility if reverse_at_half is None
                       else reverse_at_half)
    state = initial_condition(config.problem, nx=nx, nv=nv)
    reference = reverse_velocity(state) if reverse_at_half else None
    cfg = config.step_config()
    seq = splitting_sequence(config.splitting)

    def diag_row(st: VpState) -> tuple:
        d = diagnostics(st)
        return (st.t, d.mass, d.l1, d.l2, d.energy, d.momentum, d.min_f)

    rows = [diag_row(state)]
    step, mn = 0, float(state.f.values.min())
    T = config.final_time
    marks = [0.5 * T, T] if reverse_at_half else [T]
    for target in marks:
        while state.t < target - 1e-12:
            dt = min(suggested_dt(state, config.cfl), target - state.t)
            state = vp_step(state, dt, seq, cfg)
            step += 1
            _check_finite(state.f.values, step)
            mn = min(mn, float(state.f.values.min()))
            if step % config.diag_every == 0:
                rows.append(diag_row(state))
        if state.t < T - 1e-12:
            state = reverse_velocity(state)
    err = error_norms(state.f, reference.f) if reverse_at_half else None
    return RunResult(final=state.f, diag_rows=rows, min_over_run=mn,
                     steps=step, errors=err)


def execute(config: RunConfig, resolution=None) -> RunResult:
    if config.problem in ADV_PROBLEMS:
        return run_advection_1d(config, resolution)
    if config.problem in ROT_PROBLEMS:
        n = resolution[0] if isinstance(resolution, tuple) else resolution
        return run_rotation_2d(config, n)
    if isinstance(resolution, tuple):
        return run_vlasov(config, *resolution)
    return run_vlasov(config)


# --- output ---------------------------------------------------------------

DIAG_HEADER = "t,mass,l1,l2,energy,momentum,min_f"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_diagnostics_csv(path: Path, rows: list) -> None:
    lines = [DIAG_HEADER] + [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def write_state_csv(path: Path, final) -> None:
    if isinstance(final, Field1D):
        lines = ["x,u"] + [f"{_fmt(x)},{_fmt(u)}"
                           for x, u in zip(final.grid.nodes, final.values)]
    else:
        lines = ["x,v,f"]
        xs, vs = final.gx.nodes, final.gy.nodes
        for i, x in enumerate(xs):
            for j, v in enumerate(vs):
                lines.append(f"{_fmt(x)},{_fmt(v)},{_fmt(final.values[i, j])}")
    path.write_text("\n".join(lines) + "\n")


def run(config: RunConfig, out_dir=None) -> dict:
    """Execute one benchmark case and write its artifacts.

    Returns the artifact paths plus summary scalars.
    """
    out = Path(out_dir if out_dir is not None else config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    result = execute(config)
    diag_path = out / "diagnostics.csv"
    state_path = out / "final_state.csv"
    write_diagnostics_csv(diag_path, result.diag_rows)
    write_state_csv(state_path, result.final)
    summary = {"diagnostics": diag_path, "final_state": state_path,
               "steps": result.steps, "min_over_run": result.min_over_run}
    if result.errors is not None:
        summary["l1_error"] = result.errors.l1
        summary["linf_error"] = result.errors.linf
    return summary


@dataclass(frozen=True)
class ConvergenceRow:
    resolution: str
    l1: float
    l1_order: Optional[float]
    linf: float
    linf_order: Optional[float]
    min_value: float


def convergence_study(config: RunConfig, out_dir=None) -> list:
    """Run the refinement list and tabulate observed orders.

    References: exact solutions for the advection/rotation benchmarks, the
    velocity-reversal protocol for the kinetic ones.  Each resolution must
    double the previous one.
    """
    res = config.resolutions
    if len(res) < 2:
        raise ConfigError("convergence study needs at least 2 resolutions")
    for lo, hi in zip(res, res[1:]):
        lo_t = lo if isinstance(lo, tuple) else (lo,)
        hi_t = hi if isinstance(hi, tuple) else (hi,)
        if len(lo_t) != len(hi_t) or any(2 * a != b for a, b in zip(lo_t, hi_t)):
            raise ConfigError(f"resolutions must double: {lo} -> {hi}")

    ref_config = config
    if config.problem not in ADV_PROBLEMS + ROT_PROBLEMS:
        ref_config = dataclasses.replace(config, reversibility=True)
    rows = []
    prev: Optional[ErrorNorms] = None
    for r in res:
        result = execute(ref_config, resolution=r)
        e = result.errors
        label = f"{r[0]}x{r[1]}" if isinstance(r, tuple) else str(r)
        l1o = None if prev is None else float(np.log2(prev.l1 / e.l1))
        lio = None if prev is None else float(np.log2(prev.linf / e.linf))
        rows.append(ConvergenceRow(label, e.l1, l1o, e.linf, lio, e.min_value))
        prev = e

    header = "resolution,l1,l1_order,linf,linf_order,min_value"
    print(header)
    lines = [header]
    for row in rows:
        txt = ",".join([
            row.resolution, _fmt(row.l1),
            "" if row.l1_order is None else _fmt(row.l1_order),
            _fmt(row.linf),
            "" if row.linf_order is None else _fmt(row.linf_order),
            _fmt(row.min_value)])
        print(txt)
        lines.append(txt)
    out = Path(out_dir if out_dir is not None else config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "convergence.csv").write_text("\n".join(lines) + "\n")
    return rows
