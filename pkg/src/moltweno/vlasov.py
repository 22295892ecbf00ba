"""1D1V Vlasov-Poisson driver.

f_t + v f_x + E f_v = 0 with E = -phi_x, -phi_xx = rho - 1, advanced by
dimensional splitting into spatial advection and velocity acceleration.
The electric field is refreshed from the current density before every
velocity substep.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.linalg import solveh_banded

from .grid import Field2D, Grid1D, make_uniform_grid, sample_function_2d
from .splitting import SplitSequence, advect_x, advect_y
from .sweep import BoundarySpec, constant_bc, periodic_bc, zero_inflow_bc
from .timestepping import StepConfig

_SQRT2PI = np.sqrt(2.0 * np.pi)


@dataclass(frozen=True)
class VpProblem:
    """Problem definition: domain, initial density, boundary treatment."""

    name: str
    xa: float
    xb: float
    vc: float
    f0: Callable
    x_bc: str = "periodic"          # periodic | zero_inflow
    v_bc: str = "periodic"          # periodic | dirichlet (zero)
    field: str = "periodic"         # periodic | dirichlet


def _landau_strong(x, v):
    return (1.0 + 0.5 * np.cos(0.5 * x)) * np.exp(-0.5 * v**2) / _SQRT2PI


def _two_stream_1(x, v):
    pert = 1.0 + 0.01 * ((np.cos(2 * 0.5 * x) + np.cos(3 * 0.5 * x)) / 1.2
                         + np.cos(0.5 * x))
    return 2.0 / (7.0 * _SQRT2PI) * (1.0 + 5.0 * v**2) * pert * np.exp(-0.5 * v**2)


def _two_stream_2(x, v):
    return (1.0 + 0.05 * np.cos(0.5 * x)) * v**2 * np.exp(-0.5 * v**2) / _SQRT2PI


def _bump_on_tail(x, v):
    return (1.0 + 0.04 * np.cos(0.3 * x)) / _SQRT2PI * (
        0.9 * np.exp(-0.5 * v**2) + 0.2 * np.exp(-4.0 * (v - 4.5) ** 2))


SHEATH_ALPHA = 0.0005526350206


def _sheath(x, v):
    return np.exp(-v**2 / SHEATH_ALPHA) / np.sqrt(SHEATH_ALPHA * np.pi) \
        * np.ones_like(x)


PROBLEMS = {
    "landau_strong": VpProblem("landau_strong", 0.0, 4 * np.pi, 2 * np.pi,
                               _landau_strong),
    "two_stream_1": VpProblem("two_stream_1", 0.0, 4 * np.pi, 2 * np.pi,
                              _two_stream_1),
    "two_stream_2": VpProblem("two_stream_2", 0.0, 4 * np.pi, 2 * np.pi,
                              _two_stream_2),
    "bump_on_tail": VpProblem("bump_on_tail", -10 * np.pi / 3.0,
                              10 * np.pi / 3.0, 10.0, _bump_on_tail),
    "sheath": VpProblem("sheath", 0.0, 1.0, 0.2, _sheath,
                        x_bc="zero_inflow", v_bc="dirichlet", field="dirichlet"),
}


@dataclass
class VpState:
    f: Field2D                      # phase-space density, x slow axis
    E: np.ndarray                   # electric field on the x nodes
    t: float
    problem: VpProblem

    @property
    def gx(self) -> Grid1D:
        return self.f.gx

    @property
    def gv(self) -> Grid1D:
        return self.f.gy


@dataclass(frozen=True)
class Diagnostics:
    mass: float
    l1: float
    l2: float
    energy: float
    momentum: float
    min_f: float


def charge_density(f: Field2D) -> np.ndarray:
    """rho(x) = integral of f over v (trapezoid in v)."""
    w = np.full(f.gy.m + 1, f.gy.dx)
    w[0] = w[-1] = 0.5 * f.gy.dx
    return f.values @ w


def solve_field_periodic(rho: np.ndarray, gx: Grid1D) -> np.ndarray:
    """Spectral inversion of -phi_xx = rho - 1, E = -phi_x, on [a, b) wrap.

    The zero mode is projected out (mean charge balances the background),
    so E has zero mean by construction.
    """
    m = gx.m
    src = np.asarray(rho, dtype=float)[:m]
    src = src - src.mean()
    length = gx.b - gx.a
    ghat = np.fft.rfft(src)
    kappa = 2.0 * np.pi * np.fft.rfftfreq(m, d=length / m)
    ehat = np.zeros_like(ghat)
    ehat[1:] = -1j * ghat[1:] / kappa[1:]
    e_red = np.fft.irfft(ehat, n=m)
    return np.concatenate([e_red, e_red[:1]])


def _phi_dirichlet(rho: np.ndarray, gx: Grid1D) -> np.ndarray:
    m = gx.m
    rhs = (np.asarray(rho, dtype=float) - 1.0)[1:m] * gx.dx**2
    ab = np.zeros((2, m - 1))
    ab[0, 1:] = -1.0
    ab[1, :] = 2.0
    phi = np.zeros(m + 1)
    phi[1:m] = solveh_banded(ab, rhs)
    return phi


def solve_field_dirichlet(rho: np.ndarray, gx: Grid1D) -> np.ndarray:
    """Grounded-wall field: -phi_xx = rho - 1, phi(a) = phi(b) = 0.

    phi from the second-difference tridiagonal solve; E = -phi_x by
    fourth-order differences (one-sided at the walls).
    """
    phi = _phi_dirichlet(rho, gx)
    m = gx.m
    if m < 4:
        raise ValueError("dirichlet field solve needs at least 4 cells")
    dphi = np.empty(m + 1)
    dphi[2:m - 1] = (phi[:m - 3] - 8 * phi[1:m - 2] + 8 * phi[3:m]
                     - phi[4:m + 1]) / 12.0
    dphi[0] = (-25 * phi[0] + 48 * phi[1] - 36 * phi[2] + 16 * phi[3]
               - 3 * phi[4]) / 12.0
    dphi[1] = (-3 * phi[0] - 10 * phi[1] + 18 * phi[2] - 6 * phi[3]
               + phi[4]) / 12.0
    dphi[m - 1] = (3 * phi[m] + 10 * phi[m - 1] - 18 * phi[m - 2]
                   + 6 * phi[m - 3] - phi[m - 4]) / 12.0
    dphi[m] = (25 * phi[m] - 48 * phi[m - 1] + 36 * phi[m - 2]
               - 16 * phi[m - 3] + 3 * phi[m - 4]) / 12.0
    return -dphi / gx.dx


def _solve_field(state_problem: VpProblem, rho: np.ndarray, gx: Grid1D) -> np.ndarray:
    if state_problem.field == "periodic":
        return solve_field_periodic(rho, gx)
    return solve_field_dirichlet(rho, gx)


def initial_condition(name: str, gx: Grid1D = None, gv: Grid1D = None, *,
                      nx: int = None, nv: int = None) -> VpState:
    """Initial state on the problem's canonical domain.

    Either pass matching grids or the cell counts (grids are then built on
    the canonical domain).
    """
    if name not in PROBLEMS:
        raise ValueError(f"unknown problem {name!r}; "
                         f"choose from {sorted(PROBLEMS)}")
    prob = PROBLEMS[name]
    if gx is None:
        gx = make_uniform_grid(prob.xa, prob.xb, nx)
    if gv is None:
        gv = make_uniform_grid(-prob.vc, prob.vc, nv)
    for got, want in ((gx.a, prob.xa), (gx.b, prob.xb),
                      (gv.a, -prob.vc), (gv.b, prob.vc)):
        if abs(got - want) > 1e-12 * max(1.0, abs(want)):
            raise ValueError(f"grid endpoint {got} does not match the "
                             f"problem domain value {want}")
    f = sample_function_2d(gx, gv, prob.f0)
    e_field = _solve_field(prob, charge_density(f), gx)
    return VpState(f=f, E=e_field, t=0.0, problem=prob)


def _bc_x(prob: VpProblem) -> BoundarySpec:
    return periodic_bc() if prob.x_bc == "periodic" else zero_inflow_bc()


def _bc_v(prob: VpProblem) -> BoundarySpec:
    return periodic_bc() if prob.v_bc == "periodic" else constant_bc("dirichlet", 0.0)


def vp_step(state: VpState, dt: float, seq: SplitSequence,
            cfg: StepConfig) -> VpState:
    """One composite step; E is recomputed before every velocity substep.

    With a v-periodic closure the +Vc and -Vc rows are one periodic point,
    but spatial advection moves them at opposite speeds; the image row is
    re-anchored after every x substep (it carries no quadrature weight, so
    this is mass-neutral and keeps the velocity closure consistent).
    """
    prob = state.problem
    f = state.f
    bcx, bcv = _bc_x(prob), _bc_v(prob)
    e_field = state.E
    for axis, frac in seq.steps:
        if axis == "x":
            f = advect_x(f, lambda v: v, frac * dt, cfg, bcx)
            if prob.v_bc == "periodic":
                f.values[:, -1] = f.values[:, 0]
        else:
            e_field = _solve_field(prob, charge_density(f), f.gx)
            f = advect_y(f, lambda x, e=e_field: e, frac * dt, cfg, bcv)
    e_field = _solve_field(prob, charge_density(f), f.gx)
    return VpState(f=f, E=e_field, t=state.t + dt, problem=prob)


def reverse_velocity(state: VpState) -> VpState:
    """f(x, v) -> f(x, -v); requires a v-grid symmetric about zero."""
    gv = state.gv
    if abs(gv.a + gv.b) > 1e-12 * max(1.0, abs(gv.b)):
        raise ValueError("velocity grid is not symmetric about zero")
    return replace(state, f=Field2D(state.gx, gv, state.f.values[:, ::-1].copy()))


def _x_weights(state: VpState) -> np.ndarray:
    gx = state.gx
    w = np.full(gx.m + 1, gx.dx)
    if state.problem.x_bc == "periodic":
        w[-1] = 0.0          # last node is the image of the first
    else:
        w[0] = w[-1] = 0.5 * gx.dx
    return w


def diagnostics(state: VpState) -> Diagnostics:
    """Conserved-quantity functionals of the current state."""
    gv = state.gv
    wv = np.full(gv.m + 1, gv.dx)
    wv[0] = wv[-1] = 0.5 * gv.dx
    wx = _x_weights(state)
    f = state.f.values
    fw = wx[:, None] * (f * wv[None, :])
    mass = float(fw.sum())
    l1 = float(np.abs(fw).sum())
    l2 = float(np.sqrt((wx[:, None] * (f * f * wv[None, :])).sum()))
    v = gv.nodes
    momentum = float((fw * v[None, :]).sum())
    kinetic = float((fw * (v * v)[None, :]).sum())
    efield = float((wx * state.E**2).sum())
    return Diagnostics(mass=mass, l1=l1, l2=l2,
                       energy=0.5 * (kinetic + efield),
                       momentum=momentum, min_f=float(f.min()))


def suggested_dt(state: VpState, cfl: float) -> float:
    """CFL/max(max|v|/dx, max|E|/dv), from the current field."""
    vmax = max(abs(state.gv.a), abs(state.gv.b))
    rate = max(vmax / state.gx.dx, np.max(np.abs(state.E)) / state.gv.dx)
    return cfl / rate
