"""Analytic inversion of the per-stage advection IVP.

Each implicit stage reduces to u_x + sgn * alpha * u = alpha * v(x), whose
solution is an exponential convolution of v plus a homogeneous term.  The
convolution is accumulated cell by cell from the WENO increments (linear
cost), and the homogeneous amplitude closes the boundary condition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._kernels import exp_scan
from .grid import Field1D
from .quadrature import DEFAULT_EPS, extrapolate_ghosts, integrate_increments

BC_KINDS = ("periodic", "dirichlet", "neumann", "zero_inflow")


@dataclass(frozen=True)
class BoundaryData:
    """Time-dependent boundary data: entry l is d^l/dt^l of g (or h)."""

    derivatives: tuple

    def value(self, t: float, l: int = 0) -> float:
        if l >= len(self.derivatives):
            raise ValueError(
                f"boundary data provides derivatives up to order "
                f"{len(self.derivatives) - 1}, requested {l}")
        return float(self.derivatives[l](t))


@dataclass(frozen=True)
class BoundarySpec:
    kind: str
    left: Optional[BoundaryData] = None
    right: Optional[BoundaryData] = None

    def __post_init__(self):
        if self.kind not in BC_KINDS:
            raise ValueError(f"unknown boundary kind {self.kind!r}")
        if self.kind in ("dirichlet", "neumann") and self.left is None and self.right is None:
            raise ValueError(f"{self.kind} boundary requires data on at least one side")

    def side(self, direction: str) -> Optional[BoundaryData]:
        """Data on the inflow side of a sweep (left for L, right for R)."""
        return self.left if direction == "L" else self.right


def periodic_bc() -> BoundarySpec:
    return BoundarySpec("periodic")


def zero_inflow_bc() -> BoundarySpec:
    return BoundarySpec("zero_inflow")


def dirichlet_bc(left: tuple = None, right: tuple = None) -> BoundarySpec:
    """Dirichlet data; each side is a tuple of derivative callables."""
    return BoundarySpec("dirichlet",
                        BoundaryData(tuple(left)) if left else None,
                        BoundaryData(tuple(right)) if right else None)


def neumann_bc(left: tuple = None, right: tuple = None) -> BoundarySpec:
    return BoundarySpec("neumann",
                        BoundaryData(tuple(left)) if left else None,
                        BoundaryData(tuple(right)) if right else None)


def constant_bc(kind: str, value: float) -> BoundarySpec:
    """Time-independent boundary data (same value both sides, derivatives 0)."""
    data = BoundaryData((lambda t: value,) + tuple(lambda t: 0.0 for _ in range(4)))
    return BoundarySpec(kind, data, data)


def accumulate_convolution(j_inc: np.ndarray, nu, direction: str = "L") -> np.ndarray:
    """Fold per-cell increments into the running convolution.

    L: I_i = I_{i-1} e^{-nu} + J_i with I_0 = 0 (J holds J_1..J_M);
    R is the mirror with I_M = 0 (J holds J_0..J_{M-1}).
    """
    j_arr = np.atleast_2d(np.asarray(j_inc, dtype=float))
    nu_arr = np.broadcast_to(np.asarray(nu, dtype=float), (j_arr.shape[0],))
    if np.any(nu_arr <= 0):
        raise ValueError("nu must be positive")
    decay = np.exp(-nu_arr)
    if direction == "L":
        out = exp_scan(np.ascontiguousarray(j_arr), decay)
    elif direction == "R":
        out = exp_scan(np.ascontiguousarray(j_arr[:, ::-1]), decay)[:, ::-1]
    else:
        raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")
    return out[0] if np.ndim(j_inc) == 1 else out


def _geometric_factors(nu: np.ndarray, m: int) -> np.ndarray:
    """e^{-i*nu} for i = 0..m, built by repeated multiplication."""
    decay = np.exp(-nu)
    fac = np.empty(nu.shape + (m + 1,))
    fac[..., 0] = 1.0
    np.cumprod(np.broadcast_to(decay[..., None], nu.shape + (m,)), axis=-1,
               out=fac[..., 1:])
    return fac


def closure_coefficient(bc: BoundarySpec, conv: np.ndarray, nu: float,
                        direction: str = "L", *, dx: float = None,
                        rhs: np.ndarray = None, t_eval: float = 0.0,
                        boundary_value: float = None) -> float:
    """Homogeneous-solution amplitude enforcing the boundary condition.

    ``conv`` is the accumulated convolution (I array, oriented L or R as in
    :func:`accumulate_convolution`); ``rhs`` is the stage right-hand-side
    field (needed for the periodic mass closure and the Neumann endpoint).
    ``boundary_value`` overrides the boundary data evaluation (used for the
    order-preserving stage values of the time integrator).
    """
    conv = np.asarray(conv, dtype=float)
    m = conv.shape[-1] - 1
    if bc.kind == "zero_inflow":
        return 0.0
    if bc.kind == "periodic":
        if rhs is None:
            raise ValueError("periodic closure requires the rhs field")
        fac = _geometric_factors(np.asarray(float(nu)), m)
        if direction == "L":
            num = np.sum(rhs[..., :m], axis=-1) - np.sum(conv[..., :m], axis=-1)
        else:
            num = np.sum(rhs[..., 1:], axis=-1) - np.sum(conv[..., 1:], axis=-1)
        return float(num / np.sum(fac[..., :m], axis=-1))
    data = bc.side(direction)
    if data is None:
        raise ValueError(f"{bc.kind} boundary lacks data on the {direction} inflow side")
    if bc.kind == "dirichlet":
        return float(boundary_value if boundary_value is not None else data.value(t_eval))
    # neumann
    if rhs is None or dx is None:
        raise ValueError("neumann closure requires the rhs field and dx")
    hval = boundary_value if boundary_value is not None else data.value(t_eval)
    alpha = float(nu) / dx
    endpoint = rhs[..., 0] if direction == "L" else rhs[..., -1]
    sign = 1.0 if direction == "L" else -1.0
    return float(endpoint - sign * hval / alpha)


def _extend_ghosts_batch(v: np.ndarray, k: int, bc_kind: str, dx: float,
                         eps: float) -> np.ndarray:
    """Append the k-1 ghost values per side (periodic wrap or extrapolation)."""
    m = v.shape[-1] - 1
    if bc_kind == "periodic":
        left = v[..., m - (k - 1):m]
        right = v[..., 1:k]
    else:
        gl = extrapolate_ghosts(v[..., :2 * k - 1], k, "left", dx, eps)
        gr = extrapolate_ghosts(v[..., m - (2 * k - 2):], k, "right", dx, eps)
        left = gl[..., ::-1]     # ghosts ordered leftmost first
        right = gr
    return np.concatenate([left, v, right], axis=-1)


@dataclass(frozen=True)
class SweepResult:
    """One closed stage sweep: convolution, closure amplitude, solution."""

    conv: np.ndarray            # I_0 = 0 for L sweeps, I_M = 0 for R sweeps
    coefficient: float
    u_new: np.ndarray


def _solve_stage_batch_left(v: np.ndarray, nu: np.ndarray, k: int, bc: BoundarySpec,
                            dx: float, mode: str, eps: float, boundary_values):
    """All rows sweep left-to-right; v is (B, M+1), nu is (B,)."""
    m = v.shape[-1] - 1
    if m < 2 * k:
        raise ValueError(f"grid too coarse for order k={k}: m={m}")
    ve = _extend_ghosts_batch(v, k, bc.kind, dx, eps)
    j_inc = integrate_increments(ve, nu, k, "L", mode, eps)
    conv = exp_scan(np.ascontiguousarray(j_inc), np.exp(-nu))
    fac = _geometric_factors(nu, m)
    if bc.kind == "zero_inflow":
        amp = np.zeros(v.shape[0])
    elif bc.kind == "periodic":
        num = v[:, :m].sum(axis=1) - conv[:, :m].sum(axis=1)
        amp = num / fac[:, :m].sum(axis=1)
    elif bc.kind == "dirichlet":
        amp = np.broadcast_to(np.asarray(boundary_values, dtype=float),
                              (v.shape[0],))
    else:  # neumann
        hval = np.asarray(boundary_values, dtype=float)
        amp = v[:, 0] - hval * (dx / nu)
    out = conv + amp[:, None] * fac
    if bc.kind == "periodic":
        out[:, m] = out[:, 0]
    return out, conv, amp


def _reflect_bc(bc: BoundarySpec) -> BoundarySpec:
    return BoundarySpec(bc.kind, left=bc.right, right=bc.left)


def _solve_stage_batch_detail(v: np.ndarray, nu: np.ndarray, k: int,
                              bc: BoundarySpec, dx: float, direction: str,
                              mode: str, eps: float, boundary_values):
    if direction == "L":
        return _solve_stage_batch_left(v, nu, k, bc, dx, mode, eps,
                                       boundary_values)
    if direction != "R":
        raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")
    bvals = np.asarray(boundary_values, dtype=float)
    if bc.kind == "neumann":
        bvals = -bvals  # spatial derivative flips under reflection
    out, conv, amp = _solve_stage_batch_left(v[..., ::-1], nu, k,
                                             _reflect_bc(bc), dx, mode, eps,
                                             bvals)
    return (np.ascontiguousarray(out[..., ::-1]),
            np.ascontiguousarray(conv[..., ::-1]), amp)


def solve_stage_batch(v: np.ndarray, nu: np.ndarray, k: int, bc: BoundarySpec,
                      dx: float, direction: str, mode: str = "nonlinear",
                      eps: float = DEFAULT_EPS, boundary_values=0.0) -> np.ndarray:
    """Batched stage solve; a right sweep runs the left pipeline mirrored.

    ``boundary_values`` is the (already evaluated) inflow-side boundary
    datum: g for Dirichlet, h for Neumann; per-row array or scalar.
    """
    out, _, _ = _solve_stage_batch_detail(v, nu, k, bc, dx, direction, mode,
                                          eps, boundary_values)
    return out


def solve_stage_result(rhs: Field1D, alpha: float, bc: BoundarySpec,
                       direction: str = "L", order: int = 2, t_eval: float = 0.0,
                       mode: str = "nonlinear", eps: float = DEFAULT_EPS,
                       boundary_value: float = None) -> SweepResult:
    """Solve u_x + sgn*alpha*u = alpha*rhs(x) for one sweep direction.

    The solution is the convolution of rhs against the exponential kernel
    plus the homogeneous term fixed by the boundary condition.  For
    Dirichlet and Neumann cases the boundary datum is evaluated at
    ``t_eval`` unless an explicit ``boundary_value`` is supplied.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    grid = rhs.grid
    nu = alpha * grid.dx
    if bc.kind in ("dirichlet", "neumann") and boundary_value is None:
        data = bc.side(direction)
        if data is None:
            raise ValueError(f"{bc.kind} data missing on the inflow side")
        boundary_value = data.value(t_eval)
    elif boundary_value is None:
        boundary_value = 0.0
    out, conv, amp = _solve_stage_batch_detail(
        rhs.values[None, :], np.array([nu]), order, bc, grid.dx, direction,
        mode, eps, boundary_value)
    return SweepResult(conv=conv[0], coefficient=float(amp[0]),
                       u_new=out[0])


def solve_stage(rhs: Field1D, alpha: float, bc: BoundarySpec, direction: str = "L",
                order: int = 2, t_eval: float = 0.0, mode: str = "nonlinear",
                eps: float = DEFAULT_EPS, boundary_value: float = None) -> Field1D:
    """Closed stage solution as a field (see :func:`solve_stage_result`)."""
    res = solve_stage_result(rhs, alpha, bc, direction, order, t_eval, mode,
                             eps, boundary_value)
    return Field1D(rhs.grid, res.u_new)
