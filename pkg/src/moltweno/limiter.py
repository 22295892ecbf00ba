"""Positivity post-processing of a completed 1D step.

The step u^n -> u^{n+1} is rewritten in conservative flux form.  Sweeping in
the wind direction, any node whose provisional value falls below the rounding
guard has its outflow flux reduced so it lands exactly at zero; the withheld
mass is carried to the downstream neighbour.  Mass is conserved, and nodes
the limiter does not touch keep their raw values bitwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._kernels import limit_scan_interior, limit_scan_periodic
from .grid import Field1D

#: Rounding guard: provisional values below this are pushed to exact zero.
POSITIVITY_GUARD = 1e-16

#: Slack allowed on the nonnegativity precondition of the previous solution.
PRECONDITION_SLACK = -1e-15


class LimiterError(RuntimeError):
    """Internal-logic failure of the positivity limiter (must abort)."""


@dataclass
class FluxSet:
    """Artificial fluxes of one step: fluxes[i] holds f_{i-1/2}, i = 0..M+1.

    After limiting, ``zeroed`` marks nodes pinned to exact zero and
    ``limited`` holds the authoritative post-limiter solution values.
    """

    lam: float
    fluxes: np.ndarray
    direction: str = "L"
    zeroed: Optional[np.ndarray] = None
    limited: Optional[np.ndarray] = None


def reconstruct_fluxes(u_n: Field1D, u_np1: Field1D, lam: float,
                       direction: str = "L") -> FluxSet:
    """Fluxes reproducing the step: u^{n+1}_i = u^n_i - lam*(f_{i+1/2}-f_{i-1/2}).

    A left-to-right sweep anchors the recursion at f_{-1/2} = 0; the
    right-moving case mirrors (anchored at f_{M+1/2} = 0).
    """
    if lam == 0.0:
        raise ValueError("lam must be nonzero")
    if u_n.values.shape != u_np1.values.shape:
        raise ValueError("field lengths differ")
    delta = u_np1.values - u_n.values
    fluxes = np.zeros(delta.size + 1)
    if direction == "L":
        fluxes[1:] = -np.cumsum(delta) / lam
    elif direction == "R":
        fluxes[:-1] = np.cumsum(delta[::-1])[::-1] / lam
    else:
        raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")
    return FluxSet(lam=lam, fluxes=fluxes, direction=direction)


def _check_precondition(u_n: np.ndarray) -> None:
    if np.min(u_n) < PRECONDITION_SLACK:
        raise LimiterError(
            f"previous solution has negative values (min {np.min(u_n):.3e})")


def limit_batch(u_n: np.ndarray, u_np1: np.ndarray, lam, direction: str,
                bc_kind: str, guard: float = POSITIVITY_GUARD,
                zeroed_out: Optional[np.ndarray] = None) -> np.ndarray:
    """Limit a batch of completed rows; returns the nonnegative solutions.

    ``bc_kind`` is "periodic" (wrap-aware two-pass screen over the M
    independent nodes) or "interior" (inflow flux pinned; Dirichlet,
    Neumann and zero-inflow closures).  ``lam`` is the signed dt/dx.
    """
    u_n = np.asarray(u_n, dtype=float)
    u_np1 = np.asarray(u_np1, dtype=float)
    lam_arr = np.broadcast_to(np.asarray(lam, dtype=float), (u_n.shape[0],))
    _check_precondition(u_n)
    if direction == "R":
        zrev = None if zeroed_out is None else zeroed_out[:, ::-1]
        out = limit_batch(u_n[:, ::-1], u_np1[:, ::-1], -lam_arr, "L",
                          bc_kind, guard, zrev)
        return np.ascontiguousarray(out[:, ::-1])
    if direction != "L":
        raise ValueError(f"direction must be 'L' or 'R', got {direction!r}")

    if bc_kind == "periodic":
        m = u_n.shape[1] - 1
        u1 = np.ascontiguousarray(u_np1[:, :m])
        massdef = (np.sum(u_n[:, :m], axis=1) - np.sum(u1, axis=1)) / lam_arr
        unew = np.empty_like(u1)
        zeroed = np.zeros(u1.shape, dtype=bool)
        ok = limit_scan_periodic(u1, massdef, np.ascontiguousarray(lam_arr),
                                 guard, unew, zeroed)
        if not np.all(ok):
            raise LimiterError("periodic screening consumed every node while "
                               "mass remained; positivity cannot be enforced")
        out = np.empty_like(np.asarray(u_np1))
        out[:, :m] = unew
        out[:, m] = unew[:, 0]
        if zeroed_out is not None:
            zeroed_out[:, :m] = zeroed
            zeroed_out[:, m] = zeroed[:, 0]
        return out
    if bc_kind != "interior":
        raise ValueError(f"bc_kind must be 'periodic' or 'interior', got {bc_kind!r}")
    unew = np.empty_like(np.asarray(u_np1))
    zeroed = np.zeros(u_n.shape, dtype=bool)
    limit_scan_interior(np.ascontiguousarray(u_np1),
                        np.ascontiguousarray(lam_arr), guard, unew, zeroed)
    if zeroed_out is not None:
        zeroed_out[:, :] = zeroed
    return unew


def limit_fluxes(fs: FluxSet, u_n: Field1D, bc_kind: str,
                 guard: float = POSITIVITY_GUARD) -> FluxSet:
    """Screen the fluxes so the reconstructed solution stays nonnegative.

    ``bc_kind`` is "periodic", "dirichlet" or "neumann" (the latter two
    share the inflow-pinned sweep).  Fluxes of untouched nodes are returned
    bitwise unchanged.
    """
    un = u_n.values
    m = un.size - 1
    lam = fs.lam
    kind = "periodic" if bc_kind == "periodic" else "interior"
    if bc_kind not in ("periodic", "dirichlet", "neumann"):
        raise ValueError(f"unknown bc_kind {bc_kind!r}")
    # recover the raw step this flux set encodes, then screen it
    u_np1 = un - lam * (fs.fluxes[1:] - fs.fluxes[:-1])
    zeroed = np.zeros((1, m + 1), dtype=bool)
    limited = limit_batch(un[None, :], u_np1[None, :], lam, fs.direction,
                          kind, guard, zeroed_out=zeroed)[0]
    zeroed = zeroed[0]
    # rebuild the flux chain from the limited solution (telescoping exact,
    # anchored like the input chain); the outflow flux of every untouched
    # node keeps its original value bitwise
    fluxes = np.empty_like(fs.fluxes)
    if fs.direction == "L":
        fluxes[0] = fs.fluxes[0]
        fluxes[1:] = fluxes[0] - np.cumsum(limited - un) / lam
        keep = np.concatenate([[True], ~zeroed])
    else:
        fluxes[-1] = fs.fluxes[-1]
        fluxes[:-1] = fluxes[-1] + np.cumsum((limited - un)[::-1])[::-1] / lam
        keep = np.concatenate([~zeroed, [True]])
    fluxes[keep] = fs.fluxes[keep]
    return FluxSet(lam=lam, fluxes=fluxes, direction=fs.direction,
                   zeroed=zeroed, limited=limited)


def apply_limited(u_n: Field1D, fs: FluxSet) -> Field1D:
    """Final update from the limited fluxes; aborts if positivity failed.

    Uses the authoritative limited values when present (zeroed nodes are
    exact zeros); falls back to the telescoped flux differences.
    """
    if fs.limited is not None:
        out = fs.limited.copy()
    else:
        out = u_n.values - fs.lam * (fs.fluxes[1:] - fs.fluxes[:-1])
        if fs.zeroed is not None:
            out[fs.zeroed] = 0.0
    if np.min(out) < 0.0:
        raise LimiterError(f"limited solution still negative (min {np.min(out):.3e})")
    return Field1D(u_n.grid, out)
