"""Sequential scan kernels (convolution recursion, limiter passes).

These are the only genuinely serial loops in the solver; everything else is
vectorized numpy.  numba compiles them when available, with a pure-Python
fallback kept semantically identical.

The limiter passes track the running difference between limited and raw
outflow flux (``d`` below) instead of the flux arrays themselves: a node is
pushed to exact zero whenever its provisional value u^{n+1}_i + lam*d drops
below the rounding guard, and the deficit d picks up prov/lam.  Untouched
stretches keep d == 0.0, so their output equals the raw step bitwise.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def exp_scan(j_inc: np.ndarray, decay: np.ndarray) -> np.ndarray:
    """Accumulate I[b, i] = I[b, i-1]*decay[b] + J[b, i-1], I[b, 0] = 0."""
    nb, m = j_inc.shape
    out = np.zeros((nb, m + 1))
    for b in range(nb):
        q = decay[b]
        acc = 0.0
        for i in range(m):
            acc = acc * q + j_inc[b, i]
            out[b, i + 1] = acc
    return out


@njit(cache=True)
def limit_scan_interior(u_np1: np.ndarray, lam: np.ndarray, guard: float,
                        unew: np.ndarray, zeroed: np.ndarray) -> None:
    """Inflow-anchored limiter pass: only the inflow flux f_{-1/2} is pinned.

    Screening starts at the boundary node itself so a Neumann-evolved
    boundary value that undershoots zero is also pushed back (a Dirichlet
    node carries its prescribed datum and never triggers unless that datum
    is below the guard).
    """
    nb, npts = u_np1.shape
    for b in range(nb):
        lb = lam[b]
        d = 0.0
        for i in range(npts):
            prov = u_np1[b, i] + lb * d
            if prov < guard:
                unew[b, i] = 0.0
                zeroed[b, i] = True
                d = prov / lb
            else:
                unew[b, i] = prov
                d = 0.0


@njit(cache=True)
def limit_scan_periodic(u_np1: np.ndarray, massdef_over_lam: np.ndarray,
                        lam: np.ndarray, guard: float, unew: np.ndarray,
                        zeroed: np.ndarray) -> np.ndarray:
    """Two-pass screen over the M independent nodes of a periodic row.

    Pass 1 sweeps i = 0..M-1 with the inflow flux untouched.  The wrap then
    feeds the limited outflow flux back to the inflow side (its deficit is
    the pass-1 leftover plus the raw step's mass defect), and pass 2
    re-screens from i = 0, stopping at the first node left nonnegative;
    downstream nodes keep their pass-1 values.  Returns 1 per row on
    success, 0 where the screen consumed every node (possible only for
    vanishing total mass; the caller decides whether that is an error).
    """
    nb, m = u_np1.shape
    ok = np.zeros(nb, dtype=np.int64)
    for b in range(nb):
        lb = lam[b]
        d = 0.0
        for i in range(m):
            prov = u_np1[b, i] + lb * d
            if prov < guard:
                unew[b, i] = 0.0
                zeroed[b, i] = True
                d = prov / lb
            else:
                unew[b, i] = prov
                zeroed[b, i] = False
                d = 0.0
        d = d + massdef_over_lam[b]
        stopped = False
        for i in range(m):
            prov = unew[b, i] + lb * d
            if prov < guard:
                unew[b, i] = 0.0
                zeroed[b, i] = True
                d = prov / lb
            else:
                if d != 0.0:     # wrap carried a deficit into this node
                    unew[b, i] = prov
                    zeroed[b, i] = False
                ok[b] = 1
                stopped = True
                break
        if not stopped and abs(lb * d) <= guard * m:
            ok[b] = 1
    return ok


@njit(cache=True)
def weno_increments_left(ve: np.ndarray, small: np.ndarray, d: np.ndarray,
                         eps: float, k: int, nonlinear: bool) -> np.ndarray:
    """Fused WENO increments J_i, i = 1..M, for a left-to-right sweep.

    ve holds the node values extended with k-1 ghosts per side; small and d
    are the per-row kernel coefficients and linear weights.
    """
    nb, n = ve.shape
    m = n - (2 * k - 1)
    out = np.empty((nb, m))
    for b in range(nb):
        for i in range(m):
            if k == 2:
                w0 = ve[b, i]
                w1 = ve[b, i + 1]
                w2 = ve[b, i + 2]
                w3 = ve[b, i + 3]
                j0 = small[b, 0, 0] * w1 + small[b, 0, 1] * w2 + small[b, 0, 2] * w3
                j1 = small[b, 1, 0] * w0 + small[b, 1, 1] * w1 + small[b, 1, 2] * w2
                if nonlinear:
                    db = (w1 - w2) ** 2
                    b0 = 13.0 / 12.0 * (w1 - 2 * w2 + w3) ** 2 + db
                    b1 = 13.0 / 12.0 * (w0 - 2 * w1 + w2) ** 2 + db
                    a0 = d[b, 0] / (eps + b0) ** 2
                    a1 = d[b, 1] / (eps + b1) ** 2
                    out[b, i] = (a0 * j0 + a1 * j1) / (a0 + a1)
                else:
                    out[b, i] = d[b, 0] * j0 + d[b, 1] * j1
            else:
                w0 = ve[b, i]
                w1 = ve[b, i + 1]
                w2 = ve[b, i + 2]
                w3 = ve[b, i + 3]
                w4 = ve[b, i + 4]
                w5 = ve[b, i + 5]
                j0 = (small[b, 0, 0] * w2 + small[b, 0, 1] * w3
                      + small[b, 0, 2] * w4 + small[b, 0, 3] * w5)
                j1 = (small[b, 1, 0] * w1 + small[b, 1, 1] * w2
                      + small[b, 1, 2] * w3 + small[b, 1, 3] * w4)
                j2 = (small[b, 2, 0] * w0 + small[b, 2, 1] * w1
                      + small[b, 2, 2] * w2 + small[b, 2, 3] * w3)
                if nonlinear:
                    db = (w2 - w3) ** 2
                    b0 = (781.0 / 720.0 * (-w2 + 3 * w3 - 3 * w4 + w5) ** 2
                          + 13.0 / 48.0 * (-3 * w2 + 7 * w3 - 5 * w4 + w5) ** 2 + db)
                    b1 = (781.0 / 720.0 * (-w1 + 3 * w2 - 3 * w3 + w4) ** 2
                          + 13.0 / 48.0 * (w1 - w2 - w3 + w4) ** 2 + db)
                    b2 = (781.0 / 720.0 * (-w0 + 3 * w1 - 3 * w2 + w3) ** 2
                          + 13.0 / 48.0 * (w0 - 5 * w1 + 7 * w2 - 3 * w3) ** 2 + db)
                    a0 = d[b, 0] / (eps + b0) ** 2
                    a1 = d[b, 1] / (eps + b1) ** 2
                    a2 = d[b, 2] / (eps + b2) ** 2
                    out[b, i] = (a0 * j0 + a1 * j1 + a2 * j2) / (a0 + a1 + a2)
                else:
                    out[b, i] = d[b, 0] * j0 + d[b, 1] * j1 + d[b, 2] * j2
    return out
