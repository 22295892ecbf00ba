"""Uniform grids, nodal fields, and discrete error norms.

Fields live on M+1 nodes including both endpoints.  Periodic problems
treat the last node as the image of the first; reductions over periodic
data therefore run over the first M nodes only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


class DomainError(ValueError):
    """Invalid domain or grid configuration."""


@dataclass(frozen=True)
class Grid1D:
    """Uniform node set on [a, b]: x_i = a + i*dx, i = 0..m."""

    a: float
    b: float
    m: int
    dx: float
    nodes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))


@dataclass
class Field1D:
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.m + 1,):
            raise DomainError(
                f"field length {self.values.shape} does not match grid "
                f"({self.grid.m + 1} nodes)"
            )

    def copy(self) -> "Field1D":
        return Field1D(self.grid, self.values.copy())


@dataclass
class Field2D:
    """Nodal values on a tensor grid; first axis is x (slow), second is y/v."""

    gx: Grid1D
    gy: Grid1D
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        shape = (self.gx.m + 1, self.gy.m + 1)
        if self.values.shape != shape:
            raise DomainError(f"field shape {self.values.shape} != grid shape {shape}")

    def copy(self) -> "Field2D":
        return Field2D(self.gx, self.gy, self.values.copy())


@dataclass(frozen=True)
class ErrorNorms:
    l1: float
    linf: float
    min_value: float


def make_uniform_grid(a: float, b: float, m: int) -> Grid1D:
    """Build the uniform grid with m cells (m+1 nodes) on [a, b]."""
    if not (b > a):
        raise DomainError(f"need b > a, got a={a}, b={b}")
    if m < 2:
        raise DomainError(f"need at least 2 cells, got m={m}")
    nodes = np.linspace(a, b, m + 1)
    return Grid1D(a=float(a), b=float(b), m=int(m), dx=(b - a) / m, nodes=nodes)


def sample_function(grid: Grid1D, fn: Callable) -> Field1D:
    """Sample fn at the grid nodes; fn may be scalar or vectorized."""
    try:
        vals = np.asarray(fn(grid.nodes), dtype=float)
        if vals.shape != grid.nodes.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(fn(x)) for x in grid.nodes])
    if not np.all(np.isfinite(vals)):
        raise DomainError("sampled function is not finite at every node")
    return Field1D(grid, vals)


def sample_function_2d(gx: Grid1D, gy: Grid1D, fn: Callable) -> Field2D:
    """Sample fn(x, y) on the tensor grid (broadcasting form)."""
    vals = np.asarray(fn(gx.nodes[:, None], gy.nodes[None, :]), dtype=float)
    vals = np.broadcast_to(vals, (gx.m + 1, gy.m + 1)).copy()
    if not np.all(np.isfinite(vals)):
        raise DomainError("sampled function is not finite at every node")
    return Field2D(gx, gy, vals)


def _trapezoid_weights(grid: Grid1D) -> np.ndarray:
    w = np.full(grid.m + 1, grid.dx)
    w[0] = w[-1] = 0.5 * grid.dx
    return w


def error_norms(numerical, exact) -> ErrorNorms:
    """Cell-size weighted L1 norm, max norm, and solution minimum.

    The L1 weight is dx per cell with half weights at the endpoints
    (trapezoid), so a constant error c integrates to (b-a)*c and
    l1 <= (b-a)*linf holds exactly.
    """
    if isinstance(numerical, Field1D) and isinstance(exact, Field1D):
        weights = _trapezoid_weights(numerical.grid)
    elif isinstance(numerical, Field2D) and isinstance(exact, Field2D):
        weights = np.outer(_trapezoid_weights(numerical.gx),
                           _trapezoid_weights(numerical.gy))
    else:
        raise DomainError("numerical and exact fields must have the same kind")
    if numerical.values.shape != exact.values.shape:
        raise DomainError("numerical and exact fields must have the same shape")
    err = np.abs(numerical.values - exact.values)
    return ErrorNorms(
        l1=float(np.sum(weights * err)),
        linf=float(np.max(err)),
        min_value=float(np.min(numerical.values)),
    )
