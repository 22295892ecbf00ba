"""Shared fixtures and independent oracles for the test suite."""
from __future__ import annotations

import numpy as np
import pytest

import mpmath as mp


def kernel_moment(nu: float, p: int, dps: int = 30) -> float:
    """High-precision nu * integral_0^1 s^p e^{-nu s} ds (independent oracle)."""
    with mp.workdps(dps):
        val = mp.mpf(nu) * mp.quad(lambda s: s**p * mp.e**(-mp.mpf(nu) * s), [0, 1])
        return float(val)


def kernel_integral_of_poly(nu: float, coeffs) -> float:
    """nu * integral_0^1 e^{-nu s} P(-s) ds for P given by np.polyval coeffs."""
    coeffs = np.asarray(coeffs, dtype=float)
    deg = len(coeffs) - 1
    total = 0.0
    for p in range(deg + 1):
        c = coeffs[deg - p]                       # coefficient of x**p
        total += c * (-1.0) ** p * kernel_moment(nu, p)
    return total


def lagrange_coeffs(nodes, j):
    """np.poly coefficients of the Lagrange basis l_j over the given nodes."""
    nodes = np.asarray(nodes, dtype=float)
    poly = np.poly1d([1.0])
    for m, xm in enumerate(nodes):
        if m == j:
            continue
        poly = poly * np.poly1d([1.0, -xm]) / (nodes[j] - xm)
    return poly.coeffs


def cos4_derivative(w, l):
    """l-th derivative of cos(w)**4."""
    c, s = np.cos(w), np.sin(w)
    table = [
        c**4,
        -4 * c**3 * s,
        12 * c**2 * s**2 - 4 * c**4,
        -24 * c * s**3 + 40 * c**3 * s,
        24 * s**4 - 192 * c**2 * s**2 + 40 * c**4,
    ]
    return table[l]


def smooth_dirichlet_data():
    """Boundary data of u(x,t) = cos(x-t)**4 at x = -pi (value + derivatives)."""
    return tuple(
        (lambda l: (lambda t: (-1.0) ** l * cos4_derivative(-np.pi - t, l)))(l)
        for l in range(5))


def smooth_neumann_data():
    """u_x(-pi, t) of the same solution (value + derivatives)."""
    return tuple(
        (lambda l: (lambda t: (-1.0) ** l * cos4_derivative(-np.pi - t, l + 1)))(l)
        for l in range(4))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
