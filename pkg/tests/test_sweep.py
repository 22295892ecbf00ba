import time

import numpy as np
import pytest

from moltweno.grid import Field1D, error_norms, make_uniform_grid, sample_function
from moltweno.sweep import (BoundarySpec, accumulate_convolution, closure_coefficient,
                            constant_bc, dirichlet_bc, periodic_bc,
                            solve_stage, zero_inflow_bc)


def test_accumulate_geometric():
    nu = 0.8
    m = 12
    j = np.full(m, 1 - np.exp(-nu))
    conv = accumulate_convolution(j, nu, "L")
    expect = 1 - np.exp(-nu * np.arange(m + 1))
    assert np.allclose(conv, expect, rtol=1e-14)
    assert conv[0] == 0.0


def test_accumulate_zero():
    conv = accumulate_convolution(np.zeros(9), 2.0, "L")
    assert np.array_equal(conv, np.zeros(10))


def test_accumulate_matches_direct_sum(rng):
    nu = 1.3
    j = rng.normal(size=7)
    conv = accumulate_convolution(j, nu, "L")
    # I_i = sum_{m<=i} J_m e^{-(i-m) nu}, with J indexed 1..M
    for i in range(1, 8):
        direct = sum(j[m - 1] * np.exp(-(i - m) * nu) for m in range(1, i + 1))
        assert conv[i] == pytest.approx(direct, abs=1e-14)


def test_accumulate_right_mirror(rng):
    nu = 0.6
    j = rng.normal(size=7)
    right = accumulate_convolution(j, nu, "R")
    assert right[-1] == 0.0
    # I_i = I_{i+1} q + J_i
    q = np.exp(-nu)
    for i in range(6, -1, -1):
        assert right[i] == pytest.approx(right[i + 1] * q + j[i], abs=1e-14)


def test_closure_dirichlet_zero():
    amp = closure_coefficient(constant_bc("dirichlet", 0.0), np.zeros(9), 1.0)
    assert amp == 0.0


def test_closure_neumann_formula():
    alpha = 1.7
    nu_times_dx = alpha * 0.25
    rhs = np.full(9, 2.0)
    bc = constant_bc("neumann", alpha)      # h = alpha => amp = v(a) - 1
    amp = closure_coefficient(bc, np.zeros(9), nu_times_dx, "L", dx=0.25, rhs=rhs)
    assert amp == pytest.approx(1.0, rel=1e-14)


def test_closure_periodic_constant():
    nu = 0.9
    m = 16
    j = np.full(m, 1 - np.exp(-nu))
    conv = accumulate_convolution(j, nu, "L")
    rhs = np.ones(m + 1)
    amp = closure_coefficient(periodic_bc(), conv, nu, "L", rhs=rhs)
    assert amp == pytest.approx(1.0, rel=1e-13)
    fac = np.exp(-nu * np.arange(m + 1))
    out = conv + amp * fac
    assert np.allclose(out, 1.0, rtol=1e-13)


def test_closure_zero_inflow():
    assert closure_coefficient(zero_inflow_bc(), np.ones(5), 1.0) == 0.0


@pytest.mark.parametrize("k", [2, 3])
def test_solve_stage_constant_periodic(k):
    g = make_uniform_grid(-np.pi, np.pi, 32)
    out = solve_stage(Field1D(g, np.ones(33)), 2.0, periodic_bc(), order=k)
    assert np.allclose(out.values, 1.0, rtol=0, atol=1e-13)


@pytest.mark.parametrize("k", [2, 3])
def test_solve_stage_constant_dirichlet(k):
    g = make_uniform_grid(0.0, 1.0, 24)
    out = solve_stage(Field1D(g, np.ones(25)), 3.0, constant_bc("dirichlet", 1.0),
                      order=k)
    assert np.allclose(out.values, 1.0, rtol=0, atol=1e-13)


def test_solve_stage_constant_neumann_and_inflow():
    g = make_uniform_grid(0.0, 1.0, 24)
    out = solve_stage(Field1D(g, np.ones(25)), 3.0, constant_bc("neumann", 0.0))
    assert np.allclose(out.values, 1.0, rtol=0, atol=1e-13)
    out = solve_stage(Field1D(g, np.zeros(25)), 3.0, zero_inflow_bc())
    assert np.allclose(out.values, 0.0, atol=1e-15)


def test_backward_euler_first_order():
    """Single-sweep stepping (alpha = 1/dt for c = 1) converges at order 1."""
    T = 1.0
    errs = []
    for m in (64, 128, 256):
        g = make_uniform_grid(-np.pi, np.pi, m)
        u = sample_function(g, lambda x: np.cos(x) ** 4)
        n = m // 4                      # dt proportional to dx
        dt = T / n
        for _ in range(n):
            u = solve_stage(u, 1.0 / dt, periodic_bc(), order=2)
        exact = sample_function(g, lambda x: np.cos(x - T) ** 4)
        errs.append(error_norms(u, exact).l1)
    orders = np.log2(np.array(errs[:-1]) / errs[1:])
    assert np.all(orders > 0.7) and np.all(orders < 1.4)


def test_solve_stage_conserves_periodic(rng):
    g = make_uniform_grid(0.0, 2.0, 40)
    vals = rng.random(41)
    vals[-1] = vals[0]
    out = solve_stage(Field1D(g, vals), 1.7, periodic_bc(), order=3)
    assert out.values[:-1].sum() == pytest.approx(vals[:-1].sum(), rel=1e-12)
    assert out.values[-1] == out.values[0]


def test_solve_stage_linear_in_rhs(rng):
    g = make_uniform_grid(0.0, 1.0, 30)
    v = rng.normal(size=31); v[-1] = v[0]
    w = rng.normal(size=31); w[-1] = w[0]
    a, b = 2.5, -1.3
    sv = solve_stage(Field1D(g, v), 2.0, periodic_bc(), mode="linear")
    sw = solve_stage(Field1D(g, w), 2.0, periodic_bc(), mode="linear")
    sc = solve_stage(Field1D(g, a * v + b * w), 2.0, periodic_bc(), mode="linear")
    assert np.allclose(sc.values, a * sv.values + b * sw.values,
                       rtol=0, atol=1e-12 * max(1, np.max(np.abs(sc.values))))


def test_solve_stage_linear_cost():
    """Doubling the node count at most ~doubles the runtime (amortized)."""
    def runtime(m):
        g = make_uniform_grid(0.0, 1.0, m)
        u = Field1D(g, np.sin(np.linspace(0, 9, m + 1)) ** 2)
        u.values[-1] = u.values[0]
        best = np.inf
        for _ in range(5):
            t0 = time.perf_counter()
            for _ in range(20):
                solve_stage(u, 1.0, periodic_bc(), order=3)
            best = min(best, time.perf_counter() - t0)
        return best

    runtime(2000)                        # warm caches/JIT
    assert runtime(4000) <= 2.5 * runtime(2000)


def test_boundary_spec_validation():
    with pytest.raises(ValueError):
        BoundarySpec("dirichlet")
    with pytest.raises(ValueError):
        BoundarySpec("nope")
    bc = dirichlet_bc(left=(lambda t: 1.0,))
    with pytest.raises(ValueError):
        # right-moving sweep needs right-side data
        solve_stage(Field1D(make_uniform_grid(0, 1, 8), np.ones(9)), 1.0, bc,
                    direction="R")


def test_solve_stage_result_structure():
    from moltweno.sweep import solve_stage_result
    g = make_uniform_grid(0.0, 1.0, 12)
    rng_l = np.random.default_rng(3)
    v = rng_l.random(13)
    v[-1] = v[0]
    res = solve_stage_result(Field1D(g, v), 1.5, periodic_bc(), "L", order=2)
    assert res.conv[0] == 0.0
    fac = np.exp(-1.5 * g.dx * np.arange(13))
    rebuilt = res.conv + res.coefficient * fac
    assert np.allclose(res.u_new[:-1], rebuilt[:-1], rtol=1e-13)
    assert res.u_new[-1] == res.u_new[0]          # periodic image node
    res_r = solve_stage_result(Field1D(g, v), 1.5, periodic_bc(), "R", order=2)
    assert res_r.conv[-1] == 0.0
