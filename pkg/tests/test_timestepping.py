import numpy as np
import pytest

from moltweno.grid import Field1D, error_norms, make_uniform_grid, sample_function
from moltweno.sweep import BoundaryData, dirichlet_bc, periodic_bc
from moltweno.timestepping import (advance_1d, advance_batch, make_step_config,
                                   stage_boundary_values, stage_combination,
                                   tableau)

from conftest import smooth_dirichlet_data

SQRT3 = np.sqrt(3.0)


def test_tableau_rk23_entries():
    tab = tableau("rk23")
    g = 0.5 * (1 - 1 / SQRT3)
    assert tab.s == 2 and tab.order == 3
    assert tab.a[0, 0] == pytest.approx(g, rel=1e-15)
    assert tab.a[1, 0] == pytest.approx(1 / SQRT3, rel=1e-15)
    assert np.allclose(tab.b, [0.5, 0.5])
    assert tab.c[0] == pytest.approx(0.5 * (1 - 1 / SQRT3), rel=1e-14)
    assert tab.c[1] == pytest.approx(0.5 * (1 + 1 / SQRT3), rel=1e-14)
    # stage alpha: 1/a11 = 3 + sqrt(3)
    assert 1.0 / tab.a[0, 0] == pytest.approx(3 + SQRT3, rel=1e-14)


def test_tableau_rk44_entries():
    tab = tableau("rk44")
    assert tab.s == 4 and tab.order == 4
    assert tab.c[3] == pytest.approx(0.833858632621307, abs=1e-15)
    assert tab.c[1] == pytest.approx(0.413287669711862, abs=1e-14)
    assert np.all(np.diag(tab.a) > 0)
    assert np.all(np.triu(tab.a, 1) == 0)


def test_tableau_unknown():
    with pytest.raises(ValueError):
        tableau("rk99")


def test_stage_combination_rk23_matches_expansion():
    combo = stage_combination(tableau("rk23"))
    assert combo.un_coeff[0] == pytest.approx(1.0, rel=1e-14)
    assert combo.un_coeff[1] == pytest.approx(-SQRT3, rel=1e-13)
    assert combo.stage_coeff[1, 0] == pytest.approx(1 + SQRT3, rel=1e-13)
    assert combo.final_un == pytest.approx(1 + SQRT3, rel=1e-13)
    assert combo.final_weights[0] == pytest.approx(-1.5 * (1 + SQRT3), rel=1e-13)
    assert combo.final_weights[1] == pytest.approx(0.5 * (3 + SQRT3), rel=1e-13)


def test_stage_combination_rk44_matches_expansion():
    combo = stage_combination(tableau("rk44"))
    assert combo.un_coeff[1] == pytest.approx(-2.50557428633555, abs=1e-10)
    assert combo.stage_coeff[1, 0] == pytest.approx(3.5055742863355546, abs=1e-10)
    assert combo.un_coeff[2] == pytest.approx(5.149963903410283, abs=1e-10)
    assert combo.stage_coeff[3, 2] == pytest.approx(2.0646807140081034, abs=1e-10)
    assert combo.final_un == pytest.approx(18.345647630787816, abs=1e-10)
    expect = [-25.673987908728908, 9.877479922993285, -4.805618380017192,
              3.256478734964997]
    assert np.allclose(combo.final_weights, expect, atol=1e-10)


@pytest.mark.parametrize("name", ["rk23", "rk44"])
def test_stage_combination_reconstruction_identity(name, rng):
    tab = tableau(name)
    combo = stage_combination(tab)
    u_n = rng.normal()
    stages = rng.normal(size=tab.s)
    # the rewritten stage relations must reproduce the Butcher relations:
    # stage_i - a_ii*dtF_i = un_coeff_i*u_n + sum_j stage_coeff_ij*stage_j
    # with dtF = A^{-1}(U - u_n 1)
    dtf = np.linalg.solve(tab.a, stages - u_n)
    for i in range(tab.s):
        lhs = stages[i] - tab.a[i, i] * dtf[i]
        rhs = combo.un_coeff[i] * u_n + combo.stage_coeff[i, :i] @ stages[:i]
        assert lhs == pytest.approx(rhs, rel=1e-13, abs=1e-13)
    unew = u_n + tab.b @ dtf
    rebuilt = combo.final_un * u_n + combo.final_weights @ stages
    assert unew == pytest.approx(rebuilt, rel=1e-13, abs=1e-13)


def test_stage_values_zero_data():
    tab = tableau("rk23")
    data = BoundaryData(tuple(lambda t: 0.0 for _ in range(3)))
    vals = stage_boundary_values(data, tab, 0.1, 0.0)
    assert np.array_equal(vals, np.zeros(2))


@pytest.mark.parametrize("name", ["rk23", "rk44"])
def test_stage_values_constant_data(name):
    tab = tableau(name)
    data = BoundaryData((lambda t: 4.2,) + tuple(lambda t: 0.0 for _ in range(4)))
    vals = stage_boundary_values(data, tab, 0.3, 1.0)
    assert np.allclose(vals, 4.2, rtol=1e-14)


def test_stage_values_need_derivatives():
    tab = tableau("rk23")
    with pytest.raises(ValueError):
        stage_boundary_values(BoundaryData((lambda t: 1.0, lambda t: 0.0)),
                              tab, 0.1, 0.0)


def test_stage_values_track_smooth_data():
    """The combined stage values reproduce the exact stage relation to O(dt^k)."""
    tab = tableau("rk23")
    data = BoundaryData((np.cos, lambda t: -np.sin(t), lambda t: -np.cos(t)))
    errs = []
    for dt in (0.1, 0.05):
        vals = stage_boundary_values(data, tab, dt, 0.4)
        # reference: solve the stage system for y' = g'(t) exactly
        gp = np.array([-np.sin(0.4 + c * dt) for c in tab.c])
        ref = np.cos(0.4) + dt * (tab.a @ gp)
        errs.append(np.max(np.abs(vals - ref)))
    # both agree with the exact stage relation to O(dt^3)
    assert errs[1] <= errs[0] / 3


def test_advance_zero_speed_identity(rng):
    g = make_uniform_grid(-np.pi, np.pi, 20)
    u = Field1D(g, rng.random(21))
    out = advance_1d(u, 0.0, 0.1, make_step_config(3), periodic_bc())
    assert np.array_equal(out.values, u.values)


@pytest.mark.parametrize("weno", [3, 5])
def test_advance_constant_periodic(weno):
    g = make_uniform_grid(-np.pi, np.pi, 24)
    u = Field1D(g, np.ones(25))
    out = advance_1d(u, 1.0, 0.4, make_step_config(weno), periodic_bc())
    assert np.allclose(out.values, 1.0, rtol=0, atol=1e-13)


@pytest.mark.parametrize("weno", [3, 5])
def test_advance_mass_conservation(weno, rng):
    g = make_uniform_grid(0.0, 2 * np.pi, 48)
    vals = rng.random(49)
    vals[-1] = vals[0]
    u = Field1D(g, vals)
    cfg = make_step_config(weno, use_pp_limiter=False)
    out = advance_1d(u, -0.8, 0.3, cfg, periodic_bc())
    assert out.values[:-1].sum() == pytest.approx(vals[:-1].sum(), rel=1e-12)


def test_advance_periodic_convergence_order():
    cfg = make_step_config(3, use_pp_limiter=False)
    errs = []
    for m in (160, 320):
        g = make_uniform_grid(-np.pi, np.pi, m)
        u = sample_function(g, lambda x: np.cos(x) ** 4)
        t, dt0, T = 0.0, 1.5 * g.dx, 2 * np.pi
        while t < T - 1e-12:
            dt = min(dt0, T - t)
            u = advance_1d(u, 1.0, dt, cfg, periodic_bc(), t)
            t += dt
        exact = sample_function(g, lambda x: np.cos(x) ** 4)
        errs.append(error_norms(u, exact).l1)
    assert np.log2(errs[0] / errs[1]) >= 3 - 0.3


@pytest.mark.parametrize("weno,cfl", [(3, 1.5), (5, 2.9)])
def test_advance_large_cfl_stable(weno, cfl):
    g = make_uniform_grid(-np.pi, np.pi, 100)
    u = sample_function(g, lambda x: np.cos(x) ** 4)
    cfg = make_step_config(weno, use_pp_limiter=False)
    t, dt0, T = 0.0, cfl * g.dx, 2 * np.pi
    while t < T - 1e-12:
        dt = min(dt0, T - t)
        u = advance_1d(u, 1.0, dt, cfg, periodic_bc(), t)
        t += dt
    assert np.max(np.abs(u.values)) <= 1.0 + 0.1


def test_advance_negative_dt():
    """A negative step advects backward (exact solution comparison)."""
    g = make_uniform_grid(-np.pi, np.pi, 320)
    u = sample_function(g, lambda x: np.cos(x) ** 4)
    cfg = make_step_config(3, use_pp_limiter=False)
    dt = -1.5 * g.dx
    out = advance_1d(u, 1.0, dt, cfg, periodic_bc())
    exact = sample_function(g, lambda x: np.cos(x - dt) ** 4)
    assert error_norms(out, exact).linf < 1e-5


def test_advance_batch_mixed_directions(rng):
    """Rows with opposite speeds match individual single-row advances."""
    g = make_uniform_grid(-np.pi, np.pi, 40)
    rows = rng.random((3, 41))
    rows[:, -1] = rows[:, 0]
    speeds = np.array([1.3, 0.0, -0.7])
    cfg = make_step_config(3)
    out = advance_batch(rows, speeds, 0.2, g.dx, cfg, periodic_bc())
    for b in range(3):
        single = advance_1d(Field1D(g, rows[b]), speeds[b], 0.2, cfg, periodic_bc())
        assert np.allclose(out[b], single.values, rtol=0, atol=1e-14)


def test_dirichlet_inflow_node_reanchored():
    g = make_uniform_grid(-np.pi, np.pi, 40)
    u = sample_function(g, lambda x: np.cos(x) ** 4)
    cfg = make_step_config(3, use_pp_limiter=False)
    bc = dirichlet_bc(left=smooth_dirichlet_data())
    dt = 1.5 * g.dx
    out = advance_1d(u, 1.0, dt, cfg, bc, 0.0)
    assert out.values[0] == pytest.approx(np.cos(-np.pi - dt) ** 4, rel=1e-14)
