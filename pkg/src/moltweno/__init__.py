"""Implicit WENO transport solver with a 1D1V Vlasov-Poisson benchmark suite.

Advection steps invert each implicit Runge-Kutta stage analytically as an
exponential convolution (linear cost per sweep), with WENO quadrature of the
cell increments for non-oscillatory capture of sharp features, a
conservative positivity limiter, and high-order dimensional splitting for
2D transport and phase-space problems.
"""

from .grid import (ErrorNorms, Field1D, Field2D, Grid1D, error_norms,
                   make_uniform_grid, sample_function, sample_function_2d)
from .limiter import (FluxSet, LimiterError, apply_limited, limit_fluxes,
                      reconstruct_fluxes)
from .quadrature import (KernelCoefficients, SmoothnessSet, extrapolate_ghosts,
                         integrate_increments, kernel_coefficients,
                         nonlinear_weights, smoothness_indicators)
from .splitting import SplitSequence, advect_x, advect_y, splitting_sequence, step_2d
from .sweep import (BoundaryData, BoundarySpec, SweepResult,
                    accumulate_convolution, closure_coefficient, constant_bc,
                    dirichlet_bc, neumann_bc, periodic_bc, solve_stage,
                    solve_stage_result, zero_inflow_bc)
from .timestepping import (DirkTableau, StageCombination, StepConfig, advance_1d,
                           make_step_config, stage_boundary_values,
                           stage_combination, tableau)
from .vlasov import (Diagnostics, VpState, charge_density, diagnostics,
                     initial_condition, reverse_velocity, solve_field_dirichlet,
                     solve_field_periodic, suggested_dt, vp_step)

__version__ = "0.1.0"
