"""Obstacle problems for the Kolmogorov operator L = Delta_v - d_t - v . grad_x.

Thin Python layer over the C++ core. Points are (t, x, v) tuples; fields convert to
numpy arrays of shape (Nt+1, Nx+1, Nv+1) with ``Field.to_numpy()``.
"""

from ._kobs import (  # noqa: F401
    ConfigError,
    DomainError,
    Field,
    FormatError,
    Grid,
    RangeError,
    SolverError,
    apply_L,
    apply_Y,
    classify_point,
    compose,
    config_echo,
    dilate,
    free_boundary_point,
    growth_quotients,
    in_cylinder,
    inverse,
    kinetic_distance,
    kinetic_norm,
    load_field,
    lsmc_price,
    omega_hat,
    operator_error,
    phase_counts,
    reference_names,
    sample_reference,
    save_field,
    scenario_names,
    set_thread_cap,
    solve,
    solve_scenario,
    thickness,
    transport_sup_scan,
    version,
    weiss_field,
    weiss_reference,
)

__version__ = version()
