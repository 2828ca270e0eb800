"""Quantum Carnot and Otto engines of a particle in an infinite square well,
with first-order generalized-uncertainty-principle corrections.

Natural units throughout: hbar = k_B = 1, beta = 1/T.
"""

from ._core import (
    ContractError,
    DegenerateCycleError,
    GupParams,
    Process,
    RegimeError,
    SpecError,
    ThermalPoint,
    __version__,
    carnot_figure_f,
    carnot_ledger,
    energy_level,
    energy_level_gup,
    gamma_of,
    gup_coefficients,
    heat_gup,
    heat_isochoric,
    heat_isothermal,
    leg_heat_oracle,
    n4_moment_approx,
    otto_figure_f,
    otto_figure_f_printed,
    otto_ledger,
    partition_approx,
    partition_gup,
    partition_sum_oracle,
    run_cli,
    sweep,
    thermo_closed_form,
    thermo_gup,
    thermo_oracle,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
