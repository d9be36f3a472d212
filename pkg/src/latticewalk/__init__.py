"""Coined quantum walk of a single atom in alternating optical superlattices."""

__version__ = "0.1.0"

from .analysis import error_sweep, site_trace, std_dev, total_variation
from .classical import ClassicalDistribution, classical_distribution, classical_site_trace
from .distribution import Distribution, TraceSeries
from .lattice import (
    LatticeParams,
    NoSolutionError,
    adiabatic_time,
    coupling_ratio,
    measurement_offset,
    pulse_time,
    solve_secondary_amplitude,
    superlattice_potential,
    theta_from_timing,
    tunneling_coupling,
)
from .walk import (
    HADAMARD,
    SYMMETRIC_START,
    BoundaryOverflowError,
    CoinOperator,
    StepSpec,
    WalkState,
    apply_coin,
    apply_step,
    new_state,
    pair_partition,
    position_distribution,
    run_walk,
)
