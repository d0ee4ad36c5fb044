"""Entropic uncertainty bounds for a qubit memory near a dilaton black hole horizon."""

from .bounds import (
    UncertaintyReport,
    adabi_bound,
    berta_bound,
    eur_no_memory,
    full_report,
    maassen_uffink_bound,
    qsk_rate_bound,
    uncertainty_lhs,
)
from .channels import (
    BlackHoleParams,
    KrausChannel,
    UnruhChannel,
    apply_to_memory,
    choi_matrix,
    dilation_vacuum,
    hawking_temperature,
    unruh_channel,
)
from .linalg import EigenSystem, hermitian_eigensystem, partial_trace, tensor_product
from .measurement import (
    Observable,
    OutcomeEnsemble,
    bloch_observable,
    complementarity_c,
    deviation_product,
    holevo_quantity,
    measured_entropy,
    outcome_ensemble,
    pauli,
    post_measurement_state,
    robertson_bound,
)
from .states import (
    CorrelationVector,
    DensityMatrix,
    InvalidStateError,
    bell_diagonal,
    bell_diagonal_from_p,
    bell_state,
    conditional_entropy,
    mutual_information,
    shannon_entropy,
    von_neumann_entropy,
    werner,
    x_state,
)
from .sweep import ResultRow, SweepConfig, evaluate_point, run_sweep, write_figure_tables

__version__ = "0.1.0"

__all__ = [
    "BlackHoleParams",
    "CorrelationVector",
    "DensityMatrix",
    "EigenSystem",
    "InvalidStateError",
    "KrausChannel",
    "Observable",
    "OutcomeEnsemble",
    "ResultRow",
    "SweepConfig",
    "UncertaintyReport",
    "UnruhChannel",
    "adabi_bound",
    "apply_to_memory",
    "bell_diagonal",
    "bell_diagonal_from_p",
    "bell_state",
    "berta_bound",
    "bloch_observable",
    "choi_matrix",
    "complementarity_c",
    "conditional_entropy",
    "deviation_product",
    "dilation_vacuum",
    "eur_no_memory",
    "evaluate_point",
    "full_report",
    "hawking_temperature",
    "hermitian_eigensystem",
    "holevo_quantity",
    "maassen_uffink_bound",
    "measured_entropy",
    "mutual_information",
    "outcome_ensemble",
    "partial_trace",
    "pauli",
    "post_measurement_state",
    "qsk_rate_bound",
    "robertson_bound",
    "run_sweep",
    "shannon_entropy",
    "tensor_product",
    "uncertainty_lhs",
    "unruh_channel",
    "von_neumann_entropy",
    "werner",
    "write_figure_tables",
    "x_state",
]
