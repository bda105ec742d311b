"""Statevector simulation of Grover search and the QFT with Mermin-polynomial entanglement evaluation."""
from .circuit import layer_matrix, run
from .errors import CapacityError, NumericalConsistencyError
from .grover import GroverProblem, explicit_state, grover_run, k_opt, phi_ent
from .hyperdet import delta2222, report
from .mermin import MerminFamilies, ObservableTriple, mermin_apply, mermin_expectation, observable
from .qft import PeriodicSpec, periodic_state, qft_layers, qft_matrix, qft_run
from .scans import grover_scan, hyperdet_scan, qft_scan
from .statevec import apply_single_qubit, inner_product, kronecker_power
from .walk import WalkConfig, WalkResult, optimize

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "GroverProblem",
    "MerminFamilies",
    "NumericalConsistencyError",
    "ObservableTriple",
    "PeriodicSpec",
    "WalkConfig",
    "WalkResult",
    "apply_single_qubit",
    "delta2222",
    "explicit_state",
    "grover_run",
    "grover_scan",
    "hyperdet_scan",
    "inner_product",
    "k_opt",
    "kronecker_power",
    "layer_matrix",
    "mermin_apply",
    "mermin_expectation",
    "observable",
    "optimize",
    "periodic_state",
    "phi_ent",
    "qft_layers",
    "qft_matrix",
    "qft_run",
    "qft_scan",
    "report",
    "run",
]
