"""Quantum-deficit toolkit for two- and three-qubit pure states.

Computes the deficit (relative entropy between a state and its classically
decohered counterpart in the marginal eigenbases), scores the monogamy
inequality D_AB + D_AC <= D_{A:BC}, and classifies symmetric three-qubit
states by their Majorana-spinor degeneracy configuration.
"""

from .deficit import (
    Cut,
    DeficitReport,
    cut_deficit,
    decohere,
    family_cut_deficit,
    family_decohered_diagonal,
    family_marginal_eigenvalues,
    gen_w_pair_deficits,
    quantum_deficit,
)
from .linalg import EigenSystem, hermitian_eig, kron, partial_trace, shannon_entropy
from .majorana import (
    SloccClass,
    Spinor,
    degeneracy_config,
    is_symmetric,
    majorana_spinors,
    partition_count,
    slocc_class,
    symmetrize,
)
from .monogamy import (
    MonogamyReport,
    SummaryRow,
    concurrence,
    q_score,
    summary_table,
    three_tangle,
)
from .states import (
    density_of,
    dicke,
    gen_ghz,
    gen_w,
    ghz,
    state_from_json,
    state_to_json,
    two_spinor_family,
    w,
    wbar,
    wwbar,
)

__version__ = "0.1.0"

__all__ = [
    "Cut",
    "DeficitReport",
    "EigenSystem",
    "MonogamyReport",
    "SloccClass",
    "Spinor",
    "SummaryRow",
    "concurrence",
    "cut_deficit",
    "decohere",
    "degeneracy_config",
    "density_of",
    "dicke",
    "family_cut_deficit",
    "family_decohered_diagonal",
    "family_marginal_eigenvalues",
    "gen_ghz",
    "gen_w",
    "gen_w_pair_deficits",
    "ghz",
    "hermitian_eig",
    "is_symmetric",
    "kron",
    "majorana_spinors",
    "partial_trace",
    "partition_count",
    "q_score",
    "quantum_deficit",
    "shannon_entropy",
    "slocc_class",
    "state_from_json",
    "state_to_json",
    "summary_table",
    "symmetrize",
    "three_tangle",
    "two_spinor_family",
    "w",
    "wbar",
    "wwbar",
]
