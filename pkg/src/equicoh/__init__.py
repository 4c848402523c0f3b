"""equicoh: SIC and MUB constructions for d = 2, 3, 8 with numerical
verification of their coherence, 2-design and uncertainty properties."""

__version__ = "0.1.0"

from ._kernels import backend_name
from .analysis import (
    HOGGAR_PROFILE_A,
    HOGGAR_PROFILE_B,
    ProbabilityTable,
    ProfileClassification,
    born_table,
    classify_hoggar_profiles,
    dephasing_degeneracy,
    equicoherence_residual,
    l1_equalization_check,
    min_uncertainty_profile,
    mub_balanced_check,
    pauli_overlap_table,
    solve_qubit_equicoherent,
    two_design_sum,
)
from .coherence import (
    CoherenceValue,
    Measure,
    check_offdiag_identity,
    coh_l1,
    coh_relent,
    coh_renyi2,
    coh_sq_offdiag,
    coherence_value,
    dephase,
)
from .designs import (
    BlochVector,
    MubCollection,
    Provenance,
    SicSet,
    bloch_to_ket,
    build_hesse_sic,
    build_hoggar_sic,
    build_mub,
    build_qubit_sics,
    check_mub_unbiased,
    check_sic_overlaps,
)
from .errors import EquicohError
from .numerics import (
    ComplexMatrix,
    ProbabilityVector,
    UnitKet,
    hermitian_eigen,
    random_ket,
    renyi2_entropy,
    shannon_entropy,
)
from .report import VerificationReport
from .serialize import read_design, write_design

__all__ = [
    "__version__",
    "backend_name",
    "BlochVector",
    "CoherenceValue",
    "ComplexMatrix",
    "EquicohError",
    "HOGGAR_PROFILE_A",
    "HOGGAR_PROFILE_B",
    "Measure",
    "MubCollection",
    "ProbabilityTable",
    "ProbabilityVector",
    "ProfileClassification",
    "Provenance",
    "SicSet",
    "UnitKet",
    "VerificationReport",
    "bloch_to_ket",
    "born_table",
    "build_hesse_sic",
    "build_hoggar_sic",
    "build_mub",
    "build_qubit_sics",
    "check_mub_unbiased",
    "check_offdiag_identity",
    "check_sic_overlaps",
    "classify_hoggar_profiles",
    "coh_l1",
    "coh_relent",
    "coh_renyi2",
    "coh_sq_offdiag",
    "coherence_value",
    "dephase",
    "dephasing_degeneracy",
    "equicoherence_residual",
    "hermitian_eigen",
    "l1_equalization_check",
    "min_uncertainty_profile",
    "mub_balanced_check",
    "pauli_overlap_table",
    "random_ket",
    "read_design",
    "renyi2_entropy",
    "shannon_entropy",
    "solve_qubit_equicoherent",
    "two_design_sum",
    "write_design",
]
