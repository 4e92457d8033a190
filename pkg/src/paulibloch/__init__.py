"""Multi-qubit density matrices in the Pauli coefficient basis.

The package represents n-qubit Hermitian operators by their 4**n real
Pauli-string coefficients, reads single-qubit reduced states straight off
the weight-1 coefficients, splits any state into identity + per-qubit
parts + a multi-qubit correlation remainder, and constructs the group of
local unitaries that fix every reduced state, together with the family of
states those unitaries generate.
"""

from .centralizer import (
    CentralizerDescriptor,
    CentralizerMembershipError,
    DegenerateAxisError,
    FamilyVerdict,
    LocalUnitarySpec,
    QubitCentralizer,
    QubitKind,
    adjoint_action,
    axis_commutator,
    centralizer_residuals,
    classify_centralizer,
    commutes_with_reduction,
    conjugation_rotation,
    cyclic_unitary,
    family_discriminator,
    family_member,
    random_centralizer_spec,
    reduction_commutator,
    rotate_state,
    sample_centralizer,
    unitary_matrix,
    verify_subspace_invariance,
)
from .pauli import (
    EQ_TOL,
    MAX_QUBITS,
    CapacityError,
    HermiticityError,
    PauliIndex,
    PauliState,
    coeffs_to_dense,
    dense_to_coeffs,
    hs_inner,
    hs_norm,
    qubit_codes,
    sigma_dense,
    tensor_product,
    weight_table,
)
from .reduction import (
    BlochVector,
    Decomposition,
    QProjection,
    TranslatedProjection,
    bloch_vector,
    decompose,
    delta_square_trace,
    kernel_component,
    lm_equivalent,
    local_expectation,
    project_q,
    reduced_matrix,
    translated_projection,
)
from .states import (
    DensityState,
    ValidationError,
    ValidationReport,
    Violation,
    inspect_density,
    make_ghz,
    make_product,
    make_werner_like,
    maximally_mixed,
    purity,
    random_density,
    validate,
)

__version__ = "0.1.0"
