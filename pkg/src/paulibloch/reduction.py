"""Single-qubit reductions and the identity + reductions + remainder split.

All operations work directly on Pauli coefficients: the reduced state of
qubit i is carried entirely by the four codes whose digits vanish away
from i, so no dense matrix is ever formed here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import PauliState, SIGMA, qubit_codes, weight_table
from .states import DensityState

# Componentwise tolerance for comparing Bloch vectors.
LM_TOL = 1e-9

OBS_HERMITICITY_TOL = 1e-9


@dataclass(frozen=True)
class BlochVector:
    """The 3-vector of qubit ``qubit`` (1-based); r = 0 means maximally mixed."""

    qubit: int
    r: np.ndarray

    def __post_init__(self) -> None:
        r = np.array(self.r, dtype=float, copy=True)
        if r.shape != (3,):
            raise ValueError(f"expected a 3-vector, got shape {r.shape}")
        r.flags.writeable = False
        object.__setattr__(self, "r", r)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.r))

    def matrix(self) -> np.ndarray:
        """The reduced 2x2 density matrix (1 + r.sigma)/2."""
        return (SIGMA[0] + self.r[0] * SIGMA[1] + self.r[1] * SIGMA[2] + self.r[2] * SIGMA[3]) / 2.0


@dataclass(frozen=True)
class QProjection:
    """Projection onto qubit i's four-dimensional reduced-information subspace."""

    qubit: int
    state: PauliState


@dataclass(frozen=True)
class TranslatedProjection:
    """Qubit i's three weight-1 coefficients, identity component removed.

    The dense form has exactly two distinct eigenvalues -s and +s with
    s = |coefficient 3-vector|; ``norm`` is sqrt(sum of their squares),
    i.e. the Hilbert-Schmidt norm of the dense form divided by
    2**((n-1)/2).
    """

    qubit: int
    state: PauliState
    eigen_pair: tuple[float, float]

    @property
    def norm(self) -> float:
        lo, hi = self.eigen_pair
        return float(np.hypot(lo, hi))


@dataclass(frozen=True)
class Decomposition:
    """Split of a state into identity part, n single-qubit parts, and remainder.

    ``delta`` carries every coefficient of weight >= 2 (all multi-qubit
    correlations).  The three pieces have disjoint support, so
    :meth:`recompose` reproduces the input coefficients exactly.
    """

    identity_coeff: float
    translated: tuple[TranslatedProjection, ...]
    delta: PauliState

    @property
    def n(self) -> int:
        return self.delta.n

    def recompose(self) -> PauliState:
        coeffs = self.delta.coeffs.copy()
        coeffs[0] = self.identity_coeff
        for part in self.translated:
            codes = qubit_codes(self.n, part.qubit)
            coeffs[codes] = part.state.coeffs[codes]
        return PauliState(self.n, coeffs)


def _coeffs(rho) -> PauliState:
    """Accept a DensityState or a bare PauliState."""
    return rho.state if isinstance(rho, DensityState) else rho


def bloch_vector(rho: DensityState, qubit: int) -> BlochVector:
    """Reduce to qubit ``qubit`` by reading its three weight-1 coefficients.

    The component along sigma_a is 2**n times the coefficient whose only
    nonzero digit is a on that qubit; this agrees with the dense partial
    trace.
    """
    state = _coeffs(rho)
    codes = qubit_codes(state.n, qubit)
    return BlochVector(qubit, 2**state.n * state.coeffs[codes])


def reduced_matrix(rho: DensityState, qubit: int) -> np.ndarray:
    """The 2x2 reduced density matrix of one qubit."""
    return bloch_vector(rho, qubit).matrix()


def project_q(rho: DensityState, qubit: int) -> QProjection:
    """Keep the <= 4 coefficients supported on qubit ``qubit`` alone.

    Tracing the projection down to that qubit returns the same reduced
    state as tracing the full input.
    """
    state = _coeffs(rho)
    coeffs = np.zeros_like(state.coeffs)
    coeffs[0] = state.coeffs[0]
    codes = qubit_codes(state.n, qubit)
    coeffs[codes] = state.coeffs[codes]
    return QProjection(qubit, PauliState(state.n, coeffs))


def kernel_component(rho: DensityState, qubit: int) -> PauliState:
    """The complement rho - project_q(rho): everything the reduction discards."""
    state = _coeffs(rho)
    coeffs = state.coeffs.copy()
    coeffs[0] = 0.0
    codes = qubit_codes(state.n, qubit)
    coeffs[codes] = 0.0
    return PauliState(state.n, coeffs)


def translated_projection(rho: DensityState, qubit: int) -> TranslatedProjection:
    """Qubit i's weight-1 component, with the eigenvalue pair of its dense form."""
    state = _coeffs(rho)
    coeffs = np.zeros_like(state.coeffs)
    codes = qubit_codes(state.n, qubit)
    coeffs[codes] = state.coeffs[codes]
    s = float(np.linalg.norm(state.coeffs[codes]))
    return TranslatedProjection(qubit, PauliState(state.n, coeffs), (-s, s))


def decompose(rho: DensityState) -> Decomposition:
    """Split coefficients by weight: 0 -> identity, 1 -> per-qubit, >= 2 -> delta."""
    state = _coeffs(rho)
    translated = tuple(translated_projection(state, q) for q in range(1, state.n + 1))
    delta = state.coeffs * (weight_table(state.n) >= 2)
    return Decomposition(
        identity_coeff=float(state.coeffs[0]),
        translated=translated,
        delta=PauliState(state.n, delta),
    )


def delta_square_trace(rho: DensityState) -> float:
    """Tr(Delta^2): 2**n times the squared weight->=2 coefficients."""
    state = _coeffs(rho)
    mask = weight_table(state.n) >= 2
    return float(2**state.n * (state.coeffs[mask] @ state.coeffs[mask]))


def local_expectation(
    rho: DensityState, qubit: int, obs: np.ndarray, tol: float = OBS_HERMITICITY_TOL
) -> float:
    """Expectation of a 2x2 Hermitian observable measured on one qubit.

    Evaluated from the Bloch vector as Tr(A)/2 + r . a/2 where a are the
    observable's Pauli components; equals the full-space expectation.
    """
    obs = np.asarray(obs, dtype=complex)
    if obs.shape != (2, 2):
        raise ValueError(f"observable must be 2x2, got {obs.shape}")
    if np.abs(obs - obs.conj().T).max() > tol:
        raise ValueError("observable is not Hermitian within tolerance")
    r = bloch_vector(rho, qubit).r
    value = np.trace(obs) / 2.0
    for a in range(3):
        value += r[a] * np.trace(SIGMA[a + 1] @ obs) / 2.0
    return float(value.real)


def lm_equivalent(a: DensityState, b: DensityState, tol: float = LM_TOL) -> bool:
    """True iff every pair of single-qubit reductions agrees within ``tol``.

    States related this way cannot be told apart by any measurement
    confined to one qubit.
    """
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} vs {b.n}")
    for q in range(1, a.n + 1):
        if np.abs(bloch_vector(a, q).r - bloch_vector(b, q).r).max() > tol:
            return False
    return True
