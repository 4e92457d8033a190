"""Validated density matrices, purity, and fixture states."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .pauli import PauliState, coeffs_to_dense, dense_to_coeffs

# Positive semidefiniteness is checked by a dense eigendecomposition up to
# this qubit count and skipped (with a marker) above it.
POSITIVITY_CAP = 8

IDENTITY_COEFF_TOL = 1e-10
EIGENVALUE_TOL = 1e-9
PURITY_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    """One violated density-matrix constraint."""

    code: str
    message: str
    value: float | None = None


class ValidationError(ValueError):
    """Raised when a coefficient vector is not a valid density matrix."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(v.message for v in violations))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking every density-matrix constraint."""

    n: int
    violations: tuple[Violation, ...]
    purity: float
    eig_min: float | None
    eig_max: float | None
    positivity_checked: bool

    @property
    def valid(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class DensityState:
    """A PauliState that passed :func:`validate`.

    ``positivity_checked`` is False when the state was too large for the
    dense eigensolve, in which case positivity was taken on trust.
    """

    state: PauliState
    positivity_checked: bool = field(default=True, compare=False)

    @property
    def n(self) -> int:
        return self.state.n

    @property
    def coeffs(self) -> np.ndarray:
        return self.state.coeffs


def inspect_density(
    state: PauliState, positivity_cap: int = POSITIVITY_CAP
) -> ValidationReport:
    """Check all density-matrix constraints and report each violation.

    Constraints: finite real coefficients, identity coefficient 2**-n
    (equivalent to unit trace), Tr(rho^2) <= 1, and positive
    semidefiniteness via a dense eigensolve for n <= ``positivity_cap``.
    """
    violations: list[Violation] = []
    n = state.n

    if not np.all(np.isfinite(state.coeffs)):
        violations.append(Violation("finite", "coefficients are not all finite"))

    identity_coeff = float(state.coeffs[0])
    expected = 2.0**-n
    if abs(identity_coeff - expected) > IDENTITY_COEFF_TOL:
        violations.append(
            Violation(
                "identity-coefficient",
                f"identity coefficient {identity_coeff!r} != 2**-{n} = {expected!r}"
                " (trace is not 1)",
                identity_coeff,
            )
        )

    pur = float(2**n * (state.coeffs @ state.coeffs))
    if pur > 1.0 + PURITY_TOL:
        violations.append(
            Violation("purity-bound", f"Tr(rho^2) = {pur:.12g} exceeds 1", pur)
        )

    eig_min = eig_max = None
    positivity_checked = n <= positivity_cap
    if positivity_checked:
        eigs = np.linalg.eigvalsh(coeffs_to_dense(state))
        eig_min = float(eigs[0])
        eig_max = float(eigs[-1])
        if eig_min < -EIGENVALUE_TOL:
            violations.append(
                Violation(
                    "positivity",
                    f"minimum eigenvalue {eig_min:.3e} < -{EIGENVALUE_TOL:.1e}",
                    eig_min,
                )
            )

    return ValidationReport(
        n=n,
        violations=tuple(violations),
        purity=pur,
        eig_min=eig_min,
        eig_max=eig_max,
        positivity_checked=positivity_checked,
    )


def validate(state: PauliState, positivity_cap: int = POSITIVITY_CAP) -> DensityState:
    """Return a validated DensityState or raise ValidationError."""
    report = inspect_density(state, positivity_cap=positivity_cap)
    if not report.valid:
        raise ValidationError(list(report.violations))
    return DensityState(state, positivity_checked=report.positivity_checked)


def purity(rho: DensityState) -> float:
    """Tr(rho^2) = 2**n sum_alpha c[alpha]**2, in [2**-n, 1]."""
    return float(2**rho.n * (rho.coeffs @ rho.coeffs))


def maximally_mixed(n: int) -> DensityState:
    """The state 2**-n * identity: every Bloch vector is zero."""
    coeffs = np.zeros(4**n)
    coeffs[0] = 2.0**-n
    return DensityState(PauliState(n, coeffs))


def make_ghz(n: int) -> DensityState:
    """Projector onto (|0...0> + |1...1>)/sqrt(2), built densely.

    Every single-qubit reduction of this state is maximally mixed.
    """
    if n < 2:
        raise ValueError(f"the GHZ construction needs n >= 2, got {n}")
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = psi[-1] = 1.0 / np.sqrt(2.0)
    return validate(dense_to_coeffs(np.outer(psi, psi.conj())))


def _as_bloch3(vec) -> np.ndarray:
    """Accept a plain 3-vector or anything exposing a 3-vector ``.r``."""
    r = np.asarray(getattr(vec, "r", vec), dtype=float)
    if r.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {r.shape}")
    return r


def make_product(bloch_list) -> DensityState:
    """Tensor product of single-qubit states (1 + r.sigma)/2, qubit 1 first.

    Each entry may be a length-3 sequence or a BlochVector; every vector
    must have norm <= 1.
    """
    vectors = [_as_bloch3(v) for v in bloch_list]
    if not vectors:
        raise ValueError("need at least one Bloch vector")
    for k, r in enumerate(vectors):
        if np.linalg.norm(r) > 1.0 + 1e-12:
            raise ValueError(
                f"invalid Bloch vector for qubit {k + 1}: norm {np.linalg.norm(r):.6g} > 1"
            )
    # Coefficients multiply across factors; accumulate most significant
    # (highest qubit) axis first so qubit 1 lands in the fastest axis.
    t = np.array([1.0])
    for r in reversed(vectors):
        factor = np.array([1.0, r[0], r[1], r[2]]) / 2.0
        t = np.multiply.outer(t, factor)
    return validate(PauliState(len(vectors), t.ravel()))


def make_werner_like(n: int, weight: float) -> DensityState:
    """Mixture (1 - w) * maximally mixed + w * GHZ projector.

    A one-parameter family whose members all have zero Bloch vectors;
    ``weight`` outside the positivity range fails validation.
    """
    ghz = make_ghz(n)
    coeffs = weight * ghz.coeffs.copy()
    coeffs[0] += (1.0 - weight) * 2.0**-n
    return validate(PauliState(n, coeffs))


def random_density(
    n: int, rng: np.random.Generator | None = None, rank: int | None = None
) -> DensityState:
    """Random valid density matrix from G G^dagger / Tr, for tests and demos."""
    if rng is None:
        rng = np.random.default_rng()
    dim = 2**n
    k = dim if rank is None else rank
    g = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    # Symmetrize away the last float asymmetry before projecting.
    rho = (rho + rho.conj().T) / 2.0
    return validate(dense_to_coeffs(rho))
