"""Local unitaries that fix every single-qubit reduction, and their action.

A single-qubit factor is stored as (axis, angle) for U = exp(i * angle *
axis . sigma).  Conjugation A -> U A U^dag acts on Pauli coefficients as
the SO(3) rotation by -2*angle about the axis (right-handed); the sign is
pinned by the dense test vector

    axis = x, angle = pi/4:  Bloch (0, 0, 1) -> (0, 1, 0)

and verified against dense conjugation throughout the test suite.

A factor commutes with its qubit's reduced state exactly when its axis is
parallel to that qubit's Bloch vector (or the vector is zero, in which
case every axis works).  Such factors fix all reductions, so conjugating
by them can only move the multi-qubit correlation remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .pauli import PauliState, SIGMA, qubit_codes
from .reduction import (
    bloch_vector,
    decompose,
    delta_square_trace,
    kernel_component,
    lm_equivalent,
    project_q,
)
from .states import DensityState, purity, validate

# Bloch norms below this classify a qubit as maximally mixed (any axis
# allowed); also the cutoff under which a rotation axis is degenerate.
CLASSIFY_TOL = 1e-9
DEGENERATE_AXIS_TOL = 1e-12
UNITARY_TOL = 1e-9

CANONICAL_AXIS = np.array([0.0, 0.0, 1.0])


class DegenerateAxisError(ValueError):
    """Axis construction requested for a (near-)zero Bloch vector."""


class CentralizerMembershipError(ValueError):
    """A factor fails to commute with its qubit's reduced state."""

    def __init__(self, residuals: dict[int, float], tol: float):
        self.residuals = residuals
        self.tol = tol
        detail = ", ".join(f"qubit {q}: {r:.3e}" for q, r in sorted(residuals.items()))
        super().__init__(f"factors do not commute with their reductions ({detail}; tol {tol:.1e})")


def _vec3(vec) -> np.ndarray:
    r = np.asarray(getattr(vec, "r", vec), dtype=float)
    if r.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {r.shape}")
    return r


def unitary_matrix(axis, angle: float) -> np.ndarray:
    """The 2x2 matrix cos(angle) 1 + i sin(angle) axis.sigma."""
    n = _vec3(axis)
    n_sigma = n[0] * SIGMA[1] + n[1] * SIGMA[2] + n[2] * SIGMA[3]
    return np.cos(angle) * SIGMA[0] + 1j * np.sin(angle) * n_sigma


def conjugation_rotation(axis, angle: float) -> np.ndarray:
    """SO(3) matrix R with U sigma_a U^dag = sum_b R[b, a] sigma_b.

    Rodrigues form for a right-handed rotation by -2*angle about the axis.
    """
    n = _vec3(axis)
    theta = -2.0 * angle
    k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return np.eye(3) + np.sin(theta) * k + (1.0 - np.cos(theta)) * (k @ k)


@dataclass(frozen=True)
class LocalUnitarySpec:
    """One (axis, angle) pair per qubit, specifying U = U_1 (x) ... (x) U_n.

    Axes are normalized at construction; a zero angle stores the canonical
    axis (0, 0, 1).  Angles may be any real (the exponential is periodic).
    """

    axes: np.ndarray
    angles: np.ndarray

    def __post_init__(self) -> None:
        axes = np.array(self.axes, dtype=float, copy=True)
        angles = np.array(self.angles, dtype=float, copy=True)
        if axes.ndim != 2 or axes.shape[1] != 3 or axes.shape[0] != angles.shape[0]:
            raise ValueError("axes must be (n, 3) with one angle per qubit")
        for j in range(axes.shape[0]):
            if angles[j] == 0.0:
                axes[j] = CANONICAL_AXIS
                continue
            norm = np.linalg.norm(axes[j])
            if norm < DEGENERATE_AXIS_TOL:
                raise ValueError(f"qubit {j + 1}: zero-length axis with nonzero angle")
            axes[j] = axes[j] / norm
        axes.flags.writeable = False
        angles.flags.writeable = False
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "angles", angles)

    @property
    def n(self) -> int:
        return int(self.angles.shape[0])

    @classmethod
    def identity(cls, n: int) -> "LocalUnitarySpec":
        return cls(np.tile(CANONICAL_AXIS, (n, 1)), np.zeros(n))

    @classmethod
    def from_factors(cls, factors) -> "LocalUnitarySpec":
        """Build from per-qubit (axis, angle) pairs; None means identity."""
        axes, angles = [], []
        for f in factors:
            if f is None:
                axes.append(CANONICAL_AXIS)
                angles.append(0.0)
            else:
                axis, angle = f
                axes.append(_vec3(axis))
                angles.append(float(angle))
        return cls(np.array(axes), np.array(angles))

    @classmethod
    def from_rotation_vectors(cls, vectors) -> "LocalUnitarySpec":
        """Build from per-qubit vectors s = angle * axis (s = 0 is identity)."""
        factors = []
        for s in vectors:
            s = _vec3(s)
            norm = float(np.linalg.norm(s))
            factors.append(None if norm < DEGENERATE_AXIS_TOL else (s / norm, norm))
        return cls.from_factors(factors)

    def unitaries(self) -> list[np.ndarray]:
        return [unitary_matrix(self.axes[j], self.angles[j]) for j in range(self.n)]

    def rotations(self) -> list[np.ndarray]:
        return [conjugation_rotation(self.axes[j], self.angles[j]) for j in range(self.n)]

    def inverse(self) -> "LocalUnitarySpec":
        return LocalUnitarySpec(self.axes, -self.angles)

    def compose(self, other: "LocalUnitarySpec") -> "LocalUnitarySpec":
        """Per-qubit products self_j @ other_j, reduced back to axis-angle.

        The product of two factors cos(w) 1 + i sin(w) n.sigma is again of
        that form, so the family is closed under composition; factors on
        the same axis simply add their angles.
        """
        if other.n != self.n:
            raise ValueError(f"qubit counts differ: {self.n} vs {other.n}")
        factors = []
        for j in range(self.n):
            c1, c2 = np.cos(self.angles[j]), np.cos(other.angles[j])
            s1, s2 = np.sin(self.angles[j]), np.sin(other.angles[j])
            a, b = self.axes[j], other.axes[j]
            scalar = c1 * c2 - s1 * s2 * float(a @ b)
            vector = c1 * s2 * b + s1 * c2 * a - s1 * s2 * np.cross(a, b)
            norm = float(np.linalg.norm(vector))
            angle = float(np.arctan2(norm, scalar))
            factors.append(None if norm < DEGENERATE_AXIS_TOL else (vector / norm, angle))
        return LocalUnitarySpec.from_factors(factors)


class QubitKind(Enum):
    FULL = "full"  # maximally mixed reduction: any axis, 3 parameters
    AXIS = "axis"  # fixed rotation axis along the Bloch vector, 1 parameter


@dataclass(frozen=True)
class QubitCentralizer:
    """Classification of one qubit's admissible rotations."""

    qubit: int
    kind: QubitKind
    axis: np.ndarray | None  # unit Bloch direction for AXIS, None for FULL
    bloch_norm: float


@dataclass(frozen=True)
class CentralizerDescriptor:
    """Per-qubit classification of the reduction-fixing subgroup.

    With m qubits locked to a single axis, the group has 3n - 2m
    continuous parameters: 3 per free qubit, 1 per locked one.
    """

    classes: tuple[QubitCentralizer, ...]

    @property
    def n(self) -> int:
        return len(self.classes)

    @property
    def m(self) -> int:
        return sum(c.kind is QubitKind.AXIS for c in self.classes)

    @property
    def dim(self) -> int:
        return 3 * self.n - 2 * self.m


def cyclic_unitary(r, xi: float) -> np.ndarray:
    """The one-parameter unitary exp(i xi r.sigma) for Bloch vector r != 0.

    Equals cos(w) 1 + i sin(w) rhat.sigma with w = xi * |r|; it commutes
    with the reduced state (1 + r.sigma)/2 for every xi.  A zero Bloch
    vector has no preferred axis: use the full three-parameter form there.
    """
    r = _vec3(r)
    norm = float(np.linalg.norm(r))
    if norm < DEGENERATE_AXIS_TOL:
        raise DegenerateAxisError(
            "Bloch vector is zero: any unitary commutes; use the full-SU(2) form"
        )
    return unitary_matrix(r / norm, xi * norm)


def reduction_commutator(u: np.ndarray, r) -> np.ndarray:
    """The 2x2 commutator [U, (1 + r.sigma)/2]."""
    u = np.asarray(u, dtype=complex)
    rvec = _vec3(r)
    rho = (SIGMA[0] + rvec[0] * SIGMA[1] + rvec[1] * SIGMA[2] + rvec[2] * SIGMA[3]) / 2.0
    return u @ rho - rho @ u


def axis_commutator(s, r) -> np.ndarray:
    """Closed form of [s.sigma, r.sigma] = 2i (s x r).sigma.

    Zero exactly when s and r are parallel, which is the axis condition
    behind :func:`cyclic_unitary`.
    """
    c = np.cross(_vec3(s), _vec3(r))
    return 2j * (c[0] * SIGMA[1] + c[1] * SIGMA[2] + c[2] * SIGMA[3])


def commutes_with_reduction(
    u: np.ndarray, r, tol: float = CLASSIFY_TOL, unitary_tol: float = UNITARY_TOL
) -> bool:
    """True iff the 2x2 unitary commutes with the state (1 + r.sigma)/2."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {u.shape}")
    if np.abs(u.conj().T @ u - np.eye(2)).max() > unitary_tol:
        raise ValueError(f"matrix is not unitary within {unitary_tol:.1e}")
    return float(np.abs(reduction_commutator(u, r)).max()) <= tol


def classify_centralizer(rho: DensityState, tol: float = CLASSIFY_TOL) -> CentralizerDescriptor:
    """Classify each qubit as axis-locked or free from its Bloch norm."""
    classes = []
    for q in range(1, rho.n + 1):
        b = bloch_vector(rho, q)
        if b.norm < tol:
            classes.append(QubitCentralizer(q, QubitKind.FULL, None, b.norm))
        else:
            classes.append(QubitCentralizer(q, QubitKind.AXIS, b.r / b.norm, b.norm))
    return CentralizerDescriptor(tuple(classes))


def sample_centralizer(
    desc: CentralizerDescriptor, params, full_form: str = "angles"
) -> LocalUnitarySpec:
    """Build a member of the classified subgroup from explicit parameters.

    Axis qubits take a single value xi (rotation angle xi * |bloch|);
    full qubits take three values, either (azimuth, polar, angle) when
    ``full_form="angles"`` or a rotation vector s when ``"vector"``.
    """
    if full_form not in ("angles", "vector"):
        raise ValueError(f"unknown full_form {full_form!r}")
    params = list(params)
    if len(params) != desc.n:
        raise ValueError(f"expected {desc.n} parameter entries, got {len(params)}")
    factors = []
    for cls, p in zip(desc.classes, params):
        values = np.atleast_1d(np.asarray(p, dtype=float))
        if cls.kind is QubitKind.AXIS:
            if values.shape != (1,):
                raise ValueError(f"qubit {cls.qubit} is axis-locked and takes 1 parameter")
            factors.append((cls.axis, float(values[0]) * cls.bloch_norm))
        else:
            if values.shape != (3,):
                raise ValueError(f"qubit {cls.qubit} is free and takes 3 parameters")
            if full_form == "vector":
                s = values
                norm = float(np.linalg.norm(s))
                factors.append(None if norm < DEGENERATE_AXIS_TOL else (s / norm, norm))
            else:
                phi, theta, omega = values
                axis = np.array(
                    [np.cos(phi) * np.sin(theta), np.sin(phi) * np.sin(theta), np.cos(theta)]
                )
                factors.append((axis, float(omega)))
    return LocalUnitarySpec.from_factors(factors)


def random_centralizer_spec(
    desc: CentralizerDescriptor, rng: np.random.Generator
) -> LocalUnitarySpec:
    """Draw one member: uniform angle in [0, 2pi) per axis qubit, uniform
    sphere axis plus uniform angle per free qubit."""
    params = []
    for cls in desc.classes:
        if cls.kind is QubitKind.AXIS:
            params.append(rng.uniform(0.0, 2.0 * np.pi) / cls.bloch_norm)
        else:
            phi = rng.uniform(0.0, 2.0 * np.pi)
            theta = np.arccos(rng.uniform(-1.0, 1.0))
            omega = rng.uniform(0.0, 2.0 * np.pi)
            params.append((phi, theta, omega))
    return sample_centralizer(desc, params)


def rotate_state(state: PauliState, spec: LocalUnitarySpec) -> PauliState:
    """Apply the conjugation to raw coefficients, one qubit axis at a time.

    Each qubit's digit transforms by the 4x4 block diag(1, R); the
    identity digit never mixes, so weight patterns are preserved exactly.
    """
    if spec.n != state.n:
        raise ValueError(f"spec is for n={spec.n}, state has n={state.n}")
    n = state.n
    t = state.coeffs.reshape((4,) * n)
    for j in range(n):
        if spec.angles[j] == 0.0:
            continue
        block = np.eye(4)
        block[1:, 1:] = conjugation_rotation(spec.axes[j], spec.angles[j])
        axis = n - 1 - j  # axis holding qubit j+1's digit
        t = np.moveaxis(np.tensordot(block, t, axes=(1, axis)), 0, axis)
    return PauliState(n, t.ravel())


def adjoint_action(rho: DensityState, spec: LocalUnitarySpec) -> DensityState:
    """Conjugate a density matrix by a tensor product of local unitaries."""
    return validate(rotate_state(rho.state, spec))


def centralizer_residuals(rho: DensityState, spec: LocalUnitarySpec) -> list[float]:
    """Per-qubit max |[U_j, rho_j]| entry; all ~0 iff the spec fixes all reductions."""
    if spec.n != rho.n:
        raise ValueError(f"spec is for n={spec.n}, state has n={rho.n}")
    units = spec.unitaries()
    return [
        float(np.abs(reduction_commutator(units[q - 1], bloch_vector(rho, q))).max())
        for q in range(1, rho.n + 1)
    ]


def family_member(
    rho: DensityState, spec: LocalUnitarySpec, tol: float = CLASSIFY_TOL
) -> DensityState:
    """Conjugate only the correlation remainder by a reduction-fixing spec.

    The spec is rejected (with per-qubit diagnostics) unless every factor
    commutes with its reduction.  Because admissible factors fix the
    weight-1 part, the result equals plain conjugation of the whole state;
    computing it through the split keeps that equality testable.
    """
    residuals = centralizer_residuals(rho, spec)
    offending = {q + 1: r for q, r in enumerate(residuals) if r > tol}
    if offending:
        raise CentralizerMembershipError(offending, tol)
    parts = decompose(rho)
    rotated_delta = rotate_state(parts.delta, spec)
    coeffs = rotated_delta.coeffs.copy()
    coeffs[0] = parts.identity_coeff
    for tp in parts.translated:
        codes = qubit_codes(rho.n, tp.qubit)
        coeffs[codes] = tp.state.coeffs[codes]
    return validate(PauliState(rho.n, coeffs))


class FamilyVerdict(Enum):
    """Outcome of the necessary-condition family check."""

    EXCLUDED_BY_REDUCTIONS = "excluded_by_reductions"
    EXCLUDED_BY_PURITY = "excluded_by_purity"
    EXCLUDED_BY_DELTA_PURITY = "excluded_by_delta_purity"
    INCONCLUSIVE = "inconclusive"


def family_discriminator(
    a: DensityState, b: DensityState, tol: float = 1e-10
) -> FamilyVerdict:
    """Rule out family membership; never confirms it.

    Checks the reductions first, then Tr(rho^2), then Tr(Delta^2).  All
    three are conserved within any family, so a mismatch excludes b; equal
    values prove nothing, hence INCONCLUSIVE.
    """
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} vs {b.n}")
    if not lm_equivalent(a, b, tol=max(tol, 0.0)):
        return FamilyVerdict.EXCLUDED_BY_REDUCTIONS
    if abs(purity(a) - purity(b)) > tol:
        return FamilyVerdict.EXCLUDED_BY_PURITY
    if abs(delta_square_trace(a) - delta_square_trace(b)) > tol:
        return FamilyVerdict.EXCLUDED_BY_DELTA_PURITY
    return FamilyVerdict.INCONCLUSIVE


def verify_subspace_invariance(
    rho: DensityState, spec: LocalUnitarySpec, qubit: int, tol: float = 1e-10
) -> bool:
    """Check that conjugation commutes with the qubit's projection.

    Holds for every local unitary spec, not just reduction-fixing ones:
    projecting after conjugating equals conjugating the projection, and
    the complementary component keeps its support off the qubit's codes.
    """
    conjugated = rotate_state(rho.state, spec)
    lhs = project_q(conjugated, qubit).state.coeffs
    rhs = rotate_state(project_q(rho, qubit).state, spec).coeffs
    if np.abs(lhs - rhs).max() > tol:
        return False
    rotated_kernel = rotate_state(kernel_component(rho, qubit), spec)
    codes = np.concatenate(([0], qubit_codes(rho.n, qubit)))
    return float(np.abs(rotated_kernel.coeffs[codes]).max()) <= tol
