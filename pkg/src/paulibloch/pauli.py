"""Base-4 Pauli-string indexing and dense <-> coefficient conversion.

An n-qubit Hermitian operator A is stored as the real vector of its
components in the tensor-product Pauli basis

    A = sum_alpha  c[alpha] * sigma_{alpha_1} (x) ... (x) sigma_{alpha_n}

where sigma_0 is the 2x2 identity and sigma_1..3 are X, Y, Z.  The
multi-index alpha = (alpha_1, ..., alpha_n) is packed into one integer in
base 4 with qubit 1 in the least significant digit:

    code = sum_j alpha_j * 4**(j - 1)        (j = 1..n)

while in the dense matrix qubit 1 is the LEFTMOST (most significant)
Kronecker factor.  Coefficients use the normalized trace convention

    c[alpha] = 2**-n * Tr(sigma_alpha @ A)

so a density matrix always has identity coefficient 2**-n and the basis
satisfies Tr(sigma_alpha sigma_beta) = 2**n * delta_{alpha beta}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

PAULI_LETTERS = "IXYZ"

SIGMA = np.stack(
    [
        np.eye(2, dtype=complex),
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
)

# Dense materialization above this qubit count is refused by default;
# a 2**12 x 2**12 complex matrix (268 MB) is the largest desk-scale object.
MAX_QUBITS = 12

# Global absolute tolerance for equality of O(1) real quantities.
EQ_TOL = 1e-10

# Imaginary residue of coefficient traces beyond this flags a
# non-Hermitian input.
HERMITICITY_TOL = 1e-9


class HermiticityError(ValueError):
    """Dense input is not Hermitian within tolerance."""


class CapacityError(ValueError):
    """Requested dense materialization exceeds the qubit cap."""


@dataclass(frozen=True)
class PauliIndex:
    """A length-n base-4 multi-index naming one Pauli-string basis matrix.

    ``digits[j]`` is the single-qubit letter (0=I, 1=X, 2=Y, 3=Z) acting on
    qubit j+1; ``code`` packs the digits little-endian in the qubit number.
    """

    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        digits = tuple(int(d) for d in self.digits)
        if len(digits) != self.n:
            raise ValueError(f"expected {self.n} digits, got {len(digits)}")
        if any(d < 0 or d > 3 for d in digits):
            raise ValueError(f"malformed Pauli index: digits must be 0..3, got {digits}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def from_code(cls, n: int, code: int) -> "PauliIndex":
        if not 0 <= code < 4**n:
            raise ValueError(f"code {code} out of range for n={n}")
        return cls(n, tuple((code >> (2 * j)) & 3 for j in range(n)))

    @classmethod
    def from_label(cls, label: str) -> "PauliIndex":
        """Build from a letter string like ``"XIZ"`` (qubit 1 leftmost)."""
        try:
            digits = tuple(PAULI_LETTERS.index(ch) for ch in label)
        except ValueError:
            raise ValueError(f"malformed Pauli label {label!r}") from None
        return cls(len(label), digits)

    @property
    def code(self) -> int:
        return sum(d << (2 * j) for j, d in enumerate(self.digits))

    @property
    def weight(self) -> int:
        """Number of non-identity tensor factors."""
        return sum(d != 0 for d in self.digits)

    @property
    def label(self) -> str:
        return "".join(PAULI_LETTERS[d] for d in self.digits)


@dataclass(frozen=True)
class PauliState:
    """An n-qubit Hermitian operator as its 4**n real Pauli coefficients.

    ``coeffs[code]`` is the component along the basis matrix
    ``PauliIndex.from_code(n, code)``.  The array is copied and frozen at
    construction; instances are immutable values.
    """

    n: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        coeffs = np.array(self.coeffs, dtype=float, copy=True)
        if coeffs.shape != (4**self.n,):
            raise ValueError(
                f"expected {4 ** self.n} coefficients for n={self.n}, got shape {coeffs.shape}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite reals")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n: int) -> "PauliState":
        return cls(n, np.zeros(4**n))

    def coefficient(self, index: PauliIndex | str) -> float:
        if isinstance(index, str):
            index = PauliIndex.from_label(index)
        if index.n != self.n:
            raise ValueError(f"index is for n={index.n}, state has n={self.n}")
        return float(self.coeffs[index.code])


@lru_cache(maxsize=None)
def weight_table(n: int) -> np.ndarray:
    """Weight (non-identity digit count) of every code, as a read-only array."""
    codes = np.arange(4**n)
    weights = np.zeros(4**n, dtype=np.uint8)
    for _ in range(n):
        weights += (codes & 3) != 0
        codes = codes >> 2
    weights.flags.writeable = False
    return weights


def qubit_codes(n: int, qubit: int) -> np.ndarray:
    """The three weight-1 codes carrying X, Y, Z on the given qubit (1-based)."""
    if not 1 <= qubit <= n:
        raise IndexError(f"qubit {qubit} out of range for n={n}")
    return np.array([a << (2 * (qubit - 1)) for a in (1, 2, 3)])


def sigma_dense(index: PauliIndex) -> np.ndarray:
    """Dense matrix of one Pauli-string basis element (qubit 1 leftmost)."""
    return reduce(np.kron, (SIGMA[d] for d in index.digits))


def infer_qubits(op: np.ndarray) -> int:
    """Qubit count of a square dense operator; rejects non-2**n shapes."""
    op = np.asarray(op)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {op.shape}")
    n = int(op.shape[0]).bit_length() - 1
    if 2**n != op.shape[0] or n < 1:
        raise ValueError(f"matrix dimension {op.shape[0]} is not 2**n with n >= 1")
    return n


def dense_to_coeffs(op: np.ndarray, tol: float = HERMITICITY_TOL) -> PauliState:
    """Project a dense Hermitian operator onto the Pauli basis.

    Contracts one qubit at a time, so the cost is O(n 4**n) beyond reading
    the matrix.  The imaginary residue of the coefficient traces is the
    hermiticity check: if any exceeds ``tol`` a :class:`HermiticityError`
    is raised, otherwise the real parts are returned.
    """
    op = np.asarray(op, dtype=complex)
    n = infer_qubits(op)
    if n > MAX_QUBITS:
        raise CapacityError(f"n={n} exceeds the dense cap of {MAX_QUBITS}")
    # Tensor axes: row bits of qubits 1..n, then column bits of qubits 1..n.
    t = op.reshape((2,) * (2 * n))
    remaining = n
    for _ in range(n):
        # c[alpha] ~ sum_{i,j} sigma_alpha[i, j] op[j, i]: contract the
        # current qubit's row axis with SIGMA's column index and vice versa.
        t = np.tensordot(t, SIGMA, axes=([0, remaining], [2, 1]))
        remaining -= 1
    t = t / 2**n
    # Axis k now holds qubit k+1; flat codes want qubit 1 least significant.
    t = t.transpose(tuple(reversed(range(n)))).ravel()
    residue = float(np.abs(t.imag).max())
    if residue > tol:
        raise HermiticityError(
            f"input is not Hermitian: imaginary coefficient residue {residue:.3e} > {tol:.1e}"
        )
    return PauliState(n, t.real)


def coeffs_to_dense(state: PauliState, max_qubits: int = MAX_QUBITS) -> np.ndarray:
    """Rebuild the dense matrix sum_alpha c[alpha] sigma_alpha."""
    if state.n > max_qubits:
        raise CapacityError(f"n={state.n} exceeds the dense cap of {max_qubits}")
    n = state.n
    # Reorder so axis k holds qubit k+1, then expand one qubit at a time.
    t = state.coeffs.reshape((4,) * n).transpose(tuple(reversed(range(n)))).astype(complex)
    for _ in range(n):
        t = np.tensordot(t, SIGMA, axes=([0], [0]))
    # Axes are (i_1, j_1, ..., i_n, j_n); group rows before columns.
    perm = tuple(range(0, 2 * n, 2)) + tuple(range(1, 2 * n, 2))
    return t.transpose(perm).reshape(2**n, 2**n)


def hs_inner(a: PauliState, b: PauliState) -> float:
    """Hilbert-Schmidt inner product Tr(AB) = 2**n sum_alpha a[alpha] b[alpha]."""
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} vs {b.n}")
    return float(2**a.n * (a.coeffs @ b.coeffs))


def hs_norm(a: PauliState) -> float:
    """Hilbert-Schmidt norm sqrt(Tr(A^2))."""
    return float(np.sqrt(hs_inner(a, a)))


def tensor_product(a: PauliState, b: PauliState) -> PauliState:
    """Coefficients of A (x) B; a's qubits come first (1..a.n)."""
    n = a.n + b.n
    if n > MAX_QUBITS:
        raise CapacityError(f"combined n={n} exceeds the cap of {MAX_QUBITS}")
    # code = code_b * 4**a.n + code_a, so b varies along the slow axis.
    return PauliState(n, np.outer(b.coeffs, a.coeffs).ravel())
