"""Naive dense-matrix reference implementations.

Everything here is deliberately slow and written with explicit index
loops, independent of the coefficient-space fast paths, so that agreement
between the two is evidence of correctness rather than shared bugs.
"""

from __future__ import annotations

import numpy as np


def dense_partial_trace(op: np.ndarray, keep: int) -> np.ndarray:
    """Trace out every qubit except ``keep`` (1-based) by index summation.

    Qubit 1 is the most significant bit of the computational-basis index.
    """
    op = np.asarray(op, dtype=complex)
    dim = op.shape[0]
    if op.ndim != 2 or op.shape[1] != dim or dim & (dim - 1) or dim < 2:
        raise ValueError(f"expected a 2**n x 2**n matrix, got shape {op.shape}")
    n = dim.bit_length() - 1
    if not 1 <= keep <= n:
        raise IndexError(f"qubit {keep} out of range for n={n}")

    shift = n - keep  # bit position of the kept qubit, counted from the right
    low_mask = (1 << shift) - 1
    out = np.zeros((2, 2), dtype=complex)
    for r in (0, 1):
        for c in (0, 1):
            acc = 0.0 + 0.0j
            for rest in range(1 << (n - 1)):
                high = rest >> shift
                low = rest & low_mask
                row = ((high << 1 | r) << shift) | low
                col = ((high << 1 | c) << shift) | low
                acc += op[row, col]
            out[r, c] = acc
    return out


def dense_conjugate(
    op: np.ndarray, units: list[np.ndarray], tol: float = 1e-12
) -> np.ndarray:
    """Conjugate by the Kronecker product of 2x2 unitaries (qubit 1 first)."""
    op = np.asarray(op, dtype=complex)
    full = np.array([[1.0 + 0.0j]])
    for k, u in enumerate(units):
        u = np.asarray(u, dtype=complex)
        if u.shape != (2, 2):
            raise ValueError(f"factor {k + 1} is not 2x2")
        if np.abs(u.conj().T @ u - np.eye(2)).max() > tol:
            raise ValueError(f"factor {k + 1} is not unitary within {tol:.1e}")
        full = np.kron(full, u)
    if full.shape != op.shape:
        raise ValueError(
            f"{len(units)} factors give dimension {full.shape[0]}, operator has {op.shape[0]}"
        )
    return full @ op @ full.conj().T


def dense_commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """AB - BA."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return a @ b - b @ a
