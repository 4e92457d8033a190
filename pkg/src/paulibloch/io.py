"""JSON state-file and unitary-spec-file formats.

State file::

    {
      "format_version": 1,
      "n": 2,
      "label": "bell",                  # optional
      "pauli": {"II": 0.25, "XX": 0.25, "YY": -0.25, "ZZ": 0.25}
    }

or, with ``"dense"`` instead of ``"pauli"``, a 2**n x 2**n matrix of
``[re, im]`` pairs.  Pauli keys are length-n strings over I, X, Y, Z with
qubit 1 leftmost; unlisted strings mean coefficient zero.  Serialization
writes keys in code order and keeps exact zeros out, so parse/serialize
round-trips are byte-stable.

Unitary spec file::

    {
      "format_version": 1,
      "factors": [{"qubit": 1, "axis": [0.0, 0.0, 1.0], "angle": 0.7853}]
    }

Omitted qubits act as the identity; axes are normalized on load and a
zero-length axis with a nonzero angle is an error.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .centralizer import LocalUnitarySpec
from .pauli import (
    MAX_QUBITS,
    PAULI_LETTERS,
    PauliIndex,
    PauliState,
    coeffs_to_dense,
    dense_to_coeffs,
)

FORMAT_VERSION = 1


class StateFileError(ValueError):
    """Structurally invalid state or unitary-spec file."""


def state_to_obj(state: PauliState, fmt: str = "pauli", label: str | None = None) -> dict:
    obj: dict = {"format_version": FORMAT_VERSION, "n": state.n}
    if label is not None:
        obj["label"] = label
    if fmt == "pauli":
        entries = {}
        for code in np.flatnonzero(state.coeffs != 0.0):
            entries[PauliIndex.from_code(state.n, int(code)).label] = float(state.coeffs[code])
        obj["pauli"] = entries
    elif fmt == "dense":
        dense = coeffs_to_dense(state)
        obj["dense"] = [[[z.real, z.imag] for z in row] for row in dense]
    else:
        raise ValueError(f"unknown format {fmt!r} (expected 'pauli' or 'dense')")
    return obj


def dumps_state(state: PauliState, fmt: str = "pauli", label: str | None = None) -> str:
    return json.dumps(state_to_obj(state, fmt=fmt, label=label), indent=2) + "\n"


def dump_state(
    state: PauliState, path: str | Path, fmt: str = "pauli", label: str | None = None
) -> None:
    Path(path).write_text(dumps_state(state, fmt=fmt, label=label))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise StateFileError(message)


def obj_to_state(obj) -> tuple[PauliState, str | None]:
    _require(isinstance(obj, dict), "state file must hold a JSON object")
    _require("format_version" in obj, "missing required field 'format_version'")
    _require(obj["format_version"] == FORMAT_VERSION, f"unsupported format_version {obj['format_version']!r}")
    _require("n" in obj, "missing required field 'n'")
    n = obj["n"]
    _require(isinstance(n, int) and 1 <= n <= MAX_QUBITS, f"'n' must be an integer in 1..{MAX_QUBITS}")
    label = obj.get("label")
    _require(label is None or isinstance(label, str), "'label' must be a string")
    has_pauli, has_dense = "pauli" in obj, "dense" in obj
    _require(has_pauli != has_dense, "state file needs exactly one of 'pauli' or 'dense'")

    if has_pauli:
        entries = obj["pauli"]
        _require(isinstance(entries, dict), "'pauli' must map letter strings to numbers")
        coeffs = np.zeros(4**n)
        for key, value in entries.items():
            _require(
                isinstance(key, str) and len(key) == n and all(ch in PAULI_LETTERS for ch in key),
                f"bad Pauli key {key!r}: need {n} letters from I, X, Y, Z",
            )
            _require(isinstance(value, (int, float)) and not isinstance(value, bool),
                     f"coefficient of {key!r} must be a number")
            coeffs[PauliIndex.from_label(key).code] = float(value)
        return PauliState(n, coeffs), label

    rows = obj["dense"]
    dim = 2**n
    _require(isinstance(rows, list) and len(rows) == dim, f"'dense' must be a {dim}x{dim} matrix")
    dense = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == dim, f"dense row {i} must have {dim} entries")
        for j, pair in enumerate(row):
            _require(
                isinstance(pair, list) and len(pair) == 2
                and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair),
                f"dense entry ({i},{j}) must be a [re, im] pair",
            )
            dense[i, j] = pair[0] + 1j * pair[1]
    # May raise HermiticityError: the file parsed, but the matrix is not a
    # Hermitian operator (a domain rejection, not a syntax problem).
    return dense_to_coeffs(dense), label


def loads_state(text: str) -> tuple[PauliState, str | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from exc
    return obj_to_state(obj)


def load_state(path: str | Path) -> tuple[PauliState, str | None]:
    return loads_state(Path(path).read_text())


def spec_to_obj(spec: LocalUnitarySpec) -> dict:
    factors = []
    for j in range(spec.n):
        if spec.angles[j] == 0.0:
            continue
        factors.append(
            {"qubit": j + 1, "axis": [float(v) for v in spec.axes[j]], "angle": float(spec.angles[j])}
        )
    return {"format_version": FORMAT_VERSION, "n": spec.n, "factors": factors}


def dump_unitary_spec(spec: LocalUnitarySpec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spec_to_obj(spec), indent=2) + "\n")


def obj_to_unitary_spec(obj, n: int) -> LocalUnitarySpec:
    _require(isinstance(obj, dict), "unitary spec file must hold a JSON object")
    _require("format_version" in obj, "missing required field 'format_version'")
    _require(obj["format_version"] == FORMAT_VERSION, f"unsupported format_version {obj['format_version']!r}")
    if "n" in obj:
        _require(obj["n"] == n, f"spec is for n={obj['n']}, state has n={n}")
    factors_obj = obj.get("factors", [])
    _require(isinstance(factors_obj, list), "'factors' must be a list")
    factors: list = [None] * n
    seen: set[int] = set()
    for k, entry in enumerate(factors_obj):
        _require(isinstance(entry, dict), f"factor {k} must be an object")
        qubit = entry.get("qubit")
        _require(isinstance(qubit, int) and 1 <= qubit <= n, f"factor {k}: 'qubit' must be in 1..{n}")
        _require(qubit not in seen, f"duplicate factor for qubit {qubit}")
        seen.add(qubit)
        axis = entry.get("axis")
        _require(
            isinstance(axis, list) and len(axis) == 3
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in axis),
            f"factor {k}: 'axis' must be a 3-vector",
        )
        angle = entry.get("angle")
        _require(isinstance(angle, (int, float)) and not isinstance(angle, bool),
                 f"factor {k}: 'angle' must be a number")
        if float(angle) != 0.0:
            _require(float(np.linalg.norm(axis)) > 0.0,
                     f"factor {k}: zero-length axis with nonzero angle")
            factors[qubit - 1] = (np.asarray(axis, dtype=float), float(angle))
    return LocalUnitarySpec.from_factors(factors)


def load_unitary_spec(path: str | Path, n: int) -> LocalUnitarySpec:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from exc
    return obj_to_unitary_spec(obj, n)
