"""Command-line front end.

Exit codes: 0 success, 1 domain rejection (invalid state, refused spec),
2 input or parse error.  Every report states the tolerance it used;
``--json-lines`` switches any report to one machine-readable JSON record
per line (field names documented in the README).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .centralizer import (
    CentralizerMembershipError,
    DegenerateAxisError,
    QubitKind,
    adjoint_action,
    centralizer_residuals,
    classify_centralizer,
    family_discriminator,
    family_member,
    random_centralizer_spec,
)
from .io import (
    StateFileError,
    dumps_state,
    load_state,
    load_unitary_spec,
    state_to_obj,
)
from .pauli import HermiticityError, PauliState
from .reduction import bloch_vector, decompose, delta_square_trace, lm_equivalent
from .states import (
    EIGENVALUE_TOL,
    IDENTITY_COEFF_TOL,
    PURITY_TOL,
    ValidationError,
    inspect_density,
    purity,
    validate,
)

CLASSIFY_DEFAULT_TOL = 1e-9
EQUALITY_DEFAULT_TOL = 1e-10


def _emit(record: dict, args) -> None:
    if args.json_lines:
        print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _load(path: str) -> tuple[PauliState, str | None]:
    try:
        return load_state(path)
    except FileNotFoundError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc


def _fmt_vec(v) -> str:
    return "[" + ", ".join(f"{x:.10g}" for x in v) + "]"


def cmd_validate(args) -> int:
    try:
        state, label = _load(args.state)
    except HermiticityError as exc:
        # The file parsed but its dense payload is not a Hermitian operator.
        record = {
            "command": "validate",
            "valid": False,
            "violations": [{"code": "hermiticity", "message": str(exc)}],
        }
        _emit(record, args)
        if not args.json_lines:
            print("  hermitian: FAIL")
            print(f"  violation [hermiticity]: {exc}")
            print("result: invalid")
        return 1
    report = inspect_density(state)
    failed = {v.code for v in report.violations}

    record = {
        "command": "validate",
        "n": state.n,
        "label": label,
        "valid": report.valid,
        "violations": [{"code": v.code, "message": v.message} for v in report.violations],
        "purity": report.purity,
        "eig_min": report.eig_min,
        "eig_max": report.eig_max,
        "positivity_checked": report.positivity_checked,
        "tolerances": {
            "identity_coefficient": IDENTITY_COEFF_TOL,
            "purity_bound": PURITY_TOL,
            "eigenvalue": EIGENVALUE_TOL,
        },
    }
    _emit(record, args)
    if not args.json_lines:
        name = f" ({label})" if label else ""
        print(f"state{name}: n={state.n}")
        print("  hermitian: pass")
        for code, text in [
            ("finite", "finite real coefficients"),
            ("identity-coefficient", f"identity coefficient = 2^-{state.n} (tol {IDENTITY_COEFF_TOL:g})"),
            ("purity-bound", f"Tr rho^2 <= 1 (tol {PURITY_TOL:g})"),
        ]:
            print(f"  {text}: {'FAIL' if code in failed else 'pass'}")
        if report.positivity_checked:
            status = "FAIL" if "positivity" in failed else "pass"
            print(f"  positive semidefinite (min eig >= -{EIGENVALUE_TOL:g}): {status}")
            print(f"  eigenvalue range: [{report.eig_min:.10g}, {report.eig_max:.10g}]")
        else:
            print("  positive semidefinite: unchecked (n above dense cap)")
        print(f"  purity: {report.purity:.10g}")
        print(f"result: {'valid' if report.valid else 'invalid'}")
        for v in report.violations:
            print(f"  violation [{v.code}]: {v.message}")
    return 0 if report.valid else 1


def cmd_decompose(args) -> int:
    state, label = _load(args.state)
    rho = validate(state)
    parts = decompose(rho)
    delta_tr2 = delta_square_trace(rho)

    qubits = []
    for tp in parts.translated:
        b = bloch_vector(rho, tp.qubit)
        qubits.append(
            {
                "qubit": tp.qubit,
                "bloch": [float(x) for x in b.r],
                "bloch_norm": b.norm,
                "translated_norm": tp.norm,
                "eigen_pair": list(tp.eigen_pair),
            }
        )
    delta_obj = state_to_obj(parts.delta, fmt="pauli")
    record = {
        "command": "decompose",
        "n": rho.n,
        "label": label,
        "identity_coeff": parts.identity_coeff,
        "qubits": qubits,
        "delta": delta_obj["pauli"],
        "delta_square_trace": delta_tr2,
    }
    _emit(record, args)
    if not args.json_lines:
        name = f" ({label})" if label else ""
        print(f"state{name}: n={rho.n}, identity coefficient {parts.identity_coeff:.10g}")
        for q in qubits:
            print(
                f"  qubit {q['qubit']}: bloch {_fmt_vec(q['bloch'])}"
                f"  |translated| = {q['translated_norm']:.10g}"
            )
        if delta_obj["pauli"]:
            print("  delta (weight >= 2):")
            for key, value in delta_obj["pauli"].items():
                print(f"    {key}  {value:.10g}")
        else:
            print("  delta (weight >= 2): empty")
        print(f"  Tr delta^2: {delta_tr2:.10g}")
    if args.output:
        Path(args.output).write_text(json.dumps(delta_obj, indent=2) + "\n")
    return 0


def cmd_centralizer(args) -> int:
    state, label = _load(args.state)
    rho = validate(state)
    desc = classify_centralizer(rho, tol=args.tol)

    entries = []
    for cls in desc.classes:
        entry = {"qubit": cls.qubit, "kind": cls.kind.value, "bloch_norm": cls.bloch_norm}
        if cls.kind is QubitKind.AXIS:
            entry["axis"] = [float(x) for x in cls.axis]
        entries.append(entry)
    record = {
        "command": "centralizer",
        "n": desc.n,
        "label": label,
        "qubits": entries,
        "m": desc.m,
        "dim": desc.dim,
        "tol": args.tol,
    }
    _emit(record, args)
    if not args.json_lines:
        name = f" ({label})" if label else ""
        print(f"state{name}: n={desc.n}")
        for entry in entries:
            if entry["kind"] == "axis":
                print(
                    f"  qubit {entry['qubit']}: one-parameter, axis {_fmt_vec(entry['axis'])}"
                    f" (bloch norm {entry['bloch_norm']:.10g})"
                )
            else:
                print(f"  qubit {entry['qubit']}: full SU(2) (bloch norm {entry['bloch_norm']:.10g})")
        print(f"  axis-locked qubits m: {desc.m}")
        print(f"  group dimension 3n - 2m: {desc.dim}")
        print(f"  classification tolerance: {args.tol:g}")
    return 0


def cmd_evolve(args) -> int:
    state, label = _load(args.state)
    rho = validate(state)
    spec = load_unitary_spec(args.spec, rho.n)
    if args.require_centralizer:
        residuals = centralizer_residuals(rho, spec)
        offending = {q + 1: r for q, r in enumerate(residuals) if r > args.tol}
        if offending:
            for q, r in sorted(offending.items()):
                print(
                    f"qubit {q}: factor does not fix the reduced state"
                    f" (commutator {r:.3e} > tol {args.tol:g})",
                    file=sys.stderr,
                )
            return 1
        result = family_member(rho, spec, tol=args.tol)
    else:
        result = adjoint_action(rho, spec)
    text = dumps_state(result.state, fmt=args.format, label=label)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_sample(args) -> int:
    state, label = _load(args.state)
    rho = validate(state)
    desc = classify_centralizer(rho, tol=args.tol)
    rng = np.random.default_rng(args.seed)
    outdir = Path(args.output_dir) if args.output_dir else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        spec = random_centralizer_spec(desc, rng)
        member = family_member(rho, spec, tol=args.tol)
        member_label = f"{label} member {k}" if label else f"member {k}"
        if outdir:
            path = outdir / f"member_{k:04d}.json"
            path.write_text(dumps_state(member.state, fmt=args.format, label=member_label))
        else:
            obj = state_to_obj(member.state, fmt=args.format, label=member_label)
            print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    return 0


def cmd_compare(args) -> int:
    state_a, label_a = _load(args.state_a)
    state_b, label_b = _load(args.state_b)
    if state_a.n != state_b.n:
        print(f"error: qubit counts differ ({state_a.n} vs {state_b.n})", file=sys.stderr)
        return 2
    a, b = validate(state_a), validate(state_b)
    per_qubit = []
    for q in range(1, a.n + 1):
        ra, rb = bloch_vector(a, q), bloch_vector(b, q)
        per_qubit.append(
            {
                "qubit": q,
                "bloch_a": [float(x) for x in ra.r],
                "bloch_b": [float(x) for x in rb.r],
                "max_diff": float(np.abs(ra.r - rb.r).max()),
            }
        )
    verdict = family_discriminator(a, b, tol=args.tol)
    record = {
        "command": "compare",
        "n": a.n,
        "labels": [label_a, label_b],
        "qubits": per_qubit,
        "lm_equivalent": lm_equivalent(a, b, tol=args.tol),
        "purity_a": purity(a),
        "purity_b": purity(b),
        "delta_square_trace_a": delta_square_trace(a),
        "delta_square_trace_b": delta_square_trace(b),
        "verdict": verdict.value,
        "tol": args.tol,
    }
    _emit(record, args)
    if not args.json_lines:
        print(f"comparing n={a.n} states (tol {args.tol:g})")
        for row in per_qubit:
            mark = "==" if row["max_diff"] <= args.tol else "!="
            print(
                f"  qubit {row['qubit']}: {_fmt_vec(row['bloch_a'])} {mark} {_fmt_vec(row['bloch_b'])}"
                f"  (max diff {row['max_diff']:.3e})"
            )
        print(f"  purity: {record['purity_a']:.10g} vs {record['purity_b']:.10g}")
        print(
            f"  Tr delta^2: {record['delta_square_trace_a']:.10g}"
            f" vs {record['delta_square_trace_b']:.10g}"
        )
        print(f"verdict: {verdict.value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulibloch",
        description="Pauli-basis density matrices: reductions, remainders, and the "
        "local unitaries that fix every single-qubit reduced state.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, tol_default: float) -> None:
        p.add_argument("--tol", type=float, default=tol_default,
                       help=f"tolerance in effect for this command (default {tol_default:g})")
        p.add_argument("--json-lines", action="store_true",
                       help="emit one machine-readable JSON record per line")

    p = sub.add_parser("validate", help="check the density-matrix constraints")
    p.add_argument("state")
    add_common(p, CLASSIFY_DEFAULT_TOL)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("decompose", help="Bloch vectors, translated norms, and the remainder")
    p.add_argument("state")
    p.add_argument("--output", help="also write the weight>=2 remainder as a Pauli-map file")
    add_common(p, EQUALITY_DEFAULT_TOL)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("centralizer", help="classify the reduction-fixing local unitaries")
    p.add_argument("state")
    add_common(p, CLASSIFY_DEFAULT_TOL)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("evolve", help="conjugate a state by a local-unitary spec")
    p.add_argument("state")
    p.add_argument("spec")
    p.add_argument("-o", "--output", help="output state file (default: stdout)")
    p.add_argument("--format", choices=["pauli", "dense"], default="pauli")
    p.add_argument("--require-centralizer", action="store_true",
                   help="reject specs that move any single-qubit reduction")
    add_common(p, CLASSIFY_DEFAULT_TOL)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sample", help="draw members of the state's equivalence family")
    p.add_argument("state")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output-dir", help="write member_NNNN.json files here instead of stdout")
    p.add_argument("--format", choices=["pauli", "dense"], default="pauli")
    add_common(p, CLASSIFY_DEFAULT_TOL)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("compare", help="family-exclusion report for two states")
    p.add_argument("state_a")
    p.add_argument("state_b")
    add_common(p, EQUALITY_DEFAULT_TOL)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HermiticityError, ValidationError, CentralizerMembershipError, DegenerateAxisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
