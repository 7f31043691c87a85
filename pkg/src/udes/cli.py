"""Command-line interface: verify designs, complete orthogonal unitary
bases, evaluate frame potentials, inspect group and polytope structure,
cross-check the averaging oracles by Monte Carlo, and print the closure
table.

Exit codes: 0 success (and verdict true), 1 verdict false, 2 input/parse
problem, 3 unsupported averaging order, 4 precondition failure in the
math (non-unitary input, classification failure, ...), 5 proportional
elements where a closure needs distinct antipodal pairs.

All numbers are serialized with 17 significant digits (%.17g), enough to
round-trip IEEE doubles exactly, and JSON and text renderings of a report
carry identical values.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys

import numpy as np

from . import designs, groups, qubit, twirl
from .errors import (
    InternalConsistencyError,
    ProportionalElements,
    UdesError,
    UnknownName,
    UnsupportedOrder,
)
from .linalg import hs_norm

DEFAULT_TOL = 1e-10

BUILTIN_NAMES = ("pauli", "B", "B0", "D", "D0", "D1", "D2")


class FileFormatError(UdesError):
    """A unitary-set file does not follow the expected JSON layout."""


# --------------------------------------------------------------------------
# number formatting and JSON emission


def format_number(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    # adding +0.0 rewrites -0.0 as 0.0, keeping emitted files re-loadable
    # bit for bit ("-0" would parse back as the integer 0)
    return f"{float(x) + 0.0:.17g}"


def _inline(value) -> str:
    if isinstance(value, dict):
        body = ", ".join(f"{json.dumps(k)}: {_inline(v)}" for k, v in value.items())
        return "{" + body + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if value is None:
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    return format_number(value)


def emit_json(value, indent: int = 0) -> str:
    """Serialize with %.17g floats; short collections stay on one line."""
    flat = _inline(value)
    if len(flat) <= 100 - 2 * indent or not isinstance(value, (dict, list, tuple)):
        return flat
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(value, dict):
        lines = [f"{inner}{json.dumps(k)}: {emit_json(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(lines) + "\n" + pad + "}"
    lines = [f"{inner}{emit_json(v, indent + 1)}" for v in value]
    return "[\n" + ",\n".join(lines) + "\n" + pad + "]"


# --------------------------------------------------------------------------
# the unitary-set file format


def matrix_payload(M: np.ndarray) -> list:
    A = np.asarray(M, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in A]


def set_payload(S: twirl.UnitarySet) -> dict:
    doc: dict = {"dim": S.dim, "unitaries": [matrix_payload(U) for U in S]}
    if S.labels is not None:
        doc["labels"] = list(S.labels)
    return doc


def save_unitary_set(S: twirl.UnitarySet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_json(set_payload(S)) + "\n")


def _entry(value, where: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise FileFormatError(f"{where}: expected a [re, im] pair, got {value!r}")
    return complex(float(value[0]), float(value[1]))


def parse_unitary_set(doc, strict: bool = False) -> twirl.UnitarySet:
    if not isinstance(doc, dict):
        raise FileFormatError("top-level value must be an object")
    for key in doc:
        if key not in ("dim", "unitaries", "labels"):
            if strict:
                raise FileFormatError(f"unknown field {key!r}")
            print(f"warning: ignoring unknown field {key!r}", file=sys.stderr)
    if "dim" not in doc or "unitaries" not in doc:
        raise FileFormatError("fields 'dim' and 'unitaries' are required")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FileFormatError(f"dim: expected a positive integer, got {dim!r}")
    raw = doc["unitaries"]
    if not isinstance(raw, list) or not raw:
        raise FileFormatError("unitaries: expected a nonempty list of matrices")
    mats = []
    for k, mat in enumerate(raw):
        if not isinstance(mat, list) or len(mat) != dim:
            raise FileFormatError(f"unitaries[{k}]: expected {dim} rows")
        out = np.empty((dim, dim), dtype=complex)
        for i, row in enumerate(mat):
            if not isinstance(row, list) or len(row) != dim:
                raise FileFormatError(f"unitaries[{k}][{i}]: expected {dim} entries")
            for j, entry in enumerate(row):
                out[i, j] = _entry(entry, f"unitaries[{k}][{i}][{j}]")
        mats.append(out)
    labels = doc.get("labels")
    if labels is not None:
        if (
            not isinstance(labels, list)
            or len(labels) != len(mats)
            or not all(isinstance(l, str) for l in labels)
        ):
            raise FileFormatError("labels: expected one string per unitary")
    return twirl.UnitarySet(mats, labels=labels)


def load_unitary_set(path: str, strict: bool = False) -> tuple[twirl.UnitarySet, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"{path}: {exc}") from None
    return parse_unitary_set(doc, strict=strict), digest


# --------------------------------------------------------------------------
# argument handling


def _add_source_args(sub) -> None:
    sub.add_argument("--builtin", choices=BUILTIN_NAMES, help="use a named builtin set")
    sub.add_argument("--file", help="load a unitary-set JSON file")


def _add_common_args(sub) -> None:
    sub.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numerical tolerance")
    sub.add_argument("--out", help="write the primary output to this path")
    sub.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    sub.add_argument("--strict", action="store_true", help="reject unknown file fields")
    sub.add_argument("--threads", type=int, default=None, help="worker threads for verification")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udes", description="unitary design construction and verification for qubits"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="check the design property of a unitary set")
    _add_source_args(p)
    p.add_argument("--t", type=int, default=2, help="averaging order (1 or 2)")
    p.add_argument("--method", choices=("twirl", "frame", "both"), default="both")
    _add_common_args(p)

    p = subs.add_parser("construct", help="complete an orthogonal unitary basis to a 2-design")
    p.add_argument("--from", dest="source_kind", choices=("pauli", "file"))
    p.add_argument("path", nargs="?", help="unitary-set file (with --from file)")
    _add_source_args(p)
    _add_common_args(p)

    p = subs.add_parser("frame-potential", help="evaluate the order-t frame potential")
    _add_source_args(p)
    p.add_argument("--t", type=int, default=2)
    _add_common_args(p)

    p = subs.add_parser("group", help="multiplicative structure of the determinant-1 closure")
    _add_source_args(p)
    _add_common_args(p)

    p = subs.add_parser("geometry", help="polytope and rotation picture of the closure")
    _add_source_args(p)
    _add_common_args(p)

    p = subs.add_parser("mc", help="Monte Carlo cross-check of the closed-form averaging")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    _add_common_args(p)

    p = subs.add_parser("table", help="print all 24 closure elements in every picture")
    _add_common_args(p)
    return parser


def _resolve_source(args) -> tuple[twirl.UnitarySet, dict]:
    builtin = getattr(args, "builtin", None)
    path = getattr(args, "file", None)
    if getattr(args, "source_kind", None) == "pauli":
        builtin = builtin or "pauli"
    elif getattr(args, "source_kind", None) == "file":
        path = path or getattr(args, "path", None)
        if path is None:
            raise FileFormatError("--from file requires a path")
    elif getattr(args, "path", None) and path is None and builtin is None:
        path = args.path
    if (builtin is None) == (path is None):
        raise FileFormatError("choose exactly one input: --builtin NAME or --file PATH")
    if builtin is not None:
        S = designs.named_design(builtin).set
        return S, {"kind": "builtin", "name": builtin}
    S, digest = load_unitary_set(path, strict=args.strict)
    return S, {"kind": "file", "path": path, "sha256": digest}


# --------------------------------------------------------------------------
# commands


def _verification_payload(S, t, tol, method, threads) -> dict:
    rep = designs.verify_design(S, t, tol=tol, method=method, threads=threads)
    out = {
        "t": t,
        "is_design": rep.is_design,
        "frame_gap": rep.frame_gap,
        "max_twirl_deviation": rep.max_twirl_deviation,
        "methods_agree": rep.method_agreement,
    }
    if method in ("frame", "both"):
        fp = twirl.frame_potential(S, t)
        out["frame_potential"] = fp.value
        out["haar_value"] = fp.haar_value
    return out


def cmd_verify(args) -> tuple[dict, int]:
    S, source = _resolve_source(args)
    result = _verification_payload(S, args.t, args.tol, args.method, args.threads)
    report = {
        "command": "verify",
        "source": source,
        "t": args.t,
        "method": args.method,
        "tolerance": args.tol,
        "result": result,
    }
    return report, 0 if result["is_design"] else 1


def cmd_construct(args) -> tuple[dict, int]:
    S, source = _resolve_source(args)
    frame = designs.classify_min_1design(S, tol=max(args.tol, 1e-9))
    design = designs.extend_to_2design(S)
    base = list(S.labels) if S.labels is not None else [f"U{k}" for k in range(len(S))]
    labeled = twirl.UnitarySet(
        list(design.elems), labels=base + [f"G{l}" for l in base] + [f"G*{l}" for l in base]
    )
    result = _verification_payload(labeled, 2, args.tol, "both", args.threads)
    report = {
        "command": "construct",
        "source": source,
        "tolerance": args.tol,
        "classification": {
            "permutation": list(frame.permutation),
            "phases": [[z.real, z.imag] for z in frame.phases],
            "conjugator": matrix_payload(frame.V),
        },
        "design": set_payload(labeled),
        "verification": result,
    }
    if args.out:
        save_unitary_set(labeled, args.out)
    return report, 0 if result["is_design"] else 1


def cmd_frame_potential(args) -> tuple[dict, int]:
    S, source = _resolve_source(args)
    fp = twirl.frame_potential(S, args.t)
    report = {
        "command": "frame-potential",
        "source": source,
        "t": args.t,
        "tolerance": args.tol,
        "result": {
            "value": fp.value,
            "haar_value": fp.haar_value,
            "gap": fp.gap,
            "is_design": fp.is_design(args.tol),
        },
    }
    return report, 0


def _closure_labels(C: groups.Su2Closure) -> list[str]:
    S = C.original
    base = list(S.labels) if S.labels is not None else [f"U{k}" for k in range(len(S))]
    out = []
    for l in base:
        out += [f"+{l}", f"-{l}"]
    return out


def cmd_group(args) -> tuple[dict, int]:
    S, source = _resolve_source(args)
    C = groups.su2_closure(S)
    prof = groups.group_profile(C)
    labels = _closure_labels(C)
    histogram = {str(k): prof.order_histogram[k] for k in sorted(prof.order_histogram)}
    result = {
        "closure_size": len(C),
        "element_labels": labels,
        "is_group": prof.is_group,
        "order_histogram": histogram,
        "center_size": prof.center_size,
        "cosets": [list(c) for c in prof.cosets] if prof.cosets is not None else None,
        "semidirect": prof.semidirect_check,
    }
    report = {
        "command": "group",
        "source": source,
        "tolerance": args.tol,
        "result": result,
    }
    return report, 0 if prof.is_group else 1


def cmd_geometry(args) -> tuple[dict, int]:
    S, source = _resolve_source(args)
    C = groups.su2_closure(S)
    pid = groups.polytope_identify(C.points())
    rotations = [
        {"axis": list(aa.axis), "angle": aa.angle, "vector": list(aa.vector())}
        for aa in groups.so3_image_table(C)
    ]
    result = {
        "closure_size": len(C),
        "polytope": pid.kind,
        "chord_spectrum": [[d, m] for d, m in pid.distance_spectrum],
        "quaternions": [list(q) for q in C.points()],
        "rotations": rotations,
    }
    report = {
        "command": "geometry",
        "source": source,
        "tolerance": args.tol,
        "result": result,
    }
    return report, 0


def cmd_mc(args) -> tuple[dict, int]:
    sampler = twirl.HaarSampler(args.seed)
    check = twirl.mc_oracle_check(sampler, args.t, args.samples)
    result = {
        "t": args.t,
        "samples": check.n,
        "seed": args.seed,
        "nsigma": check.nsigma,
        "max_deviation": check.max_deviation,
        "max_ratio": check.max_ratio,
        "deviations": list(check.deviations),
        "std_errors": list(check.std_errors),
        "ok": check.ok,
    }
    report = {
        "command": "mc",
        "t": args.t,
        "tolerance": args.tol,
        "result": result,
    }
    return report, 0 if check.ok else 1


def cmd_table(args) -> tuple[dict, int]:
    rows = []
    for row in groups.axis_cycle_closure_table():
        rows.append(
            {
                "label": row.label,
                "pauli": [[c.real, c.imag] for c in row.pauli],
                "quaternion": list(row.quaternion),
                "rotation": list(row.rotation),
            }
        )
    report = {"command": "table", "result": {"rows": rows}}
    return report, 0


_COMMANDS = {
    "verify": cmd_verify,
    "construct": cmd_construct,
    "frame-potential": cmd_frame_potential,
    "group": cmd_group,
    "geometry": cmd_geometry,
    "mc": cmd_mc,
    "table": cmd_table,
}


# --------------------------------------------------------------------------
# text rendering


def _kv(label: str, value) -> str:
    if isinstance(value, (bool, np.bool_, int, float, np.integer)):
        return f"{label}: {format_number(value)}"
    return f"{label}: {value}"


def _render_source(source: dict) -> list[str]:
    if source["kind"] == "builtin":
        return [f"source: builtin {source['name']}"]
    return [f"source: file {source['path']}", f"sha256: {source['sha256']}"]


def _render_verification(result: dict) -> list[str]:
    lines = [
        _kv("is design", result["is_design"]),
        _kv("frame gap", result["frame_gap"]) if result["frame_gap"] is not None else "frame gap: n/a",
    ]
    if result.get("frame_potential") is not None:
        lines.insert(1, _kv("frame potential", result["frame_potential"]))
        lines.insert(2, _kv("haar value", result["haar_value"]))
    if result["max_twirl_deviation"] is not None:
        lines.append(_kv("max twirl deviation", result["max_twirl_deviation"]))
    if result["methods_agree"] is not None:
        lines.append(_kv("methods agree", result["methods_agree"]))
    return lines


_EXACT_STRINGS = {0.0: "0", 0.5: "1/2", -0.5: "-1/2", 1.0: "1", -1.0: "-1"}

_ROT_MAGNITUDE = 2.0 * math.pi / (3.0 * math.sqrt(3.0))


def _sym(v: float) -> str:
    if v in _EXACT_STRINGS:
        return _EXACT_STRINGS[v]
    if v == math.pi:
        return "pi"
    if v == _ROT_MAGNITUDE:
        return "c"
    if v == -_ROT_MAGNITUDE:
        return "-c"
    return format_number(v)


def _pauli_term(mag: float, unit: str, letter: str) -> str:
    if letter == "1" and unit == "":
        return format_number(mag)
    prefix = "" if mag == 1 else format_number(mag)
    return prefix + unit + letter


def _pauli_string(coeff) -> str:
    letters = ("1", "X", "Y", "Z")
    terms = []
    for c, letter in zip(coeff, letters):
        if c == 0:
            continue
        re, im = (c.real, c.imag)
        sign = "-" if (im if re == 0 else re) < 0 else "+"
        mag = abs(re) if im == 0 else abs(im)
        unit = "" if im == 0 else "i"
        terms.append((sign, mag, unit, letter))
    if not terms:
        return "0"
    if len(terms) == 1:
        sign, mag, unit, letter = terms[0]
        body = _pauli_term(mag / 2, unit, letter)
        return ("-" if sign == "-" else "") + body
    out = ""
    for k, (sign, mag, unit, letter) in enumerate(terms):
        body = _pauli_term(mag, unit, letter)
        out += (("-" if sign == "-" else "") + body) if k == 0 else f" {sign} {body}"
    return f"({out})/2"


def render_text(report: dict) -> str:
    cmd = report["command"]
    lines = [f"command: {cmd}"]
    if "source" in report:
        lines += _render_source(report["source"])
    if "t" in report:
        lines.append(_kv("t", report["t"]))
    if "method" in report:
        lines.append(f"method: {report['method']}")
    if "tolerance" in report:
        lines.append(_kv("tolerance", report["tolerance"]))
    result = report.get("result", {})
    if cmd == "verify":
        lines += _render_verification(result)
    elif cmd == "construct":
        cls = report["classification"]
        lines.append(f"permutation: {tuple(cls['permutation'])}")
        phases = ", ".join(
            format_number(re) + ("+" if im >= 0 else "-") + format_number(abs(im)) + "i"
            for re, im in cls["phases"]
        )
        lines.append(f"phases: {phases}")
        lines.append("design size: " + format_number(len(report["design"]["unitaries"])))
        lines.append("labels: " + " ".join(report["design"].get("labels", [])))
        lines += _render_verification(report["verification"])
    elif cmd == "frame-potential":
        lines += [
            _kv("value", result["value"]),
            _kv("haar value", result["haar_value"]),
            _kv("gap", result["gap"]),
            _kv("is design", result["is_design"]),
        ]
    elif cmd == "group":
        lines += [
            _kv("closure size", result["closure_size"]),
            _kv("is group", result["is_group"]),
            "order histogram: "
            + " ".join(f"{k}:{v}" for k, v in result["order_histogram"].items()),
            _kv("center size", result["center_size"]),
        ]
        labels = result["element_labels"]
        if result["cosets"] is not None:
            for k, coset in enumerate(result["cosets"]):
                lines.append(f"coset {k}: " + " ".join(labels[i] for i in coset))
        lines.append(_kv("semidirect", result["semidirect"]))
    elif cmd == "geometry":
        lines += [
            _kv("closure size", result["closure_size"]),
            f"polytope: {result['polytope']}",
            "chord spectrum: "
            + ", ".join(f"{format_number(d)} x{m}" for d, m in result["chord_spectrum"]),
        ]
        for rot in result["rotations"]:
            axis = ", ".join(format_number(a) for a in rot["axis"])
            lines.append(f"rotation: axis ({axis}) angle {format_number(rot['angle'])}")
    elif cmd == "mc":
        lines += [
            _kv("samples", result["samples"]),
            _kv("seed", result["seed"]),
            _kv("max deviation", result["max_deviation"]),
            _kv("max deviation / SE", result["max_ratio"]),
            _kv("nsigma", result["nsigma"]),
            _kv("ok", result["ok"]),
        ]
    elif cmd == "table":
        head = f"{'label':6s} {'unitary':22s} {'quaternion':26s} rotation vector"
        lines += [head, "-" * len(head)]
        for row in result["rows"]:
            coeff = [complex(re, im) for re, im in row["pauli"]]
            q = " ".join(f"{_sym(v):>5s}" for v in row["quaternion"])
            r = " ".join(f"{_sym(v):>3s}" for v in row["rotation"])
            lines.append(f"{row['label']:6s} {_pauli_string(coeff):22s} ({q})   ({r})")
        lines.append("with c = 2*pi/(3*sqrt(3)) = " + format_number(_ROT_MAGNITUDE))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# entry point


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileFormatError, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedOrder as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ProportionalElements as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except InternalConsistencyError:
        raise
    except UdesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    rendered = emit_json(report) + "\n" if args.fmt == "json" else render_text(report)
    sys.stdout.write(rendered)
    if getattr(args, "out", None) and args.command != "construct":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
