"""Batch command-line front end with stable machine-readable output.

Subcommands cover validation, extraction, counting, comparison and
enumeration.  Exit codes: 0 success / affirmative, 1 completed run with
a negative answer (invalid object, no witness, unrealizable input),
2 malformed input, 3 configured resource limit exceeded.

With ``--json`` the output stream carries exactly one JSON document and
all human-readable diagnostics go to the error stream; identical
invocations produce byte-identical JSON regardless of thread count.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import equivalence, extraction, hurwitz, monodromy, park
from .errors import NonRealizableError, ResourceLimitError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_MALFORMED = 2
EXIT_RESOURCE = 3

DEFAULT_MAX_DEGREE = 6
DEFAULT_MAX_SHEETS = 10


class _CliFailure(Exception):
    """Internal control flow: carries the exit code and a message."""

    def __init__(self, code: int, message: str, payload: dict[str, Any] | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.payload = payload


class _Output:
    """Routes results to stdout (JSON or text) and diagnostics to stderr."""

    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, payload: dict[str, Any], lines: list[str]) -> None:
        if self.as_json:
            sys.stdout.write(_dump_json(payload))
        else:
            for line in lines:
                sys.stdout.write(line + "\n")

    def fail(self, failure: _CliFailure) -> int:
        sys.stderr.write(failure.message.rstrip("\n") + "\n")
        if self.as_json:
            payload = failure.payload or {}
            payload.setdefault("error", failure.message)
            sys.stdout.write(_dump_json(payload))
        return failure.code


def _dump_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _CliFailure(EXIT_MALFORMED, f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _CliFailure(EXIT_MALFORMED, f"{path} is not valid JSON: {exc}") from exc


def _load_monodromy(path: str, max_sheets: int) -> monodromy.MonodromyRep:
    obj = _load_json_file(path)
    try:
        rep = monodromy.from_json_dict(obj)
    except ValueError as exc:
        raise _CliFailure(EXIT_MALFORMED, f"{path}: {exc}") from exc
    _check_sheets(2 * rep.degree, max_sheets)
    return rep

def _load_park(path: str) -> park.Park:
    obj = _load_json_file(path)
    try:
        return park.from_json_dict(obj)
    except ValueError as exc:
        raise _CliFailure(EXIT_MALFORMED, f"{path}: {exc}") from exc


def _check_sheets(sheets: int, max_sheets: int) -> None:
    if sheets > max_sheets:
        raise _CliFailure(
            EXIT_RESOURCE,
            f"ground set size {sheets} exceeds --max-sheets {max_sheets}",
        )


def _fraction_payload(value: Fraction) -> dict[str, Any]:
    return {
        "value": str(value),
        "numerator": value.numerator,
        "denominator": value.denominator,
    }


def _report_payload(report) -> dict[str, Any]:
    entries = getattr(report, "failures", None)
    if entries is None:
        entries = report.violations
    return {"ok": report.ok, "problems": [[str(a), str(b)] for a, b in entries]}


def _signature_lists(summary: park.TopSummary) -> dict[str, Any]:
    return {
        "garden_signatures": [
            {
                "kind": kind,
                "faces": [[color, degree] for color, degree in faces],
                "edges": [[ekind, length] for ekind, length in edges],
                "corner_labels": list(labels),
            }
            for kind, faces, edges, labels in summary.garden_signatures
        ],
        "node_signatures": [
            {
                "role": role,
                "genus": g,
                "circles": k,
                "degrees": list(degs),
                "branch_points": b,
            }
            for role, g, k, degs, b in summary.node_signatures
        ],
    }


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_validate(args, out: _Output) -> int:
    rep = _load_monodromy(args.monodromy, args.max_sheets)
    relations = monodromy.validate_relations(rep)
    mode = "strict" if args.strict else "geometric"
    genericity = monodromy.validate_genericity(rep, mode=mode)
    ok = bool(relations) and bool(genericity)
    payload = {
        "command": "validate",
        "ok": ok,
        "mode": mode,
        "relations": _report_payload(relations),
        "genericity": _report_payload(genericity),
    }
    lines = [f"relations: {'ok' if relations else 'FAILED'}"]
    lines += [f"  {label}: {reason}" for label, reason in relations.failures]
    lines.append(f"genericity ({mode}): {'ok' if genericity else 'FAILED'}")
    lines += [f"  {label}: {reason}" for label, reason in genericity.violations]
    out.emit(payload, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_extract(args, out: _Output) -> int:
    rep = _load_monodromy(args.monodromy, args.max_sheets)
    relations = monodromy.validate_relations(rep)
    genericity = monodromy.validate_genericity(rep)
    if not (relations and genericity):
        problems = list(relations.failures) + list(genericity.violations)
        detail = "; ".join(f"{a}: {b}" for a, b in problems[:3])
        raise _CliFailure(
            EXIT_NEGATIVE,
            f"{args.monodromy}: representation is not valid generic ({detail})",
            {"command": "extract", "ok": False},
        )
    try:
        built = extraction.monodromy_to_park(rep)
    except NonRealizableError as exc:
        raise _CliFailure(
            EXIT_NEGATIVE,
            f"{args.monodromy}: {exc}",
            {"command": "extract", "ok": False},
        ) from exc
    park_obj = park.to_json_dict(built)
    summary = park.type_summary(built)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(park_obj))
        payload = {
            "command": "extract",
            "ok": True,
            "output": args.output,
            "degree": summary.degree,
            "genus": summary.genus,
            "critical_values": summary.critical_values,
            "gardens": len(built.gardens),
            "nodes": len(built.nodes),
        }
        lines = [
            f"extracted park: d={summary.degree} g={summary.genus} "
            f"n={summary.critical_values}",
            f"written to {args.output}",
        ]
        out.emit(payload, lines)
    else:
        out.emit(park_obj, [_dump_json(park_obj).rstrip("\n")])
    return EXIT_OK


def _cmd_validate_park(args, out: _Output) -> int:
    built = _load_park(args.park)
    report = park.validate_park(built)
    payload = {
        "command": "validate-park",
        "ok": report.ok,
        "violations": [[code, detail] for code, detail in report.violations],
    }
    lines = [f"park: {'ok' if report.ok else 'INVALID'}"]
    lines += [f"  {code}: {detail}" for code, detail in report.violations]
    out.emit(payload, lines)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _cmd_info(args, out: _Output) -> int:
    obj = _load_json_file(args.file)
    if isinstance(obj, dict) and "degree" in obj:
        return _info_monodromy(args, obj, out)
    if isinstance(obj, dict) and "gardens" in obj:
        return _info_park(args, obj, out)
    raise _CliFailure(
        EXIT_MALFORMED,
        f"{args.file}: cannot detect schema "
        "(expected a 'degree' or 'gardens' top-level key)",
    )


def _info_monodromy(args, obj: Any, out: _Output) -> int:
    try:
        rep = monodromy.from_json_dict(obj)
    except ValueError as exc:
        raise _CliFailure(EXIT_MALFORMED, f"{args.file}: {exc}") from exc
    _check_sheets(2 * rep.degree, args.max_sheets)
    relations = monodromy.validate_relations(rep)
    genericity = monodromy.validate_genericity(rep)
    try:
        g: int | None = monodromy.genus_from_counts(rep)
    except NonRealizableError:
        g = None
    n = rep.critical_value_count
    payload = {
        "command": "info",
        "schema": "monodromy",
        "degree": rep.degree,
        "genus": g,
        "critical_values": n,
        "cone_points": rep.cone_points,
        "corner_points": rep.corner_points,
        "relations_ok": relations.ok,
        "genericity_ok": genericity.ok,
    }
    genus_text = "-" if g is None else str(g)
    lines = [
        f"monodromy: d={rep.degree} g={genus_text} n={n} "
        f"t={rep.cone_points} s={rep.corner_points}",
        f"relations: {'ok' if relations else 'FAILED'}",
        f"genericity: {'ok' if genericity else 'FAILED'}",
    ]
    out.emit(payload, lines)
    return EXIT_OK


def _info_park(args, obj: Any, out: _Output) -> int:
    try:
        built = park.from_json_dict(obj)
    except ValueError as exc:
        raise _CliFailure(EXIT_MALFORMED, f"{args.file}: {exc}") from exc
    report = park.validate_park(built)
    if not report:
        detail = "; ".join(f"{a}: {b}" for a, b in report.violations[:3])
        raise _CliFailure(
            EXIT_NEGATIVE,
            f"{args.file}: park fails validation ({detail})",
            {"command": "info", "schema": "park", "ok": False},
        )
    summary = park.type_summary(built)
    payload = {
        "command": "info",
        "schema": "park",
        "degree": summary.degree,
        "genus": summary.genus,
        "critical_values": summary.critical_values,
        "cone_points": summary.cone_points,
        "corner_points": summary.corner_points,
    }
    payload.update(_signature_lists(summary))
    lines = [
        f"park: d={summary.degree} g={summary.genus} n={summary.critical_values} "
        f"t={summary.cone_points} s={summary.corner_points}",
        f"gardens: {len(built.gardens)}  nodes: {len(built.nodes)}  "
        f"alleys: {len(built.alleys)}",
    ]
    for role, g, k, degs, b in summary.node_signatures:
        degs_text = ",".join(str(x) for x in degs)
        lines.append(f"  {role}: genus={g} circles={k} degrees=({degs_text}) b={b}")
    out.emit(payload, lines)
    return EXIT_OK


def _cmd_hurwitz(args, out: _Output) -> int:
    built = _load_park(args.park)
    try:
        value = hurwitz.park_hurwitz(built, degree_bound=args.max_degree)
    except ValueError as exc:
        raise _CliFailure(
            EXIT_NEGATIVE, f"{args.park}: {exc}", {"command": "hurwitz", "ok": False}
        ) from exc
    payload = {"command": "hurwitz", "ok": True}
    payload.update(_fraction_payload(value))
    out.emit(payload, [str(value)])
    return EXIT_OK


def _cmd_single_hurwitz(args, out: _Output) -> int:
    try:
        genus = int(args.genus)
        degrees = tuple(int(part) for part in args.degrees.split(","))
    except ValueError as exc:
        raise _CliFailure(
            EXIT_MALFORMED, f"malformed genus/degrees: {exc}"
        ) from exc
    if genus < 0 or not degrees or any(d < 1 for d in degrees):
        raise _CliFailure(
            EXIT_MALFORMED,
            "genus must be >= 0 and degrees a comma-separated list of"
            " positive integers",
        )
    value = hurwitz.single_hurwitz(genus, degrees, degree_bound=args.max_degree)
    payload = {
        "command": "single-hurwitz",
        "genus": genus,
        "degrees": list(degrees),
    }
    payload.update(_fraction_payload(value))
    out.emit(payload, [str(value)])
    return EXIT_OK


def _witness_payload(witness: equivalence.ParkIsomorphism) -> dict[str, Any]:
    return {
        "rotation": witness.rotation,
        "reflected": witness.reflected,
        "gardens": {str(k): v for k, v in sorted(witness.gardens.items())},
        "faces": {str(k): v for k, v in sorted(witness.faces.items())},
        "edges": {str(k): v for k, v in sorted(witness.edges.items())},
        "vertices": {str(k): v for k, v in sorted(witness.vertices.items())},
        "nodes": {str(k): v for k, v in sorted(witness.nodes.items())},
    }


def _cmd_isomorphic(args, out: _Output) -> int:
    first = _load_park(args.park_a)
    second = _load_park(args.park_b)
    try:
        witness = equivalence.park_isomorphic(
            first, second, allow_reflection=args.allow_reflection
        )
    except ValueError as exc:
        raise _CliFailure(
            EXIT_NEGATIVE,
            f"invalid park input: {exc}",
            {"command": "isomorphic", "ok": False},
        ) from exc
    if witness is None:
        raise _CliFailure(
            EXIT_NEGATIVE,
            "parks are not isomorphic",
            {"command": "isomorphic", "isomorphic": False},
        )
    payload = {"command": "isomorphic", "isomorphic": True}
    payload.update({"witness": _witness_payload(witness)})
    lines = [
        "isomorphic",
        f"corner rotation: {witness.rotation}"
        + (" (reflected)" if witness.reflected else ""),
        "gardens: "
        + " ".join(f"{k}->{v}" for k, v in sorted(witness.gardens.items())),
        "faces:   "
        + " ".join(f"{k}->{v}" for k, v in sorted(witness.faces.items())),
        "edges:   "
        + " ".join(f"{k}->{v}" for k, v in sorted(witness.edges.items())),
        "nodes:   "
        + " ".join(f"{k}->{v}" for k, v in sorted(witness.nodes.items())),
    ]
    if witness.vertices:
        lines.append(
            "vertices: "
            + " ".join(f"{k}->{v}" for k, v in sorted(witness.vertices.items()))
        )
    out.emit(payload, lines)
    return EXIT_OK


def _cmd_equivalent(args, out: _Output) -> int:
    first = _load_monodromy(args.monodromy_a, args.max_sheets)
    second = _load_monodromy(args.monodromy_b, args.max_sheets)
    try:
        witness = equivalence.monodromy_equivalent(first, second)
    except ValueError as exc:
        raise _CliFailure(
            EXIT_NEGATIVE,
            f"invalid representation input: {exc}",
            {"command": "equivalent", "ok": False},
        ) from exc
    if witness is None:
        raise _CliFailure(
            EXIT_NEGATIVE,
            "no intertwining relabeling found",
            {"command": "equivalent", "equivalent": False},
        )
    payload = {
        "command": "equivalent",
        "equivalent": True,
        "witness": list(witness.mapping),
    }
    lines = ["equivalent", "relabeling: " + " ".join(str(v) for v in witness.mapping)]
    out.emit(payload, lines)
    return EXIT_OK


def _cmd_enumerate(args, out: _Output) -> int:
    _check_sheets(2 * args.degree, args.max_sheets)
    try:
        result = equivalence.enumerate_monodromies(
            args.degree,
            args.cone,
            args.corner,
            dedup=args.dedup,
            threads=args.threads,
        )
    except ResourceLimitError as exc:
        raise _CliFailure(EXIT_RESOURCE, str(exc)) from exc
    payload = {
        "command": "enumerate",
        "degree": result.degree,
        "cone_points": result.cone_points,
        "corner_points": result.corner_points,
        "dedup": result.dedup,
        "raw_count": result.raw_count,
        "class_count": result.class_count,
        "classes": [
            {"size": cls.size, "representative": monodromy.to_json_dict(cls.representative)}
            for cls in result.classes
        ],
    }
    lines = [
        f"d={result.degree} t={result.cone_points} s={result.corner_points} "
        f"dedup={result.dedup}: {result.raw_count} representations, "
        f"{result.class_count} classes"
    ]
    for idx, cls in enumerate(result.classes, start=1):
        rep = cls.representative
        lines.append(
            f"  class {idx}: size {cls.size}, x={list(map(list, rep.x))}, "
            f"c={list(map(list, rep.c))}"
        )
    out.emit(payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        help="machine-readable JSON on stdout; diagnostics stay on stderr",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for enumeration (output independent of the count)",
    )
    common.add_argument(
        "--max-degree",
        type=int,
        default=DEFAULT_MAX_DEGREE,
        help="largest total covering degree allowed in counting commands",
    )
    common.add_argument(
        "--max-sheets",
        type=int,
        default=DEFAULT_MAX_SHEETS,
        help="largest ground-set size (twice the degree) accepted as input",
    )

    parser = argparse.ArgumentParser(
        prog="parkscope",
        description="Exact invariants of generic real meromorphic functions: "
        "validation, park extraction, Hurwitz counts, comparison, enumeration.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser(
        "validate",
        parents=[common],
        help="check the defining relations and genericity of a representation",
    )
    p.add_argument("monodromy", help="representation JSON file")
    p.add_argument(
        "--strict",
        action="store_true",
        help="also require every branch generator to fix all black sheets",
    )
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser(
        "extract",
        parents=[common],
        help="build the park of a valid generic representation",
    )
    p.add_argument("monodromy", help="representation JSON file")
    p.add_argument("-o", "--output", help="write the park JSON here")
    p.set_defaults(handler=_cmd_extract)

    p = sub.add_parser(
        "validate-park", parents=[common], help="check every park axiom"
    )
    p.add_argument("park", help="park JSON file")
    p.set_defaults(handler=_cmd_validate_park)

    p = sub.add_parser(
        "info",
        parents=[common],
        help="numeric summary (degree, genus, counts, signatures); "
        "schema auto-detected",
    )
    p.add_argument("file", help="representation or park JSON file")
    p.set_defaults(handler=_cmd_info)

    p = sub.add_parser(
        "hurwitz", parents=[common], help="composite Hurwitz number of a park"
    )
    p.add_argument("park", help="park JSON file")
    p.set_defaults(handler=_cmd_hurwitz)

    p = sub.add_parser(
        "single-hurwitz",
        parents=[common],
        help="connected Hurwitz number for one boundary signature",
    )
    p.add_argument("genus", help="target genus (non-negative integer)")
    p.add_argument("degrees", help="comma-separated boundary degrees, e.g. 2,1")
    p.set_defaults(handler=_cmd_single_hurwitz)

    p = sub.add_parser(
        "isomorphic",
        parents=[common],
        help="search for a structure-preserving bijection between two parks",
    )
    p.add_argument("park_a", help="first park JSON file")
    p.add_argument("park_b", help="second park JSON file")
    p.add_argument(
        "--allow-reflection",
        action="store_true",
        help="also allow the corner-label order to be reversed",
    )
    p.set_defaults(handler=_cmd_isomorphic)

    p = sub.add_parser(
        "equivalent",
        parents=[common],
        help="search for a color-preserving relabeling intertwining two "
        "representations",
    )
    p.add_argument("monodromy_a", help="first representation JSON file")
    p.add_argument("monodromy_b", help="second representation JSON file")
    p.set_defaults(handler=_cmd_equivalent)

    p = sub.add_parser(
        "enumerate",
        parents=[common],
        help="exhaustively list valid generic representations at fixed counts",
    )
    p.add_argument("--degree", type=int, required=True, help="covering degree d")
    p.add_argument("--cone", type=int, required=True, help="cone point count t")
    p.add_argument("--corner", type=int, required=True, help="corner point count s")
    p.add_argument(
        "--dedup",
        choices=["raw", "jequiv", "park"],
        default="raw",
        help="grouping: none, by relabeling equivalence, or by park isomorphism",
    )
    p.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = _Output(args.json)
    try:
        return args.handler(args, out)
    except _CliFailure as failure:
        return out.fail(failure)
    except ResourceLimitError as exc:
        return out.fail(_CliFailure(EXIT_RESOURCE, str(exc)))


if __name__ == "__main__":
    sys.exit(main())
