"""Command-line front end.

Commands (all payloads are the module-level JSON formats, output is
deterministic: sorted keys, canonical polynomial strings, no timestamps):

    pencilfiber analyze <arrangement.json>
    pencilfiber pencils <arrangement.json>
    pencilfiber resonance <arrangement.json> [--vector '<json list>']
    pencilfiber catalan verify <relation.json>
    pencilfiber catalan generate <pencil.json> [--steps K]
    pencilfiber catalan descend <descent.json>
    pencilfiber crosscheck <directory>

Exit codes: 0 success, 1 input error, 2 domain validation failure,
3 consistency failure in crosscheck.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrangement import (
    Arrangement,
    combinatorial_type,
    intersection_points,
    point_census,
    validate_multiplicities,
)
from .catalan import (
    DescentObstruction,
    QuasiToricRelation,
    descend_step,
    generate_solutions,
    verify_relation,
)
from .eisenstein import EisensteinNumber, ParseError
from .forms import UniPoly
from .milnor import milnor_report
from .pencils import PencilDecomposition, find_pencils
from .resonance import (
    build_os2,
    component_isotropy_check,
    generic_member,
    pencil_basis,
    resonance_kernel_dim,
    triple_point_basis,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DOMAIN = 2
EXIT_INCONSISTENT = 3


class InputError(Exception):
    pass


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_arrangement(path: str) -> Arrangement:
    data = _load_json(path)
    try:
        return Arrangement.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path} is not a valid arrangement: {exc}") from exc


def _violation_payload(violation) -> dict:
    return {"error": "multiplicity_violation", "point": violation.to_json()}


def _resonance_payload(arr: Arrangement, pencils: list[PencilDecomposition]) -> dict:
    os2 = build_os2(arr)
    local = []
    for pt in intersection_points(arr):
        if pt.multiplicity != 3:
            continue
        basis = triple_point_basis(pt, arr.r)
        local.append(
            {
                "lines": list(pt.lines),
                "isotropic": component_isotropy_check(os2, basis),
                "kernel_dim": resonance_kernel_dim(os2, generic_member(basis)),
            }
        )
    global_components = []
    for pencil in pencils:
        basis = pencil_basis(pencil, arr.r)
        global_components.append(
            {
                "classes": [list(c) for c in pencil.classes],
                "isotropic": component_isotropy_check(os2, basis),
                "kernel_dim": resonance_kernel_dim(os2, generic_member(basis)),
            }
        )
    return {
        "quotient_rank": os2.quotient_rank,
        "relation_count": len(os2.relations),
        "local_components": local,
        "pencil_components": global_components,
    }


def _analysis_payload(arr: Arrangement) -> dict:
    report = milnor_report(arr)
    pencils = find_pencils(arr)
    ctype = combinatorial_type(arr)
    return {
        "label": arr.label,
        "r": arr.r,
        "point_census": {str(m): n for m, n in point_census(intersection_points(arr)).items()},
        "milnor": report.to_json(),
        "pencils": [p.to_json() for p in pencils],
        "pencil_count": len(pencils),
        "combinatorial_type_exact": ctype.exact,
        "pencil_eigenvalue_consistent": (report.s > 0) == bool(pencils),
        "resonance": _resonance_payload(arr, pencils),
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    arr = _load_arrangement(args.path)
    violation = validate_multiplicities(arr)
    if violation is not None:
        _emit(_violation_payload(violation))
        return EXIT_DOMAIN
    _emit(_analysis_payload(arr))
    return EXIT_OK


def cmd_pencils(args: argparse.Namespace) -> int:
    arr = _load_arrangement(args.path)
    violation = validate_multiplicities(arr)
    if violation is not None:
        _emit(_violation_payload(violation))
        return EXIT_DOMAIN
    _emit({"label": arr.label, "pencils": [p.to_json() for p in find_pencils(arr)]})
    return EXIT_OK


def cmd_resonance(args: argparse.Namespace) -> int:
    arr = _load_arrangement(args.path)
    violation = validate_multiplicities(arr)
    if violation is not None:
        _emit(_violation_payload(violation))
        return EXIT_DOMAIN
    payload = _resonance_payload(arr, find_pencils(arr))
    if args.vector is not None:
        try:
            entries = json.loads(args.vector)
            vec = [EisensteinNumber.of(v) for v in entries]
        except (TypeError, ValueError, ParseError) as exc:
            raise InputError(f"--vector is not a list of field elements: {exc}") from exc
        if len(vec) != arr.r:
            raise InputError(f"--vector must have length {arr.r}")
        if sum(vec, EisensteinNumber(0)):
            _emit({"error": "weight_vector_sum_nonzero"})
            return EXIT_DOMAIN
        if not any(vec):
            _emit({"error": "weight_vector_zero"})
            return EXIT_DOMAIN
        os2 = build_os2(arr)
        dim = resonance_kernel_dim(os2, vec)
        payload["probe"] = {"vector": [str(v) for v in vec], "kernel_dim": dim, "resonant": dim >= 2}
    _emit(payload)
    return EXIT_OK


def cmd_catalan(args: argparse.Namespace) -> int:
    data = _load_json(args.path)
    if args.action == "verify":
        try:
            rel = QuasiToricRelation.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.path} is not a valid relation: {exc}") from exc
        _emit({"valid": verify_relation(rel)})
        return EXIT_OK
    if args.action == "generate":
        try:
            pencil = PencilDecomposition.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{args.path} is not a valid pencil: {exc}") from exc
        if args.steps < 1:
            raise InputError("--steps must be at least 1")
        relations = generate_solutions(pencil, args.steps)
        _emit(
            {
                "steps": args.steps,
                "relations": [rel.to_json() for rel in relations],
                "solution_degrees": [max(p.degree for p in rel.sol) for rel in relations],
            }
        )
        return EXIT_OK
    # descend
    try:
        rel = QuasiToricRelation.from_json(data["relation"])
        factors = [UniPoly.from_json(p) for p in data["known_factors"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.path} is not a valid descent instance: {exc}") from exc
    try:
        descended = descend_step(rel, factors)
    except DescentObstruction as exc:
        _emit(
            {
                "error": "descent_obstruction",
                "factor_index": exc.factor_index,
                "leftover": exc.leftover.to_json(),
            }
        )
        return EXIT_DOMAIN
    except ValueError as exc:
        _emit({"error": "invalid_descent_input", "detail": str(exc)})
        return EXIT_DOMAIN
    _emit({"relation": descended.to_json()})
    return EXIT_OK


def cmd_crosscheck(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InputError(f"{args.directory} is not a directory")
    rows = []
    analyses: dict[str, dict] = {}
    types: dict[str, object] = {}
    for path in sorted(directory.glob("*.json")):
        try:
            arr = _load_arrangement(str(path))
            violation = validate_multiplicities(arr)
            if violation is not None:
                rows.append({"file": path.name, "error": "multiplicity_violation", "point": violation.to_json()})
                continue
            payload = _analysis_payload(arr)
        except (InputError, ValueError) as exc:
            rows.append({"file": path.name, "error": str(exc)})
            continue
        analyses[path.name] = payload
        types[path.name] = combinatorial_type(arr)
        resonance = payload["resonance"]
        rows.append(
            {
                "file": path.name,
                "label": payload["label"],
                "r": payload["r"],
                "s": payload["milnor"]["s"],
                "pencil_count": payload["pencil_count"],
                "resonance_pencil_components": len(resonance["pencil_components"]),
                "pencil_eigenvalue_consistent": payload["pencil_eigenvalue_consistent"],
                "isotropy_all_ok": all(
                    c["isotropic"] for c in resonance["local_components"] + resonance["pencil_components"]
                ),
            }
        )
    failures = []
    names = sorted(analyses)
    for row in rows:
        if "error" in row:
            continue
        if not row["pencil_eigenvalue_consistent"]:
            failures.append({"file": row["file"], "check": "eigenvalue_vs_pencil"})
        if not row["isotropy_all_ok"]:
            failures.append({"file": row["file"], "check": "component_isotropy"})
        if row["resonance_pencil_components"] != row["pencil_count"]:
            failures.append({"file": row["file"], "check": "pencil_component_census"})
    pairs_checked = 0
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if types[a] != types[b]:
                continue
            pairs_checked += 1
            if analyses[a]["milnor"]["s"] != analyses[b]["milnor"]["s"]:
                failures.append({"files": [a, b], "check": "equal_type_equal_s"})
            if analyses[a]["pencil_count"] != analyses[b]["pencil_count"]:
                failures.append({"files": [a, b], "check": "equal_type_equal_pencil_count"})
    _emit(
        {
            "rows": rows,
            "equal_type_pairs_checked": pairs_checked,
            "failures": failures,
            "all_consistent": not failures,
        }
    )
    return EXIT_OK if not failures else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencilfiber",
        description="Exact arrangement invariants and cube Catalan equations over Q(w).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one arrangement")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pencils", help="pencil decompositions of one arrangement")
    p.add_argument("path")
    p.set_defaults(func=cmd_pencils)

    p = sub.add_parser("resonance", help="resonance components and optional weight probe")
    p.add_argument("path")
    p.add_argument("--vector", help="JSON list of field elements with sum zero")
    p.set_defaults(func=cmd_resonance)

    p = sub.add_parser("catalan", help="verify, generate or descend cube relations")
    p.add_argument("action", choices=["verify", "generate", "descend"])
    p.add_argument("path")
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("crosscheck", help="batch-run a directory and check consistency")
    p.add_argument("directory")
    p.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # domain-level rejections (search caps, degenerate inputs, ...)
        _emit({"error": "domain_error", "detail": str(exc)})
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
