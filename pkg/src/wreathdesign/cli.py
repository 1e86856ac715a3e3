"""Command-line front end.

Exit codes: 0 success, 1 a yes/no question answered "no", 2 usage error,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import charlier, constructions, scheme
from .arrow import arrow, hasse_edges, m_set, necessary_conditions, parabolic_succeq, succeq
from .characters import character_table, decompose, permutation_character
from .cyclic import _frac_str
from .errors import ConsistencyError, ScaleGuardError
from .partitions import format_partition
from .tabloids import (
    TransitivityType,
    enumerate_shapes,
    enumerate_types,
    is_clique_direct,
    make_simple,
    shape_of,
    transitivity_index,
)
from .wreath import (
    WreathElement,
    class_from_json,
    class_representative,
    class_size,
    class_to_json,
    enumerate_classes,
    format_class,
    identity,
    pure_permutation,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CONSISTENCY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _frac(q) -> str:
    return _frac_str(Fraction(q))


def _load_json_arg(text: str):
    """Inline JSON, or ``@path`` / an existing file path."""
    source = text[1:] if text.startswith("@") else text
    path = Path(source)
    try:
        if text.startswith("@") or (not text.lstrip().startswith(("{", "[")) and path.is_file()):
            return json.loads(path.read_text())
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from exc


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


def _sigma(args, text: str | None = None) -> TransitivityType:
    obj = _load_json_arg(text if text is not None else args.sigma)
    if not isinstance(obj, dict):
        raise UsageError("a transitivity type is a JSON object such as {\"1\": [1, 1], \"2\": [1]}")
    sig = TransitivityType.from_json(obj, args.r)
    if sig.n != args.n:
        raise UsageError(f"type {sig} has {sig.n} boxes, expected n = {args.n}")
    return sig


def load_subset(path: str, r: int, n: int | None = None) -> list[WreathElement]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read subset file {path}: {exc}") from exc
    if not isinstance(data, list) or not data:
        raise UsageError("a subset file is a non-empty JSON array of elements")
    Y = [WreathElement.from_json(obj, r) for obj in data]
    if n is not None and any(y.n != n for y in Y):
        raise UsageError(f"subset elements are not in C_{r} wr S_{n}")
    return scheme.as_subset(Y)


def dump_subset(Y) -> str:
    return json.dumps([y.to_json() for y in Y], separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, text, exit code)


def cmd_classes(args):
    rows, lines = [], []
    for lam in enumerate_classes(args.n, args.r):
        size = class_size(lam, args.n, args.r)
        rows.append({"class": class_to_json(lam), "size": size, "representative": class_representative(lam).to_json()})
        lines.append(f"{format_class(lam)}\t{size}")
    text = "\n".join(lines)
    return {"n": args.n, "r": args.r, "classes": rows}, text, EXIT_OK


def cmd_chartable(args):
    table = character_table(args.n, args.r, allow_big=args.allow_big, jobs=args.jobs)
    degrees = table.degrees()
    rows = []
    lines = ["label\tdegree\t" + "\t".join(format_class(c) for c in table.classes)]
    for lam, deg, values in zip(table.labels, degrees, table.rows):
        rows.append({"label": class_to_json(lam), "degree": deg, "values": [v.to_json() for v in values]})
        lines.append(f"{format_class(lam)}\t{deg}\t" + "\t".join(str(v) for v in values))
    payload = {"n": args.n, "r": args.r, "classes": [class_to_json(c) for c in table.classes], "rows": rows}
    return payload, "\n".join(lines), EXIT_OK


def cmd_decompose(args):
    _need(args, "sigma")
    sig = _sigma(args)
    xi = permutation_character(sig, allow_big=args.allow_big)
    mult = decompose(xi)
    values = [{"class": class_to_json(mu), "value": int(v.rational_part())} for mu, v in xi.values.items()]
    mults = [{"label": class_to_json(lam), "multiplicity": m} for lam, m in mult.items()]
    text = "\n".join(f"{format_class(lam)}\t{m}" for lam, m in mult.items() if m)
    payload = {"n": args.n, "r": args.r, "sigma": sig.to_json(), "permutation_character": values, "multiplicities": mults}
    return payload, text, EXIT_OK


def cmd_arrow(args):
    _need(args, "sigma", "lambda_")
    sig = _sigma(args)
    obj = _load_json_arg(args.lambda_)
    if not isinstance(obj, dict):
        raise UsageError("a class index is a JSON object such as {\"0\": [2, 1]}")
    lam = class_from_json(obj, args.r)
    if sum(sum(p) for p in lam) != args.n:
        raise UsageError(f"class index {format_class(lam)} does not have size {args.n}")
    verdict = arrow(sig, lam)
    payload = {"n": args.n, "r": args.r, "sigma": sig.to_json(), "lambda": class_to_json(lam), "arrow": verdict}
    return payload, str(verdict).lower(), EXIT_OK if verdict else EXIT_FALSE


def cmd_mset(args):
    _need(args, "sigma")
    sig = _sigma(args)
    M = m_set(sig)
    ordered = [lam for lam in enumerate_classes(args.n, args.r) if lam in M]
    payload = {"n": args.n, "r": args.r, "sigma": sig.to_json(), "mset": [class_to_json(l) for l in ordered]}
    return payload, "\n".join(format_class(l) for l in ordered), EXIT_OK


def cmd_compare(args):
    _need(args, "a", "b")
    a, b = _sigma(args, args.a), _sigma(args, args.b)
    verdict = succeq(a, b)
    payload = {"n": args.n, "r": args.r, "a": a.to_json(), "b": b.to_json(), "succeq": verdict,
               "parabolic": None, "necessary_conditions": None}
    if a.is_simple() and b.is_simple():
        sa, sb = shape_of(a), shape_of(b)
        payload["necessary_conditions"] = list(necessary_conditions(sa, sb))
        if len(sa.rho) <= 1 and len(sb.rho) <= 1:
            ka = sa.rho[0] if sa.rho else 0
            kb = sb.rho[0] if sb.rho else 0
            payload["parabolic"] = parabolic_succeq((sa.sigma, ka), (sb.sigma, kb))
    return payload, str(verdict).lower(), EXIT_OK if verdict else EXIT_FALSE


def cmd_check(args):
    _need(args, "sigma", "set")
    Y = load_subset(args.set, args.r, args.n)
    if args.n is None:
        args.n = Y[0].n
    sig = _sigma(args)
    payload = {"n": args.n, "r": args.r, "sigma": sig.to_json(), "size": len(Y), "mode": args.mode}
    verdicts = []
    if args.mode in ("design", "both"):
        by_scheme = scheme.is_design(Y, sig)
        c = transitivity_index(Y, sig, allow_big=args.allow_big)
        if by_scheme != (c is not None):
            raise ConsistencyError("design verdicts of the scheme and the tabloid count disagree")
        payload["design"] = {"scheme": by_scheme, "direct": c is not None, "index": _frac(c) if c else None}
        verdicts.append(by_scheme)
    if args.mode in ("clique", "both"):
        by_scheme = scheme.is_clique(Y, sig)
        direct = is_clique_direct(Y, sig, allow_big=args.allow_big)
        if by_scheme != direct:
            raise ConsistencyError("clique verdicts of the scheme and the tabloid count disagree")
        payload["clique"] = {"scheme": by_scheme, "direct": direct}
        verdicts.append(by_scheme)
    payload["bounds"] = scheme.clique_design_bounds(Y, sig)
    ok = all(verdicts)
    payload["verdict"] = ok
    text = "\n".join(
        [f"{key}: {payload[key]['scheme']}" for key in ("design", "clique") if key in payload]
        + [f"size {len(Y)}, |W|/|H| = {payload['bounds']['bound']}"]
    )
    return payload, text, EXIT_OK if ok else EXIT_FALSE


def cmd_profile(args):
    _need(args, "set")
    Y = load_subset(args.set, args.r, args.n)
    prof = charlier.profile(Y)
    payload = dict(prof)
    payload["A"] = [_frac(a) for a in prof["A"]]
    payload["Adual"] = [_frac(a) for a in prof["Adual"]]
    text = (
        f"A = {', '.join(payload['A'])}\nA' = {', '.join(payload['Adual'])}\n"
        f"t = {prof['t']}, d = {prof['d']}, sharp = {str(prof['sharp']).lower()}"
    )
    return payload, text, EXIT_OK


def cmd_construct(args):
    if args.kind == "agl":
        q = args.q if args.q is not None else args.n
        if q is None:
            raise UsageError("construct --kind agl needs -q (or -n)")
        r = args.r or 1
        Y = [pure_permutation(p, r) for p in constructions.agl1(q)]
    elif args.kind == "oa":
        _need(args, "n", "r", "t")
        D = constructions.rs_orthogonal_array(args.n, args.r, args.t)
        e = identity(args.n, args.r)
        Y = [WreathElement(row, e.perm, args.r) for row in D.rows]
    else:
        _need(args, "n", "r", "t")
        D = constructions.rs_orthogonal_array(args.n, args.r, args.t)
        Y = constructions.product_design(D, constructions.agl1(args.n))
    text = dump_subset(Y)
    if args.out:
        Path(args.out).write_text(text)
    return [y.to_json() for y in Y], text.rstrip("\n"), EXIT_OK


def cmd_plane_gate(args):
    report = constructions.plane_gate(args.n)
    ok = report["design"] is None or report["design"]["verified"]
    text = "\n".join(f"{k}: {v}" for k, v in report.items())
    return report, text, EXIT_OK if ok else EXIT_FALSE


def _type_label(sig: TransitivityType) -> str:
    return ";".join(f"{d}:{format_partition(p)}" for d, p in sig.items() if p)


def cmd_poset(args):
    if args.all_types:
        types = enumerate_types(args.n, args.r)
    else:
        types = [make_simple(s, args.n, args.r) for s in enumerate_shapes(args.n, args.r)]
    blocks, edges = hasse_edges(types)
    payload = {
        "n": args.n,
        "r": args.r,
        "blocks": [[t.to_json() for t in block] for block in blocks],
        "edges": [list(e) for e in edges],
    }
    lines = ["digraph succeq {"]
    for i, block in enumerate(blocks):
        label = " = ".join(_type_label(t) for t in block)
        lines.append(f'  b{i} [label="{label}"];')
    for i, j in edges:
        lines.append(f"  b{i} -> b{j};")
    lines.append("}")
    return payload, "\n".join(lines), EXIT_OK


COMMANDS = {
    "classes": cmd_classes,
    "chartable": cmd_chartable,
    "decompose": cmd_decompose,
    "arrow": cmd_arrow,
    "mset": cmd_mset,
    "compare": cmd_compare,
    "check": cmd_check,
    "profile": cmd_profile,
    "construct": cmd_construct,
    "plane-gate": cmd_plane_gate,
    "poset": cmd_poset,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="degree of the symmetric group")
    common.add_argument("-r", type=int, help="order of the cyclic base group")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for table building")
    common.add_argument("--allow-big", action="store_true", help="lift the desk-scale guards")

    parser = argparse.ArgumentParser(prog="wreathdesign", description="Transitive subsets of C_r wr S_n.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classes", parents=[common], help="conjugacy classes")
    sub.add_parser("chartable", parents=[common], help="irreducible character table")
    p = sub.add_parser("decompose", parents=[common], help="decompose a permutation character")
    p.add_argument("--sigma")
    p = sub.add_parser("arrow", parents=[common], help="decide sigma -> lambda")
    p.add_argument("--sigma")
    p.add_argument("--lambda", dest="lambda_")
    p = sub.add_parser("mset", parents=[common], help="the set M_sigma")
    p.add_argument("--sigma")
    p = sub.add_parser("compare", parents=[common], help="decide a >= b in the transitivity order")
    p.add_argument("--a")
    p.add_argument("--b")
    p = sub.add_parser("check", parents=[common], help="design / clique verdicts for a subset")
    p.add_argument("--sigma")
    p.add_argument("--set")
    p.add_argument("--mode", choices=["design", "clique", "both"], default="both")
    p = sub.add_parser("profile", parents=[common], help="distance distribution profile of a subset")
    p.add_argument("--set")
    p = sub.add_parser("construct", parents=[common], help="write a constructed subset")
    p.add_argument("--kind", choices=["agl", "oa", "product"], required=True)
    p.add_argument("-q", type=int)
    p.add_argument("-t", type=int)
    p.add_argument("--out")
    sub.add_parser("plane-gate", parents=[common], help="projective-plane construction report")
    p = sub.add_parser("poset", parents=[common], help="Hasse diagram of the transitivity order")
    p.add_argument("--dot", action="store_true", help="emit DOT (the default text output)")
    p.add_argument("--all-types", action="store_true", help="use all types, not only simple ones")
    return parser


def _validate_group(args) -> None:
    needs_n = args.command not in ("check", "profile", "construct")
    needs_r = args.command not in ("plane-gate", "construct")
    if needs_n and args.n is None:
        raise UsageError(f"-n is required for {args.command}")
    if needs_r and args.r is None:
        raise UsageError(f"-r is required for {args.command}")
    if args.n is not None and args.n < 1:
        raise UsageError("n must be at least 1")
    if args.r is not None and args.r < 1:
        raise UsageError("r must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        _validate_group(args)
        payload, text, code = COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (UsageError, ScaleGuardError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
