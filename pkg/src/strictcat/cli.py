"""Command-line surface.

Every command prints a canonical machine-readable report to stdout
(identical invocations produce byte-identical reports) and a short
human summary to stderr.  ``--out`` writes the command's artifact: the
produced document where there is one, otherwise the report itself.

Exit codes: 0 every checked claim passed, 1 a claim failed (the report
carries the witness), 2 usage or structural error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import NotComposable, StructuralError
from .groupoid import NotAGroupoid, TruncationError, homotopy_group, is_equivalence, is_groupoid
from .groups import from_cyclic_factors
from .monoidal import SymMonGpd, deloop2, deloop_once, loop2, base_change, base_change_monoidal
from .serialize import (
    SchemaError,
    dumps,
    parse_category,
    parse_functor,
    parse_monoidal,
    serialize_category,
    serialize_group,
    serialize_monoidal,
    serialize_report,
)
from .splitting import SplitError, SymDelooped, split
from .validate import validate_cat

MAX_WINDOW = 8
MAX_FIBER = 64


class UsageError(ValueError):
    pass


def _load(path: str):
    p = Path(path)
    if not p.exists():
        raise UsageError(f"input file {path!r} does not exist")
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    return doc


def _sniff(doc):
    if isinstance(doc, dict) and "maps" in doc:
        return "functor"
    if isinstance(doc, dict) and "underlying" in doc:
        return "monoidal"
    return "category"


def _parse_H(spec: str):
    factors = []
    for part in spec.split(","):
        part = part.strip().lower()
        if not part.startswith("z") or not part[1:].isdigit():
            raise UsageError(f"--H expects cyclic factors like z2 or z2,z3; got {part!r}")
        factors.append(int(part[1:]))
    H = from_cyclic_factors(factors)
    if H.order > MAX_FIBER:
        raise UsageError(f"|H| = {H.order} exceeds the documented bound {MAX_FIBER}")
    return H


def _report(command, params, claims):
    return {
        "command": command,
        "params": params,
        "claims": claims,
        "version": __version__,
    }


def _claim(name, status, mode, witness=None):
    claim = {"name": name, "status": status, "mode": mode}
    if witness is not None:
        claim["witness"] = witness
    return claim


def _emit(report, out_doc=None, out_path=None):
    text = dumps(report)
    sys.stdout.write(text)
    if out_path:
        payload = dumps(out_doc) if out_doc is not None else text
        Path(out_path).write_text(payload)
    failed = [c for c in report["claims"] if c["status"] != "pass"]
    for claim in report["claims"]:
        marker = "ok " if claim["status"] == "pass" else "FAIL"
        print(f"  {marker} {claim['name']} [{claim['mode']}]", file=sys.stderr)
    return 1 if failed else 0


def _cmd_validate(args):
    C = parse_category(_load(args.input))
    report_v = validate_cat(C)
    claims = [
        _claim(
            "category-validates",
            "pass" if report_v.ok else "fail",
            "exhaustive",
            None if report_v.ok else serialize_report(report_v)[:5],
        )
    ]
    return _emit(_report("validate", {"input": args.input}, claims), out_path=args.out)


def _cmd_truncate(args):
    C = parse_category(_load(args.input))
    if args.level is None:
        raise UsageError("truncate needs --level")
    from .groupoid import truncate

    params = {"input": args.input, "level": args.level}
    try:
        T = truncate(C, args.level)
    except TruncationError as exc:
        claims = [_claim("truncation-defined", "fail", "exhaustive", list(exc.cells))]
        _emit(_report("truncate", params, claims))
        return 1
    claims = [_claim("truncation-defined", "pass", "exhaustive")]
    return _emit(_report("truncate", params, claims), serialize_category(T), args.out)


def _cmd_pi(args):
    C = parse_category(_load(args.input))
    if args.index is None:
        raise UsageError("pi needs --index")
    basepoint = args.basepoint or (C.objects[0] if C.objects else None)
    if basepoint is None:
        raise UsageError("category has no objects")
    params = {"input": args.input, "index": args.index, "basepoint": basepoint}
    if args.index == 0:
        from .groupoid import pi0

        classes = pi0(C)
        claims = [_claim("pi_0-computed", "pass", "exhaustive")]
        doc = {"classes": [list(c) for c in classes]}
        return _emit(_report("pi", params, claims), doc, args.out)
    G = homotopy_group(C, args.index, basepoint)
    claims = [_claim(f"pi_{args.index}-computed", "pass", "exhaustive")]
    return _emit(_report("pi", params, claims), serialize_group(G), args.out)


def _cmd_check_groupoid(args):
    C = parse_category(_load(args.input))
    variant = args.variant or "v3"
    if variant not in ("v2", "v3"):
        raise UsageError("check-groupoid takes --variant v2 or v3")
    if not validate_cat(C).ok:
        raise UsageError("input fails category validation; fix it before deciding")
    verdict = is_groupoid(C, variant)
    claims = [
        _claim(
            f"is-groupoid-{variant}",
            "pass" if verdict.ok else "fail",
            "exhaustive",
            None if verdict.ok else list(map(str, verdict.witness)),
        )
    ]
    return _emit(
        _report("check-groupoid", {"input": args.input, "variant": variant}, claims),
        out_path=args.out,
    )


def _cmd_check_equivalence(args):
    F = parse_functor(_load(args.input))
    variant = args.variant or "a"
    if variant not in ("a", "b", "c"):
        raise UsageError("check-equivalence takes --variant a, b or c")
    verdict = is_equivalence(F, variant)
    claims = [
        _claim(
            f"is-equivalence-{variant}",
            "pass" if verdict.ok else "fail",
            "exhaustive",
            None if verdict.ok else list(map(str, verdict.witness)),
        )
    ]
    return _emit(
        _report("check-equivalence", {"input": args.input, "variant": variant}, claims),
        out_path=args.out,
    )


def _cmd_deloop(args):
    if args.H:
        H = _parse_H(args.H)
        from .monoidal import group_monoidal

        result = deloop2(group_monoidal(H))
        params = {"H": args.H}
    else:
        if not args.input:
            raise UsageError("deloop needs an input document or --H")
        doc = _load(args.input)
        params = {"input": args.input}
        if _sniff(doc) == "monoidal":
            result = deloop2(parse_monoidal(doc))
        else:
            result = deloop_once(parse_category(doc))
    claims = [
        _claim(
            "delooping-validates",
            "pass" if validate_cat(result).ok else "fail",
            "exhaustive",
        )
    ]
    return _emit(_report("deloop", params, claims), serialize_category(result), args.out)


def _cmd_loop(args):
    C = parse_category(_load(args.input))
    G = loop2(C)
    from .monoidal import validate_monoidal

    report_v = validate_monoidal(G)
    claims = [
        _claim(
            "loop-data-monoidal",
            "pass" if report_v.ok else "fail",
            "exhaustive",
            None if report_v.ok else serialize_report(report_v)[:5],
        )
    ]
    return _emit(
        _report("loop", {"input": args.input}, claims), serialize_monoidal(G), args.out
    )


def _cmd_base_change(args):
    if not args.map:
        raise UsageError("base-change needs --map FILE")
    map_doc = _load(args.map)
    mapping = map_doc.get("map", map_doc if isinstance(map_doc, dict) else None)
    if not isinstance(mapping, dict) or not all(
        isinstance(v, str) for v in mapping.values()
    ):
        raise SchemaError("map file must give an object mapping {source: base-object}")
    doc = _load(args.input)
    params = {"input": args.input, "map": args.map}
    if _sniff(doc) == "monoidal" and "add" in map_doc:
        G = parse_monoidal(doc)
        add = {}
        for key, value in map_doc["add"].items():
            parts = key.split("|")
            if len(parts) != 2:
                raise SchemaError('map file "add" keys must be "s|t"')
            add[(parts[0], parts[1])] = value
        unit = map_doc.get("unit")
        if unit is None:
            raise SchemaError('monoidal base change needs a "unit" in the map file')
        V = base_change_monoidal(G, add, unit, mapping)
        out_doc = serialize_monoidal(V)
        ok = True
    else:
        U = parse_monoidal(doc).underlying if _sniff(doc) == "monoidal" else parse_category(doc)
        V = base_change(mapping, U)
        out_doc = serialize_category(V)
        ok = validate_cat(V).ok
    claims = [_claim("base-change-built", "pass" if ok else "fail", "exhaustive")]
    return _emit(_report("base-change", params, claims), out_doc, args.out)


def _cmd_split(args):
    if not args.H:
        raise UsageError("split needs --H")
    H = _parse_H(args.H)
    r = args.r or 1
    if r < 1:
        raise UsageError("--r must be >= 1")
    window = args.window or 4
    if not 1 <= window <= MAX_WINDOW:
        raise UsageError(f"--window must be between 1 and {MAX_WINDOW}")
    fat = tuple(f"s{i + 1}" for i in range(args.fatten or 0))
    params = {
        "H": args.H,
        "r": r,
        "fatten": len(fat),
        "window": window,
        "basepoint": args.basepoint,
    }
    C = SymDelooped(SymMonGpd(r, H), fat)
    try:
        diagram = split(C, c=args.basepoint, window=window)
        claims = [
            _claim(c.name, c.status, c.mode, None if c.witness is None else str(c.witness))
            for c in diagram.claims
        ]
    except SplitError as exc:
        claims = [
            _claim(c.name, c.status, c.mode, None if c.witness is None else str(c.witness))
            for c in exc.claims
        ]
    return _emit(_report("split", params, claims), out_path=args.out)


def _cmd_selftest(args):
    from . import acceptance

    results = acceptance.run_all(echo=lambda line: print(line, file=sys.stderr))
    claims = [
        _claim(
            r.name,
            "pass" if (r.ok and r.within_budget) else "fail",
            "exhaustive",
            None if r.ok else r.detail,
        )
        for r in results
    ]
    report = _report("selftest", {}, claims)
    text = dumps(report)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return 0 if all(c["status"] == "pass" for c in claims) else 1


COMMANDS = {
    "validate": _cmd_validate,
    "truncate": _cmd_truncate,
    "pi": _cmd_pi,
    "check-groupoid": _cmd_check_groupoid,
    "check-equivalence": _cmd_check_equivalence,
    "deloop": _cmd_deloop,
    "loop": _cmd_loop,
    "base-change": _cmd_base_change,
    "split": _cmd_split,
    "selftest": _cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strictcat",
        description="Validate, truncate, deloop and split finite strict n-categories.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name not in ("split", "selftest"):
            nargs = "?" if name == "deloop" else None
            p.add_argument("input", nargs=nargs, help="input document (JSON)")
        p.add_argument("--variant", help="a|b|c for equivalences, v2|v3 for groupoids")
        p.add_argument("--level", type=int, help="truncation level k")
        p.add_argument("--index", type=int, help="homotopy index i")
        p.add_argument("--basepoint", help="object id")
        p.add_argument("--H", help="fiber group as cyclic factors, e.g. z2 or z2,z3")
        p.add_argument("--r", type=int, help="width of the symbolic family")
        p.add_argument("--fatten", type=int, help="size of the chaotic fattening")
        p.add_argument("--window", type=int, help="verification window W (<= 8)")
        p.add_argument("--map", help="object map file for base-change")
        p.add_argument("--out", help="write the artifact (or report) to this path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, SchemaError, StructuralError, NotComposable,
            NotAGroupoid, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
