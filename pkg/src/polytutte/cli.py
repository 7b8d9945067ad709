"""
Command-line front end.

Instances are given with ``-i``: a path to a rank-table or graph JSON
file, inline JSON, or ``uniform:d,n`` / ``coverage:seed,n,ground,parts,maxw``.
Exit status is 0 on success, 1 when a requested check fails and 2 on
invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .activity import activity_records
from .core import (
    RankFunction,
    enumerate_bases,
    format_subset,
    make_graphic_matroid,
    make_random_coverage_polymatroid,
    make_uniform_matroid,
    validate_rank_function,
)
from .errors import ParseError, PolymatroidError
from .invariants import (
    classical_tutte_activity,
    classical_tutte_corank_nullity,
    correspondence_failure,
    default_permutations,
    fiber_identity_check,
    polymatroid_tutte,
    series_mismatch,
    sn_invariance_failure,
    truncated_tilde_series,
)
from .lemmas import lemma_property_suite

CHECKS = ("sn", "fibers", "lemmas", "series", "correspondence")


@dataclass(frozen=True)
class InstanceSpec:
    source: str
    resolved: RankFunction


def _ints(text: str, count: int, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ParseError(f"{what} expects {count} comma-separated integers, got {text!r}", field=what)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"{what} arguments must be integers, got {text!r}", field=what) from None


def _from_json_obj(obj, source: str) -> InstanceSpec:
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if "ranks" in obj or "n" in obj:
        for key in ("n", "ranks"):
            if key not in obj:
                raise ParseError("rank table is missing a key", field=key)
        n, ranks = obj["n"], obj["ranks"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError("must be an integer", field="n")
        if not isinstance(ranks, list) or not all(isinstance(r, int) and not isinstance(r, bool) for r in ranks):
            raise ParseError("must be a list of integers", field="ranks")
        return InstanceSpec(f"rank-table:{source}", validate_rank_function(n, ranks))
    if "vertices" in obj or "edges" in obj:
        for key in ("vertices", "edges"):
            if key not in obj:
                raise ParseError("graph is missing a key", field=key)
        v, edges = obj["vertices"], obj["edges"]
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError("must be an integer", field="vertices")
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in edges
        ):
            raise ParseError("must be a list of [u, v] integer pairs", field="edges")
        return InstanceSpec(f"graph:{source}", make_graphic_matroid(v, edges))
    raise ParseError("expected a rank table {'n', 'ranks'} or a graph {'vertices', 'edges'}")


def _from_json_text(text: str, source: str) -> InstanceSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    return _from_json_obj(obj, source)


def parse_instance(text: str) -> InstanceSpec:
    """Resolve a file path, inline JSON or inline constructor into a validated rank function."""
    text = text.strip()
    if text.startswith("uniform:"):
        d, n = _ints(text[len("uniform:"):], 2, "uniform")
        return InstanceSpec(text, make_uniform_matroid(d, n))
    if text.startswith("coverage:"):
        seed, n, ground, parts, maxw = _ints(text[len("coverage:"):], 5, "coverage")
        return InstanceSpec(text, make_random_coverage_polymatroid(n, seed, ground, parts, maxw))
    if text.startswith("{"):
        return _from_json_text(text, "inline")
    path = Path(text)
    if not path.is_file():
        raise ParseError(f"no such instance file or constructor: {text!r}")
    return _from_json_text(path.read_text(encoding="utf-8"), str(path))


def _fmt_vec(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def _cmd_bases(spec, args, out):
    for a in enumerate_bases(spec.resolved).bases:
        print(_fmt_vec(a), file=out)
    return 0


def _cmd_activities(spec, args, out):
    for r in activity_records(enumerate_bases(spec.resolved)):
        print(f"{_fmt_vec(r.basis)} Int={format_subset(r.int_set)} Ext={format_subset(r.ext_set)} "
              f"oi={r.oi} oe={r.oe} ie={r.ie}", file=out)
    return 0


def _cmd_tutte(spec, args, out):
    T = polymatroid_tutte(enumerate_bases(spec.resolved))
    print(T.to_json() if args.json else T.to_text(), file=out)
    return 0


def _cmd_classical(spec, args, out):
    T = classical_tutte_activity(spec.resolved)
    print(T.to_text(), file=out)
    if args.oracle:
        T2 = classical_tutte_corank_nullity(spec.resolved)
        print(T2.to_text(), file=out)
        print("AGREE" if T == T2 else "DISAGREE", file=out)
        return 0 if T == T2 else 1
    return 0


def _cmd_series(spec, args, out):
    S = truncated_tilde_series(enumerate_bases(spec.resolved), args.degree)
    print(json.dumps(S.to_json_obj()) if args.json else S.to_text(), file=out)
    return 0


def _check_sn(P, args):
    ws = default_permutations(P.n, all_perms=args.all_perms) if P.n > 1 else []
    fail = sn_invariance_failure(P, ws)
    if fail is None:
        return True, ""
    w, Tw = fail
    return False, f"w={w.images} gives {Tw.to_text()}"


def _check_fibers(P, args):
    for h in range(1, P.n):
        for rep in fiber_identity_check(P, h):
            if not rep.holds:
                return False, f"h={h} fiber={[_fmt_vec(b) for b in rep.fiber.members]}"
    return True, ""


def _check_lemmas(P, args):
    for name, res in lemma_property_suite(P).items():
        if not res.passed:
            return False, f"{name}: {res.counterexample}"
    return True, ""


def _check_series(P, args):
    if not P.bases:
        return None, "empty polymatroid"
    diff = series_mismatch(P, args.degree)
    if not diff:
        return True, ""
    k, (lhs, rhs) = next(iter(diff.items()))
    return False, f"coefficient of u^{k[0]} v^{k[1]}: lattice {lhs}, transformed {rhs}"


def _check_correspondence(P, args):
    if not P.rank.is_matroid():
        return None, "not a matroid rank function"
    fail = correspondence_failure(P.rank)
    if fail is None:
        return True, ""
    x, y, lhs, rhs = fail
    return False, f"at (x,y)=({x},{y}): {lhs} != {rhs}"


_CHECK_FNS = {
    "sn": _check_sn,
    "fibers": _check_fibers,
    "lemmas": _check_lemmas,
    "series": _check_series,
    "correspondence": _check_correspondence,
}


def _cmd_verify(spec, args, out):
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ParseError(f"unknown check(s) {unknown}; choose from {', '.join(CHECKS)}", field="checks")
    P = enumerate_bases(spec.resolved)
    status = 0
    for c in checks:
        ok, detail = _CHECK_FNS[c](P, args)
        if ok is None:
            print(f"{c}: SKIP ({detail})", file=out)
        elif ok:
            print(f"{c}: PASS", file=out)
        else:
            print(f"{c}: FAIL {detail}", file=out)
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polytutte", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-i", "--instance", required=True, help="instance file, inline JSON, or constructor")
        p.set_defaults(fn=fn)
        return p

    add("bases", _cmd_bases, "list the bases in lexicographic order")
    add("activities", _cmd_activities, "print Int/Ext sets and (oi, oe, ie) per basis")
    p = add("tutte", _cmd_tutte, "print the polymatroid Tutte polynomial")
    p.add_argument("--json", action="store_true")
    p = add("classical", _cmd_classical, "print the matroid Tutte polynomial from activities")
    p.add_argument("--oracle", action="store_true", help="also compute the corank-nullity expansion")
    p = add("series", _cmd_series, "print the truncated lattice-distance series")
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p = add("verify", _cmd_verify, "run invariance and identity checks")
    p.add_argument("--checks", default=",".join(CHECKS))
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--all-perms", action="store_true", help="use all of S_n regardless of n")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "degree", 0) < 0:
        print("error: --degree must be >= 0", file=err)
        return 2
    try:
        spec = parse_instance(args.instance)
        return args.fn(spec, args, out)
    except PolymatroidError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
