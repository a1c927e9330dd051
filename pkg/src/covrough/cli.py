"""Command-line front end.

Exit status: 0 success, 1 parse error (bad file, bad JSON, bad arguments),
2 semantic error (unknown label, universe mismatch, covering too large),
3 at least one law failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from covrough import approximation as ap
from covrough import io, kernels, laws, ops
from covrough.core import Universe
from covrough.enumeration import count_coverings, enumerate_coverings
from covrough.errors import CovroughError, ParseError
from covrough.morphisms import HomMode, is_homomorphism, is_isomorphism, preservation_report

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_LAW = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(io.dumps(obj))


def _parse_set(universe: Universe, text: str):
    labels = [t.strip() for t in text.split(",") if t.strip()]
    return universe.subset(labels)


def _csv_choice(text: str, allowed: set[str]) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in items if t not in allowed]
    if bad:
        raise ParseError(f"unknown choice(s) {bad}; expected a subset of {sorted(allowed)}")
    return items


def cmd_approx(args) -> int:
    space = io.load_space(args.space)
    x = _parse_set(space.universe, args.set)
    show = _csv_choice(args.show, {"lower", "upper", "neighborhoods"})
    out = {"set": x.labels(), "method": args.method}
    if "lower" in show:
        out["lower"] = ap.lower(space, x).labels()
    if "upper" in show:
        out["upper"] = ap.UPPER_METHODS[args.method](space, x).labels()
    if "neighborhoods" in show:
        out["neighborhoods"] = {k: v.labels() for k, v in ap.neighborhood_table(space).items()}
    _emit(out)
    return EXIT_OK


def cmd_op(args) -> int:
    space = io.load_space(args.space)
    _emit(io.covering_to_dict(ops.apply(args.apply, space.covering)))
    return EXIT_OK


def cmd_combine(args) -> int:
    left, right = io.load_space(args.left), io.load_space(args.right)
    _emit(io.covering_to_dict(ops.apply(args.with_, left.covering, right.covering)))
    return EXIT_OK


def cmd_equiv(args) -> int:
    left, right = io.load_space(args.left), io.load_space(args.right)
    a, b = left.covering, right.covering
    _emit({
        "same_lower": ops.same_lower_operator(a, b),
        "same_upper": ops.same_upper_operator(a, b),
        "reduct_left": ops.reduct(a).as_lists(),
        "reduct_right": ops.reduct(b).as_lists(),
    })
    return EXIT_OK


def cmd_hom(args) -> int:
    src, dst = io.load_space(args.source), io.load_space(args.target)
    f = io.load_mapping(args.map, src.universe, dst.universe)
    mode = HomMode(args.mode)
    out = {
        "mode": mode.value,
        "hom": is_homomorphism(f, src, dst, mode),
        "iso": is_isomorphism(f, src, dst, mode),
    }
    if args.set is not None:
        x = _parse_set(src.universe, args.set)
        if is_homomorphism(f, src, dst, HomMode.DEFINABLE):
            out["preservation"] = preservation_report(f, src, dst, x).as_dict()
        else:
            out["preservation"] = None
    _emit(out)
    return EXIT_OK


def cmd_count(args) -> int:
    for n in args.n:
        print(count_coverings(n))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.universe is not None:
        universe = Universe(tuple(t.strip() for t in args.universe.split(",") if t.strip()))
    else:
        universe = Universe.numbered(args.n)
    for c in enumerate_coverings(universe):
        _emit(io.covering_to_dict(c))
    return EXIT_OK


def _env_cap() -> int | None:
    raw = os.environ.get("COVROUGH_MAX_N")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"COVROUGH_MAX_N must be an integer, got {raw!r}") from None


def _scope(args) -> laws.ScopeSpec:
    max_n, sample_max_n = args.max_n, laws.ScopeSpec.sample_max_n
    cap = _env_cap()
    if cap is not None:
        max_n, sample_max_n = min(max_n, cap), min(sample_max_n, cap)
    return laws.ScopeSpec(max_n=max_n, seeds=args.seeds, sample_max_n=sample_max_n)


def cmd_check(args) -> int:
    scope = _scope(args)
    for law in args.law or ():
        laws.get_law(law)
    reports = laws.run_all(scope, args.law or None)
    if args.json:
        for r in reports:
            print(json.dumps(r.as_dict()))
    else:
        print(f"kernels: {kernels.BACKEND}")
        print(f"{'law':<22} {'outcome':<24} {'instances':>10} {'seconds':>8}  scope")
        for r in reports:
            print(f"{r.law.value:<22} {r.outcome.value:<24} {r.instances_checked:>10} {r.elapsed:>8.2f}  {r.scope}")
            if r.witness is not None:
                print(f"    witness: {json.dumps(r.witness)}")
            if r.note:
                print(f"    note: {r.note}")
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} laws passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_LAW


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="covrough", description="Covering rough sets based on neighborhoods")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("approx", help="lower/upper approximations of a set")
    a.add_argument("--space", required=True)
    a.add_argument("--set", required=True, help="comma-separated labels; empty string for the empty set")
    a.add_argument("--method", choices=sorted(ap.UPPER_METHODS), default="neigh")
    a.add_argument("--show", default="lower,upper", help="any of lower,upper,neighborhoods")
    a.set_defaults(func=cmd_approx)

    o = sub.add_parser("op", help="apply a unary covering operator")
    o.add_argument("--space", required=True)
    o.add_argument("--apply", required=True, choices=["reduct", "int", "nei", "closure"])
    o.set_defaults(func=cmd_op)

    c = sub.add_parser("combine", help="join or meet two coverings")
    c.add_argument("--left", required=True)
    c.add_argument("--right", required=True)
    c.add_argument("--with", dest="with_", required=True, choices=["join", "meet"])
    c.set_defaults(func=cmd_combine)

    e = sub.add_parser("equiv", help="compare the approximation operators of two coverings")
    e.add_argument("--left", required=True)
    e.add_argument("--right", required=True)
    e.set_defaults(func=cmd_equiv)

    h = sub.add_parser("hom", help="homomorphism and isomorphism checks")
    h.add_argument("--source", required=True)
    h.add_argument("--target", required=True)
    h.add_argument("--map", required=True)
    h.add_argument("--mode", choices=[m.value for m in HomMode], default=HomMode.DEFINABLE.value)
    h.add_argument("--set", default=None)
    h.set_defaults(func=cmd_hom)

    n = sub.add_parser("count-coverings", help="number of coverings of an n-element set")
    n.add_argument("n", type=int, nargs="+")
    n.set_defaults(func=cmd_count)

    en = sub.add_parser("enumerate-coverings", help="every covering of a small universe, one JSON space per line")
    g = en.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--universe", help="comma-separated labels")
    en.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("check", help="run the law catalog")
    k.add_argument("--law", action="append", help="law id (repeatable); default all")
    k.add_argument("--max-n", type=int, default=laws.ScopeSpec.max_n)
    k.add_argument("--seeds", type=int, default=laws.ScopeSpec.seeds)
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"covrough: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CovroughError as exc:
        print(f"covrough: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
