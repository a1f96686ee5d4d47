"""Command-line front end.

Exit status: 0 when every check passes, 1 on a mathematical failure, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import List, Optional

from . import __version__
from .affine_vacuum import CriticalLevelError, context, parse_vacuum, render_vacuum
from .exact_arith import RationalSyntaxError, parse_rational, render_rational
from .expr_text import ExprSyntaxError
from .hc_classify import (
    PolySyntaxError,
    integral_members,
    load_chains,
    load_families,
    load_polys,
    p0_generators,
    perturb,
    reparametrizes,
    verify_classification,
)
from .simple_lie import parse_weight, render_weight
from .singular import InhomogeneousError, search_singular, verify_singular
from .uea import parse_uea, render_uea
from .w_numerics import minimal_w_top, small_weight_pairs, sugawara_weight
from .zhu import zhu_image, zhu_image_oracle

OK, MATH_FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_fixtures() -> Path:
    return Path(str(resources.files("affine_sing") / "fixtures"))


def _algebra(text: str) -> int:
    m = re.fullmatch(r"sl_?(\d+)", text.strip().lower())
    if not m or int(m.group(1)) < 2:
        raise argparse.ArgumentTypeError(f"expected slN with N >= 2, got {text!r}")
    return int(m.group(1))


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (RationalSyntaxError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight(text: str):
    try:
        return parse_weight(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class Reporter:
    """Text lines or JSON records on stdout, in call order."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def line(self, text: str):
        if self.fmt == "text":
            print(text, file=self.out)

    def record(self, rec: dict, text: Optional[str] = None):
        if self.fmt == "records":
            print(json.dumps(rec, sort_keys=True), file=self.out)
        elif text is not None:
            print(text, file=self.out)


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _input_path(args, default_name: str) -> Path:
    return Path(args.input) if args.input else Path(args.fixtures) / default_name


def _check_weight(args, n: int):
    if args.weight is not None and len(args.weight) != n - 1:
        raise UsageError(f"--weight needs {n - 1} coordinates for sl{n}")


# -- subcommands ----------------------------------------------------------------------


def cmd_verify_singular(args, rep: Reporter) -> int:
    path = _input_path(args, "sl6_singular.vac")
    ctx = context(args.algebra, args.level)
    v = parse_vacuum(_read(path), ctx, source=str(path))
    try:
        report = verify_singular(v, extended=args.extended)
    except InhomogeneousError as exc:
        rep.record({"kind": "error", "message": str(exc)}, f"FAIL: {exc}")
        return MATH_FAIL
    wt = "-" if report.weight is None else render_weight(report.weight)
    rep.record(
        {"kind": "component", "terms": len(v), "weight": wt, "degree": report.degree},
        f"{path.name}: {len(v)} terms, weight ({wt}), degree {report.degree}",
    )
    for rec in report.records():
        rep.record(
            dict(kind="check", **{k: rec[k] for k in ("operator", "zero", "residual_terms")}),
            f"  {rec['operator']:<12} {'zero' if rec['zero'] else 'NONZERO (%d terms)' % rec['residual_terms']}",
        )
    verdict = "PASS" if report.passed else "FAIL"
    rep.record({"kind": "summary", "passed": report.passed}, verdict)
    return OK if report.passed else MATH_FAIL


def cmd_search_singular(args, rep: Reporter) -> int:
    if args.weight is None or args.degree is None:
        raise UsageError("search-singular needs --weight and --degree")
    _check_weight(args, args.algebra)
    ctx = context(args.algebra, args.level)
    kernel = search_singular(ctx, args.weight, args.degree)
    rep.record(
        {"kind": "kernel", "dimension": len(kernel), "weight": render_weight(args.weight), "degree": args.degree},
        f"kernel dimension {len(kernel)} at weight ({render_weight(args.weight)}), degree {args.degree}",
    )
    out_dir = Path(args.output) if args.output else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i, v in enumerate(kernel, start=1):
        text = render_vacuum(v)
        rep.record({"kind": "vector", "index": i, "terms": len(v), "value": text}, f"[{i}] {text}")
        if out_dir:
            (out_dir / f"singular_{i}.vac").write_text(text + "\n")
    return OK if kernel else MATH_FAIL


def cmd_zhu_image(args, rep: Reporter) -> int:
    path = _input_path(args, "sl6_singular.vac")
    ctx = context(args.algebra, args.level)
    v = parse_vacuum(_read(path), ctx, source=str(path))
    img = zhu_image(v)
    text = render_uea(img)
    status = OK
    if args.oracle:
        agree = zhu_image_oracle(v) == img
        rep.record({"kind": "oracle", "agree": agree}, f"oracle {'agrees' if agree else 'DISAGREES'}")
        status = status if agree else MATH_FAIL
    if args.expect:
        epath = Path(args.expect)
        expected = parse_uea(_read(epath), ctx.n, source=str(epath))
        same = expected == img
        rep.record(
            {"kind": "compare", "file": epath.name, "equal": same},
            f"matches {epath.name}" if same else f"DIFFERS from {epath.name}",
        )
        status = status if same else MATH_FAIL
    if args.output:
        Path(args.output).write_text(text + "\n")
    rep.record({"kind": "image", "terms": len(img), "value": text}, text)
    return status


def cmd_classify(args, rep: Reporter) -> int:
    fx = Path(args.fixtures)
    n = args.algebra
    l = n - 1
    polys = load_polys(_read(fx / "p_polys.txt"), l)
    names = list(polys)
    plist = [polys[k] for k in names]
    if args.regenerate:
        vp = parse_uea(_read(fx / "v_prime.uea"), n, source="v_prime.uea")
        chains = load_chains(_read(fx / "chains.txt"), n)
        gen = p0_generators(vp, chains)
        for spec, g in zip(chains, gen):
            printed = polys.get(spec.name)
            ratio = _ratio(g, printed) if printed is not None else None
            if ratio == 1:
                msg = "equals the printed polynomial"
            elif ratio is not None:
                msg = f"equals {render_rational(ratio)} x the printed polynomial"
            else:
                msg = "is not a multiple of the printed polynomial"
            rep.record(
                {"kind": "generated", "name": spec.name, "ratio": None if ratio is None else render_rational(ratio)},
                f"{spec.name}: generated {msg}",
            )
        names = [c.name for c in chains]
        plist = gen
    fam_path = Path(args.families) if args.families else fx / "families.txt"
    fams = load_families(_read(fam_path))
    if any(len(f.base) != l for f in fams):
        raise UsageError(f"families in {fam_path.name} do not have {l} coordinates")
    if args.perturb is not None:
        idx = args.perturb - 1
        if not 0 <= idx < len(fams):
            raise UsageError(f"--perturb {args.perturb}: only {len(fams)} families")
        coord = (args.coord - 1) if args.coord else _moving_coord(fams[idx])
        if not 0 <= coord < l:
            raise UsageError(f"--coord out of range 1..{l}")
        fams[idx] = perturb(fams[idx], coord)
        rep.line(f"family {args.perturb}: coordinate {coord + 1} shifted by +1 -> {fams[idx]}")
    report = verify_classification(plist, fams)
    for r in report.results:
        rep.record(
            {"kind": "pair", "poly": names[r.poly], "family": r.family + 1, "zero": r.ok, "value": str(r.value)},
            f"{names[r.poly]} on mu_{r.family + 1}: " + ("0" if r.ok else f"NONZERO {r.value}"),
        )
    fails = len(report.failures)
    for j, f in enumerate(fams, start=1):
        members = integral_members(f)
        if not members.empty:
            rep.record(
                {"kind": "integral", "family": j, "members": members.describe()},
                f"dominant integral members of mu_{j}: {members.describe()}",
            )
    rep.record(
        {"kind": "summary", "pairs": len(report.results), "failures": fails, "passed": report.passed},
        f"{len(report.results)} evaluations, {fails} nonzero: {'PASS' if report.passed else 'FAIL'}",
    )
    return OK if report.passed else MATH_FAIL


def _ratio(p, q):
    if p.is_zero() or q.is_zero() or set(p.terms) != set(q.terms):
        return None
    e = next(iter(p.terms))
    r = p.terms[e] / q.terms[e]
    return r if p == q.scale(r) else None


def _moving_coord(fam) -> int:
    """First coordinate whose shift is not absorbed by reparametrizing t."""
    return next((c for c in range(len(fam.base)) if not reparametrizes(fam, c)), 0)


def cmd_w_numerics(args, rep: Reporter) -> int:
    if args.weight is not None:
        n = args.algebra
        _check_weight(args, n)
        sw = sugawara_weight(n, args.level, args.weight)
        top = minimal_w_top(n - 2, args.level, args.weight)
        rep.record(
            {
                "kind": "weight",
                "weight": render_weight(args.weight),
                "sugawara": render_rational(sw),
                "j": render_rational(top.j_eigenvalue),
                "h": render_rational(top.conformal_weight),
            },
            f"sl{n}, k = {render_rational(args.level)}, weight ({render_weight(args.weight)}): "
            f"Sugawara {render_rational(sw)}, J {render_rational(top.j_eigenvalue)}, "
            f"L0 {render_rational(top.conformal_weight)}",
        )
    if args.bound <= 0:
        raise UsageError("--bound must be positive")
    rows = small_weight_pairs(args.bound)
    rep.line(f"{'q':>3} {'n':>3} {'t':>4} {'h':>6} {'J':>4}")
    for r in rows:
        rep.record(
            {"kind": "row", "q": r.q, "n": r.n, "t": r.t, "h": render_rational(r.h), "J": r.j},
            f"{r.q:>3} {r.n:>3} {r.t:>4} {render_rational(r.h):>6} {r.j:>4}",
        )
    rep.line(f"{len(rows)} rows with h <= {render_rational(args.bound)}")
    return OK


COMMANDS = {
    "verify-singular": cmd_verify_singular,
    "search-singular": cmd_search_singular,
    "zhu-image": cmd_zhu_image,
    "classify": cmd_classify,
    "w-numerics": cmd_w_numerics,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", type=_algebra, default=6, metavar="slN", help="default sl6")
    common.add_argument("--level", type=_rational, default=Fraction(-7, 2), metavar="p/q", help="default -7/2")
    common.add_argument("--fixtures", default=None, metavar="DIR", help="fixture directory")
    common.add_argument("--format", choices=("text", "records"), default="text")

    p = argparse.ArgumentParser(prog="affine-sing", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-singular", parents=[common], help="check a vacuum-module vector is singular")
    s.add_argument("--input", metavar="PATH")
    s.add_argument("--extended", action="store_true", help="apply every e(0) and x(1)")

    s = sub.add_parser("search-singular", parents=[common], help="kernel of the raising operators")
    s.add_argument("--weight", type=_weight, metavar="c1,...")
    s.add_argument("--degree", type=int)
    s.add_argument("--output", metavar="DIR", help="write singular_<i>.vac files here")

    s = sub.add_parser("zhu-image", parents=[common], help="image in U(sl_n)")
    s.add_argument("--input", metavar="PATH")
    s.add_argument("--output", metavar="PATH")
    s.add_argument("--expect", metavar="PATH", help="UEA file to compare against")
    s.add_argument("--oracle", action="store_true", help="cross-check with the recursive map")

    s = sub.add_parser("classify", parents=[common], help="evaluate p_1..p_9 on the families")
    s.add_argument("--families", metavar="PATH")
    s.add_argument("--perturb", type=int, metavar="IDX", help="add 1 to one coordinate of family IDX")
    s.add_argument("--coord", type=int, metavar="J", help="coordinate for --perturb (1-based)")
    s.add_argument("--regenerate", action="store_true", help="rebuild the polynomials from v' and the chains")

    s = sub.add_parser("w-numerics", parents=[common], help="minimal W-algebra eigenvalues")
    s.add_argument("--bound", type=_rational, default=Fraction(4), metavar="p/q")
    s.add_argument("--weight", type=_weight, metavar="c1,...")
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.fixtures is None:
        args.fixtures = str(default_fixtures())
    rep = Reporter(args.format, out)
    try:
        return COMMANDS[args.command](args, rep)
    except (UsageError, ExprSyntaxError, PolySyntaxError, CriticalLevelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        # malformed fixture lines (weights, chains) surface as ValueError
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
