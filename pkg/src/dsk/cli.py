"""Command-line entry point ``dsk``.

Exit status: 0 on success (and all requested checks passing), 1 when a
check fails or is skipped, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cache import GroebnerCache
from .grobner import Ideal
from .ideals import (
    DEFAULT_COMPONENT_BUDGET,
    ParameterTriple,
    equivariant_ideal,
    finite_locus,
    griffin_ideal,
    tanisaki_generators,
)
from .polynomials import MonomialOrder, Ring, format_rational, to_text
from .shapes import ParameterError, admissible_words, parse_partition, substaircases
from .verify import CHECK_IDS, UnknownCheck, run_check, sweep


class UsageError(Exception):
    pass


def _parse_alpha(text: str | None) -> list[Fraction] | None:
    if text is None:
        return None
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--alpha: cannot read {text!r} as a comma list of rationals") from None


def _parse_checks(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return list(CHECK_IDS)
    checks = [c.strip().upper() for c in text.split(",") if c.strip()]
    for c in checks:
        if c not in CHECK_IDS:
            raise UsageError(f"--check: unknown check {c!r}; expected C1..C10 or all")
    return checks


def _common(p: argparse.ArgumentParser, triple: bool = True, s_required: bool = True):
    if triple:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--lambda", dest="lam", default="", help='partition as "2,2,1"; "0" or "" for empty')
        p.add_argument("--s", type=int, required=s_required)
    p.add_argument("--alpha", help="comma list of rationals, e.g. 0,1/2")
    p.add_argument("--order", default="grevlex",
                   help="grevlex | grlex | block (long names also accepted)")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cache-dir", help="Groebner basis cache directory (default: $DSK_CACHE_DIR)")
    p.add_argument("--budget", type=int, default=DEFAULT_COMPONENT_BUDGET,
                   help="maximum number of universal-locus components for C5")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--audit", action="store_true", help="audit every Groebner basis produced")
    p.add_argument("--no-timings", action="store_true", help="report millis=0 for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsk", description="Delta-Springer ideals, loci and consistency checks")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("frame", help="canonical filling, xi and phi of (n, lambda, s)"))
    _common(sub.add_parser("basis", help="substaircase monomial basis and its size"))
    _common(sub.add_parser("words", help="admissible words"))
    p = sub.add_parser("ideal", help="generators (or reduced Groebner basis) of an ideal")
    p.add_argument("which", choices=("griffin", "equivariant", "tanisaki"))
    p.add_argument("--groebner", action="store_true")
    _common(p, s_required=False)
    _common(sub.add_parser("locus", help="points of the finite locus X(alpha) as CSV"))
    p = sub.add_parser("verify", help="run checks C1..C10 on one triple")
    p.add_argument("--check", default="all")
    _common(p)
    p = sub.add_parser("sweep", help="run checks over all triples up to the bounds")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-s", type=int, required=True)
    p.add_argument("--checks", "--check", dest="check", default="all")
    _common(p, triple=False)
    return parser


def _triple(args) -> ParameterTriple:
    lam = parse_partition(args.lam)
    if args.s is None:
        raise UsageError("--s is required for this command")
    return ParameterTriple(args.n, lam, args.s)


def _emit(text: str, args):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _lam_text(lam) -> str:
    return ",".join(map(str, lam)) or "0"


def cmd_frame(args) -> int:
    t = _triple(args)
    fr = t.frame
    if args.format == "json":
        data = {"n": fr.n, "lambda": list(fr.lam), "s": fr.s, "k": fr.k, "Lambda": list(fr.Lambda),
                "K": fr.K, "P": [list(r) for r in fr.P], "xi": list(fr.xi), "phi": list(fr.phi)}
        _emit(json.dumps(data) + "\n", args)
        return 0
    lines = [f"n={fr.n} lambda=({_lam_text(fr.lam)}) s={fr.s} k={fr.k}",
             f"Lambda=({','.join(map(str, fr.Lambda))}) K={fr.K}",
             "P:"]
    lines += [" ".join(map(str, row)) for row in fr.P]
    lines += [f"xi={','.join(map(str, fr.xi))}", f"phi={','.join(map(str, fr.phi))}"]
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_basis(args) -> int:
    t = _triple(args)
    order = MonomialOrder.named(args.order, t.x_ring)
    subs = sorted(substaircases(t.n, t.lam, t.s), key=order.key)
    ring = t.x_ring
    if args.format == "json":
        data = {"monomials": [ring.format_monomial(a) for a in subs], "count": len(subs)}
        _emit(json.dumps(data) + "\n", args)
    elif args.format == "csv":
        _emit("".join(",".join(map(str, a)) + "\n" for a in subs), args)
    else:
        _emit("".join(ring.format_monomial(a) + "\n" for a in subs) + f"count={len(subs)}\n", args)
    return 0


def cmd_words(args) -> int:
    t = _triple(args)
    words = admissible_words(t.n, t.lam, t.s)
    if args.format == "json":
        _emit(json.dumps({"words": [list(w) for w in words], "count": len(words)}) + "\n", args)
    elif args.format == "csv":
        _emit("".join(",".join(map(str, w)) + "\n" for w in words), args)
    else:
        _emit("".join(",".join(map(str, w)) + "\n" for w in words) + f"count={len(words)}\n", args)
    return 0


def cmd_ideal(args) -> int:
    lam = parse_partition(args.lam)
    if args.which == "tanisaki":
        ring = Ring.xu(args.n)
        order = MonomialOrder.named(args.order, ring)
        ideal = Ideal(ring, tuple(tanisaki_generators(lam, args.n, ring)), order)
        params = f"{args.n},({_lam_text(lam)}),-"
    else:
        t = _triple(args)
        build = griffin_ideal if args.which == "griffin" else equivariant_ideal
        ring = t.x_ring if args.which == "griffin" else t.xu_ring
        ideal = build(t, MonomialOrder.named(args.order, ring))
        params = t.label()
    if args.groebner:
        cache = GroebnerCache.from_env(args.cache_dir)
        polys = cache.groebner(ideal, params, args.which) if cache else ideal.groebner
    else:
        polys = ideal.generators
    texts = [to_text(g, ideal.order) for g in polys]
    if args.format == "json":
        _emit(json.dumps({"ideal": args.which, "order": ideal.order.name, "groebner": args.groebner,
                          "polynomials": texts}) + "\n", args)
    else:
        _emit("".join(line + "\n" for line in texts), args)
    return 0


def cmd_locus(args) -> int:
    t = _triple(args)
    alpha = _parse_alpha(args.alpha)
    if alpha is None:
        raise UsageError("locus needs --alpha with s distinct rationals")
    try:
        locus = finite_locus(t, alpha)
    except ValueError as exc:
        raise UsageError(f"--alpha: {exc}") from None
    if args.format == "json":
        pts = [[format_rational(c) for c in p] for p in locus.points]
        _emit(json.dumps({"points": pts, "count": len(pts)}) + "\n", args)
    else:
        _emit(locus.to_csv(), args)
    return 0


def _emit_reports(reports, args) -> int:
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in reports], indent=1) + "\n", args)
    elif args.format == "csv":
        rows = ["check,n,lambda,s,verdict,millis"]
        rows += [f"{r.check},{r.n},{_lam_text(r.lam)},{r.s},{r.verdict},{r.millis}" for r in reports]
        _emit("\n".join(rows) + "\n", args)
    else:
        lines = [r.line() for r in reports]
        npass = sum(r.passed for r in reports)
        lines.append(f"{npass}/{len(reports)} passed")
        _emit("\n".join(lines) + "\n", args)
    return 0 if all(r.passed for r in reports) else 1


def _check_kwargs(args) -> dict:
    return dict(seed=args.seed, budget=args.budget, audit=args.audit,
                cache=GroebnerCache.from_env(args.cache_dir), timings=not args.no_timings)


def cmd_verify(args) -> int:
    t = _triple(args)
    alpha = _parse_alpha(args.alpha)
    if alpha is not None and len(alpha) != t.s:
        raise UsageError(f"--alpha: need {t.s} values, got {len(alpha)}")
    kwargs = _check_kwargs(args)
    reports = [run_check(c, t, alpha=alpha if c in ("C1", "C2", "C6") else None, **kwargs)
               for c in _parse_checks(args.check)]
    return _emit_reports(reports, args)


def cmd_sweep(args) -> int:
    reports = sweep(args.max_n, args.max_s, _parse_checks(args.check), jobs=args.jobs, **_check_kwargs(args))
    return _emit_reports(reports, args)


COMMANDS = {
    "frame": cmd_frame,
    "basis": cmd_basis,
    "words": cmd_words,
    "ideal": cmd_ideal,
    "locus": cmd_locus,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParameterError, UnknownCheck) as exc:
        print(f"dsk {args.command}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"dsk {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
