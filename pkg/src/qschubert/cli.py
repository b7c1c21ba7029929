"""Command-line entry point: ``qschubert <subcommand> ... --k K --n N``.

Exit status is 0 on success, 1 when a verification or tolerance check
fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cohclass import CohClass, class_to_json, format_class, format_coeff
from .partitions import BoxContext, format_partition, in_gs, parse_partition, poincare_dual
from .quantum import conj, gw, qprod
from .quotient import ann_p, annihilator_check, positivity_experiment, psi, psi_of, reduce_to_gs
from .schur import cup_product, lr_sum_lhs, lr_sum_rhs
from .spectrum import STANDARD_ROOTS, TOL_IDENTITY, TOL_INTEGER, RootChoice, character_matrix
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    k: int | None
    n: int | None
    xi_exponent: int = 1
    half_exponent: int | None = None
    tol_identity: float = TOL_IDENTITY
    tol_integer: float = TOL_INTEGER
    format: str = "text"
    seed: int = 0

    @property
    def root(self) -> RootChoice:
        return RootChoice(self.xi_exponent, self.half_exponent)

    def context(self) -> BoxContext:
        if self.k is None or self.n is None:
            raise UsageError("--k and --n are required for this command")
        try:
            ctx = BoxContext(self.k, self.n)
            self.root.validate(ctx)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return ctx


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tol", type=_positive_float, default=TOL_IDENTITY,
                        help="identity tolerance for floating-point checks")
    common.add_argument("--tol-integer", type=_positive_float, default=TOL_INTEGER)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--xi-exponent", type=int, default=1)
    common.add_argument("--half-exponent", type=int, default=None)

    parser = argparse.ArgumentParser(prog="qschubert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, nargs=0, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for i in range(nargs):
            p.add_argument(f"p{i}", type=_partition_arg, metavar="PARTITION")
        return p

    add("cprod", 2, "classical cup product truncated to the box")
    add("qprod", 2, "quantum product at q = 1")
    add("conj", 1, "complex conjugate of a Schubert class")
    add("dual", 1, "Poincare dual diagram")
    add("gw", 3, "three-point invariant")
    add("plr-sum", 2, "compare the two LR coefficient sums")
    sp = add("spectrum", 0, "character matrix of Schubert classes at the points")
    sp.add_argument("--normalized", action="store_true")
    sp.add_argument("--paper-example", action="store_true",
                    help="xi = i and xi^(1/2) = (1+i)/sqrt(2) on G(2,4), exact rendering")
    add("annp", 0, "radical of the sum pairing versus the sigma ideal")
    add("reduce", 1, "representative modulo Ann P on the G_S classes")
    add("psi", 1, "psi image of a class (reduced to G_S first)")
    add("positivity-report", 0, "psi(reduce(S)) for every class")
    vp = add("verify", 0, "run verification suites")
    vp.add_argument("suite", choices=tuple(SUITES) + ("all",))
    vp.add_argument("--samples", type=int, default=None,
                    help="random triples instead of an exhaustive sweep")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(args.k, args.n, args.xi_exponent, args.half_exponent, args.tol,
                     args.tol_integer, args.format, args.seed)


def _emit(cfg: RunConfig, text: str, payload) -> None:
    if cfg.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _schubert(ctx, lam) -> CohClass:
    try:
        return CohClass.schubert(ctx, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _format_combo(combo: dict) -> str:
    if not combo:
        return "0"
    out = []
    for lam, c in combo.items():
        c = Fraction(c)
        body = f"S{format_partition(lam)}"
        if abs(c) != 1:
            body = f"{format_coeff(abs(c))}*{body}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def _combo_json(ctx: BoxContext, combo: dict, key: str = "partition") -> dict:
    return {
        "ctx": {"k": ctx.k, "n": ctx.n},
        "terms": [{"coeff": f"{Fraction(c).numerator}/{Fraction(c).denominator}", key: list(p)}
                  for p, c in combo.items()],
    }


_SQRT2 = math.sqrt(2)


def _exact_real(x: float, tol: float) -> str | None:
    for scale, suffix in ((1.0, ""), (_SQRT2, "√2")):
        m = x / scale
        r = round(m)
        if abs(m - r) < tol:
            if r == 0:
                return "0"
            if suffix:
                return ("-" if r < 0 else "") + (f"{abs(r)}" if abs(r) != 1 else "") + suffix
            return str(r)
    return None


def format_complex(z: complex, tol: float = 1e-9, exact: bool = False) -> str:
    re, im = z.real, z.imag
    if abs(re) < tol:
        re = 0.0
    if abs(im) < tol:
        im = 0.0
    if exact:
        a, b = _exact_real(re, tol), _exact_real(im, tol)
        if a is not None and b is not None:
            if b == "0":
                return a
            bi = {"1": "i", "-1": "-i"}.get(b, b + "i")
            if a == "0":
                return bi
            return a + (bi if bi.startswith("-") else "+" + bi)
    if im == 0:
        return f"{re:.10g}"
    return f"{re:.10g}{im:+.10g}i"


def _spectrum(cfg: RunConfig, args) -> int:
    if args.paper_example:
        cfg = RunConfig(cfg.k or 2, cfg.n or 4, STANDARD_ROOTS.xi_exponent, STANDARD_ROOTS.half_exponent,
                        cfg.tol_identity, cfg.tol_integer,
                        cfg.format, cfg.seed)
    ctx = cfg.context()
    cm = character_matrix(ctx, cfg.root)
    M = cm.normalized() if args.normalized else cm.entries
    table = np.asarray(M).T  # rows: points, columns: classes
    labels = [format_partition(lam) for lam in ctx.basis]
    if cfg.format == "json":
        print(json.dumps({
            "ctx": {"k": ctx.k, "n": ctx.n},
            "xi_exponent": cm.root_choice.xi_exponent,
            "half_exponent": cm.root_choice.half_exponent,
            "normalized": bool(args.normalized),
            "points": [list(lam) for lam in ctx.basis],
            "classes": [list(lam) for lam in ctx.basis],
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in table],
        }))
        return 0
    cells = [[format_complex(z, cfg.tol_identity, exact=True) for z in row] for row in table]
    head = [""] + [f"S{s}" for s in labels]
    rows = [[f"P{s}"] + row for s, row in zip(labels, cells)]
    width = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
    for r in [head] + rows:
        print("  ".join(c.rjust(w) for c, w in zip(r, width)).rstrip())
    return 0


def _verify(cfg: RunConfig, args) -> int:
    ctx = cfg.context()
    reports = run_suite(args.suite, ctx, root=cfg.root, tol=cfg.tol_identity,
                        tol_int=cfg.tol_integer, samples=args.samples, seed=cfg.seed)
    ok = all(r.passed for r in reports)
    _emit(cfg, "\n".join(r.line() for r in reports)
          + f"\n{'PASS' if ok else 'FAIL'} {args.suite} {ctx}: "
            f"{sum(r.passed for r in reports)}/{len(reports)} checks",
          {"suite": args.suite, "ctx": {"k": ctx.k, "n": ctx.n}, "passed": ok,
           "checks": [r.to_json() for r in reports]})
    return 0 if ok else 1


def _dispatch(args) -> int:
    cfg = _config(args)
    cmd = args.command
    if cmd == "plr-sum":
        lhs, rhs = lr_sum_lhs(args.p0, args.p1), lr_sum_rhs(args.p0, args.p1)
        ok = lhs == rhs
        _emit(cfg, f"lhs {lhs}\nrhs {rhs}\n{'PASS' if ok else 'FAIL'}",
              {"lhs": lhs, "rhs": rhs, "passed": ok})
        return 0 if ok else 1
    if cmd == "spectrum":
        return _spectrum(cfg, args)
    if cmd == "verify":
        return _verify(cfg, args)

    ctx = cfg.context()
    if cmd in ("cprod", "qprod"):
        a, b = _schubert(ctx, args.p0), _schubert(ctx, args.p1)
        res = cup_product(a, b) if cmd == "cprod" else qprod(a, b)
        _emit(cfg, format_class(res), class_to_json(res))
    elif cmd == "conj":
        res = conj(_schubert(ctx, args.p0))
        _emit(cfg, format_class(res), class_to_json(res))
    elif cmd == "dual":
        _schubert(ctx, args.p0)
        d = poincare_dual(args.p0, ctx)
        _emit(cfg, format_partition(d), list(d))
    elif cmd == "gw":
        v = gw(*(_schubert(ctx, p) for p in (args.p0, args.p1, args.p2)))
        _emit(cfg, format_coeff(v), f"{v.numerator}/{v.denominator}")
    elif cmd == "annp":
        rep = annihilator_check(ctx)
        q = ann_p(ctx)
        _emit(cfg, f"kernel dimension {q.kernel_dim}\nrank {q.gram_rank}\n"
                   f"{'PASS' if rep.passed else 'FAIL'} {rep.name}: {rep.detail}",
              {"ctx": {"k": ctx.k, "n": ctx.n}, "kernel_dim": q.kernel_dim, "rank": q.gram_rank,
               "gs_dim": ctx.gs_dim, "passed": rep.passed})
        return 0 if rep.passed else 1
    elif cmd == "reduce":
        red = reduce_to_gs(_schubert(ctx, args.p0))
        _emit(cfg, _format_combo(red), _combo_json(ctx, red))
    elif cmd == "psi":
        lam = args.p0
        combo = psi(lam, ctx) if in_gs(lam, ctx) else psi_of(reduce_to_gs(_schubert(ctx, lam)), ctx)
        text = _format_combo(combo).replace("S[", "v[")
        _emit(cfg, text, _combo_json(ctx, combo))
    elif cmd == "positivity-report":
        rep = positivity_experiment(ctx)
        lines = []
        for lam, red, vec, ok in rep.rows:
            lines.append(f"{'positive' if ok else 'NEGATIVE'} S{format_partition(lam)} -> "
                         + _format_combo(vec).replace("S[", "v["))
        lines.append(f"all nonnegative: {rep.all_nonnegative}; "
                     f"denominators seen: {sorted(rep.denominators) or [1]}")
        _emit(cfg, "\n".join(lines), {
            "ctx": {"k": ctx.k, "n": ctx.n},
            "all_nonnegative": rep.all_nonnegative,
            "rows": [{"partition": list(lam), "nonnegative": ok,
                      "psi": _combo_json(ctx, vec)["terms"]} for lam, red, vec, ok in rep.rows],
        })
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"qschubert: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
