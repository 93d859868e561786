"""Command-line front end: ``permastat <command> [flags]``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 computation
error. Errors are reported as one JSON object on stderr. Output is
deterministic; ``--timestamp`` adds a wall-clock field on request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional, Sequence

from .asymptotics import Regime, alpha_rule, convergence_probe, is_conjectural, limit_partition
from .errors import (
    LengthExceedsAlphabet,
    NonIntegerAlpha,
    PadLengthTooSmall,
    PermastatError,
    WeightMismatch,
)
from .exactnum import as_rational, fmt_rational
from .moments import ROUTES, MomentQuery, moment_detail, moment_sweep
from .partitions import parse_partition
from .symfunc import JACK_J, JACK_P, SCHUR, monomial_to_jackJ, monomial_to_jackP, monomial_to_schur
from .verify import SUITES

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3

# domain errors that mean the request itself was malformed
_INPUT_ERRORS = (LengthExceedsAlphabet, NonIntegerAlpha, PadLengthTooSmall, WeightMismatch)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _grid(text: str) -> list[Fraction]:
    """Comma list ``1,3/2,4`` or inclusive range ``start:stop:step``."""
    try:
        if ":" in text:
            start, stop, step = (as_rational(t) for t in text.split(":"))
            if step <= 0:
                raise ValueError
            out = []
            x = start
            while x <= stop:
                out.append(x)
                x += step
        else:
            out = [as_rational(t) for t in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from exc
    if not out:
        raise argparse.ArgumentTypeError(f"empty grid {text!r}")
    return out


def _int_grid(text: str) -> list[int]:
    vals = _grid(text)
    if any(v.denominator != 1 or v < 1 for v in vals):
        raise argparse.ArgumentTypeError(f"N values must be positive integers: {text!r}")
    return [int(v) for v in vals]


def _beta(text: str) -> int:
    if text not in ("1", "2", "4"):
        raise argparse.ArgumentTypeError("beta must be 1, 2 or 4")
    return int(text)


def _emit(obj: dict, args) -> None:
    if getattr(args, "timestamp", False):
        obj["timestamp"] = datetime.now(timezone.utc).isoformat()
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _value_fields(v: Fraction) -> dict:
    return {"value": fmt_rational(v), "value_float": float(v)}


# ------------------------------------------------------------ commands

def cmd_moment(args) -> int:
    q = MomentQuery(args.lam, args.alpha, args.beta, args.N, args.route)
    _emit(moment_detail(q).to_json(), args)
    return EXIT_OK


def cmd_expand(args) -> int:
    if args.basis == SCHUR:
        e = monomial_to_schur(args.lam)
        if args.max_length is not None:
            e = e.restrict_length(args.max_length)
    else:
        if args.xi is None:
            raise UsageError(f"--xi is required for basis {args.basis}")
        fn = monomial_to_jackJ if args.basis == JACK_J else monomial_to_jackP
        e = fn(args.lam, args.xi, args.max_length)
    _emit(e.to_json(), args)
    return EXIT_OK


def _regime(args) -> Regime:
    try:
        return Regime.parse(args.regime, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_limit(args) -> int:
    r = _regime(args)
    out = {"lambda": list(args.lam), "regime": r.kind, "p": fmt_rational(r.p),
           "ell": fmt_rational(r.ell)}
    out.update(_value_fields(limit_partition(args.lam, r)))
    out["conjecture"] = is_conjectural(args.lam)
    _emit(out, args)
    return EXIT_OK


def cmd_probe(args) -> int:
    r = _regime(args)
    target = limit_partition(args.lam, r)
    rows = []
    for n, value, dev in convergence_probe(args.lam, args.beta, r, args.N):
        rows.append({"N": n, "alpha": fmt_rational(alpha_rule(n, args.beta, r)),
                     **_value_fields(value),
                     "deviation": fmt_rational(dev), "deviation_float": float(dev),
                     "relative_deviation_float": float(dev / target)})
    out = {"lambda": list(args.lam), "beta": args.beta, "regime": r.kind,
           "p": fmt_rational(r.p), "ell": fmt_rational(r.ell), "limit": fmt_rational(target),
           "limit_float": float(target), "conjecture": is_conjectural(args.lam), "rows": rows}
    _emit(out, args)
    return EXIT_OK


@dataclass(frozen=True)
class SweepConfig:
    lam: tuple
    beta: int
    N: tuple
    alpha_grid: Optional[tuple]
    regime: Optional[Regime]
    output: Optional[str]
    fmt: str = "csv"

    def __post_init__(self):
        if not self.N:
            raise UsageError("N grid is empty")
        if (self.alpha_grid is None) == (self.regime is None):
            raise UsageError("give exactly one of --alpha (grid) or --regime (alpha(N) rule)")
        if self.alpha_grid is not None:
            if len(self.N) != 1:
                raise UsageError("an alpha grid needs a single N")
            if not self.alpha_grid or any(a <= 0 for a in self.alpha_grid):
                raise UsageError("alpha values must be positive")


def run_sweep(cfg: SweepConfig, workers: Optional[int] = None) -> list[tuple]:
    """Rows (alpha_or_N, value) in grid order."""
    if cfg.alpha_grid is not None:
        return moment_sweep(cfg.lam, cfg.beta, cfg.N[0], cfg.alpha_grid, workers)
    rows = []
    for n in cfg.N:
        q = MomentQuery(cfg.lam, alpha_rule(n, cfg.beta, cfg.regime), cfg.beta, n)
        rows.append((n, moment_detail(q).value))
    return rows


def render_sweep(rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{"alpha_or_N": fmt_rational(Fraction(x)), **_value_fields(v)}
                           for x, v in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha_or_N", "value_rational", "value_float"])
    for x, v in rows:
        w.writerow([fmt_rational(Fraction(x)), fmt_rational(v), format(float(v), ".12g")])
    return buf.getvalue()


def _write_atomic(path: str, text: str) -> None:
    # never leave a partial file behind
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sweep-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_sweep(args) -> int:
    regime = Regime.parse(args.regime, args.ell) if args.regime else None
    cfg = SweepConfig(args.lam, args.beta, tuple(args.N),
                      tuple(args.alpha) if args.alpha else None, regime, args.output, args.format)
    text = render_sweep(run_sweep(cfg, args.workers), cfg.fmt)
    if cfg.output:
        _write_atomic(cfg.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = SUITES[args.level]()
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks ok")
    return EXIT_VERIFY if failed else EXIT_OK


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="permastat", description="Exact moments of Jacobi-ensemble eigenvalues.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--timestamp", action="store_true", help="add a wall-clock field")

    m = sub.add_parser("moment", help="exact <T_1^l1 ... T_N^lN>")
    m.add_argument("--lambda", dest="lam", type=_partition, required=True)
    m.add_argument("--alpha", type=_rational, required=True)
    m.add_argument("--beta", type=_beta, required=True)
    m.add_argument("--N", dest="N", type=int, required=True)
    m.add_argument("--route", choices=ROUTES, default="auto")
    common(m)
    m.set_defaults(func=cmd_moment)

    e = sub.add_parser("expand", help="expand m_lambda in another basis")
    e.add_argument("--basis", choices=(SCHUR, JACK_J, JACK_P), required=True)
    e.add_argument("--xi", type=_rational)
    e.add_argument("--lambda", dest="lam", type=_partition, required=True)
    e.add_argument("--max-length", type=int)
    common(e)
    e.set_defaults(func=cmd_expand)

    lim = sub.add_parser("limit", help="large-N limit of a beta = 2 moment")
    lim.add_argument("--lambda", dest="lam", type=_partition, required=True)
    lim.add_argument("--regime", required=True, help="p<1, p=1, p>1 or p=<rational>")
    lim.add_argument("--ell", type=_rational, default=Fraction(1))
    common(lim)
    lim.set_defaults(func=cmd_limit)

    pr = sub.add_parser("probe", help="finite-N deviation from the limit")
    pr.add_argument("--lambda", dest="lam", type=_partition, required=True)
    pr.add_argument("--beta", type=_beta, default=2)
    pr.add_argument("--ell", type=_rational, default=Fraction(1))
    pr.add_argument("--regime", default="p=1")
    pr.add_argument("--N", dest="N", type=_int_grid, required=True)
    common(pr)
    pr.set_defaults(func=cmd_probe)

    sw = sub.add_parser("sweep", help="tabulate moments over an alpha grid or an N grid")
    sw.add_argument("--lambda", dest="lam", type=_partition, required=True)
    sw.add_argument("--beta", type=_beta, required=True)
    sw.add_argument("--N", dest="N", type=_int_grid, required=True)
    sw.add_argument("--alpha", type=_grid, help="alpha grid: 1,2,5/2 or start:stop:step")
    sw.add_argument("--regime", help="alpha(N) rule, e.g. p=1 with --ell")
    sw.add_argument("--ell", type=_rational, default=Fraction(1))
    sw.add_argument("--output", help="file path (default stdout)")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--workers", type=int, default=None)
    sw.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--level", choices=tuple(SUITES), default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except _INPUT_ERRORS as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_USAGE)
    except PermastatError as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_COMPUTE)
    except ValueError as exc:
        # validation failures from the domain types
        return _fail("invalid-input", str(exc), EXIT_USAGE)
    except (ArithmeticError, RecursionError, MemoryError) as exc:
        return _fail("computation", f"{type(exc).__name__}: {exc}", EXIT_COMPUTE)


if __name__ == "__main__":
    sys.exit(main())
