"""Command-line front end.

Every subcommand writes one record per evaluation (CSV with a header row, or
a JSON list) and every number carries an ``err`` field. The exit status is 0
iff all checks the command performs pass; bad input exits with status 2.

Complex literals: ``a``, ``ai``, ``a+bi`` or ``a-bi`` with decimal reals,
e.g. ``2``, ``-3``, ``14.1i``, ``0.5+14.134725i``.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence

from .characters import enumerate_characters, euler_phi
from .errors import ZetakitError
from .lfunc.dirichlet import dirichlet_L
from .lfunc.gamma import EULER_GAMMA
from .lfunc.hurwitz import hurwitz, hurwitz_neg_int
from .lfunc.scans import T_MAX_CAP, scan_critical_line
from .lfunc.series import euler_product_zeta, zeta_euler_maclaurin
from .lfunc.zeta import completed_zeta, riemann_zeta, zeta_even_value
from .primes import chebyshev_progression_partial, count_primes_mod, infinitude_witness
from .theta import jacobi_theta

__all__ = ["parse_complex", "build_parser", "main"]

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL = re.compile(rf"^([+-]?{_NUM})$")
_IMAG = re.compile(rf"^([+-]?{_NUM})i$")
_FULL = re.compile(rf"^([+-]?{_NUM})([+-]{_NUM})i$")

PRODUCT_P = 10**6
AUTO_EM_ABOVE = 20.0  # |Im s| beyond which "auto" switches to Euler-Maclaurin


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    m = _REAL.match(t)
    if m:
        return complex(float(m.group(1)), 0.0)
    m = _IMAG.match(t)
    if m:
        return complex(0.0, float(m.group(1)))
    m = _FULL.match(t)
    if m:
        return complex(float(m.group(1)), float(m.group(2)))
    raise argparse.ArgumentTypeError(f"not a complex literal: {text!r} (expected a, ai, a+bi or a-bi)")


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _fmt_complex(z: complex) -> str:
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r}i"


def _row(inputs: Dict, value: complex, err: float, method: str, **extra) -> Dict:
    row = dict(inputs)
    row.update(re=float(value.real), im=float(complex(value).imag), err=float(err), method=method)
    row.update(extra)
    return row


def _fan_out(fn: Callable, items: Sequence, jobs: int) -> List:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))  # map keeps input order


# ---- subcommands -------------------------------------------------------------
# each returns (rows, ok)


def zeta_by_method(s: complex, method: str = "auto"):
    if method == "auto":
        # the theta route loses relative accuracy high up the critical strip
        method = "euler-maclaurin" if abs(s.imag) > AUTO_EM_ABOVE else "theta"
    if method == "theta":
        return riemann_zeta(s)
    if method == "euler-maclaurin":
        return zeta_euler_maclaurin(s)
    return euler_product_zeta(s, PRODUCT_P)


def cmd_zeta(args):
    def one(s):
        r = zeta_by_method(s, args.method)
        return _row({"s": _fmt_complex(s)}, r.value, r.err, r.tag)

    return _fan_out(one, args.s, args.jobs), True


def cmd_lfun(args):
    chars = enumerate_characters(args.q)
    if not 0 <= args.chi < len(chars):
        raise ZetakitError(f"character index must lie in [0, {len(chars) - 1}] for q = {args.q}")
    chi = chars[args.chi]

    def one(s):
        r = dirichlet_L(chi, s)
        return _row({"q": args.q, "chi": args.chi, "s": _fmt_complex(s)}, r.value, r.err, r.tag)

    return _fan_out(one, args.s, args.jobs), True


def cmd_theta(args):
    def one(tau):
        r = jacobi_theta(tau, tol=min(args.tol, 1e-14))
        return _row({"tau": _fmt_complex(tau)}, r.value, r.tail_bound, "direct-series", terms=r.truncation_N)

    return _fan_out(one, args.tau, args.jobs), True


def fe_grid(n: int) -> List[complex]:
    """n deterministic points with Re in [-2, 3], |Im| <= 10, kept 0.1 away from 0 and 1."""
    golden = (math.sqrt(5) - 1) / 2
    pts = []
    i = 0
    while len(pts) < n:
        s = complex(-2 + 5 * ((i + 0.5) / n % 1.0), -10 + 20 * ((i * golden) % 1.0))
        i += 1
        if abs(s) < 0.1 or abs(s - 1) < 0.1:
            continue
        pts.append(s)
    return pts


def cmd_fe_check(args):
    # Euler-Maclaurin Lambda: the theta-route value is symmetric by construction
    def one(s):
        a = completed_zeta(s, method="euler-maclaurin")
        b = completed_zeta(1 - s, method="euler-maclaurin")
        res = abs(a.value - b.value)
        return _row({"s": _fmt_complex(s)}, complex(res), a.err + b.err, "euler-maclaurin", passed=res <= args.tol)

    rows = _fan_out(one, fe_grid(args.grid), args.jobs)
    return rows, all(r["passed"] for r in rows)


def cmd_zeros(args):
    scan = scan_critical_line(args.t_max)
    rows = []
    for t in scan.zeros:
        z = zeta_by_method(complex(0.5, t))
        rows.append(_row({"t": t}, z.value, z.err, z.tag))
    ok = scan.max_imag <= args.tol
    rows.append(_row({"t": "max|Im Lambda|"}, complex(scan.max_imag), 0.0, "euler-maclaurin", passed=ok))
    return rows, ok


def cmd_primes(args):
    q, a, X = args.q, args.a, args.X
    inputs = {"op": args.op, "q": q, "a": a, "X": X}
    if args.op == "count":
        return [_row(inputs, complex(count_primes_mod(X, q, a)), 0.0, "direct-series")], True
    if args.op == "witness":
        return [_row(inputs, complex(infinitude_witness(q, a, X)), 0.0, "direct-series")], True
    S = chebyshev_progression_partial(q, a, X)
    gap = S - math.log(X) / euler_phi(q)
    return [_row(inputs, complex(S), 0.0, "direct-series", discrepancy=gap)], True


def special_rows(tol: float) -> List[Dict]:
    rows = []

    def add(name, r, expected, check_tol):
        d = abs(r.value - expected)
        rows.append(_row({"name": name}, r.value, r.err, r.tag, expected=float(expected), passed=d <= check_tol))

    for k in range(1, 6):
        add(f"zeta({2 * k})", zeta_euler_maclaurin(2 * k), zeta_even_value(k), max(tol, 1e-12))
    for k in range(1, 4):
        add(f"zeta({-2 * k})", riemann_zeta(-2 * k), 0.0, max(tol, 1e-10))
    add("zeta(0)", riemann_zeta(0), -0.5, tol)
    add("zeta(1)", riemann_zeta(1), 0.5 * (EULER_GAMMA - math.log(4 * math.pi)), max(tol, 1e-8))
    for alpha in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        for k in range(1, 4):
            exact = float(hurwitz_neg_int(alpha, k))
            add(f"hurwitz({alpha},{-k})", hurwitz(alpha, -k), exact, max(tol, 1e-7))
    return rows


def cmd_special(args):
    rows = special_rows(args.tol)
    return rows, all(r["passed"] for r in rows)


# ---- plumbing ----------------------------------------------------------------


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ZETAKIT_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=1e-9, help="check tolerance (default 1e-9)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    common.add_argument("--jobs", "-j", type=int, default=None, help="worker threads (default $ZETAKIT_THREADS or 1)")

    p = argparse.ArgumentParser(
        prog="zetakit",
        description=__doc__.split("\n\n")[0],
        epilog="Complex literals: a, ai, a+bi, a-bi (decimal reals), e.g. 0.5+14.134725i.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    z = sub.add_parser("zeta", parents=[common], help="evaluate zeta(s)")
    z.add_argument("s", nargs="+", type=parse_complex)
    z.add_argument("--method", choices=("auto", "theta", "euler-maclaurin", "product"), default="auto")
    z.set_defaults(func=cmd_zeta)

    lf = sub.add_parser("lfun", parents=[common], help="evaluate L(chi, s); chi indexes enumerate_characters(q)")
    lf.add_argument("q", type=int)
    lf.add_argument("chi", type=int)
    lf.add_argument("s", nargs="+", type=parse_complex)
    lf.set_defaults(func=cmd_lfun)

    th = sub.add_parser("theta", parents=[common], help="evaluate the Jacobi theta function")
    th.add_argument("tau", nargs="+", type=parse_complex)
    th.set_defaults(func=cmd_theta)

    fe = sub.add_parser("fe-check", parents=[common], help="sweep |Lambda(s) - Lambda(1-s)| over a grid")
    fe.add_argument("--grid", type=int, default=50)
    fe.set_defaults(func=cmd_fe_check)

    ze = sub.add_parser("zeros", parents=[common], help=f"zeros on the critical line up to t_max <= {T_MAX_CAP:g}")
    ze.add_argument("t_max", type=float)
    ze.set_defaults(func=cmd_zeros)

    pr = sub.add_parser("primes", parents=[common], help="prime counts, witnesses and Chebyshev sums in a progression")
    pr.add_argument("op", choices=("count", "witness", "divergence"))
    pr.add_argument("q", type=int)
    pr.add_argument("a", type=int)
    pr.add_argument("X", type=int)
    pr.set_defaults(func=cmd_primes)

    sp = sub.add_parser("special", parents=[common], help="table of special values with checks")
    sp.set_defaults(func=cmd_special)
    return p


def _write(rows: List[Dict], fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(rows, stream, indent=1)
        stream.write("\n")
        return
    fields: List[str] = []
    for r in rows:
        fields.extend(k for k in r if k not in fields)
    w = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})


def _protect_negative_literals(argv: List[str]) -> List[str]:
    # argparse only accepts plain negative numbers as values; a leading space
    # keeps "-1+2i" from being read as an option (parse_complex strips it)
    out = []
    for tok in argv:
        if tok.startswith("-") and not _REAL.match(tok):
            try:
                parse_complex(tok)
            except argparse.ArgumentTypeError:
                pass
            else:
                tok = " " + tok
        out.append(tok)
    return out


def main(argv: Iterable[str] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_protect_negative_literals(argv))
    if args.jobs is None:
        args.jobs = _default_jobs()
    try:
        rows, ok = args.func(args)
    except (ZetakitError, ValueError) as exc:
        print(f"zetakit {args.command}: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", newline="") as fh:
            _write(rows, args.format, fh)
    else:
        _write(rows, args.format, sys.stdout)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
