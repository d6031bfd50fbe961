"""Command-line entry point: ``hurwitz <command> [options]``.

Exit status: 0 on success, 1 when a computation is refused (caps, poles,
under-truncation), 2 on usage errors.  Reports go to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from math import factorial

from . import cayley, characters
from .coefficients import CoefficientKey, f_coefficient, frobenius_hurwitz
from .content import HypergeometricParams, content_product
from .errors import RefusalError, UsageError
from .partitions import Partition, double_genus
from .selftest import run_selftest
from .series import tau_expand


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"entries must be non-negative, got {text!r}")
    return values


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/2, got {text!r}") from None


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(tok) for tok in text.split(",")) if text.strip() else ()


def _profiles(text: str) -> list[Partition]:
    return [_partition(tok) for tok in text.split(";")]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cache-dir", help="character-table cache directory (overrides HURWITZ_CACHE_DIR)")
    common.add_argument("--brute-cap", type=int, default=cayley.DEFAULT_BRUTE_CAP,
                        help="largest n for brute-force enumeration (default %(default)s)")

    key = argparse.ArgumentParser(add_help=False)
    key.add_argument("--mu", type=_partition, required=True, help='profile over 0, e.g. "2,1"')
    key.add_argument("--nu", type=_partition, required=True, help="profile over infinity")
    key.add_argument("--c", type=_int_list, default=(), help="strict colengths c_1,...,c_l")
    key.add_argument("--d", type=_int_list, default=(), help="coloured colength totals d_1,...,d_m")

    parser = argparse.ArgumentParser(prog="hurwitz", description="Exact composite Hurwitz numbers and monotone path counts.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("coeff", parents=[common, key], help="expansion coefficient F^c_d(mu, nu)")
    p = sub.add_parser("hurwitz", parents=[common], help="Hurwitz number by Frobenius' formula")
    p.add_argument("--profiles", type=_profiles, required=True, help='";"-separated partitions, e.g. "2;2"')
    p.add_argument("--base-genus", type=int, default=0)
    sub.add_parser("paths", parents=[common, key], help="brute-force count of band-monotone paths")
    p = sub.add_parser("expand", parents=[common], help="power-sum table of the tau-function")
    p.add_argument("--l", type=int, default=0, help="number of w variables")
    p.add_argument("--m", type=int, default=0, help="number of z variables")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--caps", type=_int_list, default=(3,), help="degree cap for all w,z, or one per variable")
    p.add_argument("--mu", type=_partition, help="with --nu: print only this coefficient")
    p.add_argument("--nu", type=_partition)
    p.add_argument("--c", type=_int_list, default=None, help="w exponents of the extracted coefficient")
    p.add_argument("--d", type=_int_list, default=None, help="z exponents of the extracted coefficient")
    p = sub.add_parser("weight", parents=[common], help="content product r_lambda(N) at rational parameters")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--q", type=_rational, default=Fraction(1))
    p.add_argument("--w", type=_rational_list, default=())
    p.add_argument("--z", type=_rational_list, default=())
    p.add_argument("--N", type=int, default=0)
    p = sub.add_parser("table", parents=[common], help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table-cap", type=int, default=characters.DEFAULT_TABLE_CAP)
    p = sub.add_parser("selftest", parents=[common], help="run the verification sweeps")
    p.add_argument("--scope", choices=("quick", "full"), default="quick")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args, payload, rows=None) -> str:
    if args.format == "json":
        return json.dumps(payload) + "\n"
    if rows is None:
        return _csv(list(payload), [list(payload.values())])
    return _csv(*rows)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        os.environ[characters.CACHE_ENV] = args.cache_dir
    try:
        out, ok = _dispatch(args)
    except RefusalError as exc:
        print(f"hurwitz: refused: {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"hurwitz: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0 if ok else 1


def _dispatch(args) -> tuple[str, bool]:
    cmd = args.command
    if cmd == "coeff":
        key = CoefficientKey(args.mu, args.nu, args.c, args.d)
        f = f_coefficient(key)
        nf = f * factorial(key.n)
        return _emit(args, {"F": str(f), "nF": int(nf), "genus2": double_genus(key)}), True
    if cmd == "hurwitz":
        h = frobenius_hurwitz(args.profiles, args.base_genus)
        return _emit(args, {"H": str(h)}), True
    if cmd == "paths":
        CoefficientKey(args.mu, args.nu, args.c, args.d)  # validates weights
        bands = cayley.BandSpec.from_cd(args.c, args.d)
        count = cayley.count_monotone_pairs(args.mu, args.nu, bands, cap=args.brute_cap)
        return _emit(args, {"count": count}), True
    if cmd == "expand":
        tables = tau_expand(args.l, args.m, args.n_max, args.caps)
        if args.mu is not None or args.nu is not None:
            if args.mu is None or args.nu is None:
                raise UsageError("--mu and --nu must be given together")
            n = args.mu.weight
            if n not in tables:
                raise UsageError(f"weight {n} is outside 1..{args.n_max}")
            value = tables[n].coefficient(args.mu, args.nu, args.c or (0,) * args.l, args.d or (0,) * args.m)
            return _emit(args, {"F": str(value)}), True
        payload = [t.to_json() for t in tables.values()]
        rows = [
            (t["n"], e["mu"], e["nu"], " ".join(map(str, c["exp"])), c["val"])
            for t in payload for e in t["entries"] for c in e["coeffs"]
        ]
        return _emit(args, payload, (["n", "mu", "nu", "exp", "val"], rows)), True
    if cmd == "weight":
        params = HypergeometricParams(args.q, args.w, args.z)
        return _emit(args, {"r": str(content_product(params, args.lam, args.N))}), True
    if cmd == "table":
        table = characters.character_table(args.n, cap=args.table_cap)
        payload = table.to_json()
        rows = [[str(lam)] + list(row) for lam, row in zip(table.partitions, table.table)]
        return _emit(args, payload, (["lambda"] + [str(mu) for mu in table.partitions], rows)), True
    if cmd == "selftest":
        results = run_selftest(args.scope, workers=args.workers)
        payload = {"scope": args.scope, "passed": all(r.passed for r in results),
                   "suites": [r.to_json() for r in results]}
        rows = [(r.name, r.instances, r.failure_count, "pass" if r.passed else "FAIL") for r in results]
        return _emit(args, payload, (["suite", "instances", "failures", "status"], rows)), payload["passed"]
    raise UsageError(f"unknown command {cmd!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
