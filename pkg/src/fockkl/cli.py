"""Command line front end.

    fockkl hat --n 3 --r 3 6,2,1           -> 12,6,3
    fockkl dpoly --n 2 --r 2 1,1 2         -> q
    fockkl dmat --n 3 --m 9 --format csv   -> 30 x 30 table
    fockkl verify th2 --n 3 --m 9 --r 3

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on usage or input errors.  Data goes to stdout (or ``--out``), progress
messages to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import fock
from .partitions import Partition, hat, n_core, tilde
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 2 with a one-line diagnostic
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(p: argparse.ArgumentParser, need_m: bool = False) -> None:
    p.add_argument("--n", type=int, required=True, help="the parameter n >= 2")
    p.add_argument("--m", type=int, required=need_m, help="size of the partitions")
    p.add_argument("--r", type=int, help="rank (number of coordinates)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write data to this file instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for batch runs")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fockkl", description="Canonical bases of the level-1 Fock space via affine KL polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("hat", "the n-regular label hat(mu)"), ("tilde", "the shifted label tilde(lambda)"),
                        ("core", "the n-core"), ("ellmu", "stabiliser length l_mu")):
        p = sub.add_parser(name, help=help_)
        _common(p)
        p.add_argument("partition", type=_partition)

    p = sub.add_parser("dpoly", help="a single entry d_{lambda,mu}(q)")
    _common(p)
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("--route", choices=("tilt", "r"), default="tilt",
                   help="tilt: parabolic KL at rank r; r: the level -n sum for the conjugate pair")

    for name in ("dmat", "emat"):
        p = sub.add_parser(name, help=f"the {name[0]}-matrix of all partitions of m")
        _common(p, need_m=True)

    p = sub.add_parser("gplus", help="a canonical basis vector G+")
    _common(p)
    p.add_argument("partition", type=_partition, help="column label (or mu with --mu-conj)")
    p.add_argument("--mu-conj", action="store_true", help="the column label is the conjugate of the argument")
    p.add_argument("--route", choices=("tilt", "r"), default="r")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("scope", choices=SUITES)
    _common(p)
    p.add_argument("--up-to", action="store_true", help="sweep all sizes 0..m instead of m alone")
    return parser


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _rank(args: argparse.Namespace, *parts: Partition) -> int:
    r = args.r if args.r is not None else max([2] + [p.length for p in parts])
    if any(p.length > r for p in parts):
        raise ValueError(f"partition has more than r={r} parts")
    return r


def _run(args: argparse.Namespace) -> int:
    n = args.n
    if n < 2:
        raise ValueError("--n must be at least 2")
    if args.r is not None and args.r < 2:
        raise ValueError("--r must be at least 2")
    if args.jobs < 1:
        raise ValueError("--jobs must be positive")
    cmd = args.command

    if cmd in ("hat", "tilde", "core", "ellmu"):
        p = args.partition
        if cmd == "core":
            value: object = n_core(p, n)
        else:
            r = _rank(args, p)
            value = {"hat": hat, "tilde": tilde, "ellmu": fock.ell_mu}[cmd](p, n, r)
        if args.format == "json":
            _emit(args, json.dumps({"command": cmd, "input": str(p), "value": str(value)}))
        else:
            _emit(args, str(value))
        return EXIT_OK

    if cmd == "dpoly":
        lam, mu = args.lam, args.mu
        r = _rank(args, lam, mu)
        if args.route == "tilt":
            v = fock.d_poly(lam, mu, n, r)
        else:
            lc, mc = lam.conjugate(), mu.conjugate()
            v = fock.d_poly_via_r(lc, mc, n, max([2, r, lc.length, mc.length]))
        if args.format == "json":
            _emit(args, json.dumps({"lambda": str(lam), "mu": str(mu), "poly": str(v), "terms": v.to_json()}))
        else:
            _emit(args, str(v))
        return EXIT_OK

    if cmd in ("dmat", "emat"):
        m = args.m
        if m < 0:
            raise ValueError("--m must be nonnegative")
        build = fock.d_matrix if cmd == "dmat" else fock.e_matrix
        mat = build(m, n, args.r, progress=_progress)
        if args.format == "csv":
            _emit(args, mat.to_csv())
        elif args.format == "json":
            _emit(args, json.dumps(mat.to_json(), indent=2))
        else:
            _emit(args, mat.to_text())
        return EXIT_OK

    if cmd == "gplus":
        mu = args.partition if args.mu_conj else args.partition.conjugate()
        r = _rank(args, mu)
        vec = fock.gplus_vector(mu, n, r, route=args.route)
        if args.format == "json":
            _emit(args, json.dumps(vec.to_json(), indent=2))
        elif args.format == "csv":
            _emit(args, "partition,poly\n" + "".join(f"\"{e['partition']}\",{e['poly']}\n" for e in vec.to_json()))
        else:
            _emit(args, "\n".join(f"{e['partition']}\t{e['poly']}" for e in vec.to_json()))
        return EXIT_OK

    if cmd == "verify":
        if args.m is None and args.scope != "recursion":
            raise ValueError(f"verify {args.scope} needs --m")
        rep = run_suite(args.scope, args.m or 0, n, args.r, up_to=args.up_to, jobs=args.jobs, progress=_progress)
        if args.format == "json":
            _emit(args, json.dumps(rep.to_json(), indent=2))
        else:
            _emit(args, rep.to_text())
        return EXIT_OK if rep.ok else EXIT_FAIL

    raise UsageError(f"unknown command {cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        return _run(args)
    except (UsageError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"fockkl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
