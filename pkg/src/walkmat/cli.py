"""Command-line entry point: ``walkmat <command> ...``.

Graph arguments are graph6 strings; ``-i FILE`` reads one graph6 per line
(``-i -`` reads standard input). Exit status is 0 exactly when every emitted
certificate passes and no input failed to parse.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator

from . import dgs, identities, spectral
from .graphs import Graph, Graph6Error, a0, char_poly, graph6_decode, graph6_encode, rooted_product_path, two_adic_valuation, walk_det


class UsageError(Exception):
    pass


def parse_m_range(text: str) -> list[int]:
    """``"lo..hi"`` inclusive, or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


def parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _open_lines(path: str) -> Iterable[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def _graphs(args) -> Iterator[Graph]:
    texts = list(args.graphs)
    if args.input:
        texts.extend(line.strip() for line in _open_lines(args.input) if line.strip())
    if not texts:
        raise UsageError("no graphs given (pass graph6 strings or -i FILE)")
    for text in texts:
        yield graph6_decode(text)


def _ms(args) -> list[int]:
    if args.m_range is not None:
        return args.m_range
    if args.m is not None:
        return [args.m]
    raise UsageError("one of --m or --m-range is required")


def _emit(obj: dict, fmt: str, human: str | None = None) -> None:
    if fmt == "human" and human is not None:
        print(human)
    else:
        print(json.dumps(obj, separators=(",", ":")))


# commands -------------------------------------------------------------------

def cmd_walk_det(args) -> int:
    ok = True
    for G in _graphs(args):
        d = walk_det(G)
        modulus = 2 ** (G.n // 2)
        divisible = d % modulus == 0
        ok &= divisible
        v2 = two_adic_valuation(d)
        _emit({"graph6": graph6_encode(G), "n": G.n, "walk_det": str(d), "v2": v2,
               "divisible": divisible},
              args.format,
              f"{graph6_encode(G)}\tdet W = {d}\tv2 = {'inf' if v2 is None else v2}\t"
              f"2^{G.n // 2} | det W: {'yes' if divisible else 'NO'}")
    return 0 if ok else 1


def cmd_charpoly(args) -> int:
    for G in _graphs(args):
        p = char_poly(G)
        _emit({"graph6": graph6_encode(G), "charpoly": [str(c) for c in p.coeffs]},
              args.format, f"{graph6_encode(G)}\t{p}")
    return 0


def cmd_a0(args) -> int:
    for G in _graphs(args):
        c = a0(G)
        _emit({"graph6": graph6_encode(G), "a0": str(c)}, args.format, f"{graph6_encode(G)}\t{c}")
    return 0


def cmd_rooted_product(args) -> int:
    m = args.m
    if m is None or m < 1:
        raise UsageError("--m must be given and at least 1")
    for G in _graphs(args):
        if G.n * m > args.max_vertices:
            raise UsageError(f"product would have {G.n * m} vertices, above --max-vertices")
        H = rooted_product_path(G, m)
        _emit({"graph6": graph6_encode(H), "n": H.n, "source": graph6_encode(G), "m": m},
              args.format, graph6_encode(H))
    return 0


def cmd_verify(args) -> int:
    ok = True
    ms = _ms(args)
    if args.identity in identities.GRAPH_IDENTITIES:
        func = identities.GRAPH_IDENTITIES[args.identity]
        lo = 2 if args.identity == "theorem" else 1
        if min(ms) < lo:
            raise UsageError(f"{args.identity} needs m >= {lo}")
        for G in _graphs(args):
            for m in ms:
                if G.n * m > args.max_vertices:
                    raise UsageError(f"product would have {G.n * m} vertices, above --max-vertices")
                cert = func(G, m)
                ok &= cert.passed
                print(cert.to_line())
    else:
        func = identities.POLY_IDENTITIES[args.identity]
        if min(ms) < 1:
            raise UsageError("polynomial identities need m >= 1")
        for m in ms:
            if args.t is not None and args.identity != "dilcher":
                cert = func(m, args.t)
            else:
                cert = func(m)
            ok &= cert.passed
            print(cert.to_line())
    return 0 if ok else 1


def cmd_spectral(args) -> int:
    ok = True
    ms = _ms(args)
    for G in _graphs(args):
        formula = spectral.verify_walkdet_eigen_formula(G, args.tol_formula)
        ok &= formula.passed
        for m in ms:
            rep = spectral.verify_eigenvector_lemma(G, m, args.tol)
            ok &= rep.passed
            obj = {"graph6": graph6_encode(G), "m": m, "eigen": rep.as_dict(), "walkdet_formula": formula.as_dict(),
                   "pass": rep.passed and formula.passed}
            human = (f"{graph6_encode(G)} m={m}: eigen residual {rep.eigen_residual:.2e}, "
                     f"sum residual {rep.sum_residual:.2e}, spectrum mismatch {rep.spectrum_mismatch:.2e}, "
                     f"min root gap {rep.min_root_gap:.3g}, walk-det relative error {formula.error:.2e} "
                     f"[{'pass' if obj['pass'] else 'FAIL'}]")
            _emit(obj, args.format, human)
    return 0 if ok else 1


def cmd_dgs_check(args) -> int:
    for G in _graphs(args):
        rep = dgs.fstar_check(G)
        wang = dgs.wang_condition(G, args.factor_budget)
        obj = {**rep.to_json(), "wang": wang.value}
        _emit(obj, args.format,
              f"{rep.graph6}\tn={rep.n}\tdet W={rep.walk_det}\ta0={rep.a0}\t"
              f"F*={'yes' if rep.member else 'no'}\twang={wang.value}")
    return 0


def cmd_dgs_grow(args) -> int:
    ok = True
    for G in _graphs(args):
        try:
            record = dgs.grow_family(G, args.depths, args.max_vertices)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        ok &= record.ok
        if args.format == "human":
            for rep in (r for _, r in record.members):
                print(f"n={rep.n}\t|det W|=2^{two_adic_valuation(rep.walk_det)}\ta0={rep.a0}\t"
                      f"F*={'yes' if rep.member else 'NO'}\t{rep.graph6}")
        else:
            print(json.dumps(record.to_json(), separators=(",", ":")))
    return 0 if ok else 1


SCAN_FIELDS = ["line", "graph6", "n", "n_even", "walk_det", "a0", "member"]


def cmd_scan(args) -> int:
    ok = True
    writer = csv.writer(sys.stdout, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(SCAN_FIELDS)
    for item in dgs.scan_corpus(_open_lines(args.path), args.workers):
        if isinstance(item, dgs.ScanError):
            ok = False
            print(f"line {item.line}: {item.message}", file=sys.stderr)
            continue
        if args.members_only and not item.member:
            continue
        if args.even_only and not item.n_even:
            continue
        if writer:
            d = item.to_json()
            writer.writerow([d[k] for k in SCAN_FIELDS])
        else:
            _emit(item.to_json(), args.format,
                  f"{item.line}\t{item.graph6}\tn={item.n}\tdet W={item.walk_det}\ta0={item.a0}\t"
                  f"F*={'yes' if item.member else 'no'}")
    return 0 if ok else 1


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="walkmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help, fmt="human", formats=("human", "jsonl"), leading=None):
        p = sub.add_parser(name, help=help)
        if leading:
            leading(p)
        p.add_argument("graphs", nargs="*", metavar="GRAPH6")
        p.add_argument("-i", "--input", metavar="FILE", help="graph6 file, one per line ('-' for stdin)")
        p.add_argument("--format", choices=formats, default=fmt)
        p.add_argument("--max-vertices", type=int, default=dgs.DEFAULT_MAX_VERTICES)
        p.set_defaults(func=func)
        return p

    def m_options(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--m", type=int)
        g.add_argument("--m-range", type=parse_m_range, metavar="LO..HI")

    graph_cmd("walk-det", cmd_walk_det, "det W(G), its 2-adic valuation and the 2^(n/2) divisibility check")
    graph_cmd("charpoly", cmd_charpoly, "characteristic polynomial, lowest degree first")
    graph_cmd("a0", cmd_a0, "constant term of the characteristic polynomial")
    p = graph_cmd("rooted-product", cmd_rooted_product, "graph6 of G o P_m")
    p.add_argument("--m", type=int, required=True)

    names = sorted({**identities.GRAPH_IDENTITIES, **identities.POLY_IDENTITIES})
    p = graph_cmd("verify", cmd_verify, "run an identity verifier, one JSON certificate per line",
                  fmt="jsonl", formats=("jsonl",),
                  leading=lambda p: p.add_argument("identity", choices=names))
    m_options(p)
    p.add_argument("--t", type=parse_int_list, metavar="T1,T2,...", help="override the t samples")

    p = graph_cmd("spectral", cmd_spectral, "floating-point residuals of the eigenvector lemmas")
    m_options(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--tol-formula", type=float, default=1e-6)

    p = graph_cmd("dgs-check", cmd_dgs_check, "F* membership and Wang's odd/square-free condition")
    p.add_argument("--factor-budget", type=int, default=100_000)

    p = graph_cmd("dgs-grow", cmd_dgs_grow, "iterate G o P_m1 o P_m2 ... checking F* at each step",
                  fmt="jsonl")
    p.add_argument("--depths", type=parse_int_list, default=[], metavar="M1,M2,...")

    p = sub.add_parser("scan", help="F* report for every graph6 line of a file")
    p.add_argument("path", help="graph6 file ('-' for stdin)")
    p.add_argument("--format", choices=("jsonl", "csv", "human"), default="jsonl")
    p.add_argument("--workers", type=int, default=None, help="default: $WALKMAT_WORKERS or 1")
    p.add_argument("--members-only", action="store_true")
    p.add_argument("--even-only", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, ValueError) as exc:
        print(f"walkmat {args.command}: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"walkmat {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
