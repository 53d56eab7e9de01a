"""F* membership, Wang's odd-and-square-free test, and iterated family growth.

A graph of even order ``n`` is in F* when ``|det W| = 2^(n/2)`` and the constant
term of its characteristic polynomial is ``+-1``. Such graphs are determined by
their generalized spectrum, and F* is closed under rooted products with paths.
"""
from __future__ import annotations

import enum
import os
from math import gcd
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Sequence

from sympy import isprime, perfect_power
from sympy.ntheory import pollard_rho

from .graphs import Graph, Graph6Error, a0, graph6_decode, graph6_encode, rooted_product_path, walk_det
from .identities import Certificate, _Timer

DEFAULT_MAX_VERTICES = 200
TRIAL_DIVISION_LIMIT = 10**6


@dataclass
class FStarReport:
    graph6: str
    n: int
    n_even: bool
    walk_det: int
    a0: int
    member: bool
    line: int | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["walk_det"] = str(self.walk_det)
        d["a0"] = str(self.a0)
        if self.line is None:
            del d["line"]
        return d


@dataclass
class ScanError:
    line: int
    message: str

    def to_json(self) -> dict:
        return {"line": self.line, "error": self.message}


def fstar_check(G: Graph) -> FStarReport:
    d = walk_det(G)
    c = a0(G)
    even = G.n % 2 == 0
    member = even and abs(d) == 2 ** (G.n // 2) and abs(c) == 1
    return FStarReport(graph6_encode(G), G.n, even, d, c, member)


class WangStatus(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


def odd_squarefree_status(d: int, factor_budget: int = 100_000) -> WangStatus:
    """Whether ``d`` is odd and square-free, or ``UNKNOWN`` if factoring runs out of budget.

    Trial division up to 10**6, then Pollard rho capped at ``factor_budget``
    steps per split attempt.
    """
    d = abs(d)
    if d == 0 or d % 2 == 0:
        return WangStatus.FAILS
    p = 3
    while p <= TRIAL_DIVISION_LIMIT and p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return WangStatus.FAILS
        p += 2
    if d == 1 or isprime(d):
        return WangStatus.HOLDS

    # every remaining prime factor exceeds the trial-division limit
    pending = [d]
    while pending:
        r = pending.pop()
        if r == 1 or isprime(r):
            continue
        if perfect_power(r):
            return WangStatus.FAILS
        f = pollard_rho(r, retries=5, max_steps=factor_budget, seed=1234)
        if f is None:
            return WangStatus.UNKNOWN
        g = r // f
        if gcd(f, g) > 1:
            return WangStatus.FAILS
        pending.extend((f, g))
    return WangStatus.HOLDS


def wang_condition(G: Graph, factor_budget: int = 100_000) -> WangStatus:
    """Sufficient DGS condition: ``det W(G) / 2^(n//2)`` odd and square-free."""
    d = walk_det(G)
    q, r = divmod(d, 2 ** (G.n // 2))
    if d == 0 or r:
        return WangStatus.FAILS
    return odd_squarefree_status(q, factor_budget)


def verify_constant_term_preservation(G: Graph, m: int) -> Certificate:
    """If ``a0(G) = +-1`` then ``a0(G o P_m) = +-1``; otherwise the certificate is skipped."""
    if m < 2:
        raise ValueError("m must be at least 2")
    with _Timer() as tm:
        base = a0(G)
        if abs(base) != 1:
            lhs, ok, skipped = None, False, True
        else:
            lhs = a0(rooted_product_path(G, m))
            ok, skipped = abs(lhs) == 1, False
    return Certificate("constant_term", {"graph6": graph6_encode(G), "m": m},
                       lhs, base, None, ok, tm.ms, skipped=skipped)


@dataclass
class FamilyRecord:
    seed: str
    depths: list[int]
    members: list[tuple[str, FStarReport]] = field(default_factory=list)
    counterexample: Certificate | None = None

    def to_json(self) -> dict:
        d = {
            "seed": self.seed,
            "depths": self.depths,
            "members": [rep.to_json() for _, rep in self.members],
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.to_json()
        return d

    @property
    def ok(self) -> bool:
        return self.counterexample is None and all(rep.member for _, rep in self.members)


def grow_family(G: Graph, depths: Sequence[int], max_vertices: int = DEFAULT_MAX_VERTICES) -> FamilyRecord:
    """Apply ``o P_m`` for each ``m`` in ``depths`` in turn, checking F* at every step.

    Stops at the first step that leaves F* and stores a failing certificate.
    """
    depths = list(depths)
    if any(m < 2 for m in depths):
        raise ValueError("every depth must be at least 2")
    total = G.n
    for m in depths:
        total *= m
    if total > max_vertices:
        raise ValueError(f"family would reach {total} vertices, above the cap of {max_vertices}")
    rep = fstar_check(G)
    if not rep.member:
        raise ValueError(f"seed {rep.graph6} is not in F*")
    record = FamilyRecord(rep.graph6, depths, [(rep.graph6, rep)])
    H = G
    for m in depths:
        with _Timer() as tm:
            H = rooted_product_path(H, m)
            rep = fstar_check(H)
        record.members.append((rep.graph6, rep))
        if not rep.member:
            record.counterexample = Certificate(
                "fstar_closure", {"graph6": record.members[-2][0], "m": m},
                rep.walk_det, 2 ** (H.n // 2), None, False, tm.ms, extra={"a0": str(rep.a0)})
            break
    return record


def _scan_line(item: tuple[int, str]) -> FStarReport | ScanError:
    lineno, text = item
    try:
        G = graph6_decode(text)
    except Graph6Error as exc:
        return ScanError(lineno, str(exc))
    rep = fstar_check(G)
    rep.line = lineno
    return rep


def default_workers() -> int:
    return max(1, int(os.environ.get("WALKMAT_WORKERS", "1")))


def scan_corpus(lines: Iterable[str | bytes], workers: int | None = None) -> Iterator[FStarReport | ScanError]:
    """One report per non-blank line, in input order; parse failures become ``ScanError``."""
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("workers must be at least 1")
    items = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw
        text = text.strip()
        if text:
            items.append((lineno, text))
    if workers == 1 or len(items) < 2:
        for it in items:
            yield _scan_line(it)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_scan_line, items, chunksize=max(1, len(items) // (4 * workers)))
