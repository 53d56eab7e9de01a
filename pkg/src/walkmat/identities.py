"""Exact verifiers that emit machine-readable certificates.

Identities with a free parameter ``t`` are checked by sampling. Each side is a
polynomial in ``t`` of degree at most ``m - 1``: ``t`` enters linearly in only
the ``deg g = m - 1`` Sylvester rows built from the first argument. Agreement
at ``m`` distinct integers therefore proves the identity for that ``m``; the
default samples ``t = 0..m`` add one point of margin.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from .exact_linalg import charpoly
from .graphs import Graph, a0, graph6_encode, rooted_product_path, walk_det
from .polynomials import chebyshev_s, chebyshev_u, resultant, s_sum, u_sum, weighted_power_sum


@dataclass
class Certificate:
    identity: str
    params: dict
    lhs: Any
    rhs: Any
    sign: int | None
    passed: bool
    ms: float = 0.0
    skipped: bool = False
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = {
            "identity": self.identity,
            "params": self.params,
            "lhs": _decimal(self.lhs),
            "rhs": _decimal(self.rhs),
            "sign": self.sign,
            "pass": self.passed,
            "ms": round(self.ms, 3),
        }
        if self.skipped:
            d["skipped"] = True
        d.update(self.extra)
        return d

    def to_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _decimal(v):
    if isinstance(v, (list, tuple)):
        return [_decimal(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool):
        return str(v)
    return v


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1000.0


def _sign_pm(m: int) -> int:
    """``(-1)^(m(m-1)/2)``."""
    return -1 if (m * (m - 1) // 2) % 2 else 1


def verify_main_theorem(G: Graph, m: int) -> Certificate:
    """``|det W(G o P_m)| == |a0(G)^(m//2) * det W(G)^m|``, sign recorded, not asserted."""
    if m < 2:
        raise ValueError("m must be at least 2")
    with _Timer() as tm:
        lhs = walk_det(rooted_product_path(G, m))
        rhs = a0(G) ** (m // 2) * walk_det(G) ** m
    ok = abs(lhs) == abs(rhs)
    sign = lhs // rhs if ok and rhs != 0 else None
    return Certificate("theorem", {"graph6": graph6_encode(G), "m": m}, lhs, rhs, sign, ok, tm.ms)


def verify_schwenk(G: Graph, m: int) -> Certificate:
    """``phi(G o P_m) == S_{m-1}^n * phi(G; S_m / S_{m-1})`` coefficient by coefficient."""
    if m < 1:
        raise ValueError("m must be at least 1")
    with _Timer() as tm:
        lhs = charpoly(rooted_product_path(G, m).adjacency_matrix())
        c = charpoly(G.adjacency_matrix()).coeffs
        rhs = weighted_power_sum(c, chebyshev_s(m), chebyshev_s(m - 1))
    return Certificate("schwenk", {"graph6": graph6_encode(G), "m": m},
                       list(lhs.coeffs), list(rhs.coeffs), None, lhs == rhs, tm.ms)


def verify_dilcher_stolarsky(m: int) -> Certificate:
    """``Res(U_m, U_{m-1}) == (-1)^(m(m-1)/2) * 2^(m(m-1))``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    with _Timer() as tm:
        lhs = resultant(chebyshev_u(m), chebyshev_u(m - 1))
        rhs = _sign_pm(m) * 2 ** (m * (m - 1))
    return Certificate("dilcher", {"m": m}, lhs, rhs, None, lhs == rhs, tm.ms)


def _samples(m: int, t_values: Sequence[int] | None) -> list[int]:
    return list(range(m + 1)) if t_values is None else [int(t) for t in t_values]


def verify_newres(m: int, t_values: Sequence[int] | None = None) -> Certificate:
    """``Res_x(U_m + t U_{m-1}, sum_{k<m} U_k) == (-1)^(m(m-1)/2) t^(m//2) 2^(m(m-1))`` at sampled ``t``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    ts = _samples(m, t_values)
    with _Timer() as tm:
        um, um1, g = chebyshev_u(m), chebyshev_u(m - 1), u_sum(m)
        lhs = [resultant(um + um1.scale(t), g) for t in ts]
        rhs = [_sign_pm(m) * t ** (m // 2) * 2 ** (m * (m - 1)) for t in ts]
    return Certificate("newres", {"m": m, "t": ts}, lhs, rhs, None, lhs == rhs, tm.ms)


def verify_res1(m: int, t_values: Sequence[int] | None = None) -> Certificate:
    """``Res_x(S_m - t S_{m-1}, S_{m-1}) == (-1)^(m(m-1)/2)`` for every sampled ``t``.

    The value being independent of ``t`` witnesses that adding a multiple of a
    lower-degree second argument leaves the resultant unchanged.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    ts = _samples(m, t_values)
    with _Timer() as tm:
        sm, sm1 = chebyshev_s(m), chebyshev_s(m - 1)
        lhs = [resultant(sm - sm1.scale(t), sm1) for t in ts]
        rhs = [_sign_pm(m)] * len(ts)
    constant = len(set(lhs)) <= 1
    return Certificate("res1", {"m": m, "t": ts}, lhs, rhs, None, lhs == rhs and constant, tm.ms,
                       extra={"constant_in_t": constant})


def verify_res2(m: int, t_values: Sequence[int] | None = None) -> Certificate:
    """``Res_x(S_m - t S_{m-1}, S_0 + ... + S_{m-1}) == (-1)^(m(m-1)/2) (-t)^(m//2)``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    ts = _samples(m, t_values)
    with _Timer() as tm:
        sm, sm1, g = chebyshev_s(m), chebyshev_s(m - 1), s_sum(m)
        lhs = [resultant(sm - sm1.scale(t), g) for t in ts]
        rhs = [_sign_pm(m) * (-t) ** (m // 2) for t in ts]
    return Certificate("res2", {"m": m, "t": ts}, lhs, rhs, None, lhs == rhs, tm.ms)


def verify_divisibility(G: Graph) -> Certificate:
    """``2^(n//2)`` divides ``det W(G)``."""
    with _Timer() as tm:
        d = walk_det(G)
        modulus = 2 ** (G.n // 2)
    return Certificate("divisibility", {"graph6": graph6_encode(G), "modulus": str(modulus)},
                       d, 0, None, d % modulus == 0, tm.ms, extra={"residue": str(d % modulus)})


POLY_IDENTITIES = {
    "dilcher": verify_dilcher_stolarsky,
    "newres": verify_newres,
    "res1": verify_res1,
    "res2": verify_res2,
}
GRAPH_IDENTITIES = {
    "theorem": verify_main_theorem,
    "schwenk": verify_schwenk,
}
