"""Floating-point checks of the eigen-structure of rooted products with paths.

Eigenvalues ``lam`` of ``G`` lift to the ``m`` roots of ``S_m(x) - lam*S_{m-1}(x)``
in ``G o P_m``; eigenvectors lift by stacking ``S_{m-1}(mu), ..., S_0(mu)``
(scaled by ``1/S_{m-1}(mu)``) against the eigenvector of ``G``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, rooted_product_path, walk_det


class ConvergenceError(RuntimeError):
    pass


class DegeneracyError(ArithmeticError):
    """``S_{m-1}(mu)`` numerically zero; a float failure, never a mathematical one."""


class RootBracketError(RuntimeError):
    """A bisection bracket lacked a sign change."""


@dataclass
class EigenDecomp:
    values: np.ndarray   # ascending
    vectors: np.ndarray  # orthonormal columns, same order


def jacobi_eigen(A, tol: float = 1e-12, max_sweeps: int = 100) -> EigenDecomp:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most ``tol``."""
    a = np.array(A, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = a.shape[0]
    v = np.eye(n)

    mask = ~np.eye(n, dtype=bool)

    def off(x):
        return float(np.linalg.norm(x[mask]))

    for _ in range(max_sweeps):
        if off(a) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * cp - s * cq, s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :], a[q, :] = c * rp - s * rq, s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
    else:
        if off(a) > tol:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomp(values[order], v[:, order])


def chebyshev_s_values(x: float, upto: int) -> list[float]:
    """``[S_0(x), ..., S_upto(x)]`` by the three-term recurrence."""
    vals = [1.0, x]
    for _ in range(upto - 1):
        vals.append(x * vals[-1] - vals[-2])
    return vals[: upto + 1]


def _f(x: float, lam: float, m: int) -> tuple[float, float]:
    s = chebyshev_s_values(x, m)
    return s[m] - lam * s[m - 1], abs(s[m]) + abs(lam * s[m - 1])


def mu_roots(lam: float, m: int, tol: float = 1e-10) -> list[float]:
    """The ``m`` roots of ``S_m(x) - lam*S_{m-1}(x)``, descending.

    One root sits in each gap between consecutive roots ``2cos(k*pi/m)`` of
    ``S_{m-1}``, with outer brackets ``+-(|lam| + 2.5)``. The residual test is
    scaled by the magnitude of the two terms being cancelled.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    lam = float(lam)
    if m == 1:
        return [lam]
    outer = abs(lam) + 2.5
    cuts = [outer] + [2.0 * math.cos(k * math.pi / m) for k in range(1, m)] + [-outer]
    roots = []
    for hi, lo in zip(cuts, cuts[1:]):
        f_hi, _ = _f(hi, lam, m)
        f_lo, _ = _f(lo, lam, m)
        if f_hi == 0.0:
            roots.append(hi)
            continue
        if f_hi * f_lo >= 0.0:
            raise RootBracketError(f"no sign change on [{lo}, {hi}] for lam={lam}, m={m}")
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            f_mid, _ = _f(mid, lam, m)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if (f_mid > 0) == (f_hi > 0):
                hi, f_hi = mid, f_mid
            else:
                lo = mid
        mu = 0.5 * (lo + hi)
        resid, scale = _f(mu, lam, m)
        if abs(resid) > tol * max(1.0, scale):
            raise RootBracketError(f"residual {resid:.3e} above tolerance at mu={mu}")
        roots.append(mu)
    return roots


def build_eta(xi, mu: float, m: int, tol: float = 1e-10) -> np.ndarray:
    """Lift an eigenvector of ``G`` to ``G o P_m``; block ``j`` is ``S_{m-1-j}(mu)/S_{m-1}(mu) * xi``."""
    xi = np.asarray(xi, dtype=float)
    s = chebyshev_s_values(mu, max(m - 1, 1))
    top = s[m - 1]
    if abs(top) <= tol:
        raise DegeneracyError(f"|S_{m - 1}({mu})| = {abs(top):.3e} is numerically zero")
    return np.concatenate([(s[m - 1 - j] / top) * xi for j in range(m)])


@dataclass
class EigenLemmaReport:
    m: int
    eigen_residual: float     # max ||A~ eta - mu eta|| / ||eta||
    sum_residual: float       # max |e^T eta - S(mu)/S_{m-1}(mu) * e^T xi|
    spectrum_mismatch: float  # sorted mu's vs eigenvalues of A~
    min_root_gap: float
    min_abs_s_prev: float     # min |S_{m-1}(mu)|
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        return {k: (None if isinstance(v, float) and math.isinf(v) else v) for k, v in self.__dict__.items()}


def verify_eigenvector_lemma(G: Graph, m: int, tol: float = 1e-8, root_tol: float = 1e-10) -> EigenLemmaReport:
    """Check every lifted pair ``(mu, eta)`` against the adjacency matrix of ``G o P_m``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = G.n
    base = jacobi_eigen(G.adjacency_matrix())
    big = np.array(rooted_product_path(G, m).adjacency_matrix(), dtype=float)

    eig_res = sum_res = 0.0
    gap = math.inf
    s_prev_min = math.inf
    mus = []
    for i in range(n):
        lam, xi = base.values[i], base.vectors[:, i]
        roots = mu_roots(lam, m, root_tol)
        mus.extend(roots)
        if m > 1:
            gap = min(gap, min(float(a - b) for a, b in zip(roots, roots[1:])))
        e_xi = float(xi.sum())
        for mu in roots:
            s = chebyshev_s_values(mu, max(m - 1, 1))
            s_prev_min = min(s_prev_min, float(abs(s[m - 1])))
            eta = build_eta(xi, mu, m, root_tol)
            r = big @ eta - mu * eta
            eig_res = max(eig_res, float(np.linalg.norm(r) / np.linalg.norm(eta)))
            expected = sum(s[:m]) / s[m - 1] * e_xi
            sum_res = max(sum_res, float(abs(eta.sum() - expected)))

    spectrum = jacobi_eigen(big).values
    mismatch = float(np.max(np.abs(np.sort(mus) - spectrum))) if n else 0.0
    passed = eig_res <= tol and sum_res <= tol and mismatch <= tol
    return EigenLemmaReport(m, eig_res, sum_res, mismatch, gap, s_prev_min, tol, bool(passed))


@dataclass
class WalkDetFormulaReport:
    exact: int
    approx: float
    error: float      # relative, or absolute when the exact value is 0
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["exact"] = str(self.exact)
        return d


def verify_walkdet_eigen_formula(G: Graph, tol: float = 1e-6) -> WalkDetFormulaReport:
    """Compare ``|det W(G)|`` with ``|prod_{i<j}(lam_j - lam_i) * prod_i e^T xi_i|``."""
    exact = walk_det(G)
    dec = jacobi_eigen(G.adjacency_matrix())
    lam = dec.values
    approx = 1.0
    for j in range(G.n):
        for i in range(j):
            approx *= lam[j] - lam[i]
    approx = abs(float(approx * np.prod(dec.vectors.sum(axis=0))))
    if exact == 0:
        err = approx
    else:
        err = abs(approx - abs(exact)) / abs(exact)
    return WalkDetFormulaReport(exact, approx, float(err), tol, bool(err <= tol))
