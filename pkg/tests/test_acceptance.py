"""Acceptance suite. Each test prints one [PASS]/[FAIL] line; run with -s to see them inline."""

import random

import numpy as np
import pytest

from walkmat.dgs import FStarReport, fstar_check, grow_family, scan_corpus
from walkmat.exact_linalg import identity, kronecker, mat_add
from walkmat.graphs import (
    corpus,
    graph6_decode,
    graph6_encode,
    path_graph,
    random_graph,
    rooted_product_path,
    walk_det,
    walk_matrix,
)
from walkmat.identities import (
    verify_dilcher_stolarsky,
    verify_divisibility,
    verify_main_theorem,
    verify_newres,
    verify_res1,
    verify_res2,
    verify_schwenk,
)
from walkmat.spectral import verify_eigenvector_lemma, verify_walkdet_eigen_formula

from conftest import record_criterion

SEED = 20221


@pytest.fixture(scope="module")
def theorem_certs():
    certs = []
    for n in range(1, 7):
        for G in corpus(n):
            for m in (2, 3, 4, 5):
                certs.append(verify_main_theorem(G, m))
    rng = random.Random(SEED)
    for _ in range(200):
        G = random_graph(rng.choice((7, 8)), rng)
        certs.append(verify_main_theorem(G, rng.choice((2, 3))))
    return certs


def test_c01_main_theorem(theorem_certs):
    bad = [c.params for c in theorem_certs if not c.passed]
    nonzero = sum(1 for c in theorem_certs if c.lhs)
    ok = record_criterion("C1 walk determinant of rooted path product", not bad,
                          f"{len(theorem_certs)} certificates, {nonzero} nonzero, {len(bad)} failures")
    assert ok, bad[:5]


def test_c02_special_slices(theorem_certs):
    m2 = [c for c in theorem_certs if c.params["m"] == 2]
    m34 = [c for c in theorem_certs if c.params["m"] in (3, 4)]
    ok = all(c.passed for c in m2) and all(c.passed for c in m34) and m2 and m34
    record_criterion("C2 slices m=2 and m in {3,4}", ok, f"{len(m2)} + {len(m34)} certificates")
    assert ok


def test_c03_dilcher_stolarsky():
    certs = [verify_dilcher_stolarsky(m) for m in range(1, 41)]
    bad = [c.params["m"] for c in certs if not c.passed]
    ok = record_criterion("C3 Res(U_m, U_m-1) closed form, m=1..40", not bad, f"failures at m={bad}")
    assert ok


def test_c04_newres():
    certs = [verify_newres(m) for m in range(1, 31)]
    samples_ok = all(len(c.params["t"]) == c.params["m"] + 1 for c in certs)
    bad = [c.params["m"] for c in certs if not c.passed]
    ok = record_criterion("C4 Res(U_m + tU_m-1, sum U_k), m=1..30, m+1 samples",
                          samples_ok and not bad, f"failures at m={bad}")
    assert ok


def test_c05_res1_res2():
    r1 = [verify_res1(m) for m in range(1, 31)]
    r2 = [verify_res2(m) for m in range(1, 31)]
    constant = all(c.extra["constant_in_t"] and len(set(c.lhs)) == 1 for c in r1)
    bad = [("res1", c.params["m"]) for c in r1 if not c.passed]
    bad += [("res2", c.params["m"]) for c in r2 if not c.passed]
    ok = record_criterion("C5 renormalised resultants, m=1..30, constant in t", constant and not bad,
                          f"failures {bad}")
    assert ok


def test_c06_schwenk():
    rng = random.Random(SEED + 6)
    certs = [verify_schwenk(random_graph(rng.randint(1, 7), rng), rng.randint(1, 5)) for _ in range(100)]
    bad = [c.params for c in certs if not c.passed]
    ok = record_criterion("C6 characteristic polynomial factorisation", not bad, f"{len(bad)} failures of 100")
    assert ok


def test_c07_kronecker():
    rng = random.Random(SEED + 7)
    bad = []
    for _ in range(100):
        G = random_graph(rng.randint(1, 8), rng)
        m = rng.randint(1, 5)
        A_P = path_graph(m).adjacency_matrix()
        D1 = [[int(i == j == 0) for j in range(m)] for i in range(m)]
        expected = mat_add(kronecker(A_P, identity(G.n)), kronecker(D1, G.adjacency_matrix()))
        if rooted_product_path(G, m).adjacency_matrix() != expected:
            bad.append((graph6_encode(G), m))
    ok = record_criterion("C7 adjacency of rooted product as Kronecker sum", not bad, f"{len(bad)} failures of 100")
    assert ok


def test_c08_divisibility():
    rng = random.Random(SEED + 8)
    certs = [verify_divisibility(random_graph(rng.randint(1, 12), rng)) for _ in range(1000)]
    bad = [c.params for c in certs if not c.passed]
    ok = record_criterion("C8 2^floor(n/2) divides det W", not bad, f"{len(bad)} failures of 1000")
    assert ok


def test_c09_numeric_lemmas():
    rng = random.Random(SEED + 9)
    worst = dict(eigen=0.0, spectrum=0.0, sum=0.0, formula=0.0, gap=np.inf)
    bad = []
    formula_checked = 0
    for _ in range(50):
        G = random_graph(rng.randint(1, 6), rng)
        m = rng.randint(1, 4)
        rep = verify_eigenvector_lemma(G, m)
        worst["eigen"] = max(worst["eigen"], rep.eigen_residual)
        worst["spectrum"] = max(worst["spectrum"], rep.spectrum_mismatch)
        worst["sum"] = max(worst["sum"], rep.sum_residual)
        worst["gap"] = min(worst["gap"], rep.min_root_gap)
        if walk_det(G):
            f = verify_walkdet_eigen_formula(G)
            formula_checked += 1
            worst["formula"] = max(worst["formula"], f.error)
        if not rep.passed:
            bad.append((graph6_encode(G), m))
    ok = (not bad and worst["eigen"] <= 1e-8 and worst["spectrum"] <= 1e-8 and worst["sum"] <= 1e-8
          and worst["gap"] > 1e-6 and worst["formula"] <= 1e-6)
    detail = (f"eigen {worst['eigen']:.1e}, spectrum {worst['spectrum']:.1e}, sum {worst['sum']:.1e}, "
              f"min gap {worst['gap']:.2e}, walk-det rel err {worst['formula']:.1e} on {formula_checked} graphs")
    record_criterion("C9 eigenvector lift, root interlacing, eigen walk-det formula", ok, detail)
    assert ok, bad


def test_c10_fstar_closure():
    lines = [graph6_encode(G) for G in corpus(6)]
    seeds = [r.graph6 for r in scan_corpus(lines) if isinstance(r, FStarReport) and r.member]
    bad = []
    for g6 in seeds:
        G = graph6_decode(g6)
        for m in (2, 3, 4):
            if not fstar_check(rooted_product_path(G, m)).member:
                bad.append((g6, m))
        rec = grow_family(G, [2, 3])
        if not rec.ok or not all(fstar_check(graph6_decode(s)).member for s, _ in rec.members):
            bad.append((g6, "grow"))
    ok = record_criterion("C10 F* seeds found and closed under rooted path products", bool(seeds) and not bad,
                          f"{len(seeds)} seeds on 6 vertices, failures {bad}")
    assert ok


def walk_counts(G, k):
    counts = [1] * G.n
    nbrs = [[] for _ in range(G.n)]
    for u, v in G.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for _ in range(k):
        counts = [sum(counts[v] for v in nbrs[u]) for u in range(G.n)]
    return counts


def test_c11_walk_counts():
    bad = []
    total = 0
    for n in range(1, 9):
        for G in corpus(n):
            W = walk_matrix(G)
            total += 1
            for k in range(n):
                if [row[k] for row in W] != walk_counts(G, k):
                    bad.append((graph6_encode(G), k))
                    break
    ok = record_criterion("C11 walk matrix columns count walks", not bad, f"{total} graphs, {len(bad)} failures")
    assert ok
