"""Simple graphs, the graph6 codec, walk matrices and rooted products with paths.

Vertices are ``0..n-1``. In ``rooted_product_path(G, m)`` the copy of path
vertex ``j`` (``j = 0`` is the root) attached to ``G``-vertex ``i`` gets index
``j*n + i``, so layer 0 is a copy of ``G`` and the adjacency matrix equals
``kron(A(P_m), I_n) + kron(D_1, A(G))`` verbatim.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .exact_linalg import Matrix, charpoly, det_bareiss, mat_vec
from .polynomials import IntPoly


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(edges))

    @classmethod
    def from_adjacency(cls, A: Matrix) -> "Graph":
        n = len(A)
        for i in range(n):
            if A[i][i]:
                raise ValueError(f"loop at vertex {i}")
            for j in range(i):
                if A[i][j] != A[j][i] or A[i][j] not in (0, 1):
                    raise ValueError("adjacency must be a symmetric 0/1 matrix")
        return cls(n, frozenset((j, i) for i in range(n) for j in range(i) if A[i][j]))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors()]

    def adjacency_matrix(self) -> Matrix:
        A = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            A[u][v] = A[v][u] = 1
        return A

    def __str__(self) -> str:
        return graph6_encode(self)


# graph6 codec ---------------------------------------------------------------

_HEADER = b">>graph6<<"


def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def graph6_encode(G: Graph) -> str:
    """Encode ``G`` as a graph6 string (no trailing newline)."""
    n = G.n
    bits = [1 if (i, j) in G.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytearray(_size_bytes(n))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return body.decode("ascii")


def graph6_decode(text: str | bytes) -> Graph:
    """Decode one graph6 line. A trailing newline and the optional header are accepted."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = len(_HEADER) if data.startswith(_HEADER) else 0
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise Graph6Error(f"byte value {data[pos]} outside printable range 63..126", pos)
    if start >= len(data):
        raise Graph6Error("empty input", start)

    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        width = 6 if data[pos + 1:pos + 2] == b"~" else 3
        pos += 1 if width == 3 else 2
        if len(data) < pos + width:
            raise Graph6Error("truncated size header", len(data))
        n = 0
        for b in data[pos:pos + width]:
            n = (n << 6) | (b - 63)
        pos += width

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nbytes:
        raise Graph6Error(f"expected {nbytes} payload bytes for n={n}, got {len(payload)}", len(data))
    if len(payload) > nbytes:
        raise Graph6Error("trailing bytes after adjacency payload", pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def read_graph6_lines(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


# constructions --------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path_graph(m: int) -> Graph:
    """Path on ``m`` vertices; vertex 0 is the root endvertex."""
    if m < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(m, frozenset((k, k + 1) for k in range(m - 1)))


def complement(G: Graph) -> Graph:
    return Graph(G.n, frozenset(e for e in itertools.combinations(range(G.n), 2) if e not in G.edges))


def rooted_product_path(G: Graph, m: int) -> Graph:
    """Attach a copy of ``P_m`` by its endvertex to every vertex of ``G``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = G.n
    edges = set(G.edges)
    for j in range(m - 1):
        for i in range(n):
            edges.add((j * n + i, (j + 1) * n + i))
    return Graph(m * n, frozenset(edges))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2**(n choose 2)`` of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


# walk matrix and spectral constants ----------------------------------------

def walk_matrix(G: Graph) -> Matrix:
    """``[e, Ae, ..., A^{n-1} e]``; entry ``(i, k)`` counts length-k walks from ``i``."""
    A = G.adjacency_matrix()
    col = [1] * G.n
    cols = []
    for _ in range(G.n):
        cols.append(col)
        col = mat_vec(A, col)
    return [list(row) for row in zip(*cols)]


def walk_det(G: Graph) -> int:
    return det_bareiss(walk_matrix(G))


def a0(G: Graph) -> int:
    """Constant term of the characteristic polynomial, ``(-1)^n det A``."""
    d = det_bareiss(G.adjacency_matrix())
    return -d if G.n % 2 else d


def char_poly(G: Graph) -> IntPoly:
    return charpoly(G.adjacency_matrix())


def two_adic_valuation(x: int) -> int | None:
    """Exponent of 2 in ``x``; ``None`` for zero."""
    if x == 0:
        return None
    return (x & -x).bit_length() - 1


def corpus(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices (1 <= n <= 8)."""
    from importlib.resources import files

    path = files("walkmat") / "data" / f"graphs{n}.g6"
    if not 1 <= n <= 8 or not path.is_file():
        raise ValueError(f"no bundled corpus for n={n}")
    return list(read_graph6_lines(path.read_text().splitlines()))
