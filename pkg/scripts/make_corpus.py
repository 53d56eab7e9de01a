"""Regenerate the shipped graph6 corpora: one line per isomorphism class, n = 1..8.

Classes on n vertices are grown from those on n-1 by adding a vertex with every
possible neighbourhood, deduplicated by nauty canonical certificates. Needs
``pynauty`` (not a runtime dependency of walkmat).

    python scripts/make_corpus.py [MAX_N]
"""
import sys
from pathlib import Path

import pynauty

from walkmat.graphs import Graph, graph6_encode

OUT = Path(__file__).resolve().parents[1] / "src" / "walkmat" / "data"
EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def certificate(G):
    adj = {v: [] for v in range(G.n)}
    for u, v in G.edges:
        adj[u].append(v)
    return pynauty.certificate(pynauty.Graph(G.n, adjacency_dict=adj))


def canonical_form(G):
    adj = {v: [] for v in range(G.n)}
    for u, v in G.edges:
        adj[u].append(v)
    lab = pynauty.canon_label(pynauty.Graph(G.n, adjacency_dict=adj))
    pos = {v: k for k, v in enumerate(lab)}
    return Graph(G.n, frozenset((pos[u], pos[v]) for u, v in G.edges))


def main(max_n=8):
    OUT.mkdir(parents=True, exist_ok=True)
    level = [Graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            seen = {}
            for H in level:
                for mask in range(1 << (n - 1)):
                    edges = set(H.edges) | {(v, n - 1) for v in range(n - 1) if mask >> v & 1}
                    G = Graph(n, frozenset(edges))
                    seen.setdefault(certificate(G), G)
            level = [canonical_form(G) for G in seen.values()]
        lines = sorted(graph6_encode(G) for G in level)
        assert len(lines) == EXPECTED[n], (n, len(lines))
        (OUT / f"graphs{n}.g6").write_text("".join(s + "\n" for s in lines))
        print(f"n={n}: {len(lines)} classes")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
