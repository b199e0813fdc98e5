"""Slow, obviously-correct reference implementations used only by the tests.

Everything here works on plain Python sets and never touches the package's
kernels, so agreement is an independent check.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product

import networkx as nx

from boundpoly.graphs import Graph
from boundpoly.poly import BoundaryPolynomial


def nbrs(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def outer_boundary(N: list[set[int]], S: set[int]) -> set[int]:
    return {w for v in S for w in N[v]} - S


def subsets(n: int):
    for k in range(n + 1):
        for S in combinations(range(n), k):
            yield set(S)


def poly_terms(g: Graph, keep=lambda S, N: True) -> Counter:
    N = nbrs(g)
    out = Counter()
    for S in subsets(g.n):
        if keep(S, N):
            out[(len(outer_boundary(N, S)), len(S))] += 1
    return out


def naive_poly(g: Graph, keep=lambda S, N: True) -> BoundaryPolynomial:
    return BoundaryPolynomial.from_terms(dict(poly_terms(g, keep)), g.n)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def gamma(g: Graph) -> int:
    N = nbrs(g)
    for k in range(g.n + 1):
        for S in combinations(range(g.n), k):
            s = set(S)
            if all(v in s or N[v] & s for v in range(g.n)):
                return k
    return g.n


def differential(g: Graph) -> int:
    N = nbrs(g)
    return max(len(outer_boundary(N, S)) - len(S) for S in subsets(g.n))


def roman(g: Graph) -> int:
    N = nbrs(g)
    best = 2 * g.n
    for lab in product((0, 1, 2), repeat=g.n):
        if all(lab[v] or any(lab[w] == 2 for w in N[v]) for v in range(g.n)):
            best = min(best, sum(lab))
    return best


def kv_connected(g: Graph) -> int:
    """Vertex connectivity of a connected graph (``n - 1`` for complete graphs)."""
    h = to_nx(g)
    if g.n == 1:
        return 0
    return nx.node_connectivity(h)
