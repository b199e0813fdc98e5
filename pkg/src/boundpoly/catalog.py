"""Small-graph catalogues: every labelled graph on ``n`` vertices, or a seeded
uniform sample of them."""

from __future__ import annotations

import re
from collections.abc import Iterator
from itertools import permutations

import numpy as np

from .graphs import Graph

DEFAULT_SEED = 20240101


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(n) for u in range(v)]


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = _pairs(n)
    return Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def all_graphs(n: int) -> Iterator[Graph]:
    """All ``2**C(n, 2)`` labelled graphs on ``n`` vertices."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def random_graphs(n: int, count: int, seed: int = DEFAULT_SEED) -> list[Graph]:
    """``count`` graphs drawn uniformly (each edge with probability 1/2)."""
    rng = np.random.default_rng(seed)
    k = n * (n - 1) // 2
    bits = rng.integers(0, 2, size=(count, k))
    pairs = _pairs(n)
    return [Graph(n, [pairs[i] for i in np.flatnonzero(row)]) for row in bits]


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Lexicographically least adjacency over all relabellings (brute force)."""
    if g.n > 9:
        raise ValueError("brute-force canonical form limited to 9 vertices")
    best = None
    edges = g.edges()
    for perm in permutations(range(g.n)):
        h = Graph(g.n, [(perm[a], perm[b]) for a, b in edges])
        if best is None or h.adj < best:
            best = h.adj
    return g.n, best or ()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


_SPEC = re.compile(r"^n\s*(<=|=)\s*(\d+)(?::(\d+))?$")


def parse_catalog(spec: str, seed: int = DEFAULT_SEED) -> list[Graph]:
    """``n<=5`` (all graphs of orders 1..5), ``n=5`` (all of order 5) or
    ``n=7:300`` (300 seeded random graphs of order 7)."""
    m = _SPEC.match(spec.replace(" ", ""))
    if not m:
        raise ValueError(f"bad catalog spec {spec!r}; use n<=K, n=K or n=K:COUNT")
    op, k, count = m.group(1), int(m.group(2)), m.group(3)
    if count is not None:
        if op != "=":
            raise ValueError("sampled catalogs take the form n=K:COUNT")
        return random_graphs(k, int(count), seed)
    if k > 7:
        raise ValueError("exhaustive catalogs are limited to n <= 7; sample instead")
    orders = range(1, k + 1) if op == "<=" else [k]
    return [g for n in orders for g in all_graphs(n)]
