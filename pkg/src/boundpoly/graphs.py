"""Simple undirected graphs on at most 64 vertices, stored as neighbour bitsets.

Vertices are ``0..n-1``.  Graphs are immutable; every edit returns a new graph.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph documents or invalid graph edits."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        if n > MAX_VERTICES:
            raise GraphError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        adj = [0] * n
        for e in edges:
            try:
                u, v = (int(t) for t in e)
            except (TypeError, ValueError) as exc:
                raise GraphError(f"malformed edge {e!r}") from exc
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        """Build from neighbour bitsets (validated for symmetry and loops)."""
        adj = tuple(int(a) for a in adj)
        n = len(adj)
        edges = [(u, v) for u in range(n) for v in _bits(adj[u]) if u < v]
        g = cls(n, edges)
        if g._adj != adj:
            raise GraphError("adjacency bitsets are not symmetric or contain loops")
        return g

    # -- basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def m(self) -> int:
        return sum(_popcount(a) for a in self._adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return _popcount(self._adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(a) for a in self._adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in _bits(self._adj[u]) if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"

    # -- edits --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} not in graph of order {self._n}")

    def add_isolated_vertex(self) -> Graph:
        return Graph(self._n + 1, self.edges())

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v or self.has_edge(u, v):
            raise GraphError(f"{u}-{v} is not a non-edge")
        return Graph(self._n, self.edges() + [(u, v)])

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"{u}-{v} is not an edge")
        key = (min(u, v), max(u, v))
        return Graph(self._n, [e for e in self.edges() if e != key])

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)

        def relabel(w: int) -> int:
            return w - 1 if w > v else w

        return Graph(
            self._n - 1,
            [(relabel(a), relabel(b)) for a, b in self.edges() if v not in (a, b)],
        )

    def subdivide_edge(self, u: int, v: int) -> Graph:
        """Replace ``uv`` by the path ``u - w - v`` with ``w = n``."""
        w = self._n
        return self.delete_edge(u, v).add_isolated_vertex().add_edge(u, w).add_edge(w, v)

    def add_pendant(self, v: int) -> Graph:
        """Attach a new vertex ``n`` adjacent only to ``v``."""
        self._check_vertex(v)
        return Graph(self._n + 1, self.edges() + [(v, self._n)])

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            [(index[a], index[b]) for a, b in self.edges() if a in index and b in index],
        )

    def relabel(self, perm: list[int]) -> Graph:
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self._n, [(perm[a], perm[b]) for a, b in self.edges()])


# -- binary operations --------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges() + [(a + shift, b + shift) for a, b in g2.edges()])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    g = disjoint_union(g1, g2)
    cross = [(a, g1.n + b) for a in range(g1.n) for b in range(g2.n)]
    return Graph(g.n, g.edges() + cross)


def corona_p2(g1: Graph, g2: Graph) -> Graph:
    """Two adjacent hubs ``a = n1+n2`` and ``b = n1+n2+1``; ``a`` sees all of ``g1``,
    ``b`` all of ``g2``."""
    g = disjoint_union(g1, g2)
    a, b = g.n, g.n + 1
    extra = [(a, i) for i in range(g1.n)] + [(b, g1.n + i) for i in range(g2.n)] + [(a, b)]
    return Graph(g.n + 2, g.edges() + extra)


def bridge(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Disjoint union plus the edge from ``u`` in ``g1`` to ``v`` in ``g2``
    (relabelled ``n1 + v``)."""
    g1._check_vertex(u)
    g2._check_vertex(v)
    return disjoint_union(g1, g2).add_edge(u, g1.n + v)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


# -- families -----------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to the cycle ``1..n-1``."""
    _require(n >= 4, f"wheel needs n >= 4, got {n}")
    return join(Graph(1), cycle_graph(n - 1))


def star_graph(n: int) -> Graph:
    """Centre 0 with ``n-1`` leaves."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(n: int, m: int) -> Graph:
    _require(n >= 1 and m >= 1, f"complete bipartite needs n, m >= 1, got {n}, {m}")
    return join(Graph(n), Graph(m))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge 0-1 removed."""
    _require(n >= 3, f"complete minus edge needs n >= 3, got {n}")
    return complete_graph(n).delete_edge(0, 1)


def double_star(r: int, t: int) -> Graph:
    """Stars of orders r and t (centres 0 and r) with the centres joined."""
    _require(r >= 2 and t >= 2, f"double star needs r, t >= 2, got {r}, {t}")
    return bridge(star_graph(r), 0, star_graph(t), 0)


def prism_graph() -> Graph:
    """P2 x C3: triangles 0-1-2 and 3-4-5 with rungs i-(i+3)."""
    tri = [(0, 1), (1, 2), (0, 2)]
    return Graph(6, tri + [(a + 3, b + 3) for a, b in tri] + [(i, i + 3) for i in range(3)])


FAMILIES = {
    "empty": empty_graph,
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "wheel": wheel_graph,
    "star": star_graph,
    "complete_bipartite": complete_bipartite,
    "complete_minus_edge": complete_minus_edge,
    "double_star": double_star,
    "prism": prism_graph,
}


def family(name: str, *params: int) -> Graph:
    """Look up a named family generator, e.g. ``family("cycle", 5)``."""
    try:
        gen = FAMILIES[name.replace("-", "_")]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    try:
        return gen(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters {params} for family {name!r}") from exc


# -- parsing / serialisation --------------------------------------------------


def parse_edge_list(text: str | dict) -> Graph:
    """Parse ``{"n": int, "edges": [[u, v], ...]}`` (JSON text or decoded dict)."""
    if isinstance(text, str):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed JSON: {exc}") from exc
    else:
        doc = text
    if not isinstance(doc, dict) or "n" not in doc:
        raise GraphError("edge-list document must be an object with an 'n' field")
    n = doc["n"]
    edges = doc.get("edges", [])
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError(f"'n' must be an integer, got {n!r}")
    if not isinstance(edges, list) or any(
        not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges
    ):
        raise GraphError("'edges' must be a list of vertex pairs")
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def _g6_size(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise GraphError("graph6 size too large")


def emit_graph6(g: Graph) -> str:
    bits = [int(g.has_edge(i, j)) for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = _g6_size(g.n) + [
        int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + d) for d in data)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise GraphError(f"invalid graph6 character in {s!r}")
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphError("graph6 orders above 258047 not supported")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise GraphError(f"graph6 bit field has {len(body)} bytes, expected {need}")
    bits = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    edges = []
    pos = 0
    for j in range(n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, edges)


def load_graph(path: str) -> Graph:
    """Read an edge-list JSON or graph6 file, detected by extension then content."""
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    stripped = text.strip()
    if path.endswith(".json") or stripped.startswith("{"):
        return parse_edge_list(stripped)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphError(f"expected exactly one graph6 line in {path}, got {len(lines)}")
    return parse_graph6(lines[0])
