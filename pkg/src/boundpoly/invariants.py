"""Graph parameters read off a boundary polynomial, and brute-force oracles.

Extractors take only a :class:`BoundaryPolynomial`.  Oracles take only a
:class:`Graph` and never build a polynomial; tests pit one against the other.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .graphs import Graph, connected_components, disjoint_union, is_connected, join
from .poly import (
    BoundaryPolynomial,
    evaluate,
    laurent_profile,
    substitute_x0,
    uni_derivative,
    uni_divmod,
    uni_evaluate,
    y_plus_one_multiplicity,
)


class NotAGraphPolynomialError(ValueError):
    """The polynomial violates an identity every boundary polynomial satisfies."""


def _order(p: BoundaryPolynomial) -> int:
    return p.n if p.n is not None else order_from(p)


def order_from(p: BoundaryPolynomial) -> int:
    return sum(p.slice_y(1))


def size_from(p: BoundaryPolynomial) -> int:
    twice = uni_evaluate(uni_derivative(p.slice_y(1)), 1)
    if twice % 2:
        raise NotAGraphPolynomialError("degree sum is odd")
    return int(twice) // 2


def size_from_alt(p: BoundaryPolynomial) -> int:
    """Size from the ``y**2`` slice and the curvature of the ``y`` slice.

    Pairs ``{u, v}`` have ``|B| = d(u) + d(v) - |N(u) & N(v)| - 2[u~v]``, so
    ``D[y^2](1) = 2m(n-2) - sum C(d, 2)`` and ``sum C(d, 2) = D^2[y](1) / 2``.
    """
    n = _order(p)
    if n <= 2:
        raise ValueError("alternative size formula needs n >= 3")
    d2 = uni_evaluate(uni_derivative(p.slice_y(2)), 1)
    curv = uni_evaluate(uni_derivative(p.slice_y(1), 2), 1) / 2
    m = Fraction(d2 + curv, 2 * (n - 2))
    if m.denominator != 1:
        raise NotAGraphPolynomialError("alternative size is not an integer")
    return int(m)


def degree_sequence(p: BoundaryPolynomial) -> list[int]:
    """Degrees in non-increasing order."""
    out = []
    for d, count in enumerate(p.slice_y(1)):
        out.extend([d] * count)
    return sorted(out, reverse=True)


def isolated_count(p: BoundaryPolynomial) -> int:
    k = p.coefficient(0, 1)
    if p.is_zero() or k != y_plus_one_multiplicity(p):
        raise NotAGraphPolynomialError("isolated count and (y+1) multiplicity disagree")
    return k


def connectivity_and_components(p: BoundaryPolynomial) -> tuple[bool, int, list[int]]:
    """``(connected, k, component orders ascending)`` from ``B(0, y)``."""
    n = _order(p)
    connected = all(p.coefficient(0, j) == 0 for j in range(1, n))
    value = int(evaluate(p, 0, 1))
    if value <= 0 or value & (value - 1):
        raise NotAGraphPolynomialError(f"B(0, 1) = {value} is not a power of two")
    k = value.bit_length() - 1
    rest = substitute_x0(p)
    orders = []
    for _ in range(k):
        smallest = next((e for e in range(1, len(rest)) if rest[e]), None)
        if smallest is None:
            raise NotAGraphPolynomialError("ran out of factors while peeling")
        factor = (1,) + (0,) * (smallest - 1) + (1,)
        rest, rem = uni_divmod(rest, factor)
        if any(rem):
            raise NotAGraphPolynomialError("B(0, y) is not a product of (1 + y^k)")
        orders.append(smallest)
    if rest != (1,):
        raise NotAGraphPolynomialError("B(0, y) has leftover factors after peeling")
    return connected, k, orders


def p2_components(p: BoundaryPolynomial) -> int:
    out = p.coefficient(0, 2) - comb(p.coefficient(0, 1), 2)
    if out < 0:
        raise NotAGraphPolynomialError("negative K2-component count")
    return out


def p3_or_c3_components(p: BoundaryPolynomial) -> int:
    iso = p.coefficient(0, 1)
    out = p.coefficient(0, 3) - comb(iso, 3) - p2_components(p) * iso
    if out < 0:
        raise NotAGraphPolynomialError("negative P3/C3-component count")
    return out


def domination_number(p: BoundaryPolynomial) -> int:
    n = _order(p)
    for k in range(1, n + 1):
        if p.coefficient(n - k, k):
            return k
    return 0  # n == 0


def differential_and_roman(p: BoundaryPolynomial) -> tuple[int, int]:
    prof = laurent_profile(p)
    diff = prof.degree_diff
    roman = prof.degree_sum - diff
    if p.n is not None and roman + diff != p.n:
        raise NotAGraphPolynomialError("Roman domination and differential do not sum to n")
    return diff, roman


def vertex_connectivity(p: BoundaryPolynomial) -> int:
    """Least ``k >= 1`` with some ``B[k, j] != 0`` and ``k + j < n``: such a set
    ``S`` leaves vertices outside ``S`` and ``B(S)``, so ``B(S)`` separates."""
    n = _order(p)
    connected, _, _ = connectivity_and_components(p)
    if not connected:
        raise ValueError("vertex connectivity is extracted only for connected graphs")
    for k in range(1, n):
        if any(p.coefficient(k, j) for j in range(1, n - k)):
            return k
    return max(n - 1, 0)


def min_degree_check(p: BoundaryPolynomial, delta: int | None = None) -> bool:
    n = _order(p)
    if delta is None:
        delta = min(degree_sequence(p), default=0)
    for k in range(delta + 1):
        row = p.slice_y(n - k)
        want = (0,) * k + (comb(n, k),)
        if row != want:
            return False
    return True


@dataclass
class InvariantReport:
    n: int
    m: int
    m_alt: int | None
    degree_sequence: list[int]
    isolated: int
    connected: bool
    components: int
    component_orders: list[int]
    p2_components: int
    p3_c3_components: int
    gamma: int
    differential: int
    gamma_r: int
    kv: int | None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def invariant_report(p: BoundaryPolynomial) -> InvariantReport:
    n = order_from(p)
    if p.n is not None and p.n != n:
        raise NotAGraphPolynomialError(f"order hint {p.n} disagrees with [y]B(1) = {n}")
    p = p.with_order(n)
    m = size_from(p)
    notes = []
    m_alt = size_from_alt(p) if n >= 3 else None
    if m_alt is not None and m_alt != m:
        raise NotAGraphPolynomialError(f"size formulas disagree: {m} vs {m_alt}")
    connected, k, orders = connectivity_and_components(p)
    diff, roman = differential_and_roman(p)
    kv = None
    if connected:
        kv = vertex_connectivity(p)
    else:
        notes.append("kv is only extracted for connected graphs")
    return InvariantReport(
        n=n,
        m=m,
        m_alt=m_alt,
        degree_sequence=degree_sequence(p),
        isolated=isolated_count(p),
        connected=connected,
        components=k,
        component_orders=orders,
        p2_components=p2_components(p),
        p3_c3_components=p3_or_c3_components(p),
        gamma=domination_number(p),
        differential=diff,
        gamma_r=roman,
        kv=kv,
        notes=notes,
    )


# -- graph-level oracles -------------------------------------------------------------

ORACLE_CAP = 16
ROMAN_CAP = 10


def _cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise ValueError(f"oracle limited to {cap} vertices, got {g.n}")


def _closed_nbhd(g: Graph) -> list[int]:
    return [a | (1 << v) for v, a in enumerate(g.adj)]


def oracle_gamma(g: Graph) -> int:
    _cap(g, ORACLE_CAP)
    full = (1 << g.n) - 1
    closed = _closed_nbhd(g)
    for k in range(g.n + 1):
        for S in combinations(range(g.n), k):
            cover = 0
            for v in S:
                cover |= closed[v]
            if cover == full:
                return k
    raise AssertionError("unreachable: V dominates itself")


def oracle_differential(g: Graph) -> int:
    _cap(g, ORACLE_CAP)
    best = 0
    for S in range(1 << g.n):
        reach = 0
        for v in range(g.n):
            if S >> v & 1:
                reach |= g.adj[v]
        best = max(best, bin(reach & ~S).count("1") - bin(S).count("1"))
    return best


def oracle_roman(g: Graph) -> int:
    """Minimum weight over all {0, 1, 2}-labelings where every 0 sees a 2."""
    _cap(g, ROMAN_CAP)
    n = g.n
    if n == 0:
        return 0
    labels = np.indices((3,) * n).reshape(n, -1).T  # every labeling, one per row
    two = np.zeros(len(labels), dtype=np.int64)
    zero = np.zeros(len(labels), dtype=np.int64)
    covered = np.zeros(len(labels), dtype=np.int64)
    for v in range(n):
        is2 = labels[:, v] == 2
        two |= np.where(is2, 1 << v, 0)
        zero |= np.where(labels[:, v] == 0, 1 << v, 0)
        covered |= np.where(is2, g.adj[v], 0)
    ok = (zero & ~covered) == 0
    return int(labels[ok].sum(axis=1).min())


def _components_after_removal(g: Graph, removed: int) -> list[int]:
    """Component bitmasks of ``G - removed``."""
    alive = ((1 << g.n) - 1) & ~removed
    comps = []
    seen = 0
    for s in range(g.n):
        if not alive >> s & 1 or seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            reach = 0
            for v in range(g.n):
                if frontier >> v & 1:
                    reach |= g.adj[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def oracle_kv(g: Graph) -> int:
    """Size of a smallest vertex cut: a set whose removal increases the number of
    components or reduces a component to a single vertex.

    A graph with an isolated vertex (including K1) has ``kv = 0``; for a
    complete graph this gives ``n - 1``.
    """
    _cap(g, ORACLE_CAP)
    if g.n == 0 or any(a == 0 for a in g.adj):
        return 0
    base = len(_components_after_removal(g, 0))
    for k in range(1, g.n):
        for X in combinations(range(g.n), k):
            mask = sum(1 << v for v in X)
            comps = _components_after_removal(g, mask)
            if len(comps) > base or any(c & (c - 1) == 0 for c in comps):
                return k
    return g.n - 1


def separation_number(g: Graph) -> int:
    """Vertex connectivity with the usual convention that disconnected graphs
    have 0; equals :func:`oracle_kv` on connected graphs."""
    return oracle_kv(g) if is_connected(g) else 0


def check_component_additivity(graphs: list[Graph]) -> bool:
    """Differential, Roman domination and domination add over components; vertex
    connectivity is the minimum over components."""
    if not graphs:
        return True
    union = graphs[0]
    for h in graphs[1:]:
        union = disjoint_union(union, h)
    return (
        oracle_differential(union) == sum(oracle_differential(h) for h in graphs)
        and oracle_roman(union) == sum(oracle_roman(h) for h in graphs)
        and oracle_gamma(union) == sum(oracle_gamma(h) for h in graphs)
        and oracle_kv(union) == min(oracle_kv(h) for h in graphs)
    )


def join_expectations(g1: Graph, g2: Graph) -> dict[str, int]:
    """Parameters of ``g1 + g2`` predicted from the operands alone.

    A nonempty ``S`` inside one side scores ``|B(S)| - |S| <= Delta_i + n_other - 1``
    (attained by a single vertex); any ``S`` meeting both sides scores at most
    ``n - 4``.  So the differential depends on the maximum degrees, including the
    ``n - 3`` case where some side has a vertex of degree ``n_i - 2``.
    """
    n1, n2 = g1.n, g2.n
    n = n1 + n2
    diff = max(g1.max_degree + n2 - 1, g2.max_degree + n1 - 1, n - 4)
    dom1 = oracle_gamma(g1) == 1
    dom2 = oracle_gamma(g2) == 1
    return {
        "differential": diff,
        "gamma_r": n - diff,
        "gamma": 1 if dom1 or dom2 else 2,
        "kv": min(separation_number(g1) + n2, separation_number(g2) + n1),
    }


def check_join_identities(g1: Graph, g2: Graph) -> bool:
    if g1.n < 1 or g2.n < 1:
        raise ValueError("join identities need nonempty operands")
    g = join(g1, g2)
    want = join_expectations(g1, g2)
    got = {
        "differential": oracle_differential(g),
        "gamma_r": oracle_roman(g) if g.n <= ROMAN_CAP else g.n - oracle_differential(g),
        "gamma": oracle_gamma(g),
        "kv": oracle_kv(g),
    }
    return got == want


def oracle_report(g: Graph) -> dict:
    """Graph-side values for every field of :class:`InvariantReport`."""
    comps = connected_components(g)
    sizes = sorted(len(c) for c in comps)
    iso = sum(1 for s in sizes if s == 1)
    p2 = sum(1 for c in comps if len(c) == 2)
    p3 = sum(1 for c in comps if len(c) == 3)
    diff = oracle_differential(g)
    return {
        "n": g.n,
        "m": g.m,
        "degree_sequence": sorted(g.degrees(), reverse=True),
        "isolated": iso,
        "connected": len(comps) <= 1,
        "components": len(comps),
        "component_orders": sizes,
        "p2_components": p2,
        "p3_c3_components": p3,
        "gamma": oracle_gamma(g),
        "differential": diff,
        "gamma_r": oracle_roman(g) if g.n <= ROMAN_CAP else g.n - diff,
        "kv": oracle_kv(g) if len(comps) <= 1 else None,
    }
