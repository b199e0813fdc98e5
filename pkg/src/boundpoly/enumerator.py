"""Exhaustive computation of boundary polynomials and their restricted variants.

Every subset ``S`` of the vertex set is visited once; this is the ground truth the
closed forms in :mod:`boundpoly.formulas` are checked against.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .graphs import Graph
from .kernels import enumerate_counts
from .poly import BoundaryPolynomial

DEFAULT_MAX_N = 24
HARD_MAX_N = 30

NeighborCondition = Literal["any", "empty", "nonempty"]


class EnumerationCapError(ValueError):
    """The graph is too large for exhaustive enumeration under the current cap."""


def _check_cap(g: Graph, max_n: int) -> None:
    if max_n > HARD_MAX_N:
        raise ValueError(f"enumeration cap may be raised to at most {HARD_MAX_N}")
    if g.n > max_n:
        raise EnumerationCapError(
            f"graph has {g.n} vertices but the enumeration cap is {max_n}; "
            f"raise it (at most {HARD_MAX_N}) or use a closed-form family formula"
        )


def boundary(g: Graph, S: Iterable[int]) -> frozenset[int]:
    """Outer boundary: neighbours of ``S`` that are not themselves in ``S``."""
    mask = 0
    for v in S:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
        mask |= 1 << v
    reach = 0
    for v in range(g.n):
        if mask >> v & 1:
            reach |= g.adj[v]
    reach &= ~mask
    return frozenset(v for v in range(g.n) if reach >> v & 1)


def boundary_polynomial(
    g: Graph,
    *,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
    backend: str | None = None,
) -> BoundaryPolynomial:
    """``B(G; x, y) = sum over S of x**|B(S)| * y**|S|`` by full enumeration."""
    _check_cap(g, max_n)
    counts = enumerate_counts(g.adj, workers=workers, backend=backend)
    return BoundaryPolynomial(counts[0], g.n)


# -- restricted polynomials ------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    vertex: int
    member: int  # 1 if the vertex must be in S, 0 if it must not
    neighbors: NeighborCondition = "any"

    def __post_init__(self):
        if self.member not in (0, 1):
            raise ValueError(f"membership must be 0 or 1, got {self.member!r}")
        if self.neighbors not in ("any", "empty", "nonempty"):
            raise ValueError(f"unknown neighbour condition {self.neighbors!r}")


@dataclass(frozen=True)
class RestrictedSpec:
    """Membership and neighbourhood conditions on one or two marked vertices.

    With two marks the neighbour condition of each vertex is tested against ``S``
    with the *other* marked vertex removed; with one mark against ``S`` itself.
    """

    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        if not 1 <= len(self.constraints) <= 2:
            raise ValueError("a restricted spec constrains one or two vertices")
        if len({c.vertex for c in self.constraints}) != len(self.constraints):
            raise ValueError("constrained vertices must be distinct")

    @classmethod
    def of(cls, *constraints: tuple) -> RestrictedSpec:
        """``RestrictedSpec.of((v, 1), (u, 0, "empty"))``."""
        return cls(tuple(Constraint(*c) for c in constraints))


_COND_BIT = {"empty": 0, "nonempty": 1}


class RestrictedTable:
    """All class-split sub-polynomials for marks ``u`` and optional ``v``,
    from a single enumeration pass."""

    def __init__(self, g: Graph, u: int, v: int | None, counts: np.ndarray):
        self.graph = g
        self.u = u
        self.v = v
        self._counts = counts

    def get(
        self,
        member_u: int | None,
        member_v: int | None = None,
        nbr_u: NeighborCondition = "any",
        nbr_v: NeighborCondition = "any",
    ) -> BoundaryPolynomial:
        """Sum of ``x**|B(S)| y**|S|`` over subsets matching every given condition.

        ``member_*`` of None leaves membership free.
        """
        if self.v is None and (member_v is not None or nbr_v != "any"):
            raise ValueError("table has no second marked vertex")
        want = [
            (0, member_u),
            (1, member_v),
            (2, _COND_BIT.get(nbr_u)),
            (3, _COND_BIT.get(nbr_v)),
        ]
        sel = [
            code
            for code in range(self._counts.shape[0])
            if all(val is None or (code >> bit & 1) == val for bit, val in want)
        ]
        grid = self._counts[sel].sum(axis=0)
        return BoundaryPolynomial(grid, self.graph.n)


def restricted_table(
    g: Graph,
    u: int,
    v: int | None = None,
    *,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
    backend: str | None = None,
) -> RestrictedTable:
    _check_cap(g, max_n)
    for w in (u, v):
        if w is not None and not 0 <= w < g.n:
            raise ValueError(f"vertex {w} not in graph of order {g.n}")
    if v is not None and v == u:
        raise ValueError("marked vertices must be distinct")
    counts = enumerate_counts(
        g.adj, u, -1 if v is None else v, workers=workers, backend=backend
    )
    return RestrictedTable(g, u, v, counts)


def restricted_polynomial(g: Graph, spec: RestrictedSpec, **kw) -> BoundaryPolynomial:
    cs = spec.constraints
    table = restricted_table(g, cs[0].vertex, cs[1].vertex if len(cs) > 1 else None, **kw)
    if len(cs) == 1:
        return table.get(cs[0].member, nbr_u=cs[0].neighbors)
    return table.get(cs[0].member, cs[1].member, cs[0].neighbors, cs[1].neighbors)


def restricted_vector(g: Graph, v: int, **kw) -> tuple[BoundaryPolynomial, ...]:
    """``(B^0_{v^0}, B^0_{v^1}, B^1_{v^0}, B^1_{v^1})``: membership of ``v``, then
    whether ``N(v)`` meets ``S``."""
    t = restricted_table(g, v, **kw)
    return (
        t.get(0, nbr_u="empty"),
        t.get(0, nbr_u="nonempty"),
        t.get(1, nbr_u="empty"),
        t.get(1, nbr_u="nonempty"),
    )
