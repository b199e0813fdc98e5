"""Closed forms and compositional identities for boundary polynomials.

Functions named ``poly_*`` build a polynomial without enumerating the subsets of
the result graph.  A few identities (edge removal, subdivision) still need
restricted polynomials of a smaller graph, which they take from the enumerator.
"""

from __future__ import annotations

from collections.abc import Sequence
from math import comb

from .enumerator import boundary_polynomial, restricted_table
from .graphs import Graph, GraphError
from .poly import ONE, ZERO, BoundaryPolynomial

P = BoundaryPolynomial
TransferVector = tuple[BoundaryPolynomial, BoundaryPolynomial, BoundaryPolynomial, BoundaryPolynomial]


class InconsistentPolynomialError(ValueError):
    """A composed result has a negative coefficient, so the inputs cannot have
    come from graphs of the stated orders."""


def _nonneg(p: P, what: str) -> P:
    if not p.is_nonnegative():
        raise InconsistentPolynomialError(f"{what}: result has a negative coefficient")
    return p


def _x_plus_y(k: int) -> P:
    return P.binomial_power(1, 1, k)


def _y_binom(k: int) -> P:
    """``(1 + y)**k``."""
    return P([[comb(k, j) for j in range(k + 1)]])


def _xpow(k: int) -> P:
    return P.monomial(k, 0)


def _bound(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


# -- families -------------------------------------------------------------------


def poly_empty(n: int) -> P:
    _bound(n >= 0, "order must be non-negative")
    return _y_binom(n).with_order(n)


def poly_complete(n: int) -> P:
    _bound(n >= 0, "order must be non-negative")
    if n == 0:
        return ONE.with_order(0)
    return (_x_plus_y(n) + 1 - _xpow(n)).with_order(n)


def poly_vertex_addition(p: P) -> P:
    """Add an isolated vertex: multiply by ``1 + y``."""
    out = p * _y_binom(1)
    return out.with_order(p.n + 1 if p.n is not None else None)


def poly_join(p1: P, n1: int, p2: P, n2: int) -> P:
    """Polynomial of the join from the operands' polynomials and orders."""
    _bound(n1 >= 1 and n2 >= 1, "join operands need order >= 1")
    out = (
        poly_complete(n1 + n2)
        + _xpow(n2) * (p1 - poly_complete(n1))
        + _xpow(n1) * (p2 - poly_complete(n2))
    )
    return _nonneg(out, "join").with_order(n1 + n2)


def poly_cone(p: P, n: int) -> P:
    """Join with a single vertex."""
    _bound(n >= 1, "cone base needs order >= 1")
    out = poly_complete(n + 1) + (p - poly_complete(n)).shift(1, 0)
    return _nonneg(out, "cone").with_order(n + 1)


def poly_wheel(n: int) -> P:
    _bound(n >= 4, f"wheel needs n >= 4, got {n}")
    out = poly_cycle(n - 1).shift(1, 0) - _xpow(1) + _x_plus_y(n - 1).shift(0, 1) + 1
    return out.with_order(n)


def poly_complete_bipartite(n: int, m: int) -> P:
    _bound(n >= 1 and m >= 1, "complete bipartite needs n, m >= 1")
    out = (
        _x_plus_y(n + m)
        + _xpow(n) * (_y_binom(m) - _x_plus_y(m))
        + _xpow(m) * (_y_binom(n) - _x_plus_y(n))
        + (_xpow(n) - 1) * (_xpow(m) - 1)
    )
    return out.with_order(n + m)


def poly_star(n: int) -> P:
    _bound(n >= 2, f"star needs n >= 2, got {n}")
    out = _x_plus_y(n) + 1 + (_y_binom(n - 1) - _x_plus_y(n - 1) - 1).shift(1, 0)
    return out.with_order(n)


def poly_complete_minus_edge(n: int) -> P:
    _bound(n >= 3, f"complete minus edge needs n >= 3, got {n}")
    out = poly_complete(n) + (ONE - _xpow(1)).shift(n - 2, 1, 2)
    return out.with_order(n)


def poly_double_star(r: int, t: int) -> P:
    _bound(r >= 2 and t >= 2, f"double star needs r, t >= 2, got {r}, {t}")
    tail = (_x_plus_y(r - 1) + _x_plus_y(t - 1)).shift(0, 1)
    out = poly_star(r) * poly_star(t) + tail.shift(1, 0) - tail
    return out.with_order(r + t)


# -- pendant transfer, paths and cycles ---------------------------------------------


def pendant_transfer(vec: Sequence[P]) -> TransferVector:
    """Restricted vector at a new pendant vertex ``u`` hung on the vertex ``v``
    that ``vec`` is classified at.

    Fixed matrix [[1, 1, 0, 0], [0, 0, x, x], [xy, y, 0, 0], [0, 0, y, y]].
    """
    a, b, c, d = vec
    return (
        a + b,
        (c + d).shift(1, 0),
        a.shift(1, 1) + b.shift(0, 1),
        (c + d).shift(0, 1),
    )


def _vector_sum(vec: Sequence[P]) -> P:
    return vec[0] + vec[1] + vec[2] + vec[3]


def poly_path(n: int) -> P:
    """``(1 1 1 1) M**n (0 1 0 0)^T`` by ``n`` matrix-vector products."""
    _bound(n >= 0, "order must be non-negative")
    vec: TransferVector = (ZERO, ONE, ZERO, ZERO)
    for _ in range(n):
        vec = pendant_transfer(vec)
    return _vector_sum(vec).with_order(n)


def path_end_restricted(n: int) -> P:
    """Path term for the cycle identity: subsets with ``v1`` and ``v2`` outside and
    ``vn`` inside, for the path ``v1 ... vn`` (n >= 3)."""
    _bound(n >= 3, f"needs n >= 3, got {n}")
    vec: TransferVector = (ONE, ZERO, ZERO, ZERO)  # v1 forced out
    vec = pendant_transfer(vec)
    vec = (vec[0], vec[1], ZERO, ZERO)  # v2 forced out
    for _ in range(n - 2):
        vec = pendant_transfer(vec)
    return vec[2] + vec[3]


def poly_cycle(n: int) -> P:
    _bound(n >= 3, f"cycle needs n >= 3, got {n}")
    r = path_end_restricted(n)
    out = poly_path(n) + (r.shift(1, 0) - r) * 2
    return _nonneg(out, "cycle").with_order(n)


# -- edge identities ----------------------------------------------------------------


def edge_removal_identity(p_minus: P, term_uv: P, term_vu: P) -> P:
    """``B(G) = B(G-e) + (x-1)(term_uv + term_vu)``."""
    s = term_uv + term_vu
    return _nonneg(p_minus + s.shift(1, 0) - s, "edge removal").with_order(p_minus.n)


def edge_removal_terms(h: Graph, u: int, v: int, **kw) -> tuple[P, P]:
    """The two restricted terms of ``h = G - uv``: ``u`` out with ``N(u)`` missing
    ``S - {v}`` and ``v`` in; and symmetrically with the roles swapped."""
    t = restricted_table(h, u, v, **kw)
    return t.get(0, 1, nbr_u="empty"), t.get(1, 0, nbr_v="empty")


def poly_edge_deleted(g: Graph, e: tuple[int, int], p_minus: P | None = None, **kw) -> P:
    """``B(G)`` for ``G`` containing edge ``e``, from ``B(G - e)`` (enumerated when
    not given) and two restricted terms of ``G - e``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    h = g.delete_edge(u, v)
    if p_minus is None:
        p_minus = boundary_polynomial(h, **kw)
    return edge_removal_identity(p_minus, *edge_removal_terms(h, u, v, **kw))


def poly_bridge(vec1: Sequence[P], vec2: Sequence[P]) -> P:
    """Row ``(B^1_u, B^0_{u^0}, B^0_{u^1})`` of G1, matrix [[1, x, 1], [x, 1, 1],
    [1, 1, 1]], column likewise for G2 at ``v``."""
    a1, b1, c1 = vec1
    a2, b2, c2 = vec2
    row = (
        a1 + b1.shift(1, 0) + c1,
        a1.shift(1, 0) + b1 + c1,
        a1 + b1 + c1,
    )
    out = row[0] * a2 + row[1] * b2 + row[2] * c2
    n = a1.n + a2.n if a1.n is not None and a2.n is not None else None
    return out.with_order(n)


def bridge_vector(vec: Sequence[P]) -> tuple[P, P, P]:
    """Collapse a restricted 4-vector into the 3 entries the bridge product uses."""
    return vec[2] + vec[3], vec[0], vec[1]


def poly_corona_p2(p1: P, n1: int, p2: P, n2: int) -> P:
    _bound(n1 >= 1 and n2 >= 1, "corona operands need order >= 1")
    tail = (_x_plus_y(n1) + _x_plus_y(n2)).shift(0, 1)
    out = poly_cone(p1, n1) * poly_cone(p2, n2) + tail.shift(1, 0) - tail
    return out.with_order(n1 + n2 + 2)


def poly_subdivided(g: Graph, e: tuple[int, int], **kw) -> P:
    """``B(G')`` where ``G'`` replaces edge ``uv`` by ``u - w - v``, from the
    two-vertex restricted polynomials of ``G``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    t = restricted_table(g, u, v, **kw)
    x = (1, 0)
    terms = [
        (t.get(0, 0), (0, 0)),
        (t.get(1, 0, nbr_v="empty"), (0, 0)),
        (t.get(1, 0, nbr_v="nonempty"), x),
        (t.get(0, 1, nbr_u="empty"), (0, 0)),
        (t.get(0, 1, nbr_u="nonempty"), x),
        (t.get(1, 1), x),
        (t.get(0, 0, "empty", "empty"), (2, 1)),
        (t.get(0, 0, "nonempty", "empty"), (1, 1)),
        (t.get(0, 0, "empty", "nonempty"), (1, 1)),
        (t.get(0, 0, "nonempty", "nonempty"), (0, 1)),
        (t.get(1, 1), (0, 1)),
        (t.get(1, 0), (0, 1)),
        (t.get(0, 1), (0, 1)),
    ]
    out = ZERO
    for poly, (dx, dy) in terms:
        out = out + poly.shift(dx, dy)
    return out.with_order(g.n + 1)


# -- dispatch used by the CLI -------------------------------------------------------

FAMILY_FORMULAS = {
    "empty": poly_empty,
    "complete": poly_complete,
    "path": poly_path,
    "cycle": poly_cycle,
    "wheel": poly_wheel,
    "star": poly_star,
    "complete_bipartite": poly_complete_bipartite,
    "complete_minus_edge": poly_complete_minus_edge,
    "double_star": poly_double_star,
}


def family_polynomial(name: str, *params: int) -> P:
    try:
        fn = FAMILY_FORMULAS[name.replace("-", "_")]
    except KeyError:
        raise KeyError(f"no closed form for family {name!r}") from None
    return fn(*params)
