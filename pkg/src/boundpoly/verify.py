"""Per-theorem checks: closed forms and identities against enumeration.

Each checker takes a graph and returns ``None`` on success or a string describing
the first counterexample.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from math import comb

from . import formulas as F
from . import invariants as inv
from .enumerator import boundary_polynomial, restricted_vector
from .graphs import (
    Graph,
    bridge,
    complete_graph,
    connected_components,
    corona_p2,
    cycle_graph,
    double_star,
    empty_graph,
    join,
    path_graph,
)
from .poly import (
    ONE,
    BoundaryPolynomial,
    evaluate,
    multiply,
    substitute_x0,
    uni_multiply,
    y_plus_one_multiplicity,
)

Checker = Callable[[Graph], "str | None"]

# Small fixed partners for the compositional checks.
_PARTNERS = [empty_graph(1), complete_graph(2), empty_graph(2), path_graph(3)]


def _bp(g: Graph) -> BoundaryPolynomial:
    return boundary_polynomial(g)


def _diff(label: str, got: BoundaryPolynomial, want: BoundaryPolynomial) -> str | None:
    d = got.first_difference(want)
    if d is None:
        return None
    i, j, a, b = d
    return f"{label}: coefficient of x^{i} y^{j} is {a}, expected {b}"


def check_factors(g: Graph) -> str | None:
    prod = ONE
    for comp in connected_components(g):
        prod = multiply(prod, _bp(g.induced_subgraph(comp)))
    return _diff("component product", prod, _bp(g))


def check_eval(g: Graph) -> str | None:
    p = _bp(g)
    n = g.n
    for j in range(n + 1):
        if sum(p.slice_y(j)) != comb(n, j):
            return f"row sum at y^{j} is {sum(p.slice_y(j))}, expected C({n},{j})"
    if evaluate(p, 1, 1) != 2**n:
        return f"B(1,1) = {evaluate(p, 1, 1)}, expected 2^{n}"
    if n >= 1 and evaluate(p, 1, -1) != 0:
        return f"B(1,-1) = {evaluate(p, 1, -1)}, expected 0"
    comps = connected_components(g)
    if evaluate(p, 0, 1) != 2 ** len(comps):
        return f"B(0,1) = {evaluate(p, 0, 1)}, expected 2^{len(comps)}"
    want = (1,)
    for c in comps:
        want = uni_multiply(want, (1,) + (0,) * (len(c) - 1) + (1,))
    if substitute_x0(p) != want:
        return "B(0,y) is not the product of (1 + y^n_i) over components"
    if n >= 3 and inv.size_from_alt(p) != g.m:
        return f"alternative size formula gives {inv.size_from_alt(p)}, expected {g.m}"
    return None


def check_isolated(g: Graph) -> str | None:
    p = _bp(g)
    iso = sum(1 for d in g.degrees() if d == 0)
    k = y_plus_one_multiplicity(p)
    if k != iso:
        return f"(y+1) multiplicity {k}, but {iso} isolated vertices"
    return None


def check_coefficients(g: Graph) -> str | None:
    p = _bp(g)
    n = g.n
    for j in range(n + 1):
        if p.coefficient(0, j) != p.coefficient(0, n - j):
            return f"B[0,{j}] != B[0,{n - j}]"
    if n and (p.coefficient(0, 0), p.coefficient(0, n)) != (1, 1):
        return "B[0,0] or B[0,n] is not 1"
    report = inv.invariant_report(p).to_dict()
    oracle = inv.oracle_report(g)
    for key, want in oracle.items():
        if report[key] != want:
            return f"{key}: polynomial gives {report[key]}, graph gives {want}"
    if not inv.min_degree_check(p, g.min_degree):
        return "top rows do not match binomials up to the minimum degree"
    return None


def check_join(g: Graph) -> str | None:
    if g.n == 0:
        return None
    p = _bp(g)
    for h in _PARTNERS + [g]:
        got = F.poly_join(p, g.n, _bp(h), h.n)
        msg = _diff(f"join with {h!r}", got, _bp(join(g, h)))
        if msg:
            return msg
        if g.n + h.n <= inv.ORACLE_CAP and not inv.check_join_identities(g, h):
            return f"join parameter identities fail for {g!r} + {h!r}"
    msg = _diff("cone", F.poly_cone(p, g.n), _bp(join(empty_graph(1), g)))
    return msg


def check_pendant(g: Graph) -> str | None:
    for v in range(g.n):
        got = F.pendant_transfer(restricted_vector(g, v))
        want = restricted_vector(g.add_pendant(v), g.n)
        for k, (a, b) in enumerate(zip(got, want)):
            msg = _diff(f"pendant at {v}, slot {k}", a, b)
            if msg:
                return msg
    return None


def check_path(g: Graph) -> str | None:
    for n in range(g.n + 1):
        msg = _diff(f"P{n}", F.poly_path(n), _bp(path_graph(n)))
        if msg:
            return msg
    return None


def check_cycle(g: Graph) -> str | None:
    for n in range(3, max(g.n, 3) + 1):
        msg = _diff(f"C{n}", F.poly_cycle(n), _bp(cycle_graph(n)))
        if msg:
            return msg
    return None


def check_edge_delete(g: Graph) -> str | None:
    p = _bp(g)
    for u, v in g.edges():
        msg = _diff(f"edge {u}-{v} removal", F.poly_edge_deleted(g, (u, v)), p)
        if msg:
            return msg
    return None


def check_bridge(g: Graph) -> str | None:
    for h in _PARTNERS[:3]:
        for u in range(g.n):
            for v in range(h.n):
                got = F.poly_bridge(
                    F.bridge_vector(restricted_vector(g, u)),
                    F.bridge_vector(restricted_vector(h, v)),
                )
                msg = _diff(f"bridge {u} to {h!r}:{v}", got, _bp(bridge(g, u, h, v)))
                if msg:
                    return msg
    return None


def check_corona(g: Graph) -> str | None:
    if g.n == 0:
        return None
    p = _bp(g)
    for h in _PARTNERS[:3] + [g]:
        got = F.poly_corona_p2(p, g.n, _bp(h), h.n)
        msg = _diff(f"corona with {h!r}", got, _bp(corona_p2(g, h)))
        if msg:
            return msg
    return None


def check_double_star(g: Graph) -> str | None:
    for total in range(4, max(g.n, 4) + 1):
        for r in range(2, total - 1):
            t = total - r
            msg = _diff(f"S_{r},{t}", F.poly_double_star(r, t), _bp(double_star(r, t)))
            if msg:
                return msg
    return None


def check_subdivision(g: Graph) -> str | None:
    for u, v in g.edges():
        got = F.poly_subdivided(g, (u, v))
        msg = _diff(f"subdividing {u}-{v}", got, _bp(g.subdivide_edge(u, v)))
        if msg:
            return msg
    return None


def check_subgraph(g: Graph) -> str | None:
    p = _bp(g)
    for u, v in g.edges():
        q = _bp(g.delete_edge(u, v))
        if q == p:
            return f"removing {u}-{v} leaves the polynomial unchanged"
        quotient = x_minus_one_quotient(p - q)
        if quotient is None or not quotient.is_nonnegative() or quotient.is_zero():
            return f"B(G) - B(G - {u}{v}) is not (x-1) times a nonzero non-negative polynomial"
    for v in range(g.n):
        if _bp(g.delete_vertex(v)) == p:
            return f"removing vertex {v} leaves the polynomial unchanged"
    return None


def x_minus_one_quotient(d: BoundaryPolynomial) -> BoundaryPolynomial | None:
    """Exact ``d / (x - 1)``, or None when ``(x - 1)`` does not divide ``d``."""
    c = d.coeffs.copy()
    if c.shape[0] == 1:
        return BoundaryPolynomial() if d.is_zero() else None
    q = [[0] * c.shape[1] for _ in range(c.shape[0] - 1)]
    # synthetic division by (x - 1), top x-degree downwards
    for i in range(c.shape[0] - 1, 0, -1):
        for j in range(c.shape[1]):
            q[i - 1][j] = c[i, j]
            c[i - 1, j] += c[i, j]
            c[i, j] = 0
    if any(c[0, j] != 0 for j in range(c.shape[1])):
        return None
    return BoundaryPolynomial(q)


CHECKS: dict[str, Checker] = {
    "factors": check_factors,
    "eval": check_eval,
    "isolated": check_isolated,
    "coefficients": check_coefficients,
    "join": check_join,
    "pendant": check_pendant,
    "path": check_path,
    "edge-delete": check_edge_delete,
    "cycle": check_cycle,
    "bridge": check_bridge,
    "corona": check_corona,
    "double-star": check_double_star,
    "subdivision": check_subdivision,
    "subgraph": check_subgraph,
}


@dataclass
class CheckOutcome:
    check: str
    graphs: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def run_checks(names: list[str], graphs: list[Graph]) -> list[CheckOutcome]:
    if names == ["all"] or "all" in names:
        names = list(CHECKS)
    unknown = [s for s in names if s not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks {unknown}; known: all, {', '.join(CHECKS)}")
    out = []
    for name in names:
        res = CheckOutcome(name, 0)
        for g in graphs:
            res.graphs += 1
            msg = CHECKS[name](g)
            if msg:
                res.counterexample = f"{g!r}: {msg}"
                break
        out.append(res)
    return out
