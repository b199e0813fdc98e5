import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boundpoly.catalog import random_graphs
from boundpoly.enumerator import (
    EnumerationCapError,
    RestrictedSpec,
    boundary,
    boundary_polynomial,
    restricted_polynomial,
    restricted_table,
    restricted_vector,
)
from boundpoly.graphs import Graph, complete_graph, cycle_graph, path_graph, prism_graph
from boundpoly.kernels import available_backends, enumerate_counts, prefix_bits
from boundpoly.poly import BoundaryPolynomial
from naive import naive_poly
from test_graphs import graphs

BACKENDS = available_backends()
SAMPLE = [Graph(0), Graph(1), Graph(3), path_graph(2), complete_graph(4), prism_graph()] + \
    random_graphs(7, 6, seed=11) + random_graphs(9, 3, seed=12)


def test_both_backends_available():
    assert BACKENDS == ["numba", "numpy"]


def test_boundary_of_a_set():
    g = path_graph(5)
    assert boundary(g, {2}) == {1, 3}
    assert boundary(g, {0, 1}) == {2}
    assert boundary(g, []) == frozenset()
    with pytest.raises(ValueError):
        boundary(g, {7})


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("g", SAMPLE, ids=repr)
def test_polynomial_matches_naive(g, backend):
    assert boundary_polynomial(g, backend=backend) == naive_poly(g)


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("workers", [2, 3, 8])
def test_parallel_blocks_agree(backend, workers):
    g = random_graphs(12, 1, seed=5)[0]
    serial = enumerate_counts(g.adj, 2, 7, backend=backend)
    assert np.array_equal(enumerate_counts(g.adj, 2, 7, workers=workers, backend=backend), serial)
    assert boundary_polynomial(g, workers=workers, backend=backend) == \
        boundary_polynomial(g, backend=backend)


def test_prefix_bits():
    assert prefix_bits(20, 1) == 2
    assert prefix_bits(20, 4) == 4
    assert prefix_bits(2, 64) == 2
    assert prefix_bits(0, 1) == 0


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_backends_agree_on_class_split(g):
    if g.n < 2:
        return
    a = enumerate_counts(g.adj, 0, g.n - 1, backend="numba")
    b = enumerate_counts(g.adj, 0, g.n - 1, backend="numpy")
    assert np.array_equal(a, b)


def test_cap():
    with pytest.raises(EnumerationCapError):
        boundary_polynomial(cycle_graph(25))
    with pytest.raises(EnumerationCapError):
        boundary_polynomial(cycle_graph(5), max_n=4)
    with pytest.raises(ValueError):
        boundary_polynomial(cycle_graph(5), max_n=31)
    assert boundary_polynomial(cycle_graph(25), max_n=25)(1, 1) == 2**25


def test_backend_env_flag():
    code = "from boundpoly.kernels import default_backend; print(default_backend())"
    for flag in ("numpy", "numba"):
        env = dict(os.environ, BOUNDPOLY_BACKEND=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
        assert out.stdout.strip() == flag
    env = dict(os.environ, BOUNDPOLY_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode != 0 and "BOUNDPOLY_BACKEND" in out.stderr


def test_unknown_backend():
    with pytest.raises(ValueError):
        enumerate_counts(path_graph(3).adj, backend="gpu")


# -- restricted polynomials ------------------------------------------------------


def _nbr_ok(cond, hit):
    return cond == "any" or (cond == "nonempty") == hit


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("g", SAMPLE[3:], ids=repr)
def test_two_vertex_table_matches_naive(g, backend):
    u, v = 0, g.n - 1
    t = restricted_table(g, u, v, backend=backend)
    for mu in (None, 0, 1):
        for mv in (None, 0, 1):
            for cu in ("any", "empty", "nonempty"):
                for cv in ("any", "empty", "nonempty"):
                    def keep(S, N):
                        return (
                            (mu is None or (u in S) == mu)
                            and (mv is None or (v in S) == mv)
                            and _nbr_ok(cu, bool(N[u] & (S - {v})))
                            and _nbr_ok(cv, bool(N[v] & (S - {u})))
                        )
                    assert t.get(mu, mv, cu, cv) == naive_poly(g, keep), (mu, mv, cu, cv)


def test_restricted_vector_of_p2():
    a, b, c, d = restricted_vector(path_graph(2), 0)
    X, Y = BoundaryPolynomial.monomial(1, 0), BoundaryPolynomial.monomial(0, 1)
    assert (a, b, c, d) == (BoundaryPolynomial.constant(1), X * Y, X * Y, Y * Y)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7), st.data())
def test_restricted_vector_partitions_polynomial(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    vec = restricted_vector(g, v)
    assert vec[0] + vec[1] + vec[2] + vec[3] == boundary_polynomial(g)
    assert vec[0] == naive_poly(g, lambda S, N: v not in S and not N[v] & S)
    assert vec[3] == naive_poly(g, lambda S, N: v in S and bool(N[v] & S))


def test_restricted_spec():
    g = cycle_graph(5)
    spec = RestrictedSpec.of((1, 1), (3, 0, "empty"))
    want = naive_poly(g, lambda S, N: 1 in S and 3 not in S and not N[3] & (S - {1}))
    assert restricted_polynomial(g, spec) == want
    assert restricted_polynomial(g, RestrictedSpec.of((2, 0, "nonempty"))) == \
        naive_poly(g, lambda S, N: 2 not in S and bool(N[2] & S))


@pytest.mark.parametrize(
    "bad",
    [lambda: RestrictedSpec.of(), lambda: RestrictedSpec.of((0, 2)),
     lambda: RestrictedSpec.of((0, 1, "maybe")), lambda: RestrictedSpec.of((0, 1), (0, 0)),
     lambda: RestrictedSpec.of((0, 1), (1, 1), (2, 1))],
)
def test_bad_specs(bad):
    with pytest.raises(ValueError):
        bad()


def test_bad_marks():
    g = path_graph(3)
    with pytest.raises(ValueError):
        restricted_table(g, 0, 0)
    with pytest.raises(ValueError):
        restricted_table(g, 5)
    with pytest.raises(ValueError):
        restricted_table(g, 0).get(0, 1)
