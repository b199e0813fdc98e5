"""Exact bivariate integer polynomials in ``x`` (boundary size) and ``y`` (set size).

Coefficients are Python ints held in a numpy object array ``coeffs[i, j]`` for the
monomial ``x**i * y**j``.  Intermediate results may carry negative coefficients;
graph-derived polynomials never do.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

# Univariate results are tuples of ints, lowest degree first.
Univariate = tuple


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.argwhere(a != 0)
    if nz.size == 0:
        return np.zeros((1, 1), dtype=object)
    di, dj = nz.max(axis=0)
    return a[: di + 1, : dj + 1].copy()


def _grid(shape: tuple[int, int]) -> np.ndarray:
    return np.zeros(shape, dtype=object)


@dataclass(frozen=True)
class LaurentProfile:
    degree_sum: int  # max i + j over the support
    degree_diff: int  # max i - j over the support


class BoundaryPolynomial:
    """Immutable bivariate polynomial with an optional graph-order hint ``n``."""

    __slots__ = ("_c", "n")

    def __init__(self, coeffs=None, n: int | None = None):
        if coeffs is None:
            a = _grid((1, 1))
        else:
            a = np.asarray(coeffs)
            if a.ndim != 2:
                raise ValueError("coefficient grid must be two-dimensional")
            if a.size == 0:
                a = _grid((1, 1))
            elif a.dtype != object:
                # int64 grids from the kernels must become Python ints
                if a.dtype.kind not in "iub":
                    raise TypeError(f"integer coefficients required, got {a.dtype}")
                a = a.astype(object)
        self._c = _trim(a)
        self._c.flags.writeable = False
        self.n = n

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c: int, n: int | None = None) -> BoundaryPolynomial:
        return cls([[c]], n)

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> BoundaryPolynomial:
        a = _grid((i + 1, j + 1))
        a[i, j] = c
        return cls(a)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], n: int | None = None):
        if not terms:
            return cls(None, n)
        di = max(i for i, _ in terms)
        dj = max(j for _, j in terms)
        a = _grid((di + 1, dj + 1))
        for (i, j), c in terms.items():
            a[i, j] += c
        return cls(a, n)

    @classmethod
    def binomial_power(cls, a: int, b: int, k: int) -> BoundaryPolynomial:
        """``(a*x + b*y)**k`` for small integer ``a, b``; ``a = 0`` / ``b = 0`` allowed."""
        g = _grid((k + 1, k + 1))
        for j in range(k + 1):
            g[k - j, j] = comb(k, j) * a ** (k - j) * b**j
        return cls(g)

    # -- coefficient access ---------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only trimmed grid indexed ``[x-exponent, y-exponent]``."""
        return self._c

    @property
    def deg_x(self) -> int:
        return self._c.shape[0] - 1

    @property
    def deg_y(self) -> int:
        return self._c.shape[1] - 1

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < self._c.shape[0] and 0 <= j < self._c.shape[1]:
            return self._c[i, j]
        return 0

    def terms(self) -> list[tuple[int, int, int]]:
        """Nonzero ``(i, j, c)`` in ascending ``j``, then ascending ``i``."""
        c = self._c
        return [
            (i, j, c[i, j])
            for j in range(c.shape[1])
            for i in range(c.shape[0])
            if c[i, j] != 0
        ]

    def slice_y(self, j: int) -> Univariate:
        """Coefficient of ``y**j`` as a polynomial in ``x``."""
        if not 0 <= j < self._c.shape[1]:
            return (0,)
        return _trim_uni(tuple(self._c[:, j]))

    def slice_x(self, i: int) -> Univariate:
        if not 0 <= i < self._c.shape[0]:
            return (0,)
        return _trim_uni(tuple(self._c[i, :]))

    def is_zero(self) -> bool:
        return self._c.shape == (1, 1) and self._c[0, 0] == 0

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c.flat)

    # -- arithmetic -----------------------------------------------------------

    def _aligned(self, other: BoundaryPolynomial):
        shape = (
            max(self._c.shape[0], other._c.shape[0]),
            max(self._c.shape[1], other._c.shape[1]),
        )
        a = _grid(shape)
        b = _grid(shape)
        a[: self._c.shape[0], : self._c.shape[1]] = self._c
        b[: other._c.shape[0], : other._c.shape[1]] = other._c
        return a, b

    def _hint(self, other: BoundaryPolynomial) -> int | None:
        if self.n is None:
            return other.n
        if other.n is None:
            return self.n
        return max(self.n, other.n)

    def __add__(self, other):
        if isinstance(other, int):
            other = BoundaryPolynomial.constant(other)
        if not isinstance(other, BoundaryPolynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return BoundaryPolynomial(a + b, self._hint(other))

    __radd__ = __add__

    def __neg__(self):
        return BoundaryPolynomial(-self._c, self.n)

    def __sub__(self, other):
        if isinstance(other, int):
            other = BoundaryPolynomial.constant(other)
        if not isinstance(other, BoundaryPolynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return BoundaryPolynomial(a - b, self._hint(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BoundaryPolynomial(self._c * other, self.n)
        if not isinstance(other, BoundaryPolynomial):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BoundaryPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, dx: int = 0, dy: int = 0, c: int = 1) -> BoundaryPolynomial:
        """Multiply by the monomial ``c * x**dx * y**dy``."""
        a = _grid((self._c.shape[0] + dx, self._c.shape[1] + dy))
        a[dx:, dy:] = self._c * c
        return BoundaryPolynomial(a, self.n)

    def with_order(self, n: int | None) -> BoundaryPolynomial:
        p = BoundaryPolynomial.__new__(BoundaryPolynomial)
        p._c = self._c
        p.n = n
        return p

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = BoundaryPolynomial.constant(other)
        if not isinstance(other, BoundaryPolynomial):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash((self._c.shape, tuple(self._c.flat)))

    def first_difference(self, other: BoundaryPolynomial):
        """First ``(i, j, mine, theirs)`` in emit order where the two differ, or None."""
        a, b = self._aligned(other)
        for j in range(a.shape[1]):
            for i in range(a.shape[0]):
                if a[i, j] != b[i, j]:
                    return i, j, a[i, j], b[i, j]
        return None

    def __repr__(self):
        return f"BoundaryPolynomial({to_plain(self)!r}, n={self.n})"

    def __str__(self):
        return to_plain(self)

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x0, y0) -> Fraction:
        return evaluate(self, x0, y0)


def _trim_uni(t: tuple) -> Univariate:
    t = tuple(int(v) for v in t)
    k = len(t)
    while k > 1 and t[k - 1] == 0:
        k -= 1
    return t[:k]


X = BoundaryPolynomial.monomial(1, 0)
Y = BoundaryPolynomial.monomial(0, 1)
ONE = BoundaryPolynomial.constant(1)
ZERO = BoundaryPolynomial()


def add(p: BoundaryPolynomial, q: BoundaryPolynomial) -> BoundaryPolynomial:
    return p + q


def scale(p: BoundaryPolynomial, c: int) -> BoundaryPolynomial:
    return p * c


def multiply(p: BoundaryPolynomial, q: BoundaryPolynomial) -> BoundaryPolynomial:
    """Bivariate convolution; the order hint becomes the sum of the hints."""
    a, b = p.coeffs, q.coeffs
    # iterate over the sparser operand, add shifted copies of the other
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = _grid((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1))
    for i, j in np.argwhere(a != 0):
        out[i : i + b.shape[0], j : j + b.shape[1]] += a[i, j] * b
    n = p.n + q.n if p.n is not None and q.n is not None else None
    return BoundaryPolynomial(out, n)


def coefficient(p: BoundaryPolynomial, i: int, j: int) -> int:
    return p.coefficient(i, j)


def slice_y(p: BoundaryPolynomial, j: int) -> Univariate:
    return p.slice_y(j)


def evaluate(p: BoundaryPolynomial, x0, y0) -> Fraction:
    """Exact value at rational ``(x0, y0)`` via Horner in both variables."""
    x0, y0 = Fraction(x0), Fraction(y0)
    total = Fraction(0)
    c = p.coeffs
    for i in range(c.shape[0] - 1, -1, -1):
        row = Fraction(0)
        for j in range(c.shape[1] - 1, -1, -1):
            row = row * y0 + c[i, j]
        total = total * x0 + row
    return total


def uni_evaluate(u: Univariate, t) -> Fraction:
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(u):
        acc = acc * t + c
    return acc


def uni_derivative(u: Univariate, k: int = 1) -> Univariate:
    for _ in range(k):
        u = tuple(i * c for i, c in enumerate(u))[1:] or (0,)
    return _trim_uni(u)


def uni_multiply(a: Univariate, b: Univariate) -> Univariate:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim_uni(tuple(out))


def uni_divmod(a: Univariate, b: Univariate) -> tuple[Univariate, Univariate]:
    """Exact division over the integers; ``b`` must be monic."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (0,), _trim_uni(tuple(rem))
    q = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db]
        q[k] = c
        if c:
            for t in range(db + 1):
                rem[k + t] -= c * b[t]
    return _trim_uni(tuple(q)), _trim_uni(tuple(rem[:db] or [0]))


def substitute_x0(p: BoundaryPolynomial) -> Univariate:
    """``B(x=0, y)``, i.e. the ``x**0`` row."""
    return p.slice_x(0)


def differential_polynomial(p: BoundaryPolynomial) -> Univariate:
    """``x**n * B(x, 1/x)``: coefficient of ``x**(n+i-j)`` accumulates ``B[i, j]``."""
    if p.n is None:
        raise ValueError("differential polynomial needs the graph order hint n")
    n = p.n
    out = [0] * (2 * n + 1)
    for i, j, c in p.terms():
        e = n + i - j
        if not 0 <= e <= 2 * n:
            raise ValueError(f"term x^{i} y^{j} incompatible with order {n}")
        out[e] += c
    return _trim_uni(tuple(out))


def laurent_profile(p: BoundaryPolynomial) -> LaurentProfile:
    t = p.terms()
    if not t:
        raise ValueError("zero polynomial has no degree")
    return LaurentProfile(
        degree_sum=max(i + j for i, j, _ in t),
        degree_diff=max(i - j for i, j, _ in t),
    )


def _divide_y_plus_one(c: np.ndarray):
    """Divide by ``(y + 1)`` treating ``c`` as a polynomial in ``y`` with
    polynomial-in-``x`` coefficients; returns the quotient grid or None."""
    dy = c.shape[1] - 1
    if dy == 0:
        return None
    rem = c.copy()
    q = _grid((c.shape[0], dy))
    for k in range(dy - 1, -1, -1):
        col = rem[:, k + 1].copy()
        q[:, k] = col
        rem[:, k + 1] -= col
        rem[:, k] -= col
    if np.any(rem != 0):
        return None
    return q


def y_plus_one_multiplicity(p: BoundaryPolynomial) -> int:
    return _deflate(p)[0]


def deflate(p: BoundaryPolynomial) -> BoundaryPolynomial:
    """``p / (y + 1)**k`` for the largest such ``k``."""
    return _deflate(p)[1]


def _deflate(p: BoundaryPolynomial):
    if p.is_zero():
        raise ValueError("zero polynomial is divisible by (y+1) arbitrarily often")
    k = 0
    c = p.coeffs
    while (q := _divide_y_plus_one(c)) is not None:
        c = q
        k += 1
    n = p.n - k if p.n is not None else None
    return k, BoundaryPolynomial(c, n)


# -- rendering ----------------------------------------------------------------


def _plain_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _latex_monomial(i: int, j: int) -> str:
    s = ""
    if i:
        s += "x" if i == 1 else f"x^{{{i}}}"
    if j:
        s += "y" if j == 1 else f"y^{{{j}}}"
    return s


def _render(p: BoundaryPolynomial, mono, sep: str) -> str:
    out = []
    for i, j, c in p.terms():
        m = mono(i, j)
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}{sep}{m}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


def to_plain(p: BoundaryPolynomial) -> str:
    return _render(p, _plain_monomial, "*")


def to_latex(p: BoundaryPolynomial) -> str:
    return _render(p, _latex_monomial, "")


def to_json(p: BoundaryPolynomial) -> str:
    doc = {
        "n": p.n,
        "coefficients": [{"x": i, "y": j, "c": str(c)} for i, j, c in p.terms()],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> BoundaryPolynomial:
    doc = json.loads(text)
    terms: dict[tuple[int, int], int] = {}
    for t in doc["coefficients"]:
        key = (int(t["x"]), int(t["y"]))
        terms[key] = terms.get(key, 0) + int(t["c"])
    return BoundaryPolynomial.from_terms(terms, doc.get("n"))


FORMATS = {"plain": to_plain, "latex": to_latex, "json": to_json}


def emit(p: BoundaryPolynomial, fmt: str = "plain") -> str:
    try:
        return FORMATS[fmt](p)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {sorted(FORMATS)}") from None
