"""Formal rational linear combinations of graph classes, and their algebra.

A `LinComb` holds finitely many isomorphism classes of labeled r-uniform
graphs (keyed by canonical representative) with Fraction coefficients, for
a fixed uniformity r and finite label set U. The product of two classes
sums over all graphs on the disjoint union of their vertex sets restricting
to each factor, with every mixed r-set free; `nind` sums over supergraphs
on the same vertices; `lift` rewrites an element as a combination of
classes of one fixed order by repeatedly multiplying with the sum of
single-vertex classes (which is the identity in the quotient algebra).

Equality in the quotient is decided by `alg_equal` via lifting both sides
to a common order. `eval_quasirandom` evaluates the homomorphism sending a
class with v vertices and e edges to p^e (1-p)^(C(v,r)-e) |U|^(-v).

All arithmetic is exact (fractions.Fraction); nothing here is numeric.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations

from .errors import InputError, SeparationError
from .graphs import Graph, canonical, graph_from_text, graph_to_text

__all__ = [
    "LinComb",
    "UniformRep",
    "alg_equal",
    "coeff_positive_at",
    "eval_quasirandom",
    "extend_label_set",
    "lift",
    "lincomb_from_text",
    "lincomb_to_text",
    "nind",
    "order",
    "point",
    "point_sum",
    "product",
    "unit",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise InputError(f"coefficients must be exact rationals, got {type(x).__name__}")


class LinComb:
    """A finite formal sum of graph classes with Fraction coefficients.

    Instances should be treated as immutable. Graph keys are stored by
    canonical representative; zero coefficients are dropped, so two values
    are equal iff they are the same element of the free vector space.
    """

    __slots__ = ("r", "label_set", "coeffs")

    def __init__(self, r: int, label_set=frozenset({0}), coeffs=None):
        if r < 1:
            raise InputError(f"uniformity must be >= 1, got {r}")
        label_set = frozenset(int(x) for x in label_set)
        if not label_set:
            raise InputError("label set must be nonempty")
        norm: dict[Graph, Fraction] = {}
        for g, c in (coeffs or {}).items():
            c = _as_fraction(c)
            if c == 0:
                continue
            if g.r != r:
                raise InputError(f"term {g!r} has uniformity {g.r}, expected {r}")
            if not set(g.labels) <= label_set:
                raise InputError(
                    f"term {g!r} uses labels outside {sorted(label_set)}"
                )
            key = canonical(g)[0]
            norm[key] = norm.get(key, Fraction(0)) + c
            if norm[key] == 0:
                del norm[key]
        self.r = r
        self.label_set = label_set
        self.coeffs = norm

    @classmethod
    def _raw(cls, r: int, label_set: frozenset, coeffs: dict) -> "LinComb":
        """Internal: keys already canonical, zeros already dropped."""
        self = object.__new__(cls)
        self.r = r
        self.label_set = label_set
        self.coeffs = coeffs
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, r: int, label_set=frozenset({0})) -> "LinComb":
        return cls(r, label_set, {})

    @classmethod
    def from_graph(cls, g: Graph, label_set=None, coeff=1) -> "LinComb":
        if label_set is None:
            label_set = frozenset(g.labels) | {0}
        return cls(g.r, label_set, {g: _as_fraction(coeff)})

    # -- structure ---------------------------------------------------------

    def terms(self) -> list[tuple[Graph, Fraction]]:
        """Terms sorted by (order, labels, edges) — the printing order."""
        return sorted(
            self.coeffs.items(), key=lambda kv: (kv[0].n, kv[0].labels, kv[0].edges)
        )

    def coefficient(self, g: Graph) -> Fraction:
        return self.coeffs.get(canonical(g)[0], Fraction(0))

    def _check_compatible(self, other: "LinComb") -> None:
        if self.r != other.r:
            raise InputError(f"uniformity mismatch: {self.r} vs {other.r}")
        if self.label_set != other.label_set:
            raise InputError(
                f"label set mismatch: {sorted(self.label_set)} vs "
                f"{sorted(other.label_set)}"
            )

    # -- vector space ops --------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, Fraction(0)) + c
            if out[g] == 0:
                del out[g]
        return LinComb._raw(self.r, self.label_set, out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __rmul__(self, scalar) -> "LinComb":
        c = _as_fraction(scalar)
        if c == 0:
            return LinComb._raw(self.r, self.label_set, {})
        return LinComb._raw(
            self.r, self.label_set, {g: c * v for g, v in self.coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, LinComb):
            return product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinComb)
            and self.r == other.r
            and self.label_set == other.label_set
            and self.coeffs == other.coeffs
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return lincomb_to_text(self)


class UniformRep:
    """A LinComb all of whose terms have the same vertex count n."""

    __slots__ = ("lincomb", "n")

    def __init__(self, lincomb: LinComb, n: int):
        if n < 0:
            raise InputError(f"order must be >= 0, got {n}")
        for g in lincomb.coeffs:
            if g.n != n:
                raise InputError(
                    f"term {g!r} has order {g.n}, expected uniform order {n}"
                )
        self.lincomb = lincomb
        self.n = n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniformRep)
            and self.n == other.n
            and self.lincomb == other.lincomb
        )

    def __repr__(self) -> str:
        return f"UniformRep(n={self.n}, {self.lincomb!r})"


# ---------------------------------------------------------------------------
# generators


def unit(r: int, label_set=frozenset({0})) -> LinComb:
    """The class of the empty graph — the multiplicative identity."""
    return LinComb.from_graph(Graph(r, 0), label_set)


def point(r: int, label: int, label_set=frozenset({0})) -> LinComb:
    """The class of a single vertex carrying `label`."""
    return LinComb.from_graph(Graph(r, 1, (label,)), label_set)


def point_sum(r: int, label_set=frozenset({0})) -> LinComb:
    """Sum of single-vertex classes over all labels; acts as identity
    in the quotient algebra."""
    out = LinComb.zero(r, label_set)
    for lab in sorted(label_set):
        out = out + point(r, lab, label_set)
    return out


def _coerce(f, label_set=None) -> LinComb:
    if isinstance(f, UniformRep):
        return f.lincomb
    if isinstance(f, LinComb):
        return f
    if isinstance(f, Graph):
        return LinComb.from_graph(f, label_set)
    raise InputError(f"expected LinComb, UniformRep or Graph, got {type(f).__name__}")


def order(f) -> int:
    """Largest vertex count among terms (0 for the zero element)."""
    f = _coerce(f)
    return max((g.n for g in f.coeffs), default=0)


# ---------------------------------------------------------------------------
# product, supergraph sum, lift


def product(f, g) -> LinComb:
    """Algebra product: all graphs on the disjoint vertex union restricting
    to the two factors, every r-set meeting both sides chosen freely."""
    f = _coerce(f)
    g = _coerce(g, f.label_set)
    f._check_compatible(g)
    r = f.r
    out: dict[Graph, Fraction] = {}
    for gf, a in f.coeffs.items():
        for gg, b in g.coeffs.items():
            c = a * b
            n1, n2 = gf.n, gg.n
            n = n1 + n2
            labels = gf.labels + gg.labels
            base = list(gf.edges) + [
                tuple(v + n1 for v in e) for e in gg.edges
            ]
            cross = [
                e
                for e in combinations(range(n), r)
                if e[0] < n1 and e[-1] >= n1
            ]
            for bits in range(1 << len(cross)):
                extra = [cross[i] for i in range(len(cross)) if bits >> i & 1]
                h = Graph(r, n, labels, tuple(base + extra))
                key = canonical(h)[0]
                out[key] = out.get(key, Fraction(0)) + c
                if out[key] == 0:
                    del out[key]
    return LinComb._raw(r, f.label_set, out)


def nind(f, label_set=None) -> LinComb:
    """Sum of all spanning supergraphs of each term (same vertices and
    labels, any superset of the edges), weighted by the term coefficient."""
    f = _coerce(f, label_set)
    out: dict[Graph, Fraction] = {}
    for g, c in f.coeffs.items():
        missing = [
            e for e in combinations(range(g.n), f.r) if e not in g.edge_set
        ]
        for bits in range(1 << len(missing)):
            extra = [missing[i] for i in range(len(missing)) if bits >> i & 1]
            h = Graph(f.r, g.n, g.labels, g.edges + tuple(extra))
            key = canonical(h)[0]
            out[key] = out.get(key, Fraction(0)) + c
            if out[key] == 0:
                del out[key]
    return LinComb._raw(f.r, f.label_set, out)


def _extend_by_one(r: int, label_set: frozenset, coeffs: dict) -> dict:
    """One lift step: multiply by the sum of points, i.e. append a vertex
    with every label and every set of edges through it."""
    labs = sorted(label_set)
    out: dict[Graph, Fraction] = {}
    for g, c in coeffs.items():
        k = g.n
        through = [rest + (k,) for rest in combinations(range(k), r - 1)]
        for lab in labs:
            labels = g.labels + (lab,)
            for bits in range(1 << len(through)):
                extra = [through[i] for i in range(len(through)) if bits >> i & 1]
                h = Graph(r, k + 1, labels, g.edges + tuple(extra))
                key = canonical(h)[0]
                out[key] = out.get(key, Fraction(0)) + c
                if out[key] == 0:
                    del out[key]
    return out


def lift(f, n: int) -> UniformRep:
    """Rewrite f as an equal element of the algebra supported on order n.

    Requires n >= the order of every term. Each step multiplies by the
    point sum, which is the identity in the quotient, so the result is the
    same algebra element in uniform shape.
    """
    f = _coerce(f)
    if n < order(f):
        raise InputError(
            f"cannot lift to order {n}: a term already has order {order(f)}"
        )
    # process terms in order buckets so each graph is extended exactly
    # (n - its order) times, merging classes after every step
    buckets: dict[int, dict[Graph, Fraction]] = {}
    for g, c in f.coeffs.items():
        buckets.setdefault(g.n, {})[g] = c
    current: dict[Graph, Fraction] = {}
    for k in range(0, n + 1):
        if k in buckets:
            for g, c in buckets[k].items():
                current[g] = current.get(g, Fraction(0)) + c
                if current[g] == 0:
                    del current[g]
        if k == n:
            break
        if current:
            current = _extend_by_one(f.r, f.label_set, current)
    return UniformRep(LinComb._raw(f.r, f.label_set, current), n)


# ---------------------------------------------------------------------------
# equality in the quotient, positivity, evaluation


def alg_equal(f, g) -> bool:
    """Whether f and g are the same element of the quotient algebra.

    Both sides are lifted to the maximum term order and compared exactly.
    Lift-equality always implies algebra equality. For label sets of size
    one a mismatch at that order is conclusive; otherwise the mismatch is
    re-checked one order higher and a disagreement between the two verdicts
    raises SeparationError rather than guessing.
    """
    f = _coerce(f)
    g = _coerce(g, f.label_set)
    f._check_compatible(g)
    n = max(order(f), order(g))
    eq = lift(f, n).lincomb == lift(g, n).lincomb
    if eq or len(f.label_set) == 1:
        return eq
    eq_next = lift(f, n + 1).lincomb == lift(g, n + 1).lincomb
    if eq_next != eq:
        raise SeparationError(
            f"equality verdict changed between orders {n} and {n + 1}; "
            "minimal-order comparison does not separate these elements"
        )
    return eq


def coeff_positive_at(f, n: int, eps=Fraction(0)) -> bool:
    """Whether every coefficient of the order-n representative of
    f + eps * unit is nonnegative."""
    f = _coerce(f)
    eps = _as_fraction(eps)
    if eps < 0:
        raise InputError(f"eps must be >= 0, got {eps}")
    g = f + eps * unit(f.r, f.label_set)
    rep = lift(g, n)
    return all(c >= 0 for c in rep.lincomb.coeffs.values())


def eval_quasirandom(f, p) -> Fraction:
    """Evaluate at the quasirandom point with edge density p.

    Sends the class of a graph with v vertices and e edges to
    p^e (1-p)^(C(v,r)-e) |U|^(-v), extended linearly. Exact in Fraction
    arithmetic; p must lie in [0, 1].
    """
    f = _coerce(f)
    p = Fraction(p)
    if p < 0 or p > 1:
        raise InputError(f"p must lie in [0, 1], got {p}")
    u = Fraction(1, len(f.label_set))
    total = Fraction(0)
    for g, c in f.coeffs.items():
        e = len(g.edges)
        slots = math.comb(g.n, f.r)
        total += c * p**e * (1 - p) ** (slots - e) * u**g.n
    return total


def extend_label_set(f, label_set) -> LinComb:
    """The same formal sum viewed over a larger label set."""
    f = _coerce(f)
    label_set = frozenset(int(x) for x in label_set)
    if not f.label_set <= label_set:
        raise InputError(
            f"new label set {sorted(label_set)} must contain "
            f"{sorted(f.label_set)}"
        )
    return LinComb._raw(f.r, label_set, dict(f.coeffs))


# ---------------------------------------------------------------------------
# text format

_COEFF_RE = re.compile(r"([0-9]+(?:/[0-9]+)?)\*")


def lincomb_to_text(f: LinComb) -> str:
    if not f.coeffs:
        return "0"
    parts: list[str] = []
    for g, c in f.terms():
        mag = -c if c < 0 else c
        body = (
            f"{mag.numerator}"
            if mag.denominator == 1
            else f"{mag.numerator}/{mag.denominator}"
        )
        term = f"{body}*{graph_to_text(g)}"
        if not parts:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f" - {term}" if c < 0 else f" + {term}")
    return "".join(parts)


def lincomb_from_text(text: str, r: int = None, label_set=None) -> LinComb:
    """Parse the printer's format. The label set is not encoded in the
    text, so pass it explicitly to get anything beyond labels-seen + {0}."""
    s = text.strip()
    if s == "0":
        if r is None:
            raise InputError("cannot infer uniformity of the zero element")
        return LinComb.zero(r, label_set if label_set is not None else {0})
    coeffs: dict[Graph, Fraction] = {}
    pos = 0
    sign = 1
    if s.startswith("-"):
        sign = -1
        pos = 1
        while pos < len(s) and s[pos] == " ":
            pos += 1
    while True:
        m = _COEFF_RE.match(s, pos)
        if m is None:
            raise InputError(f"expected '<rational>*' at position {pos} in {text!r}")
        c = sign * Fraction(m.group(1))
        pos = m.end()
        depth = s.find("}", pos)
        if not s.startswith("graph{", pos) or depth == -1:
            raise InputError(f"expected graph literal at position {pos} in {text!r}")
        g = graph_from_text(s[pos : depth + 1])
        pos = depth + 1
        if r is None:
            r = g.r
        elif g.r != r:
            raise InputError(f"mixed uniformities {r} and {g.r} in {text!r}")
        coeffs[g] = coeffs.get(g, Fraction(0)) + c
        if pos == len(s):
            break
        m2 = re.match(r" ([+-]) ", s[pos:])
        if m2 is None:
            raise InputError(f"expected ' + ' or ' - ' at position {pos} in {text!r}")
        sign = 1 if m2.group(1) == "+" else -1
        pos += 3
    if label_set is None:
        label_set = set()
        for g in coeffs:
            label_set |= set(g.labels)
        label_set |= {0}
    return LinComb(r, label_set, coeffs)
