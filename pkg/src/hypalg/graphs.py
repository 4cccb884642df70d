"""Labeled r-uniform hypergraphs on vertex sets {0, ..., n-1}.

A `Graph` is an immutable value: uniformity `r`, vertex count `n`, a label
per vertex, and a set of r-element edges. Vertices are always the integers
0..n-1, so a graph on k vertices induced by an injection is again a plain
`Graph` and two graphs compare equal iff they are equal as labeled edge
sets on the same vertex count.

`canonical` picks a deterministic representative of each isomorphism class
(and counts automorphisms as a byproduct); `is_isomorphic` answers the
same question pairwise without fixing a representative, which is cheaper
for the larger ad-hoc graphs produced by constructions.

The text format is a single line::

    graph{r=2;n=4;l=;e=(0 1)(0 3)(1 2)(2 3)}

with `l=` empty meaning all labels zero, and the edge list strictly
increasing within each edge and lexicographically sorted overall. The
printer always emits this normal form and the parser accepts nothing else,
so round-trips are bit-exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import InputError

__all__ = [
    "Graph",
    "Injection",
    "canonical",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "contains",
    "cycle_graph",
    "empty_graph",
    "graph_from_text",
    "graph_to_text",
    "induced_subgraph",
    "is_isomorphic",
    "path_graph",
    "single_vertex",
]


@dataclass(frozen=True)
class Graph:
    """An r-uniform hypergraph with integer-labeled vertices 0..n-1.

    `labels` may be passed as None for all-zero. Edges are normalized on
    construction: sorted within each edge, deduplicated, and sorted
    lexicographically, so structurally equal graphs are equal values.
    """

    r: int
    n: int
    labels: tuple[int, ...] = None  # type: ignore[assignment]
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InputError(f"uniformity must be >= 1, got {self.r}")
        if self.n < 0:
            raise InputError(f"vertex count must be >= 0, got {self.n}")
        labels = self.labels
        if labels is None:
            labels = (0,) * self.n
        else:
            labels = tuple(int(x) for x in labels)
            if len(labels) != self.n:
                raise InputError(
                    f"expected {self.n} labels, got {len(labels)}"
                )
        seen = set()
        norm = []
        for edge in self.edges:
            e = tuple(sorted(edge))
            if len(e) != self.r:
                raise InputError(
                    f"edge {tuple(edge)} has {len(e)} vertices, expected r={self.r}"
                )
            if len(set(e)) != self.r:
                raise InputError(f"edge {tuple(edge)} repeats a vertex")
            if e[0] < 0 or e[-1] >= self.n:
                raise InputError(
                    f"edge {e} is not within vertex range 0..{self.n - 1}"
                )
            if e not in seen:
                seen.add(e)
                norm.append(e)
        norm.sort()
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return tuple(degs)

    @property
    def e(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    def relabel_vertices(self, perm: tuple[int, ...]) -> "Graph":
        """Apply a vertex bijection: vertex i of self becomes perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling must be a permutation of 0..n-1")
        labels = [0] * self.n
        for i, lab in enumerate(self.labels):
            labels[perm[i]] = lab
        edges = [tuple(perm[v] for v in e) for e in self.edges]
        return Graph(self.r, self.n, tuple(labels), tuple(edges))

    def __repr__(self) -> str:
        return graph_to_text(self)


@dataclass(frozen=True)
class Injection:
    """An injective map {0..source_n-1} -> {0..target_n-1}, as its image tuple."""

    source_n: int
    target_n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(x) for x in self.image)
        if len(image) != self.source_n:
            raise InputError(
                f"image has {len(image)} entries, expected {self.source_n}"
            )
        if len(set(image)) != len(image):
            raise InputError("map is not injective")
        if any(x < 0 or x >= self.target_n for x in image):
            raise InputError(
                f"image {image} not within target range 0..{self.target_n - 1}"
            )
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Injection":
        return cls(n, n, tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, inner: "Injection") -> "Injection":
        """self after inner: first apply `inner`, then `self`."""
        if inner.target_n != self.source_n:
            raise InputError(
                f"cannot compose: inner target {inner.target_n} != outer source {self.source_n}"
            )
        return Injection(
            inner.source_n, self.target_n, tuple(self.image[i] for i in inner.image)
        )


# ---------------------------------------------------------------------------
# basic operations


def induced_subgraph(g: Graph, alpha: Injection) -> Graph:
    """The graph alpha pulls back from g: vertex i gets g's data at alpha(i).

    An r-set of the source is an edge iff its image is an edge of g.
    """
    if alpha.target_n != g.n:
        raise InputError(
            f"injection targets {alpha.target_n} vertices, graph has {g.n}"
        )
    k = alpha.source_n
    labels = tuple(g.labels[alpha(i)] for i in range(k))
    edges = [
        e
        for e in combinations(range(k), g.r)
        if tuple(sorted(alpha(v) for v in e)) in g.edge_set
    ]
    return Graph(g.r, k, labels, tuple(edges))


def contains(g: Graph, f: Graph) -> bool:
    """Spanning containment: same vertices and labels, every edge of f in g."""
    return (
        g.r == f.r
        and g.n == f.n
        and g.labels == f.labels
        and f.edge_set <= g.edge_set
    )


def complement(g: Graph) -> Graph:
    edges = tuple(
        e for e in combinations(range(g.n), g.r) if e not in g.edge_set
    )
    return Graph(g.r, g.n, g.labels, edges)


# ---------------------------------------------------------------------------
# canonical representatives


_CANON_CACHE: dict[Graph, tuple[Graph, int]] = {}


def canonical(g: Graph) -> tuple[Graph, int]:
    """Canonical representative of g's isomorphism class, and |Aut(g)|.

    The representative is the relabeling of g minimizing (label sequence,
    edge segments grouped by largest vertex); isomorphic graphs map to the
    identical `Graph` value. The automorphism count falls out of the same
    search: it is the number of relabelings attaining the minimum.
    """
    hit = _CANON_CACHE.get(g)
    if hit is not None:
        return hit

    n, r = g.n, g.r
    if n <= 1 or len(g.edges) == 0:
        labels = tuple(sorted(g.labels))
        rep = Graph(r, n, labels, g.edges)
        aut = 1
        for lab in set(labels):
            c = labels.count(lab)
            for i in range(2, c + 1):
                aut *= i
        result = (rep, aut)
        _CANON_CACHE[g] = result
        _CANON_CACHE[rep] = result
        return result

    target_labels = tuple(sorted(g.labels))
    # old vertices usable at each new position, grouped by label
    slots: list[list[int]] = [
        [v for v in range(n) if g.labels[v] == target_labels[i]]
        for i in range(n)
    ]
    edge_set = g.edge_set
    perm = [0] * n  # new position -> old vertex
    used = [False] * n
    best: list[tuple[bool, ...] | None] = [None] * n
    best_perm = [0] * n
    count = 0

    def segment(i: int, v: int) -> tuple[bool, ...]:
        # membership bits for r-sets whose largest new vertex is i
        return tuple(
            tuple(sorted([perm[c] for c in rest] + [v])) in edge_set
            for rest in combinations(range(i), r - 1)
        )

    def dfs(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            best_perm[:] = perm
            return
        for v in slots[i]:
            if used[v]:
                continue
            seg = segment(i, v)
            ref = best[i]
            if ref is not None:
                if seg > ref:
                    continue
                if seg < ref:
                    best[i] = seg
                    for d in range(i + 1, n):
                        best[d] = None
                    count = 0
            else:
                best[i] = seg
            used[v] = True
            perm[i] = v
            dfs(i + 1)
            used[v] = False

    dfs(0)
    # best_perm maps new position -> old vertex; invert for relabel_vertices
    inv = [0] * n
    for newpos, old in enumerate(best_perm):
        inv[old] = newpos
    rep = g.relabel_vertices(tuple(inv))
    result = (rep, count)
    _CANON_CACHE[g] = result
    _CANON_CACHE[rep] = result
    return result


# ---------------------------------------------------------------------------
# pairwise isomorphism (no canonical form needed; fine for larger graphs)


def _greedy_order(g: Graph) -> list[int]:
    """Visit vertices so each new one shares edges with the visited set."""
    remaining = set(range(g.n))
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        best_v = None
        best_score = None
        for v in sorted(remaining):
            touching = sum(
                1 for e in g.edges if v in e and all(u in placed or u == v for u in e)
            )
            score = (touching, g.degrees[v])
            if best_score is None or score > best_score:
                best_v, best_score = v, score
        order.append(best_v)
        placed.add(best_v)
        remaining.discard(best_v)
    return order


def _extend_isomorphism(g: Graph, h: Graph, seed: dict[int, int]) -> bool:
    """Whether the partial vertex map `seed` extends to an isomorphism g -> h."""
    if g.r != h.r or g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.labels) != sorted(h.labels):
        return False
    r = g.r
    mapped = dict(seed)
    used = set(seed.values())
    if len(used) != len(mapped):
        return False
    for u, w in mapped.items():
        if g.labels[u] != h.labels[w] or g.degrees[u] != h.degrees[w]:
            return False
    # seed must already respect the edge relation among seeded vertices
    for sub in combinations(sorted(mapped), r):
        img = tuple(sorted(mapped[x] for x in sub))
        if (sub in g.edge_set) != (img in h.edge_set):
            return False

    todo = [v for v in _greedy_order(g) if v not in mapped]

    def consistent(u: int, w: int) -> bool:
        if g.labels[u] != h.labels[w] or g.degrees[u] != h.degrees[w]:
            return False
        keys = sorted(mapped)
        for rest in combinations(keys, r - 1):
            sub = tuple(sorted(rest + (u,)))
            img = tuple(sorted([mapped[x] for x in rest] + [w]))
            if (sub in g.edge_set) != (img in h.edge_set):
                return False
        return True

    def dfs(idx: int) -> bool:
        if idx == len(todo):
            return True
        u = todo[idx]
        for w in range(h.n):
            if w in used or not consistent(u, w):
                continue
            mapped[u] = w
            used.add(w)
            if dfs(idx + 1):
                return True
            del mapped[u]
            used.discard(w)
        return False

    return dfs(0)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.r != h.r or g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.labels) != sorted(h.labels):
        return False
    if sorted(zip(g.degrees, g.labels)) != sorted(zip(h.degrees, h.labels)):
        return False
    return _extend_isomorphism(g, h, {})


def automorphism_count(g: Graph) -> int:
    return canonical(g)[1]


# ---------------------------------------------------------------------------
# catalog


def empty_graph(r: int, n: int, labels=None) -> Graph:
    return Graph(r, n, labels, ())


def single_vertex(r: int = 2, label: int = 0) -> Graph:
    return Graph(r, 1, (label,), ())


def complete_graph(r: int, n: int) -> Graph:
    return Graph(r, n, None, tuple(combinations(range(n), r)))


def cycle_graph(k: int) -> Graph:
    """The 2-uniform cycle C_k, k >= 3."""
    if k < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {k}")
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return Graph(2, k, None, tuple(edges))


def path_graph(k: int) -> Graph:
    """The 2-uniform path with k edges (k+1 vertices)."""
    if k < 0:
        raise InputError(f"edge count must be >= 0, got {k}")
    return Graph(2, k + 1, None, tuple((i, i + 1) for i in range(k)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts {0..a-1} and {a..a+b-1}."""
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(2, a + b, None, edges)


# ---------------------------------------------------------------------------
# text format

_GRAPH_RE = re.compile(
    r"^graph\{r=(\d+);n=(\d+);l=([^;{}]*);e=((?:\([^()]*\))*)\}$"
)
_EDGE_RE = re.compile(r"\(([^()]*)\)")


def graph_to_text(g: Graph) -> str:
    if all(lab == 0 for lab in g.labels):
        lpart = ""
    else:
        lpart = ",".join(str(lab) for lab in g.labels)
    epart = "".join("(" + " ".join(str(v) for v in e) + ")" for e in g.edges)
    return f"graph{{r={g.r};n={g.n};l={lpart};e={epart}}}"


def graph_from_text(text: str) -> Graph:
    m = _GRAPH_RE.match(text.strip())
    if m is None:
        raise InputError(f"not a graph literal: {text!r}")
    r, n = int(m.group(1)), int(m.group(2))
    lpart, epart = m.group(3), m.group(4)
    if lpart == "":
        labels = None
    else:
        try:
            labels = tuple(int(x) for x in lpart.split(","))
        except ValueError:
            raise InputError(f"bad label list {lpart!r}") from None
        if len(labels) != n:
            raise InputError(f"expected {n} labels, got {len(labels)}")
    edges = []
    consumed = 0
    for em in _EDGE_RE.finditer(epart):
        consumed += len(em.group(0))
        parts = em.group(1).split()
        try:
            e = tuple(int(x) for x in parts)
        except ValueError:
            raise InputError(f"bad edge {em.group(0)!r}") from None
        if list(e) != sorted(set(e)):
            raise InputError(f"edge {e} must be strictly increasing")
        edges.append(e)
    if consumed != len(epart):
        raise InputError(f"bad edge list {epart!r}")
    if edges != sorted(edges) or len(set(edges)) != len(edges):
        raise InputError("edge list must be lexicographically sorted, no repeats")
    g = Graph(r, n, labels, tuple(edges))
    return g
