"""Graph constructions: blow-ups, generalized subdivisions, box products,
hypergraph expansions, and the dump-label embedding.

A `SubdivisionScheme` packages a vertex gadget F_v on [m] and an edge gadget
F_e on base_r blocks of size m plus s' private vertices, with two structural
requirements validated eagerly: blocks are internally edgeless, and the
gadget is symmetric under permuting blocks (for every block permutation some
automorphism of F_e realizes it block-element-wise). `subdivide` then
replaces each vertex of a base graph by an F_v copy and each edge by an F_e
copy across its blocks with fresh private vertices.

Every scheme also knows its upward transformation (the template rule whose
operator sums tau-preimages) and a closed form for nind-shaped inputs, which
`operator_apply` uses when the scheme is attached; the closed form returns an
algebra-equal element, not necessarily the identical formal sum (preimage
sums carry extra isolated private vertices for non-edges of the base graph).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .algebra import LinComb, UniformRep, extend_label_set, nind
from .errors import InputError
from .functors import (
    ConstF,
    Operator,
    ProductF,
    SubsetsF,
    UnionF,
    UpwardTransformation,
)
from .graphs import Graph, Injection, _extend_isomorphism, graph_from_text, graph_to_text, induced_subgraph

__all__ = [
    "LabeledLift",
    "SubdivisionScheme",
    "blowup",
    "blowup_scheme",
    "box_product",
    "box_scheme",
    "check_symmetry",
    "copies_scheme",
    "crossing_scheme",
    "drop_labels",
    "even_expansion",
    "even_scheme",
    "lift_labels",
    "loose_expansion",
    "loose_scheme",
    "mixed_scheme",
    "path_scheme",
    "scheme_from_text",
    "scheme_to_text",
    "subdivide",
    "triangle_scheme",
]


# ---------------------------------------------------------------------------
# symmetry checking


def check_symmetry(f: Graph, sets) -> bool:
    """Whether f admits, for every permutation of the given vertex sets, an
    automorphism mapping the j-th set onto the sigma(j)-th element-wise.

    The sets must be disjoint, of equal size, and internally edgeless —
    violations are input errors, not a False verdict.
    """
    sets = tuple(tuple(int(v) for v in s) for s in sets)
    if not sets:
        raise InputError("need at least one vertex set")
    size = len(sets[0])
    seen: set[int] = set()
    for s in sets:
        if len(s) != size:
            raise InputError("vertex sets must have equal sizes")
        for v in s:
            if v < 0 or v >= f.n:
                raise InputError(f"vertex {v} out of range")
            if v in seen:
                raise InputError(f"vertex sets overlap at {v}")
            seen.add(v)
    for s in sets:
        for e in f.edges:
            if all(v in s for v in e):
                raise InputError(f"vertex set {s} is not internally edgeless")
    for sigma in permutations(range(len(sets))):
        if sigma == tuple(range(len(sets))):
            continue
        seed = {}
        for j, s in enumerate(sets):
            for i, v in enumerate(s):
                seed[v] = sets[sigma[j]][i]
        if not _extend_isomorphism(f, f, seed):
            return False
    return True


# ---------------------------------------------------------------------------
# subdivision schemes


@dataclass(frozen=True)
class SubdivisionScheme:
    """Gadget pair (F_v on [m], F_e on base_r blocks of size m plus s'
    privates) for subdividing base_r-uniform graphs.

    Block j of F_e occupies vertices j*m .. j*m+m-1; private vertices come
    last. Validation checks uniformities, edgeless blocks, and block-swap
    symmetry; invalid gadgets never construct.
    """

    f_v: Graph
    f_e: Graph
    base_r: int

    def __post_init__(self) -> None:
        if self.base_r < 2:
            raise InputError(f"base uniformity must be >= 2, got {self.base_r}")
        if self.f_v.n < 1:
            raise InputError("vertex gadget needs at least one vertex")
        if self.f_v.r != self.f_e.r:
            raise InputError(
                f"gadget uniformities differ: {self.f_v.r} vs {self.f_e.r}"
            )
        if any(self.f_v.labels) or any(self.f_e.labels):
            raise InputError("gadgets must be unlabeled (all labels zero)")
        if self.s_prime < 0:
            raise InputError(
                f"edge gadget has {self.f_e.n} vertices, fewer than "
                f"{self.base_r} blocks of size {self.m}"
            )
        if not check_symmetry(self.f_e, self.blocks):
            raise InputError(
                "edge gadget is not symmetric with respect to its blocks"
            )

    @property
    def m(self) -> int:
        return self.f_v.n

    @property
    def s_prime(self) -> int:
        return self.f_e.n - self.base_r * self.m

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        m = self.m
        return tuple(
            tuple(range(j * m, (j + 1) * m)) for j in range(self.base_r)
        )

    # -- operator plumbing ---------------------------------------------------

    def eta(self):
        """Vertex functor of the subdivided graph: one m-block per vertex,
        s' privates per base_r-subset."""
        return UnionF(
            ProductF(SubsetsF(1), ConstF(tuple(range(self.m)))),
            ProductF(SubsetsF(self.base_r), ConstF(tuple(range(self.s_prime)))),
        )

    def transformation(self, labeled: bool = False, dump_label: int = 1):
        """The template transformation whose operator inverts subdivision.

        Unlabeled: an output edge requires the full gadget (F_e plus the F_v
        copies in each block). Labeled: the edge rule requires F_e only, and
        a vertex keeps label 0 exactly when its block carries the F_v copy,
        falling back to the dump label.
        """
        m, r = self.m, self.f_v.r
        edges = list(self.f_e.edges)
        if not labeled:
            for j in range(self.base_r):
                for e in self.f_v.edges:
                    edges.append(tuple(sorted(j * m + v for v in e)))
        eta = self.eta()
        n_rule = self.base_r * m + self.s_prime
        template = Graph(r, n_rule, None, tuple(edges))
        if not labeled:
            return UpwardTransformation(eta, r, self.base_r, template)
        vertex_template = Graph(r, m, None, self.f_v.edges)
        return UpwardTransformation(
            eta,
            r,
            self.base_r,
            template,
            base_labels=frozenset({0, dump_label}),
            vertex_rules=((0, vertex_template),),
            default_label=dump_label,
        )

    def operator(
        self,
        budget: int = 1 << 20,
        labeled: bool = False,
        dump_label: int = 1,
        attach: bool = True,
    ) -> Operator:
        return Operator(
            self.transformation(labeled, dump_label),
            budget,
            scheme=self if attach else None,
        )

    def closed_form_nind(self, g0: Graph, labeled: bool, labels) -> LinComb:
        """nind(subdivide(self, g0)) — what the operator sends nind(g0) to.

        For the unlabeled rule this requires g0 to have no isolated vertices
        whenever F_v has edges (otherwise the identity genuinely fails); the
        labeled rule carries no such restriction.
        """
        if any(g0.labels):
            raise InputError("closed form applies to all-zero-labeled inputs")
        if not labeled and self.f_v.edges and 0 in g0.degrees:
            raise InputError(
                "closed form requires a base graph without isolated vertices "
                "when the vertex gadget has edges"
            )
        base = Graph(g0.r, g0.n, None, g0.edges)
        return nind(
            LinComb.from_graph(subdivide(self, base), frozenset(labels))
        )


def subdivide(scheme: SubdivisionScheme, g: Graph) -> Graph:
    """Replace each vertex of g by an F_v copy and each edge by an F_e copy
    across its blocks, with fresh private vertices per edge.

    Vertex (v, i) sits at index v*m + i; the t-th private of the k-th edge
    (in sorted edge order) at n*m + k*s' + t.
    """
    if g.r != scheme.base_r:
        raise InputError(
            f"scheme subdivides {scheme.base_r}-uniform graphs, got {g.r}"
        )
    if any(g.labels):
        raise InputError("subdivide expects an unlabeled base graph")
    m, sp = scheme.m, scheme.s_prime
    r = scheme.f_v.r
    total = g.n * m + len(g.edges) * sp
    edges: set[tuple[int, ...]] = set()
    for v in range(g.n):
        for e in scheme.f_v.edges:
            edges.add(tuple(sorted(v * m + i for i in e)))
    block_span = scheme.base_r * m
    for k, ge in enumerate(g.edges):
        offset = g.n * m + k * sp
        for fe_edge in scheme.f_e.edges:
            mapped = []
            for x in fe_edge:
                if x < block_span:
                    j, i = divmod(x, m)
                    mapped.append(ge[j] * m + i)
                else:
                    mapped.append(offset + (x - block_span))
            edges.add(tuple(sorted(mapped)))
    return Graph(r, total, None, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# scheme catalog


def blowup_scheme(m: int) -> SubdivisionScheme:
    """Blocks joined completely: subdividing with this is the m-fold blowup."""
    if m < 1:
        raise InputError(f"block size must be >= 1, got {m}")
    f_v = Graph(2, m)
    f_e = Graph(2, 2 * m, None, tuple((i, m + j) for i in range(m) for j in range(m)))
    return SubdivisionScheme(f_v, f_e, 2)


def copies_scheme(s: int) -> SubdivisionScheme:
    """Parallel matching between blocks: subdividing gives s disjoint copies."""
    if s < 1:
        raise InputError(f"copy count must be >= 1, got {s}")
    f_v = Graph(2, s)
    f_e = Graph(2, 2 * s, None, tuple((i, s + i) for i in range(s)))
    return SubdivisionScheme(f_v, f_e, 2)


def path_scheme(k: int) -> SubdivisionScheme:
    """Each edge becomes a path with k edges (k-1 private vertices)."""
    if k < 1:
        raise InputError(f"path length must be >= 1, got {k}")
    f_v = Graph(2, 1)
    if k == 1:
        f_e = Graph(2, 2, None, ((0, 1),))
    else:
        chain = [0] + list(range(2, k + 1)) + [1]
        f_e = Graph(
            2, k + 1, None, tuple((chain[i], chain[i + 1]) for i in range(k))
        )
    return SubdivisionScheme(f_v, f_e, 2)


def box_scheme() -> SubdivisionScheme:
    """K2 vertex gadget with two parallel edges: subdividing is G box K2."""
    f_v = Graph(2, 2, None, ((0, 1),))
    f_e = Graph(2, 4, None, ((0, 2), (1, 3)))
    return SubdivisionScheme(f_v, f_e, 2)


def crossing_scheme() -> SubdivisionScheme:
    """K2 vertex gadget with two crossing edges between the blocks."""
    f_v = Graph(2, 2, None, ((0, 1),))
    f_e = Graph(2, 4, None, ((0, 3), (1, 2)))
    return SubdivisionScheme(f_v, f_e, 2)


def triangle_scheme() -> SubdivisionScheme:
    """Each edge becomes a triangle through one private vertex."""
    f_v = Graph(2, 1)
    f_e = Graph(2, 3, None, ((0, 1), (0, 2), (1, 2)))
    return SubdivisionScheme(f_v, f_e, 2)


def mixed_scheme(r: int, m: int) -> SubdivisionScheme:
    """Single r-edge gadget: blocks of size m plus r-2m private vertices."""
    if m < 1:
        raise InputError(f"block size must be >= 1, got {m}")
    if r < 2 * m:
        raise InputError(f"uniformity {r} too small for two blocks of size {m}")
    f_v = Graph(r, m)
    f_e = Graph(r, r, None, (tuple(range(r)),))
    return SubdivisionScheme(f_v, f_e, 2)


def loose_scheme(r: int) -> SubdivisionScheme:
    if r < 3:
        raise InputError(f"loose expansions need r >= 3, got {r}")
    return mixed_scheme(r, 1)


def even_scheme(r: int) -> SubdivisionScheme:
    if r < 2 or r % 2:
        raise InputError(f"even expansions need even r >= 2, got {r}")
    return mixed_scheme(r, r // 2)


# ---------------------------------------------------------------------------
# direct constructions


def blowup(g: Graph, m: int) -> Graph:
    """m-fold blowup: vertex (v, i) at index v*m + i, blocks independent,
    complete bipartite between blocks of adjacent vertices."""
    if m < 1:
        raise InputError(f"blowup factor must be >= 1, got {m}")
    edges = []
    for e in g.edges:
        for picks in _tuples_over_blocks(e, m):
            edges.append(tuple(sorted(picks)))
    labels = tuple(lab for lab in g.labels for _ in range(m))
    return Graph(g.r, g.n * m, labels, tuple(edges))


def _tuples_over_blocks(edge: tuple[int, ...], m: int):
    if not edge:
        yield ()
        return
    head, rest = edge[0], edge[1:]
    for sub in _tuples_over_blocks(rest, m):
        for i in range(m):
            yield (head * m + i,) + sub


def box_product(g: Graph, f: Graph) -> Graph:
    """Cartesian product: adjacent in one coordinate, equal in the other."""
    if g.r != 2 or f.r != 2:
        raise InputError("box product is defined for 2-uniform graphs")
    edges = []
    for u, v in g.edges:
        for a in range(f.n):
            edges.append((u * f.n + a, v * f.n + a))
    for a, b in f.edges:
        for u in range(g.n):
            edges.append((u * f.n + a, u * f.n + b))
    return Graph(2, g.n * f.n, None, tuple(edges))


def loose_expansion(g: Graph, r: int) -> Graph:
    """Pad each 2-edge with r-2 fresh private vertices."""
    if g.r != 2:
        raise InputError("loose expansion starts from a 2-uniform graph")
    if r < 3:
        raise InputError(f"loose expansions need r >= 3, got {r}")
    sp = r - 2
    edges = []
    for k, (u, v) in enumerate(g.edges):
        privates = range(g.n + k * sp, g.n + (k + 1) * sp)
        edges.append(tuple(sorted((u, v) + tuple(privates))))
    return Graph(r, g.n + len(g.edges) * sp, None, tuple(edges))


def even_expansion(g: Graph, r: int) -> Graph:
    """Duplicate every vertex r/2 times; each edge becomes the union of its
    endpoints' copy blocks."""
    if g.r != 2:
        raise InputError("even expansion starts from a 2-uniform graph")
    if r < 2 or r % 2:
        raise InputError(f"even expansions need even r >= 2, got {r}")
    m = r // 2
    edges = []
    for u, v in g.edges:
        block = tuple(range(u * m, (u + 1) * m)) + tuple(range(v * m, (v + 1) * m))
        edges.append(tuple(sorted(block)))
    return Graph(r, g.n * m, None, tuple(edges))


# ---------------------------------------------------------------------------
# dump-label embedding


def lift_labels(f0, ell: int) -> LinComb:
    """Reinterpret a uniform-order element over the label set enlarged by ell.

    Requires uniform order: mixing orders before enlarging the label set
    breaks positivity (hosts concentrated on the new label separate the
    orders), so non-uniform input is rejected.
    """
    if isinstance(f0, UniformRep):
        lc = f0.lincomb
    elif isinstance(f0, LinComb):
        orders = {g.n for g in f0.coeffs}
        if len(orders) > 1:
            raise InputError(
                f"label lift needs a uniform-order element; found orders "
                f"{sorted(orders)}"
            )
        lc = f0
    else:
        raise InputError(
            f"expected UniformRep or LinComb, got {type(f0).__name__}"
        )
    ell = int(ell)
    if ell in lc.label_set:
        raise InputError(f"label {ell} already present in {sorted(lc.label_set)}")
    return extend_label_set(lc, lc.label_set | {ell})


@dataclass
class LabeledLift:
    """A uniform-order element together with its image over the enlarged
    label set."""

    source: UniformRep
    label: int
    lifted: LinComb

    @classmethod
    def of(cls, f0, ell: int) -> "LabeledLift":
        if isinstance(f0, LinComb):
            orders = {g.n for g in f0.coeffs}
            if len(orders) > 1:
                raise InputError(
                    f"label lift needs a uniform-order element; found orders "
                    f"{sorted(orders)}"
                )
            f0 = UniformRep(f0, orders.pop() if orders else 0)
        lifted = lift_labels(f0, ell)
        return cls(f0, int(ell), lifted)


def drop_labels(h: Graph, ell: int) -> Graph:
    """Induced subgraph on the vertices not labeled ell."""
    keep = tuple(v for v in range(h.n) if h.labels[v] != ell)
    return induced_subgraph(h, Injection(len(keep), h.n, keep))


# ---------------------------------------------------------------------------
# scheme files


def scheme_to_text(scheme: SubdivisionScheme) -> str:
    sets = "".join(
        "(" + " ".join(str(v) for v in block) + ")" for block in scheme.blocks
    )
    return (
        f"{graph_to_text(scheme.f_v)}\n{graph_to_text(scheme.f_e)}\nsets={sets}\n"
    )


def scheme_from_text(text: str) -> SubdivisionScheme:
    """Parse a scheme file: vertex gadget, edge gadget, then a `sets=` line
    naming each block's vertices in order. Blocks need not sit at the
    writer's positions; the edge gadget is renumbered so they do."""
    graphs: list[Graph] = []
    sets_line = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("sets="):
            if sets_line is not None:
                raise InputError("multiple sets= lines in scheme file")
            sets_line = line[len("sets=") :]
        else:
            graphs.append(graph_from_text(line))
    if len(graphs) != 2 or sets_line is None:
        raise InputError(
            "scheme file needs two graph lines (vertex gadget, edge gadget) "
            "and one sets= line"
        )
    f_v, f_e = graphs
    groups = re.findall(r"\(([^()]*)\)", sets_line)
    if "".join(f"({g})" for g in groups) != sets_line:
        raise InputError(f"bad sets= line: {sets_line!r}")
    blocks = []
    for grp in groups:
        try:
            blocks.append(tuple(int(x) for x in grp.split()))
        except ValueError:
            raise InputError(f"bad block {grp!r} in sets= line") from None
    if not blocks:
        raise InputError("sets= line declares no blocks")
    m = len(blocks[0])
    if m != f_v.n:
        raise InputError(
            f"blocks of size {m} do not match vertex gadget on {f_v.n} vertices"
        )
    flat = [v for block in blocks for v in block]
    if len(set(flat)) != len(flat):
        raise InputError("blocks overlap in sets= line")
    if any(v < 0 or v >= f_e.n for v in flat):
        raise InputError("block vertex out of range in sets= line")
    rest = [v for v in range(f_e.n) if v not in set(flat)]
    # renumber so block j occupies j*m..j*m+m-1 and privates come last
    perm = [0] * f_e.n
    for j, block in enumerate(blocks):
        for i, v in enumerate(block):
            perm[v] = j * m + i
    for t, v in enumerate(rest):
        perm[v] = len(flat) + t
    return SubdivisionScheme(f_v, f_e.relabel_vertices(tuple(perm)), len(blocks))
