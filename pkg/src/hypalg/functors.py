"""Downward set functors, upward template transformations, and the
preimage-sum operator between graph algebras.

A `DownwardFunctor` is an expression tree over four constructors — k-subsets,
a constant set, disjoint union, cartesian product — evaluated on the sets
{0..n-1} and on injections between them. Elements of an applied functor carry
a fixed canonical ordering, so a graph "on eta([n])" is an ordinary `Graph`
whose vertex i is the i-th element of that ordering.

An `UpwardTransformation` tau maps graphs on eta([n]) to graphs on [n]. It is
given by rules on the small sets eta([r']) and eta([1]): an r'-set of the
output is an edge iff a fixed template is contained in the corresponding
induced subgraph, and each output vertex gets the label of the first vertex
rule whose template is contained (or a default). Rules read only the edge
relation of the input graph, never its labels; this template-containment
form is a deliberate restriction — it covers every transformation shipped
here and makes well-definedness decidable. Construction brute-forces the
well-definedness condition: the rule-induced map on graphs over eta([r'])
must commute with every permutation of [r'].

An `Operator` wraps a transformation with an enumeration budget and maps a
combination over the output algebra to one over the input algebra by summing,
for each term G, all graphs H on eta(V_G) with tau(H) = G. When a subdivision
scheme is attached, nind-shaped inputs route through the scheme's closed
form; `method="enumerate"` forces the generic path, which serves as the
independent cross-check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product as iter_product

from .algebra import LinComb, nind
from .errors import InputError, ResourceError
from .graphs import Graph, Injection, canonical, induced_subgraph

__all__ = [
    "ConstF",
    "Operator",
    "ProductF",
    "SubsetsF",
    "UnionF",
    "UpwardTransformation",
    "apply_functor_injection",
    "apply_functor_set",
    "check_multiplicative",
    "functor_from_text",
    "functor_size",
    "functor_to_text",
    "operator_apply",
    "tau_apply",
]


# ---------------------------------------------------------------------------
# downward functors


@dataclass(frozen=True)
class SubsetsF:
    """The functor sending M to its k-element subsets."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InputError(f"subset size must be >= 0, got {self.k}")


@dataclass(frozen=True)
class ConstF:
    """The constant functor: every set maps to the same fixed set."""

    elems: tuple

    def __post_init__(self) -> None:
        elems = tuple(self.elems)
        if len(set(elems)) != len(elems):
            raise InputError("constant set has repeated elements")
        object.__setattr__(self, "elems", elems)


@dataclass(frozen=True)
class UnionF:
    left: object
    right: object


@dataclass(frozen=True)
class ProductF:
    left: object
    right: object


@lru_cache(maxsize=None)
def apply_functor_set(eta, n: int) -> tuple:
    """The ordered elements of eta([n]).

    Subsets are ascending tuples in lexicographic order; union elements are
    tagged (0, x) then (1, y); product elements are pairs in row-major
    order. The ordering is what gives graphs on eta([n]) stable vertex
    indices.
    """
    if n < 0:
        raise InputError(f"set size must be >= 0, got {n}")
    if isinstance(eta, SubsetsF):
        return tuple(combinations(range(n), eta.k))
    if isinstance(eta, ConstF):
        return eta.elems
    if isinstance(eta, UnionF):
        return tuple((0, x) for x in apply_functor_set(eta.left, n)) + tuple(
            (1, y) for y in apply_functor_set(eta.right, n)
        )
    if isinstance(eta, ProductF):
        right = apply_functor_set(eta.right, n)
        return tuple(
            (x, y) for x in apply_functor_set(eta.left, n) for y in right
        )
    raise InputError(f"not a downward functor: {eta!r}")


def functor_size(eta, n: int) -> int:
    return len(apply_functor_set(eta, n))


def _map_element(eta, alpha: Injection, x):
    if isinstance(eta, SubsetsF):
        return tuple(sorted(alpha(i) for i in x))
    if isinstance(eta, ConstF):
        return x
    if isinstance(eta, UnionF):
        side = eta.left if x[0] == 0 else eta.right
        return (x[0], _map_element(side, alpha, x[1]))
    if isinstance(eta, ProductF):
        return (_map_element(eta.left, alpha, x[0]), _map_element(eta.right, alpha, x[1]))
    raise InputError(f"not a downward functor: {eta!r}")


@lru_cache(maxsize=None)
def _position_index(eta, n: int) -> dict:
    return {el: i for i, el in enumerate(apply_functor_set(eta, n))}


def apply_functor_injection(eta, alpha: Injection) -> Injection:
    """eta(alpha): the induced injection eta([m]) -> eta([n])."""
    src = apply_functor_set(eta, alpha.source_n)
    tgt_pos = _position_index(eta, alpha.target_n)
    image = tuple(tgt_pos[_map_element(eta, alpha, x)] for x in src)
    return Injection(len(src), functor_size(eta, alpha.target_n), image)


@lru_cache(maxsize=None)
def _eta_image(eta, n: int, sub: tuple) -> tuple:
    """Image positions of eta(beta) for beta the increasing map with image sub."""
    beta = Injection(len(sub), n, sub)
    return apply_functor_injection(eta, beta).image


# ---------------------------------------------------------------------------
# upward transformations


@dataclass(frozen=True)
class UpwardTransformation:
    """Template rules turning graphs on eta([n]) into graphs on [n].

    `r` and `labels` describe the input side (graphs on functor images);
    `base_r` and `base_labels` the output side. The edge template lives on
    eta([base_r]); each vertex rule's template lives on eta([1]). Vertex
    rules are tried in order; the first whose template is contained wins,
    otherwise `default_label` applies, so the labeling is total.

    Construction verifies well-definedness by enumerating every graph on
    eta([base_r]) and every permutation of [base_r] and checking that the
    rules commute with relabeling; transformations failing this are
    rejected, since they would not induce a map on isomorphism classes.
    """

    eta: object
    r: int
    base_r: int
    edge_template: Graph
    labels: frozenset = frozenset({0})
    base_labels: frozenset = frozenset({0})
    vertex_rules: tuple = ()
    default_label: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", frozenset(self.labels))
        object.__setattr__(self, "base_labels", frozenset(self.base_labels))
        object.__setattr__(self, "vertex_rules", tuple(self.vertex_rules))
        if self.r < 1 or self.base_r < 1:
            raise InputError("uniformities must be >= 1")
        n_rule = functor_size(self.eta, self.base_r)
        if self.edge_template.r != self.r or self.edge_template.n != n_rule:
            raise InputError(
                f"edge template must be an {self.r}-uniform graph on "
                f"{n_rule} vertices (the size of eta([{self.base_r}]))"
            )
        if any(lab != 0 for lab in self.edge_template.labels):
            raise InputError("templates carry no labels; use all-zero labels")
        n_vert = functor_size(self.eta, 1)
        for lab, tmpl in self.vertex_rules:
            if lab not in self.base_labels:
                raise InputError(f"vertex rule label {lab} not in output label set")
            if tmpl.r != self.r or tmpl.n != n_vert:
                raise InputError(
                    f"vertex template must be {self.r}-uniform on {n_vert} "
                    f"vertices (the size of eta([1]))"
                )
            if any(x != 0 for x in tmpl.labels):
                raise InputError("templates carry no labels; use all-zero labels")
        if self.default_label not in self.base_labels:
            raise InputError(
                f"default label {self.default_label} not in output label set"
            )
        self._check_well_defined()

    def _check_well_defined(self) -> None:
        n_rule = functor_size(self.eta, self.base_r)
        slot_list = list(combinations(range(n_rule), self.r))
        if len(slot_list) > 16:
            raise ResourceError(
                f"well-definedness check would enumerate 2^{len(slot_list)} "
                f"graphs on {n_rule} vertices; refusing above 2^16"
            )
        perms = [
            s for s in permutations(range(self.base_r)) if s != tuple(range(self.base_r))
        ]
        if not perms:
            return
        fill = (min(self.labels),) * n_rule
        for bits in range(1 << len(slot_list)):
            edges = tuple(
                slot_list[i] for i in range(len(slot_list)) if bits >> i & 1
            )
            h = Graph(self.r, n_rule, fill, edges)
            base = tau_apply(self, h, self.base_r)
            for sigma in perms:
                alpha = Injection(self.base_r, self.base_r, sigma)
                h_perm = induced_subgraph(h, apply_functor_injection(self.eta, alpha))
                if tau_apply(self, h_perm, self.base_r) != induced_subgraph(base, alpha):
                    raise InputError(
                        "rules are not permutation-invariant on graphs over "
                        f"eta([{self.base_r}]); transformation is ill-defined "
                        f"(witness permutation {sigma})"
                    )


def _infer_order(eta, n_vertices: int, base_r: int) -> int:
    matches = []
    k = 0
    limit = n_vertices + base_r + 2
    while k <= limit:
        size = functor_size(eta, k)
        if size == n_vertices:
            matches.append(k)
            if len(matches) > 1:
                raise InputError(
                    f"vertex count {n_vertices} matches eta([k]) for several k "
                    f"({matches[0]}, {matches[1]}, ...); pass n explicitly"
                )
        k += 1
    if not matches:
        raise InputError(
            f"vertex count {n_vertices} is not the size of eta([n]) for any n"
        )
    return matches[0]


def tau_apply(tau: UpwardTransformation, h: Graph, n: int = None) -> Graph:
    """Apply the transformation to a graph on eta([n]), yielding one on [n].

    If n is omitted it is inferred from the vertex count when that is
    unambiguous (it never is for constant functors — pass n then).
    """
    if h.r != tau.r:
        raise InputError(f"input has uniformity {h.r}, transformation reads {tau.r}")
    if not set(h.labels) <= tau.labels:
        raise InputError("input graph labels outside the transformation's label set")
    if n is None:
        n = _infer_order(tau.eta, h.n, tau.base_r)
    elif functor_size(tau.eta, n) != h.n:
        raise InputError(
            f"graph on {h.n} vertices is not a graph on eta([{n}]) "
            f"(which has {functor_size(tau.eta, n)} elements)"
        )
    edges = []
    for e in combinations(range(n), tau.base_r):
        pos = _eta_image(tau.eta, n, e)
        if all(
            tuple(sorted(pos[v] for v in te)) in h.edge_set
            for te in tau.edge_template.edges
        ):
            edges.append(e)
    labels = []
    for v in range(n):
        pos = _eta_image(tau.eta, n, (v,))
        lab = tau.default_label
        for rule_lab, tmpl in tau.vertex_rules:
            if all(
                tuple(sorted(pos[x] for x in te)) in h.edge_set
                for te in tmpl.edges
            ):
                lab = rule_lab
                break
        labels.append(lab)
    return Graph(tau.base_r, n, tuple(labels), tuple(edges))


# ---------------------------------------------------------------------------
# the operator


@dataclass(frozen=True)
class Operator:
    """A transformation plus an enumeration budget; optionally a subdivision
    scheme whose closed form can answer nind-shaped inputs directly."""

    tau: UpwardTransformation
    budget: int = 1 << 20
    scheme: object = None

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise InputError(f"budget must be >= 1, got {self.budget}")


def _detect_nind(f: LinComb) -> Graph | None:
    """If f equals nind(G) for a (necessarily unique) graph G, return G."""
    if not f.coeffs:
        return None
    g0 = min(f.coeffs, key=lambda g: (len(g.edges), g.n))
    if f.coeffs[g0] != 1:
        return None
    if nind(LinComb.from_graph(g0, f.label_set)) == f:
        return g0
    return None


def _term_preimages(op: Operator, g: Graph, coeff: Fraction, out: dict) -> None:
    tau = op.tau
    n = g.n
    w = functor_size(tau.eta, n)
    all_slots = list(combinations(range(w), tau.r))
    slot_id = {s: i for i, s in enumerate(all_slots)}

    def template_slots(sub: tuple, template: Graph) -> list[int]:
        pos = _eta_image(tau.eta, n, sub)
        return [slot_id[tuple(sorted(pos[v] for v in te))] for te in template.edges]

    forced: set[int] = set()
    groups: list[set[int]] = []  # each: at least one slot must stay off
    postcheck: list[int] = []  # vertices needing label check per completion

    for e in combinations(range(n), tau.base_r):
        slots = template_slots(e, tau.edge_template)
        if e in g.edge_set:
            forced.update(slots)
        else:
            groups.append(set(slots))

    for v in range(n):
        if not tau.vertex_rules:
            if g.labels[v] != tau.default_label:
                return
        elif len(tau.vertex_rules) == 1:
            lab0, tmpl = tau.vertex_rules[0]
            slots = template_slots((v,), tmpl)
            if lab0 == tau.default_label:
                if g.labels[v] != lab0:
                    return
            elif g.labels[v] == lab0:
                forced.update(slots)
            elif g.labels[v] == tau.default_label:
                groups.append(set(slots))
            else:
                return
        else:
            postcheck.append(v)

    cleaned: list[list[int]] = []
    for grp in groups:
        grp = grp - forced
        if not grp:
            return  # all its slots are forced on; no completion can satisfy it
        cleaned.append(sorted(grp))

    free = [i for i in range(len(all_slots)) if i not in forced]
    # slots under a not-all-on constraint first, so pruning bites early
    grouped_ids = sorted({i for grp in cleaned for i in grp})
    rest = [i for i in free if i not in set(grouped_ids)]
    dfs_order = grouped_ids + rest

    labelings = sorted(tau.labels)
    n_labelings = len(labelings) ** w
    if (1 << len(dfs_order)) * n_labelings > op.budget:
        raise ResourceError(
            f"term of order {n} leaves {len(dfs_order)} undecided edge slots "
            f"on eta([{n}]) (2^{len(dfs_order)} completions; budget {op.budget})"
        )

    group_size = [len(grp) for grp in cleaned]
    member = {i: [] for i in dfs_order}
    for gi, grp in enumerate(cleaned):
        for i in grp:
            member[i].append(gi)
    on_count = [0] * len(cleaned)
    chosen: list[int] = []

    def rule_label(h: Graph, v: int) -> int:
        pos = _eta_image(tau.eta, n, (v,))
        for rule_lab, tmpl in tau.vertex_rules:
            if all(
                tuple(sorted(pos[x] for x in te)) in h.edge_set
                for te in tmpl.edges
            ):
                return rule_lab
        return tau.default_label

    def emit() -> None:
        edges = tuple(all_slots[i] for i in sorted(forced) + chosen)
        for labs in iter_product(labelings, repeat=w):
            h = Graph(tau.r, w, labs, edges)
            if postcheck and any(rule_label(h, v) != g.labels[v] for v in postcheck):
                continue
            key = canonical(h)[0]
            out[key] = out.get(key, Fraction(0)) + coeff
            if out[key] == 0:
                del out[key]

    def dfs(idx: int) -> None:
        if idx == len(dfs_order):
            emit()
            return
        slot = dfs_order[idx]
        # slot off: every group it belongs to is satisfied for good
        dfs(idx + 1)
        # slot on
        ok = True
        for gi in member[slot]:
            on_count[gi] += 1
            if on_count[gi] == group_size[gi]:
                ok = False
        if ok:
            chosen.append(slot)
            dfs(idx + 1)
            chosen.pop()
        for gi in member[slot]:
            on_count[gi] -= 1

    dfs(0)


def operator_apply(op: Operator, f, method: str = "auto") -> LinComb:
    """Sum of tau-preimages, extended linearly: each term G contributes all
    graphs H on eta(V_G) with tau(H) = G.

    method: "auto" uses the attached scheme's closed form for nind-shaped
    inputs when possible; "enumerate" always runs the generic completion
    search; "closed" demands the closed form and fails if it does not apply.
    """
    if method not in ("auto", "enumerate", "closed"):
        raise InputError(f"unknown method {method!r}")
    if isinstance(f, Graph):
        f = LinComb.from_graph(f, op.tau.base_labels)
    if not isinstance(f, LinComb):
        raise InputError(f"expected LinComb or Graph, got {type(f).__name__}")
    if f.r != op.tau.base_r:
        raise InputError(
            f"operator consumes uniformity {op.tau.base_r}, got {f.r}"
        )
    if f.label_set != op.tau.base_labels:
        raise InputError(
            f"operator consumes label set {sorted(op.tau.base_labels)}, "
            f"got {sorted(f.label_set)}"
        )
    if method in ("auto", "closed") and op.scheme is not None:
        g0 = _detect_nind(f)
        if g0 is not None:
            try:
                return op.scheme.closed_form_nind(
                    g0, labeled=bool(op.tau.vertex_rules), labels=op.tau.labels
                )
            except InputError:
                if method == "closed":
                    raise
        elif method == "closed":
            raise InputError("closed form applies only to nind-shaped inputs")
    elif method == "closed":
        raise InputError("no scheme attached; closed form unavailable")
    out: dict[Graph, Fraction] = {}
    for g, c in f.coeffs.items():
        _term_preimages(op, g, c, out)
    return LinComb._raw(op.tau.r, op.tau.labels, out)


def check_multiplicative(op: Operator, f: LinComb, g: LinComb) -> bool:
    """Whether the operator respects the product on this pair  — guaranteed
    when the functor has no constant part, possibly false otherwise."""
    from .algebra import alg_equal, product

    lhs = operator_apply(op, product(f, g), method="enumerate")
    rhs = product(
        operator_apply(op, f, method="enumerate"),
        operator_apply(op, g, method="enumerate"),
    )
    return alg_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# functor expressions

_TOKEN_RE = re.compile(r"\s*(sub|const|u|x|\(|\)|,|\d+)")


def functor_to_text(eta) -> str:
    if isinstance(eta, SubsetsF):
        return f"sub({eta.k})"
    if isinstance(eta, ConstF):
        return f"const({len(eta.elems)})"
    if isinstance(eta, UnionF):
        return f"u({functor_to_text(eta.left)},{functor_to_text(eta.right)})"
    if isinstance(eta, ProductF):
        return f"x({functor_to_text(eta.left)},{functor_to_text(eta.right)})"
    raise InputError(f"not a downward functor: {eta!r}")


def functor_from_text(text: str):
    """Parse `sub(k)`, `const(s)`, `u(A,B)`, `x(A,B)` expressions.

    `const(s)` denotes the constant set {0..s-1}; round-trips with
    functor_to_text for functors built that way.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise InputError(f"bad functor expression at position {pos}: {text!r}")
        tokens.append(m.group(1))
        pos = m.end()

    def parse(i: int):
        if i >= len(tokens):
            raise InputError(f"truncated functor expression: {text!r}")
        head = tokens[i]
        if head == "sub" or head == "const":
            if i + 3 >= len(tokens) or tokens[i + 1] != "(" or tokens[i + 3] != ")":
                raise InputError(f"expected {head}(<int>) in {text!r}")
            if not tokens[i + 2].isdigit():
                raise InputError(f"expected integer argument to {head} in {text!r}")
            k = int(tokens[i + 2])
            return (SubsetsF(k) if head == "sub" else ConstF(tuple(range(k)))), i + 4
        if head in ("u", "x"):
            if i + 1 >= len(tokens) or tokens[i + 1] != "(":
                raise InputError(f"expected '(' after {head} in {text!r}")
            left, j = parse(i + 2)
            if j >= len(tokens) or tokens[j] != ",":
                raise InputError(f"expected ',' in {head}(...) in {text!r}")
            right, j2 = parse(j + 1)
            if j2 >= len(tokens) or tokens[j2] != ")":
                raise InputError(f"expected ')' closing {head}(...) in {text!r}")
            return (UnionF(left, right) if head == "u" else ProductF(left, right)), j2 + 1
        raise InputError(f"unexpected token {head!r} in {text!r}")

    eta, end = parse(0)
    if end != len(tokens):
        raise InputError(f"trailing tokens after functor expression: {text!r}")
    return eta
