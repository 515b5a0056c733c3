"""Cograph recognition, cotrees, clique/chromatic numbers and class tests.

A cotree is a rooted tree whose leaves are the graph's vertices and whose
internal nodes are labeled UNION (disjoint union of the children) or JOIN
(union plus all edges across children).  Kinds strictly alternate on every
root-to-leaf path and internal nodes have at least two children.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph_core import Graph
from .retract_threshold import threshold_elimination

UNION = "U"
JOIN = "J"


@dataclass(frozen=True)
class Leaf:
    vertex: int


@dataclass(frozen=True)
class Internal:
    kind: str  # UNION or JOIN
    children: tuple["Cotree", ...]


Cotree = Union[Leaf, Internal]


class NotCographError(Exception):
    """The graph has an induced four-vertex path; carries it in path order."""

    def __init__(self, witness: tuple[int, int, int, int]):
        self.witness = witness
        super().__init__(f"not a cograph: induced P4 on {witness}")


class CotreeError(ValueError):
    """Malformed cotree value or text."""


# ---------------------------------------------------------------------------
# traversal helpers (iterative, so deep trees do not hit the recursion limit)


def _postorder(root: Cotree) -> list[Cotree]:
    out: list[Cotree] = []
    stack = [root]
    while stack:
        node = stack.pop()
        out.append(node)
        if isinstance(node, Internal):
            stack.extend(node.children)
    out.reverse()
    return out


def cotree_leaves(root: Cotree) -> tuple[int, ...]:
    """All leaf vertex ids under root, in left-to-right order."""
    out: list[int] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.vertex)
        else:
            stack.extend(reversed(node.children))
    return tuple(out)


def cotree_size(root: Cotree) -> int:
    return len(cotree_leaves(root))


# ---------------------------------------------------------------------------
# recognition


def _components_within(g: Graph, vs: tuple[int, ...]) -> list[tuple[int, ...]]:
    inside = set(vs)
    seen: set[int] = set()
    comps = []
    for s in vs:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if u in inside and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def _co_components_within(g: Graph, vs: tuple[int, ...]) -> list[tuple[int, ...]]:
    # BFS in the complement using the shrinking-unvisited-set trick
    unvisited = set(vs)
    comps = []
    for s in vs:
        if s not in unvisited:
            continue
        unvisited.remove(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            nonneighbors = unvisited - g.adjacency[v]
            comp.extend(nonneighbors)
            stack.extend(nonneighbors)
            unvisited -= nonneighbors
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def build_cotree(g: Graph) -> Cotree:
    """Decompose g into a cotree, or raise NotCographError with a P4 witness.

    Recursive split by components, then by complement components; children
    are ordered by smallest contained vertex.
    """
    if g.n == 0:
        raise ValueError("cannot build a cotree for the empty graph")
    root_vs = tuple(range(g.n))
    plan: dict[tuple[int, ...], tuple[str, list[tuple[int, ...]]]] = {}
    order: list[tuple[int, ...]] = []
    stack = [root_vs]
    while stack:
        vs = stack.pop()
        if vs in plan:
            continue
        order.append(vs)
        if len(vs) == 1:
            plan[vs] = ("leaf", [])
            continue
        comps = _components_within(g, vs)
        if len(comps) > 1:
            plan[vs] = (UNION, comps)
            stack.extend(comps)
            continue
        cocomps = _co_components_within(g, vs)
        if len(cocomps) > 1:
            plan[vs] = (JOIN, cocomps)
            stack.extend(cocomps)
            continue
        witness = find_induced_p4(g, vs)
        assert witness is not None
        raise NotCographError(witness)
    built: dict[tuple[int, ...], Cotree] = {}
    for vs in reversed(order):
        kind, parts = plan[vs]
        if kind == "leaf":
            built[vs] = Leaf(vs[0])
        else:
            built[vs] = Internal(kind, tuple(built[p] for p in parts))
    return built[root_vs]


def find_induced_p4(
    g: Graph, within: tuple[int, ...] | None = None
) -> tuple[int, int, int, int] | None:
    """Find an induced P4 (returned in path order), or None if P4-free.

    Scans induced P3s (center plus two nonadjacent neighbors) and tries
    every fourth vertex; every P4 contains such a P3, so the scan is
    complete.  Exits on the first hit.
    """
    vs = within if within is not None else tuple(range(g.n))
    inside = set(vs)
    for b in vs:
        nbrs = sorted(u for u in g.adjacency[b] if u in inside)
        for i, a in enumerate(nbrs):
            for c in nbrs[i + 1 :]:
                if g.has_edge(a, c):
                    continue
                for d in vs:
                    if d in (a, b, c):
                        continue
                    path = _as_p4(g, (a, b, c, d))
                    if path is not None:
                        return path
    return None


def _as_p4(g: Graph, quad: tuple[int, int, int, int]) -> tuple[int, int, int, int] | None:
    inner = [
        (u, v) for i, u in enumerate(quad) for v in quad[i + 1 :] if g.has_edge(u, v)
    ]
    if len(inner) != 3:
        return None
    deg = {v: 0 for v in quad}
    for u, v in inner:
        deg[u] += 1
        deg[v] += 1
    ends = [v for v in quad if deg[v] == 1]
    if len(ends) != 2 or any(deg[v] != 2 for v in quad if v not in ends):
        return None
    # walk from one endpoint
    adj = {v: [] for v in quad}
    for u, v in inner:
        adj[u].append(v)
        adj[v].append(u)
    path = [min(ends)]
    prev = None
    while len(path) < 4:
        nxt = [u for u in adj[path[-1]] if u != prev]
        if not nxt:
            return None
        prev = path[-1]
        path.append(nxt[0])
    return tuple(path)  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# realization and normalization


def cotree_to_graph(root: Cotree) -> Graph:
    """Realize the cotree bottom-up; leaf ids must be a permutation of 0..n-1."""
    leaves = cotree_leaves(root)
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise CotreeError(
            f"leaf ids must be a permutation of 0..{n - 1}, got {sorted(leaves)}"
        )
    edges: list[tuple[int, int]] = []
    leafsets: dict[int, tuple[int, ...]] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            leafsets[id(node)] = (node.vertex,)
            continue
        childsets = [leafsets[id(c)] for c in node.children]
        if len(childsets) < 2:
            raise CotreeError("internal cotree node with fewer than two children")
        if node.kind == JOIN:
            for i, a in enumerate(childsets):
                for b in childsets[i + 1 :]:
                    edges.extend((u, v) for u in a for v in b)
        elif node.kind != UNION:
            raise CotreeError(f"unknown cotree node kind {node.kind!r}")
        merged = tuple(x for s in childsets for x in s)
        leafsets[id(node)] = merged
    return Graph(n, edges)


def normalize(root: Cotree) -> Cotree:
    """Collapse single-child internals and merge same-kind nested children.

    The result realizes the same graph and satisfies the alternation and
    arity invariants.  Idempotent.
    """
    rebuilt: dict[int, Cotree] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            rebuilt[id(node)] = node
            continue
        flat: list[Cotree] = []
        for child in node.children:
            c = rebuilt[id(child)]
            if isinstance(c, Internal) and c.kind == node.kind:
                flat.extend(c.children)
            else:
                flat.append(c)
        rebuilt[id(node)] = flat[0] if len(flat) == 1 else Internal(node.kind, tuple(flat))
    return rebuilt[id(root)]


# ---------------------------------------------------------------------------
# clique and chromatic numbers, colorings, cliques


def clique_number(root: Cotree) -> int:
    """Max clique size: 1 at leaves, max over union children, sum over join."""
    omega: dict[int, int] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            omega[id(node)] = 1
        elif node.kind == UNION:
            omega[id(node)] = max(omega[id(c)] for c in node.children)
        else:
            omega[id(node)] = sum(omega[id(c)] for c in node.children)
    return omega[id(root)]


def chromatic_number(root: Cotree) -> int:
    """Chromatic number: max over union children, sum over join children.

    Cographs are perfect, so this always equals clique_number.
    """
    chi: dict[int, int] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            chi[id(node)] = 1
        elif node.kind == UNION:
            chi[id(node)] = max(chi[id(c)] for c in node.children)
        else:
            chi[id(node)] = sum(chi[id(c)] for c in node.children)
    return chi[id(root)]


def omega_table(root: Cotree) -> dict[int, int]:
    """Clique number of every subtree, keyed by node identity."""
    omega: dict[int, int] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            omega[id(node)] = 1
        elif node.kind == UNION:
            omega[id(node)] = max(omega[id(c)] for c in node.children)
        else:
            omega[id(node)] = sum(omega[id(c)] for c in node.children)
    return omega


def optimal_coloring(root: Cotree) -> dict[int, int]:
    """Proper coloring with chromatic_number(root) colors, as vertex -> color."""
    omega = omega_table(root)
    coloring: dict[int, dict[int, int]] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            coloring[id(node)] = {node.vertex: 0}
        elif node.kind == UNION:
            merged: dict[int, int] = {}
            for c in node.children:
                merged.update(coloring[id(c)])
            coloring[id(node)] = merged
        else:
            merged = {}
            offset = 0
            for c in node.children:
                for v, col in coloring[id(c)].items():
                    merged[v] = col + offset
                offset += omega[id(c)]
            coloring[id(node)] = merged
    return coloring[id(root)]


def max_clique_leaves(root: Cotree) -> tuple[int, ...]:
    """Vertices of one maximum clique, chosen deterministically."""
    omega = omega_table(root)
    cliques: dict[int, tuple[int, ...]] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            cliques[id(node)] = (node.vertex,)
        elif node.kind == UNION:
            best = max(node.children, key=lambda c: omega[id(c)])
            cliques[id(node)] = cliques[id(best)]
        else:
            cliques[id(node)] = tuple(
                v for c in node.children for v in cliques[id(c)]
            )
    return cliques[id(root)]


# ---------------------------------------------------------------------------
# graph-class recognition


THRESHOLD = "threshold"
TRIVIALLY_PERFECT = "trivially_perfect"
COGRAPH = "cograph"
NOT_COGRAPH = "not_cograph"


@dataclass(frozen=True)
class GraphClass:
    """Smallest applicable class plus a witness against the next-smaller one.

    witness_kind names the forbidden induced subgraph carried by witness:
    "P4" for not_cograph, "C4" for cograph (not trivially perfect), "2K2"
    or "C4" for trivially_perfect (not threshold); threshold has none.
    """

    name: str
    witness_kind: str | None = None
    witness: tuple[int, ...] | None = None


def _is_complete_subtree(node: Cotree) -> bool:
    return isinstance(node, Leaf) or (
        node.kind == JOIN and all(isinstance(c, Leaf) for c in node.children)
    )


def _first_edge_in(node: Cotree) -> tuple[int, int]:
    for nd in _postorder(node):
        if isinstance(nd, Internal) and nd.kind == JOIN:
            a = cotree_leaves(nd.children[0])[0]
            b = cotree_leaves(nd.children[1])[0]
            return (a, b)
    raise ValueError("subtree has no edge")


def _first_nonedge_in(node: Cotree) -> tuple[int, int]:
    for nd in _postorder(node):
        if isinstance(nd, Internal) and nd.kind == UNION:
            a = cotree_leaves(nd.children[0])[0]
            b = cotree_leaves(nd.children[1])[0]
            return (a, b)
    raise ValueError("subtree has no non-edge")


def classify(g: Graph) -> GraphClass:
    """Report the smallest class among threshold, trivially perfect, cograph.

    Threshold means repeated removal of a universal-or-isolated vertex
    empties the graph; trivially perfect means cograph without an induced
    C4.  Witnesses carry the forbidden subgraph blocking the next-smaller
    class.
    """
    try:
        root = build_cotree(g)
    except NotCographError as exc:
        return GraphClass(NOT_COGRAPH, witness_kind="P4", witness=exc.witness)
    c4 = None
    two_k2 = None
    for node in _postorder(root):
        if not isinstance(node, Internal):
            continue
        if node.kind == JOIN:
            incomplete = [c for c in node.children if not _is_complete_subtree(c)]
            if len(incomplete) >= 2 and c4 is None:
                a, b = _first_nonedge_in(incomplete[0])
                c, d = _first_nonedge_in(incomplete[1])
                c4 = (a, c, b, d)  # cycle order: a-c, c-b, b-d, d-a
        else:
            edgy = [c for c in node.children if not _edgeless_subtree(c)]
            if len(edgy) >= 2 and two_k2 is None:
                two_k2 = _first_edge_in(edgy[0]) + _first_edge_in(edgy[1])
    if c4 is not None:
        return GraphClass(COGRAPH, witness_kind="C4", witness=c4)
    if two_k2 is not None:
        return GraphClass(TRIVIALLY_PERFECT, witness_kind="2K2", witness=two_k2)
    assert threshold_elimination(g) is not None
    return GraphClass(THRESHOLD)


def _edgeless_subtree(node: Cotree) -> bool:
    return all(
        not (isinstance(nd, Internal) and nd.kind == JOIN) for nd in _postorder(node)
    )


def is_trivially_perfect_cotree(root: Cotree) -> bool:
    """No join node may have two children that each contain a non-edge."""
    for node in _postorder(root):
        if isinstance(node, Internal) and node.kind == JOIN:
            incomplete = sum(
                1 for c in node.children if not _is_complete_subtree(c)
            )
            if incomplete >= 2:
                return False
    return True


# ---------------------------------------------------------------------------
# canonical keys


def canonical_key(root: Cotree) -> bytes:
    """Canonical bytes: equal iff the trees are isomorphic as unordered
    kind-labeled trees.  Leaf ids are erased, so equal keys imply
    isomorphic graphs.
    """
    keys: dict[int, bytes] = {}
    for node in _postorder(root):
        if isinstance(node, Leaf):
            keys[id(node)] = b"L"
        else:
            child_keys = sorted(keys[id(c)] for c in node.children)
            keys[id(node)] = (
                node.kind.encode("ascii") + b"(" + b"".join(child_keys) + b")"
            )
    return keys[id(root)]


def subtree_key(kind: str, child_keys: list[bytes]) -> bytes:
    """Canonical key of a hypothetical internal node over the given children."""
    return kind.encode("ascii") + b"(" + b"".join(sorted(child_keys)) + b")"


# ---------------------------------------------------------------------------
# text format


def format_cotree(root: Cotree) -> str:
    """Serialize per the grammar: INT or KIND '(' child (',' child)+ ')'."""
    parts: list[str] = []

    def emit(node: Cotree) -> None:
        # iterative would obscure this; tree text depth is desk-scale
        if isinstance(node, Leaf):
            parts.append(str(node.vertex))
        else:
            parts.append(node.kind)
            parts.append("(")
            for i, c in enumerate(node.children):
                if i:
                    parts.append(",")
                emit(c)
            parts.append(")")

    emit(root)
    return "".join(parts)


def parse_cotree(text: str) -> Cotree:
    """Parse the cotree grammar; whitespace is ignored.

    Leaf ids must form a permutation of 0..n-1.  The result is normalized,
    so same-kind nesting in the input is tolerated.
    """
    s = "".join(text.split())
    pos = 0

    def parse_node() -> Cotree:
        nonlocal pos
        if pos >= len(s):
            raise CotreeError("unexpected end of cotree text")
        ch = s[pos]
        if ch in (UNION, JOIN):
            kind = ch
            pos += 1
            if pos >= len(s) or s[pos] != "(":
                raise CotreeError(f"expected '(' at position {pos}")
            pos += 1
            children = [parse_node()]
            while pos < len(s) and s[pos] == ",":
                pos += 1
                children.append(parse_node())
            if pos >= len(s) or s[pos] != ")":
                raise CotreeError(f"expected ')' at position {pos}")
            pos += 1
            if len(children) < 2:
                raise CotreeError("internal node needs at least two children")
            return Internal(kind, tuple(children))
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise CotreeError(f"expected leaf id or kind at position {pos}")
        return Leaf(int(s[start:pos]))

    root = parse_node()
    if pos != len(s):
        raise CotreeError(f"trailing input at position {pos}")
    root = normalize(root)
    leaves = cotree_leaves(root)
    if sorted(leaves) != list(range(len(leaves))):
        raise CotreeError("leaf ids must be a permutation of 0..n-1")
    return root
