"""Absolute retracts among connected cographs.

A connected cograph is a retract of every cograph that contains it as an
induced subgraph with the same clique number exactly when each of its
vertices lies in a maximum clique.  When some vertex misses every maximum
clique, adding a true twin to a deficient union branch produces a
certified non-retracting supergraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cotree import (
    Leaf,
    UNION,
    Cotree,
    build_cotree,
    cotree_leaves,
    max_clique_leaves,
    omega_table,
)
from .graph_core import Graph, NoRetract, components
from .retract_cograph import PartitionedInstance, partitioned_retract


@dataclass(frozen=True)
class AbsoluteVerdict:
    """Outcome of the absolute-retract test.

    On success max_cliques maps every vertex to a maximum clique
    containing it.  On failure failing_vertices lists the vertices outside
    all maximum cliques and counterexample holds a supergraph with the
    same clique number that provably does not retract onto the input.
    """

    is_absolute: bool
    max_cliques: dict[int, tuple[int, ...]] | None = None
    failing_vertices: tuple[int, ...] = ()
    counterexample: Graph | None = None


def _require_connected_cograph(h: Graph) -> Cotree:
    if h.n == 0:
        raise ValueError("empty graph")
    if len(components(h)) != 1:
        raise ValueError("absolute-retract test requires a connected graph")
    return build_cotree(h)


def _vertex_qualifies(root: Cotree) -> dict[int, bool]:
    """True for v iff, at every union ancestor, v's branch attains the
    node's maximum child clique number."""
    omega = omega_table(root)
    ok: dict[int, bool] = {}
    stack: list[tuple[Cotree, bool]] = [(root, True)]
    while stack:
        node, good = stack.pop()
        if isinstance(node, Leaf):
            ok[node.vertex] = good
            continue
        if node.kind == UNION:
            best = max(omega[id(c)] for c in node.children)
            for c in node.children:
                stack.append((c, good and omega[id(c)] == best))
        else:
            for c in node.children:
                stack.append((c, good))
    return ok


def _clique_through(root: Cotree, v: int) -> tuple[int, ...]:
    """A maximum clique containing v; assumes v qualifies."""
    node = root
    picked: list[int] = []
    omega = omega_table(root)
    while True:
        if isinstance(node, Leaf):
            picked.append(node.vertex)
            return tuple(sorted(picked))
        holder = next(c for c in node.children if v in set(cotree_leaves(c)))
        if node.kind == UNION:
            node = holder
        else:
            for c in node.children:
                if c is not holder:
                    picked.extend(max_clique_leaves(c))
            node = holder


def is_absolute_retract(h: Graph) -> AbsoluteVerdict:
    """Test whether every vertex of h lies in a maximum clique.

    h must be a connected cograph.  A failing verdict carries a verified
    counterexample embedding built by counterexample_embedding.
    """
    root = _require_connected_cograph(h)
    qualifies = _vertex_qualifies(root)
    failing = tuple(sorted(v for v in range(h.n) if not qualifies[v]))
    if not failing:
        cliques = {v: _clique_through(root, v) for v in range(h.n)}
        return AbsoluteVerdict(is_absolute=True, max_cliques=cliques)
    counter = counterexample_embedding(h)
    return AbsoluteVerdict(
        is_absolute=False, failing_vertices=failing, counterexample=counter
    )


def counterexample_embedding(h: Graph) -> Graph:
    """A supergraph with equal clique number that does not retract onto h.

    Finds the first union node (preorder) with a branch whose clique
    number falls short of a sibling's, then adds one vertex as a true twin
    of the lowest-indexed maximum-clique vertex of that deficient branch.
    The result keeps h induced on 0..n-1 and is certified non-retracting
    by the partitioned solver before being returned.  Raises ValueError
    when h is an absolute retract.
    """
    root = _require_connected_cograph(h)
    omega = omega_table(root)
    deficient: Cotree | None = None
    stack = [root]
    while stack and deficient is None:
        node = stack.pop()
        if isinstance(node, Leaf):
            continue
        if node.kind == UNION:
            best = max(omega[id(c)] for c in node.children)
            for c in node.children:
                if omega[id(c)] < best:
                    deficient = c
                    break
        if deficient is None:
            stack.extend(reversed(node.children))
    if deficient is None:
        raise ValueError("graph is an absolute retract; no counterexample exists")
    twin_of = min(max_clique_leaves(deficient))
    new = h.n
    edges = list(h.edges())
    edges.append((twin_of, new))
    edges.extend((u, new) for u in h.adjacency[twin_of])
    g = Graph(h.n + 1, edges)
    answer = partitioned_retract(PartitionedInstance(g, frozenset(range(h.n))))
    if not isinstance(answer, NoRetract):
        raise AssertionError("counterexample construction failed certification")
    return g
