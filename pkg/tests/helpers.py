"""Shared fixtures: named small graphs, exhaustive enumerations by graph
class, and deterministic random generators."""

from __future__ import annotations

import random
from functools import lru_cache

from cogret.cotree import (
    Internal,
    JOIN,
    Leaf,
    UNION,
    Cotree,
    build_cotree,
    cotree_to_graph,
    is_trivially_perfect_cotree,
)
from cogret.graph_core import Graph


def K(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def E(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


P3 = path(3)
P4 = path(4)
C4 = cycle(4)
K1, K2, K3, K4 = K(1), K(2), K(3), K(4)
TWO_K2 = Graph(4, [(0, 1), (2, 3)])
# vertex 0 universal in both; pendant side of the paw is vertex 1
PAW = Graph(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
BUTTERFLY = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])


# ---------------------------------------------------------------------------
# exhaustive enumeration of cographs via cotree shapes

_LEAF = "L"


@lru_cache(maxsize=None)
def _shapes(n: int, kind: str):
    """Canonical cotree shapes with n leaves rooted at `kind`."""
    if n == 1:
        return (_LEAF,)
    other = UNION if kind == JOIN else JOIN
    catalog: list[tuple[int, object]] = [(1, _LEAF)]
    for size in range(2, n):
        catalog.extend((size, s) for s in _shapes(size, other))
    out = []

    def pick(remaining: int, start: int, chosen: tuple):
        if remaining == 0:
            if len(chosen) >= 2:
                out.append((kind, chosen))
            return
        for idx in range(start, len(catalog)):
            size, shape = catalog[idx]
            if size > remaining:
                continue
            pick(remaining - size, idx, chosen + ((size, shape),))

    pick(n, 0, ())
    return tuple(out)


def _shape_to_cotree(shape, counter: list[int]) -> Cotree:
    if shape == _LEAF:
        counter[0] += 1
        return Leaf(counter[0] - 1)
    kind, children = shape
    return Internal(kind, tuple(_shape_to_cotree(s, counter) for _, s in children))


def all_cotrees(n: int) -> list[Cotree]:
    """One cotree per isomorphism class of cographs on n vertices."""
    if n == 1:
        return [Leaf(0)]
    shapes = list(_shapes(n, UNION)) + list(_shapes(n, JOIN))
    return [_shape_to_cotree(s, [0]) for s in shapes]


def all_cographs(n: int) -> list[Graph]:
    return [cotree_to_graph(t) for t in all_cotrees(n)]


def _every_internal_has_one_internal_child(root: Cotree) -> bool:
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, Internal):
            internal = [c for c in node.children if isinstance(c, Internal)]
            if len(internal) > 1:
                return False
            stack.extend(node.children)
    return True


def all_threshold_graphs(n: int) -> list[Graph]:
    return [
        cotree_to_graph(t)
        for t in all_cotrees(n)
        if _every_internal_has_one_internal_child(t)
    ]


def all_tp_graphs(n: int) -> list[Graph]:
    return [
        cotree_to_graph(t) for t in all_cotrees(n) if is_trivially_perfect_cotree(t)
    ]


def all_connected_cographs(n: int) -> list[Graph]:
    if n == 1:
        return [K(1)]
    return [
        cotree_to_graph(_shape_to_cotree(s, [0])) for s in _shapes(n, JOIN)
    ]


# ---------------------------------------------------------------------------
# random generators


def random_threshold_graph(n: int, seed: int, universal_bias: float = 0.5) -> Graph:
    """Creation sequence: each new vertex arrives isolated or universal."""
    rng = random.Random(f"threshold:{n}:{seed}")
    edges = []
    for v in range(1, n):
        if rng.random() < universal_bias:
            edges.extend((v, u) for u in range(v))
    return Graph(n, edges)


def sparse_random_threshold_graph(n: int, seed: int, avg_degree: float = 6.0) -> Graph:
    """Threshold graph with roughly avg_degree * n / 2 edges.

    Universal insertions at step v cost v edges, so the acceptance rate
    decays with v to keep the total linear in n.
    """
    rng = random.Random(f"sparse-threshold:{n}:{seed}")
    edges = []
    for v in range(1, n):
        if rng.random() < avg_degree / (2 * v):
            edges.extend((v, u) for u in range(v))
    return Graph(n, edges)


def random_tp_cotree(n: int, seed: int) -> Cotree:
    """Bushy random trivially perfect cotree (every join node has at most
    one non-leaf child), with leaf ids shuffled."""
    rng = random.Random(f"tp:{n}:{seed}")
    counter = [0]

    def connected(k: int) -> Cotree:
        # join of `u` universal leaves with a union of smaller blocks
        if k == 1:
            counter[0] += 1
            return Leaf(counter[0] - 1)
        u = rng.randint(1, max(1, k // 3)) if k > 2 else rng.randint(1, k)
        if u >= k:
            u = k  # clique
        leaves = []
        for _ in range(u):
            counter[0] += 1
            leaves.append(Leaf(counter[0] - 1))
        if u == k:
            return leaves[0] if k == 1 else Internal(JOIN, tuple(leaves))
        rest = k - u
        parts = _random_parts(rng, rest)
        blocks = [connected(p) for p in parts]
        inner: Cotree = blocks[0] if len(blocks) == 1 else Internal(UNION, tuple(blocks))
        if len(blocks) == 1:
            # a single block under the join would break alternation; absorb it
            if isinstance(inner, Internal) and inner.kind == JOIN:
                return Internal(JOIN, tuple(leaves) + inner.children)
        return Internal(JOIN, tuple(leaves) + (inner,))

    def _random_parts(r: random.Random, k: int) -> list[int]:
        if k == 1:
            return [1]
        nparts = r.randint(2, min(k, 4)) if k > 1 else 1
        cuts = sorted(r.sample(range(1, k), min(nparts - 1, k - 1)))
        bounds = [0] + cuts + [k]
        return [bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)]

    if n == 1:
        return Leaf(0)
    top = rng.randint(1, 3)
    if top == 1:
        tree = connected(n)
    else:
        parts = _random_parts(rng, n)
        if len(parts) == 1:
            tree = connected(n)
        else:
            tree = Internal(UNION, tuple(connected(p) for p in parts))
    perm = list(range(n))
    rng.shuffle(perm)
    return _relabel_cotree(tree, perm)


def _relabel_cotree(node: Cotree, perm: list[int]) -> Cotree:
    if isinstance(node, Leaf):
        return Leaf(perm[node.vertex])
    return Internal(node.kind, tuple(_relabel_cotree(c, perm) for c in node.children))


def random_tp_graph(n: int, seed: int) -> Graph:
    return cotree_to_graph(random_tp_cotree(n, seed))


def random_cotree(n: int, seed: int) -> Cotree:
    """Arbitrary random normalized cotree with n leaves."""
    rng = random.Random(f"cotree:{n}:{seed}")

    def build(k: int, kind: str) -> Cotree:
        if k == 1:
            return Leaf(0)
        nparts = rng.randint(2, k)
        cuts = sorted(rng.sample(range(1, k), nparts - 1))
        bounds = [0] + cuts + [k]
        parts = [bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)]
        other = UNION if kind == JOIN else JOIN
        return Internal(kind, tuple(build(p, other) for p in parts))

    tree = build(n, rng.choice([UNION, JOIN]))
    counter = [0]

    def assign(node: Cotree) -> Cotree:
        if isinstance(node, Leaf):
            counter[0] += 1
            return Leaf(counter[0] - 1)
        return Internal(node.kind, tuple(assign(c) for c in node.children))

    return assign(tree)


def random_graph(n: int, seed: int, p: float = 0.5) -> Graph:
    rng = random.Random(f"gnp:{n}:{seed}:{p}")
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_omega_preserving_extension(h: Graph, seed: int) -> Graph | None:
    """Random connected cograph supergraph of a connected cograph h.

    Keeps h induced on vertices 0..h.n-1, preserves the clique number and
    adds at most three vertices: either a small clique branch under an
    existing union node (never exceeding a sibling's clique number) or a
    false twin of an existing vertex.  Returns None for K1, which has no
    proper extension with clique number one.
    """
    if h.n == 1:
        return None
    rng = random.Random(f"ext:{h.n}:{seed}")
    root = _mutable(build_cotree(h))
    next_id = [h.n]
    budget = rng.randint(1, 3)
    while budget > 0:
        nodes = _mutable_nodes(root)
        unions = [nd for nd in nodes if nd[0] == UNION]
        leaves = [nd for nd in nodes if nd[0] == _LEAF]
        if unions and rng.random() < 0.5:
            target = rng.choice(unions)
            max_w = max(_mutable_omega(c) for c in target[1])
            size = rng.randint(1, min(max_w, budget))
            if size == 1:
                branch = [_LEAF, next_id[0]]
                next_id[0] += 1
            else:
                branch = [JOIN, []]
                for _ in range(size):
                    branch[1].append([_LEAF, next_id[0]])
                    next_id[0] += 1
            target[1].append(branch)
            budget -= size
        else:
            leaf = rng.choice(leaves)
            v = leaf[1]
            leaf[0] = UNION
            leaf[1] = [[_LEAF, v], [_LEAF, next_id[0]]]
            next_id[0] += 1
            budget -= 1
    if next_id[0] == h.n:
        return None
    return cotree_to_graph(_freeze_mutable(root))


def _mutable(node: Cotree):
    if isinstance(node, Leaf):
        return [_LEAF, node.vertex]
    return [node.kind, [_mutable(c) for c in node.children]]


def _mutable_nodes(root):
    out = []
    stack = [root]
    while stack:
        nd = stack.pop()
        out.append(nd)
        if nd[0] != _LEAF:
            stack.extend(nd[1])
    return out


def _mutable_omega(nd) -> int:
    if nd[0] == _LEAF:
        return 1
    values = [_mutable_omega(c) for c in nd[1]]
    return max(values) if nd[0] == UNION else sum(values)


def _freeze_mutable(nd) -> Cotree:
    from cogret.cotree import normalize

    def freeze(node) -> Cotree:
        if node[0] == _LEAF:
            return Leaf(node[1])
        return Internal(node[0], tuple(freeze(c) for c in node[1]))

    return normalize(freeze(nd))
