"""General cograph machinery: homomorphism test, partitioned retract,
fixed-parameter retract and the front-door dispatcher.

Cographs are perfect, so a homomorphism between them exists exactly when
the source's chromatic number is at most the target's clique number.  The
partitioned solver prunes the host's cotree; the fixed-parameter solver
enumerates assignments of the pattern root's cocomponents to the host
root's cocomponents, with component matching at union levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cotree import (
    GraphClass,
    Internal,
    JOIN,
    Leaf,
    NOT_COGRAPH,
    THRESHOLD,
    TRIVIALLY_PERFECT,
    UNION,
    Cotree,
    NotCographError,
    build_cotree,
    canonical_key,
    classify,
    clique_number,
    max_clique_leaves,
    omega_table,
    optimal_coloring,
    subtree_key,
)
from .graph_core import (
    Graph,
    NoRetract,
    RetractCertificate,
    induced_subgraph,
    verify_retract_certificate,
)
from .matching import BipartiteInstance, Matching, max_matching, saturates_right
from .retract_threshold import threshold_retract
from .retract_tp import tp_retract


# ---------------------------------------------------------------------------
# homomorphism existence (both sides cographs)


def hom_exists(g: Graph, h: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Homomorphism test via perfection: true iff chi(g) <= omega(h).

    On YES the witness composes an optimal coloring of g with an
    injection of the color classes into a maximum clique of h.
    Raises NotCographError if either input is not a cograph.
    """
    if g.n == 0:
        return True, ()
    tg = build_cotree(g)
    th = build_cotree(h)
    coloring = optimal_coloring(tg)
    clique = sorted(max_clique_leaves(th))
    chi_g = max(coloring.values()) + 1
    if chi_g > len(clique):
        return False, None
    return True, tuple(clique[coloring[v]] for v in range(g.n))


# ---------------------------------------------------------------------------
# partitioned case: the pattern is an induced subgraph of the host


@dataclass(frozen=True)
class PartitionedInstance:
    """Host graph plus the vertex subset inducing the pattern."""

    g: Graph
    hset: frozenset[int]

    def __post_init__(self):
        for v in self.hset:
            if not (0 <= v < self.g.n):
                raise ValueError(f"pattern vertex {v} out of range")


class _MNode:
    """Mutable cotree mirror used by the pruning fixpoint."""

    __slots__ = ("kind", "vertex", "children")

    def __init__(self, kind: str, vertex: int = -1, children=None):
        self.kind = kind  # "L", UNION or JOIN
        self.vertex = vertex
        self.children: list[_MNode] = children or []


def _to_mutable(node: Cotree) -> _MNode:
    if isinstance(node, Leaf):
        return _MNode("L", vertex=node.vertex)
    return _MNode(node.kind, children=[_to_mutable(c) for c in node.children])


def _mutable_postorder(root: _MNode) -> list[_MNode]:
    out: list[_MNode] = []
    stack = [root]
    while stack:
        nd = stack.pop()
        out.append(nd)
        stack.extend(nd.children)
    out.reverse()
    return out


def _mutable_normalize(root: _MNode) -> _MNode:
    for nd in _mutable_postorder(root):
        if nd.kind == "L":
            continue
        flat: list[_MNode] = []
        for c in nd.children:
            if c.kind == nd.kind:
                flat.extend(c.children)
            else:
                flat.append(c)
        if len(flat) == 1:
            only = flat[0]
            nd.kind, nd.vertex, nd.children = only.kind, only.vertex, only.children
        else:
            nd.children = flat
    return root


def _mutable_leaves(root: _MNode) -> list[int]:
    return [nd.vertex for nd in _mutable_postorder(root) if nd.kind == "L"]


def _mutable_freeze(root: _MNode) -> Cotree:
    if root.kind == "L":
        return Leaf(root.vertex)
    return Internal(root.kind, tuple(_mutable_freeze(c) for c in root.children))


def partitioned_retract(inst: PartitionedInstance) -> RetractCertificate | NoRetract:
    """Decide a retraction onto an induced-subgraph pattern by cotree pruning.

    Repeatedly remove a child of a union node that has no pattern leaves
    and whose clique number is at most a current sibling's; clique numbers
    are recomputed after every removal.  YES exactly when only pattern
    vertices remain; the certificate's co-retraction is the inclusion and
    the retraction routes each pruned branch into its dominating sibling.
    """
    g, hset = inst.g, inst.hset
    if not hset:
        if g.n == 0:
            return RetractCertificate(rho=(), gamma=())
        return NoRetract("empty pattern set")
    root = _to_mutable(_mutable_source(g))
    prune_events: list[tuple[list[int], dict[int, int]]] = []

    while True:
        event = _find_and_prune(root, hset)
        if event is None:
            break
        prune_events.append(event)
        root = _mutable_normalize(root)

    remaining = set(_mutable_leaves(root))
    if remaining != set(hset):
        return NoRetract(
            "pruning fixpoint keeps vertices outside the pattern",
            tuple(sorted(remaining - set(hset))),
        )

    # resolve pruned vertices through later events back into the pattern
    resolve: dict[int, int] = {v: v for v in hset}
    for vertices, hom in reversed(prune_events):
        for v in vertices:
            resolve[v] = resolve[hom[v]]
    old = tuple(sorted(hset))
    index = {v: i for i, v in enumerate(old)}
    rho = tuple(index[resolve[v]] for v in range(g.n))
    cert = RetractCertificate(rho=rho, gamma=old)
    h, _ = induced_subgraph(g, hset)
    if not verify_retract_certificate(g, h, cert):
        raise AssertionError("partitioned solver produced an invalid certificate")
    return cert


def _mutable_source(g: Graph) -> Cotree:
    return build_cotree(g)


def _find_and_prune(root: _MNode, hset: frozenset[int]) -> tuple[list[int], dict[int, int]] | None:
    """Remove the first prunable union-node child in preorder, if any.

    Returns (removed vertices, hom map into the dominating sibling).
    """
    omega: dict[int, int] = {}
    has_h: dict[int, bool] = {}
    for nd in _mutable_postorder(root):
        if nd.kind == "L":
            omega[id(nd)] = 1
            has_h[id(nd)] = nd.vertex in hset
        else:
            child_omegas = [omega[id(c)] for c in nd.children]
            omega[id(nd)] = (
                max(child_omegas) if nd.kind == UNION else sum(child_omegas)
            )
            has_h[id(nd)] = any(has_h[id(c)] for c in nd.children)

    stack = [root]
    while stack:
        nd = stack.pop()
        if nd.kind == UNION:
            for pos, child in enumerate(nd.children):
                if has_h[id(child)]:
                    continue
                sibling = None
                for other in nd.children:
                    if other is not child and omega[id(other)] >= omega[id(child)]:
                        sibling = other
                        break
                if sibling is None:
                    continue
                nd.children.pop(pos)
                branch = _mutable_freeze(child)
                target = _mutable_freeze(sibling)
                coloring = optimal_coloring(branch)
                clique = sorted(max_clique_leaves(target))
                hom = {v: clique[c] for v, c in coloring.items()}
                return _mutable_leaves(child), hom
        if nd.kind != "L":
            stack.extend(reversed(nd.children))
    return None


# ---------------------------------------------------------------------------
# fixed-parameter solver for general cograph pairs


class _FPTSolver:
    """Decision and certification over cotree subtree pairs, memoized on
    canonical keys so isomorphic subproblems are solved once."""

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.tg = build_cotree(g)
        self.th = build_cotree(h)
        self.omega: dict[int, int] = omega_table(self.tg)
        self.omega.update(omega_table(self.th))
        self.keys: dict[int, bytes] = {}
        self.memo: dict[tuple[bytes, bytes], bool] = {}
        self._hold: list[Cotree] = []

    def key(self, node: Cotree) -> bytes:
        got = self.keys.get(id(node))
        if got is None:
            got = canonical_key(node)
            self.keys[id(node)] = got
        return got

    def _derive_join(self, children: tuple[Cotree, ...]) -> Cotree:
        if len(children) == 1:
            return children[0]
        node = Internal(JOIN, children)
        self._hold.append(node)
        self.omega[id(node)] = sum(self.omega[id(c)] for c in children)
        self.keys[id(node)] = subtree_key(JOIN, [self.key(c) for c in children])
        return node

    def decide(self, gn: Cotree, hn: Cotree) -> bool:
        key = (self.key(gn), self.key(hn))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result = self._decide_fresh(gn, hn)
        self.memo[key] = result
        return result

    def _decide_fresh(self, gn: Cotree, hn: Cotree) -> bool:
        if self.omega[id(gn)] != self.omega[id(hn)]:
            return False
        g_disc = isinstance(gn, Internal) and gn.kind == UNION
        h_disc = isinstance(hn, Internal) and hn.kind == UNION
        if not g_disc:
            if h_disc:
                return False  # no connected graph has a disconnected retract
            return self._decide_connected(gn, hn)
        gcomps = list(gn.children)
        hcomps = list(hn.children) if h_disc else [hn]
        return self._decide_components(gcomps, hcomps) is not None

    def _decide_connected(self, gn: Cotree, hn: Cotree) -> bool:
        if isinstance(gn, Leaf):
            return isinstance(hn, Leaf)
        if isinstance(hn, Leaf):
            return False  # join node always carries an edge
        return self._feasible_assignment(gn, hn) is not None

    def _feasible_assignment(
        self, gn: Internal, hn: Internal
    ) -> tuple[tuple[int, ...], list[Cotree]] | None:
        """First assignment of pattern cocomponents onto host cocomponents
        (lexicographic, surjective) whose pairs all retract."""
        p = len(gn.children)
        q = len(hn.children)
        if q < p:
            return None
        every = frozenset(range(p))
        for f in product(range(p), repeat=q):
            if frozenset(f) != every:
                continue
            parts: list[list[Cotree]] = [[] for _ in range(p)]
            for j, i in enumerate(f):
                parts[i].append(hn.children[j])
            derived = [self._derive_join(tuple(part)) for part in parts]
            if any(
                self.omega[id(gn.children[i])] != self.omega[id(derived[i])]
                for i in range(p)
            ):
                continue
            if all(self.decide(gn.children[i], derived[i]) for i in range(p)):
                return f, derived
        return None

    def _decide_components(
        self, gcomps: list[Cotree], hcomps: list[Cotree]
    ) -> Matching | None:
        """Saturating matching over component pairs, or None when infeasible."""
        p, q = len(gcomps), len(hcomps)
        if q > p:
            return None
        edges = tuple(
            (i, j)
            for i in range(p)
            for j in range(q)
            if self.decide(gcomps[i], hcomps[j])
        )
        matching = max_matching(BipartiteInstance(p=p, q=q, edges=edges))
        if not saturates_right(matching, q):
            return None
        h_omega = max(self.omega[id(d)] for d in hcomps)
        matched = {i for i, _ in matching.pairs}
        for i in range(p):
            if i not in matched and self.omega[id(gcomps[i])] > h_omega:
                return None
        return matching

    # -- certificates ------------------------------------------------------

    def certify(self, gn: Cotree, hn: Cotree) -> tuple[dict, dict]:
        g_disc = isinstance(gn, Internal) and gn.kind == UNION
        h_disc = isinstance(hn, Internal) and hn.kind == UNION
        if not g_disc:
            if isinstance(gn, Leaf):
                assert isinstance(hn, Leaf)
                return {gn.vertex: hn.vertex}, {hn.vertex: gn.vertex}
            assert isinstance(hn, Internal) and hn.kind == JOIN
            found = self._feasible_assignment(gn, hn)
            assert found is not None, "certify called on a NO pair"
            _, derived = found
            rho: dict = {}
            gamma: dict = {}
            for i, child in enumerate(gn.children):
                sub_rho, sub_gamma = self.certify(child, derived[i])
                rho.update(sub_rho)
                gamma.update(sub_gamma)
            return rho, gamma
        gcomps = list(gn.children)
        hcomps = list(hn.children) if h_disc else [hn]
        matching = self._decide_components(gcomps, hcomps)
        assert matching is not None, "certify called on a NO pair"
        rho = {}
        gamma = {}
        matched = {}
        for i, j in matching.pairs:
            matched[i] = j
            sub_rho, sub_gamma = self.certify(gcomps[i], hcomps[j])
            rho.update(sub_rho)
            gamma.update(sub_gamma)
        for i in range(len(gcomps)):
            if i in matched:
                continue
            target = next(
                j
                for j in range(len(hcomps))
                if self.omega[id(hcomps[j])] >= self.omega[id(gcomps[i])]
            )
            coloring = optimal_coloring(gcomps[i])
            clique = sorted(max_clique_leaves(hcomps[target]))
            rho.update({v: clique[c] for v, c in coloring.items()})
        return rho, gamma


def fpt_retract(g: Graph, h: Graph) -> RetractCertificate | NoRetract:
    """Retract decision for general cograph pairs, parameterized by |V(h)|.

    Early NO when clique numbers differ; join levels enumerate surjective
    assignments of pattern cocomponents to host cocomponents, union levels
    run component matching; everything is memoized on canonical cotree
    keys.  Raises NotCographError on non-cograph input.
    """
    if clique_number(build_cotree(g)) != clique_number(build_cotree(h)):
        return NoRetract("clique numbers differ")
    solver = _FPTSolver(g, h)
    if not solver.decide(solver.tg, solver.th):
        return NoRetract("no assignment of pattern cocomponents succeeds")
    rho_map, gamma_map = solver.certify(solver.tg, solver.th)
    cert = RetractCertificate(
        rho=tuple(rho_map[v] for v in range(g.n)),
        gamma=tuple(gamma_map[y] for y in range(h.n)),
    )
    if not verify_retract_certificate(g, h, cert):
        raise AssertionError("fixed-parameter solver produced an invalid certificate")
    return cert


# ---------------------------------------------------------------------------
# dispatcher


def solver_route(gc: GraphClass, hc: GraphClass) -> str:
    """Route selection: the fastest solver whose class covers both inputs."""
    if NOT_COGRAPH in (gc.name, hc.name):
        raise ValueError("both inputs must be cographs")
    if gc.name == THRESHOLD and hc.name == THRESHOLD:
        return "threshold"
    tp = (THRESHOLD, TRIVIALLY_PERFECT)
    if gc.name in tp and hc.name in tp:
        return "tp"
    return "fpt"


def retract(g: Graph, h: Graph) -> tuple[RetractCertificate | NoRetract, str]:
    """Classify both inputs and dispatch to the right solver.

    Returns (result, route).  Raises NotCographError (with a P4 witness)
    when either input is not a cograph.
    """
    gc = classify(g)
    if gc.name == NOT_COGRAPH:
        raise NotCographError(gc.witness)  # type: ignore[arg-type]
    hc = classify(h)
    if hc.name == NOT_COGRAPH:
        raise NotCographError(hc.witness)  # type: ignore[arg-type]
    route = solver_route(gc, hc)
    if route == "threshold":
        return threshold_retract(g, h), route
    if route == "tp":
        return tp_retract(g, h), route
    return fpt_retract(g, h), route
