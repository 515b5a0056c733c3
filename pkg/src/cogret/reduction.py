"""Hardness-instance generation: 3-partition encoded as a cograph pair.

A 3-partition instance (m, B, 3m items) becomes cotrees (T_G, T_H) such
that the pattern graph retracts from the host exactly when the items
split into m triples each summing to B.  Item sizes enter the output
linearly, which is what makes the unary hardness of 3-partition carry
over.  An independent exact 3-partition solver is included so the
encoding can be validated externally.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, count

from .cotree import Cotree, Internal, JOIN, Leaf, UNION, normalize
from .graph_core import ParseError


@dataclass(frozen=True)
class ThreePartitionInstance:
    """m target triples, triple sum B, and the 3m positive items."""

    m: int
    B: int
    items: tuple[int, ...]


def parse_instance(text: str) -> ThreePartitionInstance:
    """Parse the two-line format: 'm B' then the 3m items."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if len(lines) != 2:
        raise ParseError("expected two nonempty lines: 'm B' and the items")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("first line must be 'm B'", 1)
    try:
        m, B = int(head[0]), int(head[1])
        items = tuple(int(tok) for tok in lines[1].split())
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return ThreePartitionInstance(m=m, B=B, items=items)


def format_instance(inst: ThreePartitionInstance) -> str:
    return f"{inst.m} {inst.B}\n{' '.join(str(a) for a in inst.items)}\n"


def validate(inst: ThreePartitionInstance) -> list[str]:
    """Violation messages; empty means the instance is strictly valid.

    Strict validity: 3m positive items, each strictly between B/4 and
    B/2, summing to m*B (so every solution part has exactly three items).
    """
    problems = []
    if inst.m < 1:
        problems.append(f"m={inst.m} must be positive")
    if inst.B < 1:
        problems.append(f"B={inst.B} must be positive")
    if len(inst.items) != 3 * inst.m:
        problems.append(f"expected {3 * inst.m} items, got {len(inst.items)}")
    for idx, a in enumerate(inst.items):
        if a < 1:
            problems.append(f"item {idx} = {a} must be positive")
            continue
        if not 4 * a > inst.B:
            problems.append(f"item {idx} = {a} is not > B/4")
        if not 2 * a < inst.B:
            problems.append(f"item {idx} = {a} is not < B/2")
    if sum(inst.items) != inst.m * inst.B:
        problems.append(
            f"items sum to {sum(inst.items)}, expected m*B = {inst.m * inst.B}"
        )
    return problems


@dataclass(frozen=True)
class EncodedPair:
    """Cotrees for the host (g) and pattern (h); degenerate marks the
    canonical trivially-NO pair emitted when no index triple sums to B."""

    g: Cotree
    h: Cotree
    degenerate: bool
    triples: tuple[tuple[int, int, int], ...]


def valid_triples(inst: ThreePartitionInstance) -> tuple[tuple[int, int, int], ...]:
    """Index triples i<j<k with a_i + a_j + a_k = B."""
    return tuple(
        (i, j, k)
        for i, j, k in combinations(range(len(inst.items)), 3)
        if inst.items[i] + inst.items[j] + inst.items[k] == inst.B
    )


def _gadget(size: int, ids) -> Cotree:
    """Union of one leaf with a clique of `size` leaves (leaf if size=1)."""
    lone = Leaf(next(ids))
    if size == 1:
        block: Cotree = Leaf(next(ids))
    else:
        block = Internal(JOIN, tuple(Leaf(next(ids)) for _ in range(size)))
    return Internal(UNION, (lone, block))


def encode(inst: ThreePartitionInstance, force: bool = False) -> EncodedPair:
    """Build the cotree pair whose retract answer mirrors the instance.

    The pattern joins one gadget per item; the host joins m identical
    blocks, each a union over all valid triples of the join of the three
    corresponding gadgets.  Invalid instances are refused unless force
    is set.  With no valid triple the canonical degenerate NO pair
    (2K1, K2) is returned.
    """
    problems = validate(inst)
    if problems and not force:
        raise ValueError("invalid instance: " + "; ".join(problems))
    triples = valid_triples(inst)
    if not triples:
        g = Internal(UNION, (Leaf(0), Leaf(1)))
        h = Internal(JOIN, (Leaf(0), Leaf(1)))
        return EncodedPair(g=g, h=h, degenerate=True, triples=())
    h_ids = count()
    h = Internal(JOIN, tuple(_gadget(a, h_ids) for a in inst.items))
    g_ids = count()
    blocks = []
    for _ in range(inst.m):
        per_triple = tuple(
            Internal(
                JOIN,
                tuple(_gadget(inst.items[i], g_ids) for i in (i1, i2, i3)),
            )
            for (i1, i2, i3) in triples
        )
        blocks.append(
            per_triple[0] if len(per_triple) == 1 else Internal(UNION, per_triple)
        )
    g = blocks[0] if len(blocks) == 1 else Internal(JOIN, tuple(blocks))
    return EncodedPair(
        g=normalize(g), h=normalize(h), degenerate=False, triples=triples
    )


def brute_3partition(
    inst: ThreePartitionInstance,
) -> tuple[tuple[int, int, int], ...] | None:
    """Exact backtracking over index triples; independent of encode.

    Returns m index triples covering all items with each triple summing
    to B, or None.
    """
    n = len(inst.items)
    if n != 3 * inst.m or sum(inst.items) != inst.m * inst.B:
        return None
    used = [False] * n
    chosen: list[tuple[int, int, int]] = []

    def place() -> bool:
        try:
            first = used.index(False)
        except ValueError:
            return True
        used[first] = True
        rest = [i for i in range(first + 1, n) if not used[i]]
        for a, j in enumerate(rest):
            for k in rest[a + 1 :]:
                if inst.items[first] + inst.items[j] + inst.items[k] == inst.B:
                    used[j] = used[k] = True
                    chosen.append((first, j, k))
                    if place():
                        return True
                    chosen.pop()
                    used[j] = used[k] = False
        used[first] = False
        return False

    if place():
        return tuple(chosen)
    return None
