from __future__ import annotations

import random
from itertools import combinations

import pytest

from cogret.matching import BipartiteInstance, Matching, max_matching, saturates_right


def brute_max_matching_size(inst: BipartiteInstance) -> int:
    """Exponential reference: try every subset of edges."""
    best = 0
    edges = list(inst.edges)
    for k in range(min(inst.p, inst.q), 0, -1):
        for subset in combinations(edges, k):
            lefts = {u for u, _ in subset}
            rights = {v for _, v in subset}
            if len(lefts) == k and len(rights) == k:
                return k
    return best


def test_complete_3x3():
    inst = BipartiteInstance(p=3, q=3, edges=tuple((i, j) for i in range(3) for j in range(3)))
    m = max_matching(inst)
    assert m.size == 3
    assert saturates_right(m, 3)


def test_shared_right_vertex():
    inst = BipartiteInstance(p=2, q=1, edges=((0, 0), (1, 0)))
    assert max_matching(inst).size == 1


def test_empty():
    assert max_matching(BipartiteInstance(p=0, q=0, edges=())).size == 0


def test_against_brute_force():
    rng = random.Random("matching-vs-brute")
    for _ in range(200):
        p = rng.randint(1, 8)
        q = rng.randint(1, 8)
        edges = tuple(
            (u, v)
            for u in range(p)
            for v in range(q)
            if rng.random() < 0.35
        )
        inst = BipartiteInstance(p=p, q=q, edges=edges)
        got = max_matching(inst)
        assert got.size == brute_max_matching_size(inst)
        # matching validity
        assert len({u for u, _ in got.pairs}) == got.size
        assert len({v for _, v in got.pairs}) == got.size
        assert set(got.pairs) <= set(edges)
        assert got.size <= min(p, q)


def test_deterministic():
    edges = ((0, 1), (0, 0), (1, 0), (2, 1), (2, 2))
    inst = BipartiteInstance(p=3, q=3, edges=edges)
    assert max_matching(inst) == max_matching(inst)


def test_saturates_right():
    assert saturates_right(Matching(pairs=((0, 0), (1, 1), (2, 2))), 3)
    assert not saturates_right(Matching(pairs=()), 1)
    inst = BipartiteInstance(p=2, q=2, edges=((0, 0), (1, 0)))
    assert not saturates_right(max_matching(inst), 2)


def test_invalid_instances_rejected():
    with pytest.raises(ValueError):
        BipartiteInstance(p=1, q=1, edges=((0, 1),))
    with pytest.raises(ValueError):
        BipartiteInstance(p=2, q=2, edges=((0, 0), (0, 0)))
