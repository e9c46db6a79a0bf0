"""Exact maximum clique by branch and bound with greedy-colouring bounds.

Vertex sets are Python ints used as bitsets. Vertices are relabelled by
non-increasing degree (ties by index) so that the search, and therefore the
returned witness, is deterministic.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import BudgetExceededError


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def max_clique(adjacency: Sequence[int], node_limit: int | None = None) -> list[int]:
    """Return a maximum clique (sorted vertex list) of an undirected graph.

    ``adjacency[v]`` is the bitset of neighbours of ``v``; self loops are
    ignored. Raises :class:`BudgetExceededError` when more than ``node_limit``
    search nodes would be expanded, rather than returning a non-optimal answer.
    """
    n = len(adjacency)
    if n == 0:
        return []
    clean = [adjacency[v] & ~(1 << v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-clean[v].bit_count(), v))
    label = {v: i for i, v in enumerate(order)}
    nbrs = [0] * n
    for v in range(n):
        mask = 0
        for u in _bits(clean[v]):
            mask |= 1 << label[u]
        nbrs[label[v]] = mask

    best: list[int] = []
    nodes = 0

    def colour(P: int) -> tuple[list[int], list[int]]:
        verts, bounds = [], []
        c = 0
        uncoloured = P
        while uncoloured:
            c += 1
            candidates = uncoloured
            while candidates:
                v = (candidates & -candidates).bit_length() - 1
                candidates &= ~nbrs[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                verts.append(v)
                bounds.append(c)
        return verts, bounds

    def expand(R: list[int], P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise BudgetExceededError(f"clique search exceeded {node_limit} nodes")
        verts, bounds = colour(P)
        for v, b in zip(reversed(verts), reversed(bounds)):
            if len(R) + b <= len(best):
                return
            R.append(v)
            newP = P & nbrs[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(order[i] for i in best)
