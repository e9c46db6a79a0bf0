import random

import networkx as nx
import pytest

from crosscodes.clique import max_clique
from crosscodes.errors import BudgetExceededError


def to_bitsets(G, n):
    adj = [0] * n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def is_clique(G, nodes):
    return all(G.has_edge(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1 :])


@pytest.mark.parametrize("seed", range(30))
def test_matches_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 40)
    G = nx.gnp_random_graph(n, rng.uniform(0.1, 0.9), seed=seed)
    clique = max_clique(to_bitsets(G, n))
    _, size = nx.max_weight_clique(G, weight=None)
    assert len(clique) == size
    assert is_clique(G, clique)


def test_deterministic_and_edge_cases():
    G = nx.gnp_random_graph(30, 0.5, seed=3)
    adj = to_bitsets(G, 30)
    assert max_clique(adj) == max_clique(list(adj))
    assert max_clique([]) == []
    assert max_clique([0]) == [0]
    assert len(max_clique(to_bitsets(nx.complete_graph(6), 6))) == 6


def test_node_limit_refuses():
    G = nx.gnp_random_graph(60, 0.9, seed=1)
    with pytest.raises(BudgetExceededError):
        max_clique(to_bitsets(G, 60), node_limit=3)
