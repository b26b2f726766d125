import random
from functools import lru_cache

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from cubepart.matching import greedy_matching, hopcroft_karp, hypercube_adjacency


def brute_max_matching(adj):
    left = list(adj)

    @lru_cache(maxsize=None)
    def best(i, used):
        if i == len(left):
            return 0
        out = best(i + 1, used)
        for v in adj[left[i]]:
            if not used >> v & 1:
                out = max(out, 1 + best(i + 1, used | 1 << v))
        return out

    return best(0, 0)


def _check_matching(adj, m):
    assert len(set(m.values())) == len(m)
    assert all(v in adj[u] for u, v in m.items())


graphs = st.integers(1, 7).flatmap(
    lambda n: st.dictionaries(st.integers(0, n - 1), st.lists(st.integers(0, 9), unique=True, max_size=5), max_size=n)
)


@settings(max_examples=100, deadline=None)
@given(graphs)
def test_hopcroft_karp_is_maximum(adj):
    m = hopcroft_karp(adj)
    _check_matching(adj, m)
    assert len(m) == brute_max_matching(adj)
    g = greedy_matching(adj)
    _check_matching(adj, g)
    assert len(g) <= len(m)


@pytest.mark.parametrize("seed", range(5))
def test_induced_hypercube_subgraph(seed):
    d = 4
    rnd = random.Random(seed)
    present = [rnd.random() < 0.7 for _ in range(1 << d)]
    left = [x for x in range(1 << d) if present[x] and bin(x).count("1") % 2 == 0]
    adj = hypercube_adjacency(d, present, left)
    assert all(present[v] and bin(u ^ v).count("1") == 1 for u in adj for v in adj[u])
    m = hopcroft_karp(adj)
    _check_matching(adj, m)
    assert len(m) == brute_max_matching(adj)


def test_full_hypercube_perfect_matching():
    d = 10
    present = [True] * (1 << d)
    left = [x for x in range(1 << d) if bin(x).count("1") % 2 == 0]
    assert len(hopcroft_karp(hypercube_adjacency(d, present, left))) == 1 << (d - 1)
