"""The compiled kernels and the pure-Python fallback must agree exactly."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubepart import _backend
from cubepart.counting import biadjacency, piece_sets
from oracles import brute_permanent

compiled_only = pytest.mark.skipif("compiled" not in _backend.available(), reason="extension not built")


def _cols(rows):
    n = len(rows)
    return [[i for i in range(n) if rows[i][j]] for j in range(n)]


def _perm(kern, rows):
    n = len(rows)
    s = kern.ryser_partial(_cols(rows), n, 0, 1 << n)
    return -s if n & 1 else s


matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_python_ryser_matches_permutations(rows):
    assert _perm(_backend.get("python"), rows) == brute_permanent(rows)


@compiled_only
@settings(max_examples=60, deadline=None)
@given(matrices)
def test_compiled_ryser_matches_permutations(rows):
    assert _perm(_backend.get("compiled"), rows) == brute_permanent(rows)


@compiled_only
@pytest.mark.parametrize("d", [3, 4, 5])
def test_ryser_partial_ranges_agree(d):
    cols = biadjacency(d)
    n = len(cols)
    rnd = random.Random(d)
    py, cc = _backend.get("python"), _backend.get("compiled")
    for _ in range(5):
        a = rnd.randrange(1 << n)
        b = rnd.randrange(a, (1 << n) + 1)
        assert py.ryser_partial(cols, n, a, b) == cc.ryser_partial(cols, n, a, b)


@compiled_only
def test_compiled_ryser_refuses_overflow():
    n = 60
    cols = [list(range(n)) for _ in range(n)]
    with pytest.raises(OverflowError):
        _backend.get("compiled").ryser_partial(cols, n, 0, 16)


@compiled_only
@pytest.mark.parametrize("d,dims", [(3, {0, 1, 2, 3}), (4, {1}), (4, {0, 2}), (4, {0, 1, 2, 3, 4})])
def test_cover_counts_agree(d, dims):
    cands = piece_sets(d, dims)
    py, cc = _backend.get("python"), _backend.get("compiled")
    assert py.count_cover(1 << d, cands) == cc.count_cover(1 << d, cands)


@compiled_only
def test_compiled_cover_tiny_memo_same_answer():
    # a very small table only costs time
    cands = piece_sets(4, {0, 1, 2, 3, 4})
    assert _backend.get("compiled").count_cover(16, cands, 0, 2) == 89512


def test_backend_switching():
    before = _backend.name()
    _backend.use("python")
    assert _backend.name() == "python"
    with pytest.raises(ValueError):
        _backend.use("fortran")
    if "compiled" in _backend.available():
        _backend.use("compiled")
        assert _backend.name() == "compiled"
    _backend.use(before)
