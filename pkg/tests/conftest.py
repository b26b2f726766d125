import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cubepart import _backend  # noqa: E402
from cubepart.cube import Subcube  # noqa: E402
from cubepart.partition import Partition  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="also run the multi-minute exact computations (m(6))")


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run the test once per available kernel implementation."""
    before = _backend.name()
    _backend.use(request.param)
    yield request.param
    _backend.use(before)


def random_split_partition(d: int, rnd: random.Random, p_split: float = 0.6) -> Partition:
    """Recursively halve Q_d along random free coordinates."""
    out = []
    stack = [Subcube.full(d)]
    while stack:
        c = stack.pop()
        free = [b for b in range(d) if c.free >> b & 1]
        if free and rnd.random() < p_split:
            b = rnd.choice(free)
            stack.append(Subcube(c.mask | 1 << b, c.vals, d))
            stack.append(Subcube(c.mask | 1 << b, c.vals | 1 << b, d))
        else:
            out.append(c)
    return Partition(d, out)


@st.composite
def partitions(draw, min_d=1, max_d=6):
    d = draw(st.integers(min_d, max_d))
    seed = draw(st.integers(0, 2**32 - 1))
    p_split = draw(st.floats(0.3, 0.95))
    return random_split_partition(d, random.Random(seed), p_split)


@st.composite
def subcubes(draw, min_d=1, max_d=8):
    d = draw(st.integers(min_d, max_d))
    text = draw(st.text(alphabet="01*", min_size=d, max_size=d))
    return Subcube.parse(text)


@pytest.fixture(scope="session")
def seed4():
    """The seed family found by exhaustive search (about 7 s, shared by all tests)."""
    from cubepart.construct import find_seed_from

    return find_seed_from(3, 4)
