import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubepart.cube import (
    DimSet,
    Subcube,
    Vertex,
    all_subcubes,
    bit_coord,
    contains,
    coord_bit,
    count_subcubes_through,
    enumerate_even,
    even_words,
    odd_words,
    parity,
    subcubes_through,
)
from conftest import subcubes
from oracles import all_cube_sets, words_of


def test_coordinate_one_is_most_significant():
    assert coord_bit(3, 1) == 0b100
    assert coord_bit(3, 3) == 0b001
    assert [bit_coord(3, coord_bit(3, j)) for j in (1, 2, 3)] == [1, 2, 3]


def test_vertex_parse_and_parity():
    v = Vertex.parse("011")
    assert v.bits == 0b011 and v.dim == 3
    assert str(v) == "011"
    assert parity(v) == "even"
    assert parity(Vertex.parse("1")) == "odd"
    with pytest.raises(ValueError):
        Vertex.parse("01x")


def test_enumerate_even_sorted_and_sized():
    for d in range(1, 7):
        ev = enumerate_even(d)
        assert len(ev) == 2 ** (d - 1)
        assert ev == sorted(ev)
        assert all(v.is_even for v in ev)
    assert [str(v) for v in enumerate_even(2)] == ["00", "11"]
    assert sorted(even_words(4) + odd_words(4)) == list(range(16))


def test_subcube_parse_roundtrip_and_fields():
    c = Subcube.parse("0*1")
    assert str(c) == "0*1"
    assert c.dim == 1 and c.size == 2
    assert list(c.words()) == [0b001, 0b011]
    assert c.free_coords() == [2]
    with pytest.raises(ValueError):
        Subcube.parse("")
    with pytest.raises(ValueError):
        Subcube(0b01, 0b10, 2)


def test_contains_vertex():
    assert contains(Subcube.parse("1*"), Vertex.parse("10"))
    assert not contains(Subcube.parse("1*"), Vertex.parse("01"))
    with pytest.raises(ValueError):
        contains(Subcube.parse("1*"), Vertex.parse("100"))


def test_first_odd():
    assert Subcube.parse("**").first_odd() == 0b01
    assert Subcube.parse("1*").first_odd() == 0b10
    assert Subcube.parse("0*").first_odd() == 0b01
    with pytest.raises(ValueError):
        Subcube.parse("01").first_odd()


def test_extend():
    c = Subcube.parse("0*")
    assert str(c.extend(None)) == "0**"
    assert str(c.extend(1)) == "0*1"
    assert str(c.extend(0)) == "0*0"


def test_dimset():
    assert DimSet.parse("0,1,2") == {0, 1, 2}
    assert DimSet.parse("0-3") == {0, 1, 2, 3}
    assert DimSet.all(3) == {0, 1, 2, 3}
    with pytest.raises(ValueError):
        DimSet.parse("a")
    with pytest.raises(ValueError):
        DimSet([5]).check(3)


def test_all_subcubes_matches_pattern_oracle():
    for d in range(1, 5):
        got = [frozenset(c.words()) for c in all_subcubes(d)]
        assert len(got) == len(set(got)) == 3 ** d
        assert set(got) == set(all_cube_sets(d))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_subcubes_through_count(d):
    from math import comb

    dims = {0, 1, 2}
    for x in range(1 << d):
        cubes = list(subcubes_through(Vertex(x, d), dims))
        assert all(c.contains_word(x) and c.dim in dims for c in cubes)
        assert len(set(cubes)) == len(cubes) == sum(comb(d, k) for k in dims if k <= d)
    assert count_subcubes_through(d, dims) == sum(comb(d, k) for k in dims if k <= d)


@given(subcubes())
def test_words_match_definition(c):
    assert list(c.words()) == sorted(words_of(c.mask, c.vals, c.d))
    assert bin(c.vertex_set()).count("1") == c.size


@given(subcubes(max_d=6), st.data())
def test_containment_and_disjointness_oracle(a, data):
    b = data.draw(subcubes(min_d=a.d, max_d=a.d))
    wa, wb = set(a.words()), set(b.words())
    assert a.disjoint(b) == (not wa & wb)
    assert a.contains_cube(b) == (wb <= wa)


@given(subcubes())
def test_first_odd_is_smallest_odd_vertex(c):
    if c.dim == 0:
        return
    odd = [x for x in c.words() if bin(x).count("1") % 2]
    assert c.first_odd() == min(odd)
