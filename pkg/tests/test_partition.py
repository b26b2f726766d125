import json
import random

import pytest
from hypothesis import given, settings

from cubepart.counting import iter_partitions
from cubepart.cube import Subcube
from cubepart.partition import (
    InvalidPartition,
    Partition,
    dims_within,
    dump_many,
    dumps,
    dumps_json,
    is_irreducible,
    is_tight,
    load_many,
    loads,
    loads_json,
    read,
    reducing_cube,
    spectrum,
    validate,
)
from conftest import partitions, random_split_partition
from oracles import subfamily_reducible


def P(*strings):
    return Partition.from_strings(strings)


def test_validate_accepts_and_reports():
    assert validate(P("0*", "1*")) is True
    bad = validate(P("0*", "00", "1*"))
    assert not bad and bad.kind == "overlap"
    assert "overlap" in str(bad)
    gap = validate(P("0*", "10"))
    assert not gap and gap.kind == "uncovered" and gap.vertex == 0b11


def test_cubes_are_stored_in_canonical_order():
    assert P("1*", "0*") == P("0*", "1*")
    assert hash(P("1*", "0*")) == hash(P("0*", "1*"))


def test_mixed_dimensions_rejected():
    with pytest.raises(ValueError):
        Partition(2, [Subcube.parse("0*"), Subcube.parse("1")])


def test_tightness():
    assert not is_tight(P("0*", "1*"))
    assert is_tight(P("0*", "10", "11"))
    assert is_tight(P("0", "1"))
    with pytest.raises(InvalidPartition):
        is_tight(P("0*", "10"))


def test_irreducibility_fixtures():
    assert is_irreducible(P("0*", "1*"))
    assert is_irreducible(P("0", "1"))
    assert is_irreducible(P("**"))
    assert not is_irreducible(P("00", "01", "1*"))
    assert str(reducing_cube(P("00", "01", "1*"))) == "0*"
    assert str(reducing_cube(P("0*", "10", "11"))) == "1*"
    with pytest.raises(InvalidPartition):
        is_irreducible(P("0*", "0*"))


def test_spectrum_and_dims():
    p = P("0*", "10", "11")
    assert spectrum(p) == {0: 2, 1: 1}
    assert dims_within(p, {0, 1}) and not dims_within(p, {1})


def test_text_and_json_roundtrip(tmp_path):
    p = P("0**", "10*", "110", "111")
    assert loads(dumps(p)) == p
    assert loads_json(dumps_json(p)) == p
    many = [p, P("***"), P("0**", "1**")]
    assert load_many(dump_many(many)) == many
    (tmp_path / "a.txt").write_text(dump_many(many))
    (tmp_path / "b.json").write_text(json.dumps([q.strings() for q in many]))
    (tmp_path / "c.json").write_text(dumps_json(p))
    assert read(tmp_path / "a.txt") == many
    assert read(tmp_path / "b.json") == many
    assert read(tmp_path / "c.json") == [p]
    with pytest.raises(ValueError):
        loads("0*\n1*\n")


@pytest.mark.parametrize("d", [1, 2, 3])
def test_irreducible_scan_matches_subfamily_oracle_exhaustive(d):
    for p in iter_partitions(d):
        assert is_irreducible(p) == (not subfamily_reducible(p)), str(p)


def test_irreducible_scan_matches_oracle_on_random_q4():
    rnd = random.Random(7)
    all4 = list(iter_partitions(4))
    for p in rnd.sample(all4, 150):
        assert is_irreducible(p) == (not subfamily_reducible(p)), str(p)


@settings(max_examples=60, deadline=None)
@given(partitions(max_d=6))
def test_random_split_partitions_valid_and_reducible_when_split_twice(p):
    assert validate(p) is True
    assert sum(c.size for c in p.cubes) == 1 << p.d
    # any split partition with >= 3 parts has two sibling halves forming a subcube
    if len(p) >= 3:
        assert not is_irreducible(p)


@settings(max_examples=40, deadline=None)
@given(partitions(max_d=4))
def test_reducing_cube_is_a_real_witness(p):
    w = reducing_cube(p)
    inside = [c for c in p.cubes if w is not None and w.contains_cube(c)]
    if w is None:
        assert not subfamily_reducible(p)
    else:
        assert 2 <= len(inside) < len(p)
        assert sum(c.size for c in inside) == w.size


def test_removing_a_part_is_detected():
    p = random_split_partition(5, random.Random(3))
    q = Partition(p.d, p.cubes[1:])
    assert validate(q) is not True
