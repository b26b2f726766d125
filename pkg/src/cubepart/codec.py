"""Encoding of a subcube partition as a sequence over {0, 1, ..., d}.

Position i of the sequence belongs to the i-th even vertex in lexicographic
order.  For an even vertex lying in a cube D of positive dimension that is
adjacent to the first odd vertex u of D, the symbol is the coordinate in
which it differs from u; every other even vertex gets 0.  The sequence
determines the partition, which bounds f(d) by (d+1)^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .cube import DimSet, Subcube, bit_coord, check_dim, coord_bit, even_words, odd_words
from .partition import Partition, require_valid, validate


class DecodeError(ValueError):
    """The sequence is not the encoding of any partition (with the given dims)."""


@dataclass(frozen=True)
class Encoding:
    d: int
    seq: tuple[int, ...]

    def __post_init__(self):
        check_dim(self.d)
        seq = tuple(int(s) for s in self.seq)
        object.__setattr__(self, "seq", seq)
        if len(seq) != 1 << (self.d - 1):
            raise ValueError(f"encoding for d={self.d} needs {1 << (self.d - 1)} symbols, got {len(seq)}")
        if any(not 0 <= s <= self.d for s in seq):
            raise ValueError(f"symbols must lie in 0..{self.d}")

    def __str__(self) -> str:
        return f"d={self.d};" + ",".join(map(str, self.seq))

    @classmethod
    def parse(cls, text: str) -> "Encoding":
        text = text.strip()
        head, sep, body = text.partition(";")
        if not sep or not head.strip().startswith("d="):
            raise ValueError("encoding text must look like 'd=<int>;s1,s2,...'")
        d = int(head.strip()[2:])
        seq = [int(tok) for tok in body.split(",") if tok.strip()]
        return cls(d, tuple(seq))

    @property
    def nonzeros(self) -> int:
        return sum(1 for s in self.seq if s)


def _even_index(d: int) -> dict[int, int]:
    return {x: i for i, x in enumerate(even_words(d))}


def encode(p: Partition) -> Encoding:
    require_valid(p)
    d = p.d
    index = _even_index(d)
    seq = [0] * len(index)
    for c in p.cubes:
        if c.dim == 0:
            continue
        u = c.first_odd()
        free = c.free
        while free:
            b = free & -free
            free ^= b
            seq[index[u ^ b]] = bit_coord(d, b)
    return Encoding(d, tuple(seq))


def _decode(d: int, seq: Sequence[int], index: dict[int, int], odds: list[int]) -> Partition | str:
    """Candidate partition for ``seq`` or a reason string when it fails."""
    full = (1 << d) - 1
    owner = bytearray(1 << d)
    cubes = []
    for u in odds:
        free = 0
        for j in range(1, d + 1):
            b = coord_bit(d, j)
            if seq[index[u ^ b]] == j:
                free |= b
        if not free:
            continue
        mask = full & ~free
        c = Subcube(mask, u & mask, d)
        if c.first_odd() != u:
            return f"odd vertex {u:0{d}b} is not the first odd vertex of {c}"
        for x in c.words():
            if owner[x]:
                return f"cube {c} overlaps an earlier cube"
            owner[x] = 1
        cubes.append(c)
    for x in range(1 << d):
        if not owner[x]:
            cubes.append(Subcube(full, x, d))
    return Partition(d, cubes)


def decode(e: Encoding, dims: Iterable[int] | None = None) -> Partition:
    """Inverse of :func:`encode`; raises DecodeError outside its image."""
    d = e.d
    dims = DimSet.all(d) if dims is None else DimSet(dims)
    res = _decode(d, e.seq, _even_index(d), odd_words(d))
    if isinstance(res, str):
        raise DecodeError(f"not a valid encoding: {res}")
    if validate(res) is not True:
        raise DecodeError(f"not a valid encoding: {validate(res)}")
    bad = sorted({c.dim for c in res.cubes} - dims)
    if bad:
        raise DecodeError(f"not a valid encoding: part dimensions {bad} not allowed")
    if encode(res).seq != e.seq:
        raise DecodeError("not a valid encoding: re-encoding differs")
    return res


def try_decode(e: Encoding, dims: Iterable[int] | None = None) -> Partition | None:
    try:
        return decode(e, dims)
    except DecodeError:
        return None


MAX_ENUM_DIM = 3


def count_valid_encodings(d: int, dims: Iterable[int] | None = None) -> int:
    """Count sequences in {0..d}^n that decode; equals f_dims(d).

    Exhaustive over all (d+1)^n sequences, so only d <= 3 is accepted.
    """
    check_dim(d)
    if d > MAX_ENUM_DIM:
        raise ValueError(f"exhaustive encoding count supports d <= {MAX_ENUM_DIM}, got {d}")
    dims = DimSet.all(d) if dims is None else DimSet(dims)
    n = 1 << (d - 1)
    return sum(
        1 for seq in product(range(d + 1), repeat=n) if try_decode(Encoding(d, seq), dims) is not None
    )


def nonzero_profile(p: Partition) -> dict[Subcube, tuple[int, int]]:
    """Per positive-dimensional cube: (nonzero symbols, zero symbols) over its even vertices."""
    e = encode(p)
    index = _even_index(p.d)
    out = {}
    for c in p.cubes:
        if c.dim == 0:
            continue
        syms = [e.seq[index[x]] for x in c.words() if x in index]
        nz = sum(1 for s in syms if s)
        out[c] = (nz, len(syms) - nz)
    return out
