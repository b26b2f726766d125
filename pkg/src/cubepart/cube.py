"""Bit-level vertices and subcubes of the hypercube Q_d.

A vertex of Q_d is stored as a d-bit integer.  Coordinate 1 is the most
significant of the d used bits and coordinate d the least significant, so
lexicographic order on coordinate tuples is plain integer order.

A subcube is a pair ``(mask, vals)``: ``mask`` has a 1 at every fixed
coordinate and ``vals`` holds the values there.  Its text form is a string
over ``{0, 1, *}`` with position i describing coordinate i, e.g. ``"0*"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

MAX_DIM = 20


def check_dim(d: int) -> None:
    if not isinstance(d, int) or not 1 <= d <= MAX_DIM:
        raise ValueError(f"dimension must be an integer in [1, {MAX_DIM}], got {d!r}")


def coord_bit(d: int, j: int) -> int:
    """Bit value of coordinate ``j`` (1-based) in a d-bit word."""
    return 1 << (d - j)


def bit_coord(d: int, bit: int) -> int:
    """Inverse of :func:`coord_bit` for a single-bit word."""
    return d - (bit.bit_length() - 1)


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, order=True)
class Vertex:
    bits: int
    dim: int

    def __post_init__(self):
        check_dim(self.dim)
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"vertex word {self.bits} out of range for d={self.dim}")

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary vertex string: {text!r}")
        return cls(int(text, 2), len(text))

    @property
    def is_even(self) -> bool:
        return popcount(self.bits) % 2 == 0

    def __str__(self) -> str:
        return format(self.bits, f"0{self.dim}b")


def parity(v: Vertex) -> str:
    """Return ``"even"`` or ``"odd"`` according to the Hamming weight of ``v``."""
    return "even" if v.is_even else "odd"


def even_words(d: int) -> list[int]:
    """All even-weight d-bit words in increasing order."""
    check_dim(d)
    return [x for x in range(1 << d) if popcount(x) % 2 == 0]


def odd_words(d: int) -> list[int]:
    check_dim(d)
    return [x for x in range(1 << d) if popcount(x) % 2 == 1]


def enumerate_even(d: int) -> list[Vertex]:
    """The n = 2^(d-1) even vertices of Q_d in lexicographic order."""
    return [Vertex(x, d) for x in even_words(d)]


@dataclass(frozen=True, order=True)
class Subcube:
    """Subcube of Q_d.  Field order makes the default sort the canonical one."""

    mask: int
    vals: int
    d: int

    def __post_init__(self):
        check_dim(self.d)
        full = (1 << self.d) - 1
        if self.mask & ~full or self.vals & ~self.mask:
            raise ValueError(
                f"inconsistent subcube mask={self.mask:b} vals={self.vals:b} for d={self.d}"
            )

    @classmethod
    def parse(cls, text: str) -> "Subcube":
        text = text.strip()
        if not text or set(text) - {"0", "1", "*"}:
            raise ValueError(f"not a subcube string: {text!r}")
        d = len(text)
        mask = vals = 0
        for ch in text:
            mask <<= 1
            vals <<= 1
            if ch != "*":
                mask |= 1
                vals |= ch == "1"
        return cls(mask, vals, d)

    @classmethod
    def full(cls, d: int) -> "Subcube":
        return cls(0, 0, d)

    @classmethod
    def point(cls, v: int, d: int) -> "Subcube":
        return cls((1 << d) - 1, v, d)

    @property
    def free(self) -> int:
        return ((1 << self.d) - 1) & ~self.mask

    @property
    def dim(self) -> int:
        return self.d - popcount(self.mask)

    @property
    def size(self) -> int:
        return 1 << self.dim

    def contains_word(self, x: int) -> bool:
        return x & self.mask == self.vals

    def contains_cube(self, other: "Subcube") -> bool:
        """True iff ``other`` is a subset of this cube."""
        return self.mask & ~other.mask == 0 and other.vals & self.mask == self.vals

    def disjoint(self, other: "Subcube") -> bool:
        return (self.vals ^ other.vals) & self.mask & other.mask != 0

    def words(self) -> Iterator[int]:
        """Vertices of the cube as words, increasing."""
        free = self.free
        # enumerate submasks of `free` in increasing order
        sub = 0
        while True:
            yield self.vals | sub
            if sub == free:
                return
            sub = (sub - free) & free

    def vertex_set(self) -> int:
        """Bitset over the 2^d vertices (bit x set iff word x is in the cube)."""
        out = 0
        for x in self.words():
            out |= 1 << x
        return out

    def first_odd(self) -> int:
        """Lexicographically first odd vertex; requires dim >= 1."""
        free = self.free
        if not free:
            raise ValueError("a 0-dimensional cube has a single vertex")
        if popcount(self.vals) % 2:
            return self.vals
        return self.vals | (free & -free)

    def free_coords(self) -> list[int]:
        return [j for j in range(1, self.d + 1) if self.free & coord_bit(self.d, j)]

    def extend(self, last: int | None) -> "Subcube":
        """Embed into Q_{d+1} with a new last coordinate fixed to ``last`` (or free)."""
        if last is None:
            return Subcube(self.mask << 1, self.vals << 1, self.d + 1)
        return Subcube((self.mask << 1) | 1, (self.vals << 1) | (last & 1), self.d + 1)

    def __str__(self) -> str:
        out = []
        for j in range(1, self.d + 1):
            b = coord_bit(self.d, j)
            out.append("*" if not self.mask & b else "1" if self.vals & b else "0")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Subcube({str(self)!r})"


def contains(c: Subcube, v: Vertex) -> bool:
    if c.d != v.dim:
        raise ValueError(f"dimension mismatch: cube d={c.d}, vertex d={v.dim}")
    return c.contains_word(v.bits)


class DimSet(frozenset):
    """Allowed part dimensions, a nonempty subset of {0, ..., d}."""

    def __new__(cls, dims: Iterable[int]):
        dims = frozenset(int(k) for k in dims)
        if not dims:
            raise ValueError("dimension set must be nonempty")
        if min(dims) < 0:
            raise ValueError(f"negative dimension in {sorted(dims)}")
        return super().__new__(cls, dims)

    @classmethod
    def all(cls, d: int) -> "DimSet":
        return cls(range(d + 1))

    @classmethod
    def parse(cls, text: str) -> "DimSet":
        """Parse ``"0,1,2"`` or a range ``"0-4"``."""
        out = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if "-" in tok:
                lo, hi = tok.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(tok))
        return cls(out)

    def check(self, d: int) -> None:
        if max(self) > d:
            raise ValueError(f"dimension set {sorted(self)} exceeds d={d}")

    @property
    def bitmask(self) -> int:
        return sum(1 << k for k in self)

    def __repr__(self) -> str:
        return f"DimSet({sorted(self)})"


def subcubes_through(v: Vertex, dims: Iterable[int]) -> Iterator[Subcube]:
    """Every subcube containing ``v`` whose dimension lies in ``dims``."""
    d = v.dim
    full = (1 << d) - 1
    bits = [coord_bit(d, j) for j in range(1, d + 1)]
    for k in sorted(set(dims)):
        if not 0 <= k <= d:
            continue
        for free in combinations(bits, k):
            mask = full & ~sum(free)
            yield Subcube(mask, v.bits & mask, d)


def count_subcubes_through(d: int, dims: Iterable[int]) -> int:
    return sum(comb(d, k) for k in set(dims) if 0 <= k <= d)


def all_subcubes(d: int) -> Iterator[Subcube]:
    """All 3^d subcubes of Q_d, each exactly once."""
    check_dim(d)
    full = (1 << d) - 1
    for mask in range(full + 1):
        sub = 0
        while True:
            yield Subcube(mask, sub, d)
            if sub == mask:
                break
            sub = (sub - mask) & mask
