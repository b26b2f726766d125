"""Subcube partitions of Q_d and their structural predicates."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable

import numpy as np

from .cube import Subcube, all_subcubes, check_dim


class InvalidPartition(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # "overlap" | "uncovered" | "dimension"
    message: str
    vertex: int | None = None
    cubes: tuple[Subcube, ...] = ()

    def __bool__(self) -> bool:
        # a report is falsy so that ``if validate(p):`` reads naturally
        return False

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class Partition:
    d: int
    cubes: tuple[Subcube, ...]

    def __init__(self, d: int, cubes: Iterable[Subcube]):
        check_dim(d)
        cubes = tuple(sorted(cubes))
        for c in cubes:
            if c.d != d:
                raise ValueError(f"cube {c} has ambient dimension {c.d}, expected {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "cubes", cubes)

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Partition":
        cubes = [Subcube.parse(s) for s in strings]
        if not cubes:
            raise ValueError("empty partition")
        return cls(cubes[0].d, cubes)

    def __len__(self) -> int:
        return len(self.cubes)

    def __iter__(self):
        return iter(self.cubes)

    def __contains__(self, c: Subcube) -> bool:
        return c in set(self.cubes)

    def strings(self) -> list[str]:
        return [str(c) for c in self.cubes]

    def __str__(self) -> str:
        return "{" + ", ".join(self.strings()) + "}"

    def owner_table(self) -> list[int]:
        """``table[x]`` = index of the cube containing word x.  Assumes validity."""
        table = [-1] * (1 << self.d)
        for i, c in enumerate(self.cubes):
            for x in c.words():
                table[x] = i
        return table


def validate(p: Partition) -> bool | Violation:
    """``True`` if the cubes are pairwise disjoint and cover Q_d, else a Violation."""
    owner = [-1] * (1 << p.d)
    for i, c in enumerate(p.cubes):
        for x in c.words():
            j = owner[x]
            if j >= 0:
                a, b = p.cubes[j], c
                return Violation(
                    "overlap",
                    f"cubes {a} and {b} overlap at vertex {x:0{p.d}b}",
                    x,
                    (a, b),
                )
            owner[x] = i
    for x, j in enumerate(owner):
        if j < 0:
            return Violation("uncovered", f"vertex {x:0{p.d}b} is uncovered", x)
    return True


def require_valid(p: Partition) -> None:
    res = validate(p)
    if res is not True:
        raise InvalidPartition(str(res))


def is_tight(p: Partition) -> bool:
    require_valid(p)
    used = 0
    for c in p.cubes:
        used |= c.mask
    return used == (1 << p.d) - 1


@lru_cache(maxsize=None)
def _subcube_arrays(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    cubes = list(all_subcubes(d))
    masks = np.array([c.mask for c in cubes], dtype=np.int64)
    vals = np.array([c.vals for c in cubes], dtype=np.int64)
    sizes = np.array([c.size for c in cubes], dtype=np.int64)
    return masks, vals, sizes


def reducing_cube(p: Partition) -> Subcube | None:
    """A subcube spanned by a proper subfamily of at least two parts, if any.

    Scans all 3^d candidate subcubes C.  A subfamily whose union is C must
    be exactly the set of parts contained in C, so it suffices to test that
    set for every C.
    """
    cmask, cvals, csize = _subcube_arrays(p.d)
    pmask = np.array([c.mask for c in p.cubes], dtype=np.int64)
    pvals = np.array([c.vals for c in p.cubes], dtype=np.int64)
    psize = np.array([c.size for c in p.cubes], dtype=np.int64)
    total = len(p.cubes)
    step = max(1, 4_000_000 // max(total, 1))
    for lo in range(0, len(cmask), step):
        m = cmask[lo:lo + step, None]
        inside = ((m & ~pmask) == 0) & ((pvals & m) == cvals[lo:lo + step, None])
        count = inside.sum(axis=1)
        volume = inside @ psize
        hit = np.flatnonzero((count >= 2) & (count < total) & (volume == csize[lo:lo + step]))
        if hit.size:
            k = lo + int(hit[0])
            return Subcube(int(cmask[k]), int(cvals[k]), p.d)
    return None


def is_irreducible(p: Partition) -> bool:
    require_valid(p)
    return reducing_cube(p) is None


def spectrum(p: Partition) -> dict[int, int]:
    """Number of parts per dimension."""
    counts = Counter(c.dim for c in p.cubes)
    return dict(sorted(counts.items()))


def dims_within(p: Partition, dims: Iterable[int]) -> bool:
    allowed = set(dims)
    return all(c.dim in allowed for c in p.cubes)


# -- file formats ---------------------------------------------------------


def dumps(p: Partition) -> str:
    return f"d={p.d}\n" + "".join(s + "\n" for s in p.strings())


def loads(text: str) -> Partition:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("d="):
        raise ValueError("partition text must start with a 'd=<int>' header")
    d = int(lines[0][2:])
    cubes = [Subcube.parse(s) for s in lines[1:]]
    return Partition(d, cubes)


def dumps_json(p: Partition) -> str:
    return json.dumps(p.strings())


def loads_json(text: str) -> Partition:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise ValueError("expected a JSON array of cube strings")
    return Partition.from_strings(data)


def dump_many(parts: Iterable[Partition]) -> str:
    """Several partitions in one text document, separated by blank lines."""
    return "\n".join(dumps(p) for p in parts)


def load_many(text: str) -> list[Partition]:
    out = []
    block: list[str] = []
    for line in text.splitlines() + [""]:
        line = line.strip()
        if line.startswith("d=") and block:
            out.append(loads("\n".join(block)))
            block = []
        if line:
            block.append(line)
    if block:
        out.append(loads("\n".join(block)))
    return out


def read(path: str | Path) -> list[Partition]:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        data = json.loads(text)
        if data and isinstance(data[0], list):
            return [Partition.from_strings(x) for x in data]
        return [loads_json(text)]
    return load_many(text)
