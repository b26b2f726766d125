"""Recursive doubling of irreducible tight partitions.

Given x distinct irreducible tight partitions of Q_d that share a part D,
every ordered pair (B1, B2) with B1 != B2 yields a partition of Q_{d+1}: B1
on the hyperplane where the new last coordinate is 0, B2 where it is 1, and
each part common to both merged across the hyperplanes.  The x(x-1) results
share the part D x {0,1} and can be doubled again.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from math import isqrt
from typing import Iterator

from .counting import iter_partitions
from .cube import Subcube
from .partition import Partition, is_irreducible, is_tight


class SeedNotFound(LookupError):
    pass


@dataclass(frozen=True)
class SeedFamily:
    d0: int
    anchor: Subcube
    members: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.members) < 3:
            raise ValueError("a seed family needs at least 3 members")
        if len(set(self.members)) != len(self.members):
            raise ValueError("seed members must be distinct")
        for p in self.members:
            if p.d != self.d0 or self.anchor not in p:
                raise ValueError(f"member {p} does not contain the anchor {self.anchor}")

    def truncated(self, k: int) -> "SeedFamily":
        return SeedFamily(self.d0, self.anchor, self.members[:k])


def tight_irreducible(d: int) -> list[Partition]:
    """All tight irreducible partitions of Q_d (exhaustive; d <= 4)."""
    return [p for p in iter_partitions(d) if is_tight(p) and is_irreducible(p)]


def seed_groups(d0: int) -> dict[Subcube, list[Partition]]:
    """Tight irreducible partitions of Q_{d0} grouped by each part they contain."""
    groups: dict[Subcube, list[Partition]] = defaultdict(list)
    for p in tight_irreducible(d0):
        for c in p.cubes:
            groups[c].append(p)
    return dict(groups)


@lru_cache(maxsize=None)
def find_seed(d0: int = 3) -> SeedFamily:
    """Largest group of tight irreducible partitions sharing a part.

    Ties go to the smallest anchor in (mask, vals) order.  Raises SeedNotFound
    when no part is shared by three or more of them.  Results are cached.
    """
    if not 1 <= d0 <= 4:
        raise ValueError("seed search is exhaustive and limited to d0 <= 4")
    groups = seed_groups(d0)
    if not groups:
        raise SeedNotFound(f"Q_{d0} has no tight irreducible partition")
    anchor, members = min(groups.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    if len(members) < 3:
        raise SeedNotFound(
            f"in Q_{d0} no part is shared by 3 tight irreducible partitions (best: {len(members)})"
        )
    return SeedFamily(d0, anchor, tuple(sorted(members, key=lambda p: p.cubes)))


def find_seed_from(d0: int = 3, d_max: int = 4) -> SeedFamily:
    """First dimension from ``d0`` up to ``d_max`` that has a seed family."""
    last: SeedNotFound | None = None
    for d in range(d0, d_max + 1):
        try:
            return find_seed(d)
        except SeedNotFound as exc:
            last = exc
    raise SeedNotFound(str(last))


def double(b1: Partition, b2: Partition, anchor: Subcube, check: bool = True) -> tuple[Partition, Subcube]:
    """Stack ``b1`` (last coordinate 0) and ``b2`` (last coordinate 1), merging common parts."""
    if b1.d != b2.d or anchor.d != b1.d:
        raise ValueError("partitions and anchor must share the ambient dimension")
    if b1 == b2:
        raise ValueError("double needs two distinct partitions")
    if anchor not in b1 or anchor not in b2:
        raise ValueError(f"both partitions must contain the anchor {anchor}")
    if check:
        for b in (b1, b2):
            if not is_tight(b) or not is_irreducible(b):
                raise ValueError(f"{b} is not tight and irreducible")
    common = set(b1.cubes) & set(b2.cubes)
    cubes = [c.extend(None) for c in common]
    cubes += [c.extend(0) for c in b1.cubes if c not in common]
    cubes += [c.extend(1) for c in b2.cubes if c not in common]
    return Partition(b1.d + 1, cubes), anchor.extend(None)


def pair_order(k: int) -> Iterator[tuple[int, int]]:
    """Ordered pairs of distinct indices below k, grouped by their larger index.

    The first m(m-1) pairs only use indices below m, so a prefix of a level
    only needs a prefix of the previous level.
    """
    for hi in range(1, k):
        for lo in range(hi):
            yield lo, hi
            yield hi, lo


def next_level(members: list[Partition], anchor: Subcube, limit: int | None = None) -> list[Partition]:
    pairs = pair_order(len(members))
    if limit is not None:
        pairs = islice(pairs, limit)
    return [double(members[i], members[j], anchor, check=False)[0] for i, j in pairs]


def _needed(limit: int) -> int:
    """Smallest k with k(k-1) >= limit."""
    k = max(2, isqrt(limit))
    while k * (k - 1) < limit:
        k += 1
    while k > 2 and (k - 1) * (k - 2) >= limit:
        k -= 1
    return k


def level_members(seed: SeedFamily, d: int, limit: int | None = None) -> tuple[list[Partition], Subcube]:
    """The first ``limit`` members (all when None) of the family at dimension d."""
    if d < seed.d0:
        raise ValueError(f"target dimension {d} below the seed dimension {seed.d0}")
    anchor = seed.anchor
    if d == seed.d0:
        members = list(seed.members)
        return (members if limit is None else members[:limit]), anchor
    prev_limit = None if limit is None else _needed(limit)
    prev, prev_anchor = level_members(seed, d - 1, prev_limit)
    return next_level(prev, prev_anchor, limit), prev_anchor.extend(None)


def level_sizes(x0: int, levels: int) -> list[int]:
    """x_{d+1} = x_d (x_d - 1) starting from x0."""
    out = [x0]
    for _ in range(levels):
        out.append(out[-1] * (out[-1] - 1))
    return out


def generate(d_target: int, limit: int, seed: SeedFamily | None = None) -> Iterator[Partition]:
    """Up to ``limit`` distinct irreducible tight partitions of Q_{d_target}."""
    if limit < 1:
        raise ValueError("limit must be positive")
    seed = seed or find_seed_from(3)
    if d_target <= seed.d0:
        raise ValueError(f"d_target must exceed the seed dimension {seed.d0}")
    available = level_sizes(len(seed.members), d_target - seed.d0)[-1]
    members, _ = level_members(seed, d_target, min(limit, available))
    yield from members
