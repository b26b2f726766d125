"""Exact counts of subcube partitions and of perfect matchings of Q_d."""

from __future__ import annotations

import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _backend
from .cube import DimSet, Subcube, check_dim, even_words, odd_words, popcount
from .partition import Partition

MAX_COUNT_DIM = 5
MAX_PERMANENT_DIM = 6

# Values quoted in the literature; f is OEIS A018926 starting at d=0.
KNOWN_VALUES: dict[tuple[str, int], int] = {
    ("f", 0): 1,
    ("f", 1): 2,
    ("f", 2): 8,
    ("f", 3): 154,
    ("f", 4): 89512,
    ("f", 5): 71319425714,
    ("m", 1): 1,
    ("m", 2): 2,
    ("m", 3): 9,
    ("m", 4): 272,
    ("m", 5): 589185,
    ("m", 6): 16332454526976,
    ("m", 7): 391689748492473664721077609089,
}

# named quantities as dimension sets
QUANTITIES = {
    "m": lambda d: DimSet([1]),
    "m'": lambda d: DimSet([0, 1]),
    "f<=2": lambda d: DimSet(k for k in (0, 1, 2) if k <= d),
    "f": lambda d: DimSet.all(d),
}


class ResourceExhausted(RuntimeError):
    """A counting job ran out of memory; distinct from a wrong answer."""


def default_threads() -> int:
    return os.cpu_count() or 1


def piece_sets(d: int, dims: Iterable[int]) -> list[list[int]]:
    """For each vertex v, vertex bitsets of allowed cubes whose lowest vertex is v.

    The lowest vertex of a cube is its fixed values with zeros on the free
    coordinates, so v is lowest exactly when v is zero on every free coordinate.
    """
    dims = DimSet(dims)
    full = (1 << d) - 1
    out = []
    for v in range(1 << d):
        zeros = full & ~v
        row = []
        free = zeros
        while True:
            if popcount(free) in dims:
                row.append(Subcube(full & ~free, v, d).vertex_set())
            if free == 0:
                break
            free = (free - 1) & zeros
        row.sort()
        out.append(row)
    return out


def _memo_bits(d: int) -> int:
    return {1: 8, 2: 8, 3: 10, 4: 16, 5: 20}.get(d, 20)


def count_partitions(d: int, dims: Iterable[int] | None = None, threads: int | None = None,
                     memo_bits: int | None = None) -> int:
    """Exact number f_dims(d) of partitions of Q_d into cubes with dimensions in ``dims``.

    Backtracks on the lowest uncovered vertex with a memo keyed by the covered
    vertex set.  d = 0 is the single-vertex cube (f(0) = 1).  Counts are
    exact; the compiled kernel keeps them in 64 bits and raises on overflow.
    """
    if d == 0:
        dims = DimSet([0]) if dims is None else DimSet(dims)
        return 1 if 0 in dims else 0
    check_dim(d)
    if d > MAX_COUNT_DIM:
        raise ValueError(f"count_partitions supports d <= {MAX_COUNT_DIM}, got {d}")
    dims = DimSet.all(d) if dims is None else DimSet(dims)
    dims = DimSet(k for k in dims if k <= d) if any(k <= d for k in dims) else None
    if dims is None:
        return 0
    cands = piece_sets(d, dims)
    nvert = 1 << d
    bits = memo_bits if memo_bits is not None else _memo_bits(d)
    kern = _backend.active()
    threads = threads or default_threads()
    roots = cands[0]
    try:
        if threads <= 1 or len(roots) <= 1:
            return kern.count_cover(nvert, cands, 0, bits)
        # each top-level branch is an independent subproblem with its own memo
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda m: kern.count_cover(nvert, cands, m, bits), roots)
            return sum(parts)
    except MemoryError as exc:
        raise ResourceExhausted(f"out of memory counting f_{sorted(dims)}({d})") from exc


def iter_partitions(d: int, dims: Iterable[int] | None = None) -> Iterator[Partition]:
    """Every partition of Q_d with part dimensions in ``dims``, in a fixed order."""
    check_dim(d)
    if d > 4:
        raise ValueError("enumeration is limited to d <= 4")
    dims = DimSet.all(d) if dims is None else DimSet(dims)
    full = (1 << d) - 1
    nvert = 1 << d
    cands: list[list[tuple[int, Subcube]]] = [[] for _ in range(nvert)]
    for v in range(nvert):
        zeros = full & ~v
        free = zeros
        while True:
            if popcount(free) in dims:
                c = Subcube(full & ~free, v, d)
                cands[v].append((c.vertex_set(), c))
            if free == 0:
                break
            free = (free - 1) & zeros
        cands[v].sort(key=lambda t: t[1])
    done = (1 << nvert) - 1
    stack: list[Subcube] = []

    def rec(covered: int) -> Iterator[Partition]:
        if covered == done:
            yield Partition(d, stack)
            return
        v = (~covered & (covered + 1)).bit_length() - 1
        for m, c in cands[v]:
            if not m & covered:
                stack.append(c)
                yield from rec(covered | m)
                stack.pop()

    yield from rec(0)


def biadjacency(d: int) -> list[list[int]]:
    """Column lists of the even x odd adjacency matrix of Q_d (columns = odd vertices)."""
    check_dim(d)
    evens = {x: i for i, x in enumerate(even_words(d))}
    return [sorted(evens[u ^ (1 << b)] for b in range(d)) for u in odd_words(d)]


def count_pm_permanent(d: int, threads: int | None = None, chunks: int | None = None,
                       progress: bool = False) -> int:
    """m(d) as the permanent of the n x n biadjacency matrix, via Ryser's formula."""
    check_dim(d)
    if not 1 <= d <= MAX_PERMANENT_DIM:
        raise ValueError(f"count_pm_permanent supports 1 <= d <= {MAX_PERMANENT_DIM}, got {d}")
    cols = biadjacency(d)
    n = len(cols)
    total = 1 << n
    threads = threads or default_threads()
    kern = _backend.active()
    chunks = chunks or max(1, min(total, 64 if n > 20 else threads))
    bounds = [total * k // chunks for k in range(chunks + 1)]
    spans = list(zip(bounds, bounds[1:]))

    def work(span):
        return kern.ryser_partial(cols, n, span[0], span[1])

    acc = 0
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for k, part in enumerate(pool.map(work, spans), 1):
            acc += part
            if progress:
                print(f"permanent d={d}: chunk {k}/{chunks}", file=sys.stderr, flush=True)
    return -acc if n & 1 else acc


# -- verification -------------------------------------------------------


@dataclass(frozen=True)
class Row:
    quantity: str
    d: int
    value: int | None
    source: str  # "paper" | "computed"
    status: str  # "pass" | "fail" | "skipped" | "info"

    def csv(self) -> str:
        val = "" if self.value is None else str(self.value)
        return f"{self.quantity},{self.d},{val},{self.source},{self.status}"


CSV_HEADER = "quantity,d,value,source,status"


def compute_chain(d: int, threads: int | None = None) -> dict[str, int]:
    return {q: count_partitions(d, dims(d), threads=threads) for q, dims in QUANTITIES.items()}


def verify_known(d_max: int, threads: int | None = None) -> list[Row]:
    """Recompute m, m', f<=2, f for d <= d_max; compare with KNOWN_VALUES and the chain.

    Returns report rows; any row with status "fail" is a hard failure.
    """
    if not 0 <= d_max <= 4:
        raise ValueError("verify_known covers d_max <= 4")
    rows: list[Row] = []
    for d in range(0, d_max + 1):
        if d == 0:
            val = count_partitions(0)
            rows.append(Row("f", 0, val, "computed", "pass" if val == KNOWN_VALUES[("f", 0)] else "fail"))
            continue
        vals = compute_chain(d, threads)
        for q, val in vals.items():
            known = KNOWN_VALUES.get((q, d))
            if known is None:
                rows.append(Row(q, d, val, "computed", "info"))
            else:
                rows.append(Row(q, d, val, "computed", "pass" if val == known else "fail"))
        if d >= 2:
            perm = count_pm_permanent(d, threads=threads)
            rows.append(Row("m[permanent]", d, perm, "computed", "pass" if perm == vals["m"] else "fail"))
        chain = [vals["m"], vals["m'"], vals["f<=2"], vals["f"]]
        ok = all(a <= b for a, b in zip(chain, chain[1:]))
        rows.append(Row("chain m<=m'<=f<=2<=f", d, None, "computed", "pass" if ok else "fail"))
    return rows


def known_rows(d_max: int) -> list[Row]:
    return [Row(q, d, v, "paper", "info") for (q, d), v in sorted(KNOWN_VALUES.items()) if d <= d_max]
