"""Seeded random constructions of {0,1,2}- and {0,r}-partitions.

Two samplers:

* two-cubes: each odd vertex is picked with probability alpha and paired
  with a random vertex at distance 2; the pair spans a 2-cube.  Overlapping
  cubes are dropped (the later one in draw order), and the rest of the
  hypercube is filled with a maximum matching plus single vertices.
* nibble: rounds of random r-cubes among those still disjoint from the
  cover, dropping clashes within a round, then a greedy sweep.

Trial t of a run with seed s draws from ``SeedSequence(s, spawn_key=(t,))``,
so a trial does not depend on how many trials run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .cube import Subcube, check_dim, odd_words, popcount
from .matching import greedy_matching, hopcroft_karp, hypercube_adjacency
from .partition import Partition

EXACT_MATCHING_MAX_DIM = 14
NIBBLE_FRACTION = 0.05
NIBBLE_STOP = 0.5


@dataclass(frozen=True)
class SamplerConfig:
    d: int
    alpha: float = 0.01
    r: int = 2
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        check_dim(self.d)
        if not 0 <= self.alpha < 0.5:
            raise ValueError(f"alpha must lie in [0, 0.5), got {self.alpha}")
        if not 2 <= self.r <= self.d:
            raise ValueError(f"r must lie in [2, d], got r={self.r}, d={self.d}")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


@dataclass
class SampleReport:
    trial: int
    d: int
    chosen: int
    kept: int
    removal_fraction: float
    matched: int
    zero_cubes: int
    degree_outliers: float
    method: str
    partition: Partition = field(repr=False)

    CSV_HEADER = "trial,d,chosen,kept,removal_fraction,matched,zero_cubes,degree_outliers,method"

    def csv(self) -> str:
        return (
            f"{self.trial},{self.d},{self.chosen},{self.kept},{self.removal_fraction:.6f},"
            f"{self.matched},{self.zero_cubes},{self.degree_outliers:.6f},{self.method}"
        )


def _covered_array(cubes, d: int) -> np.ndarray:
    covered = np.zeros(1 << d, dtype=bool)
    for c in cubes:
        for x in c.words():
            covered[x] = True
    return covered


def sample_c4_family(cfg: SamplerConfig, trial: int = 0) -> tuple[list[Subcube], int]:
    """Random disjoint 2-cubes; returns (kept cubes B, number of picked vertices |A|)."""
    d = cfg.d
    rng = trial_rng(cfg.seed, trial)
    odds = np.array(odd_words(d), dtype=np.int64)
    picked = odds[rng.random(len(odds)) < cfg.alpha]
    if len(picked) == 0 or d < 2:
        return [], int(len(picked))
    pairs = list(combinations(range(d), 2))
    choice = rng.integers(len(pairs), size=len(picked))
    full = (1 << d) - 1
    covered = np.zeros(1 << d, dtype=bool)
    kept = []
    for u, k in zip(picked.tolist(), choice.tolist()):
        i, j = pairs[k]
        free = (1 << i) | (1 << j)
        mask = full & ~free
        cube = Subcube(mask, u & mask, d)
        words = list(cube.words())
        if covered[words].any():
            continue
        covered[words] = True
        kept.append(cube)
    return kept, int(len(picked))


def degree_interval(d: int, beta: float) -> tuple[float, float]:
    centre = (1 - 2 * beta) * d
    spread = d ** (2 / 3)
    return centre - spread, centre + spread


def h_degrees(B: list[Subcube], d: int) -> np.ndarray:
    """Degrees in H = Q_d - V(B) of the vertices of H."""
    present = ~_covered_array(B, d)
    words = np.arange(1 << d)
    deg = np.zeros(1 << d, dtype=np.int64)
    for b in range(d):
        deg += present[words ^ (1 << b)]
    return deg[present]


def degree_stats(B: list[Subcube], d: int, beta: float) -> float:
    """Fraction of the vertices of H whose H-degree falls outside the interval J."""
    deg = h_degrees(B, d)
    if deg.size == 0:
        return 0.0
    lo, hi = degree_interval(d, beta)
    return float(np.mean((deg < lo) | (deg > hi)))


def complete_partition(B: list[Subcube], d: int, chosen: int | None = None, trial: int = 0) -> SampleReport:
    """Fill Q_d - V(B) with a maximum matching and single vertices."""
    covered = _covered_array(B, d)
    if int(covered.sum()) != 4 * len(B):
        raise ValueError("the 2-cubes in B are not pairwise disjoint")
    present = (~covered).tolist()
    left = [x for x in range(1 << d) if present[x] and popcount(x) % 2 == 0]
    adj = hypercube_adjacency(d, present, left)
    if d <= EXACT_MATCHING_MAX_DIM:
        match, method = hopcroft_karp(adj), "hopcroft-karp"
    else:
        match, method = greedy_matching(adj), "greedy"
    full = (1 << d) - 1
    cubes = list(B)
    used = bytearray(1 << d)
    for u, v in match.items():
        free = u ^ v
        mask = full & ~free
        cubes.append(Subcube(mask, u & mask, d))
        used[u] = used[v] = 1
    zeros = 0
    for x in range(1 << d):
        if present[x] and not used[x]:
            cubes.append(Subcube(full, x, d))
            zeros += 1
    n = 1 << (d - 1)
    chosen = len(B) if chosen is None else chosen
    beta = len(B) / n
    return SampleReport(
        trial=trial,
        d=d,
        chosen=chosen,
        kept=len(B),
        removal_fraction=(chosen - len(B)) / chosen if chosen else 0.0,
        matched=len(match),
        zero_cubes=zeros,
        degree_outliers=degree_stats(B, d, beta),
        method=method,
        partition=Partition(d, cubes),
    )


def two_cubes_trial(cfg: SamplerConfig, trial: int) -> SampleReport:
    B, chosen = sample_c4_family(cfg, trial)
    return complete_partition(B, cfg.d, chosen, trial)


def run_two_cubes(cfg: SamplerConfig) -> list[SampleReport]:
    return [two_cubes_trial(cfg, t) for t in range(cfg.trials)]


# -- nibble ---------------------------------------------------------------


def r_subcube_table(d: int, r: int) -> tuple[list[Subcube], np.ndarray]:
    """All r-subcubes of Q_d and a (count, 2^r) array of their vertex words."""
    cubes = []
    full = (1 << d) - 1
    for free_bits in combinations(range(d), r):
        free = sum(1 << b for b in free_bits)
        mask = full & ~free
        # every value pattern on the fixed coordinates
        vals = 0
        while True:
            cubes.append(Subcube(mask, vals, d))
            if vals == mask:
                break
            vals = (vals - mask) & mask
    verts = np.array([list(c.words()) for c in cubes], dtype=np.int64)
    return cubes, verts


@dataclass
class NibbleReport:
    trial: int
    d: int
    r: int
    cubes: list[Subcube]
    coverage: float
    rounds: int

    CSV_HEADER = "trial,d,r,cubes,coverage,rounds"

    def csv(self) -> str:
        return f"{self.trial},{self.d},{self.r},{len(self.cubes)},{self.coverage:.6f},{self.rounds}"

    def partition(self) -> Partition:
        """The packing completed with single vertices: a {0, r}-partition."""
        covered = _covered_array(self.cubes, self.d)
        full = (1 << self.d) - 1
        zeros = [Subcube(full, int(x), self.d) for x in np.flatnonzero(~covered)]
        return Partition(self.d, list(self.cubes) + zeros)


def nibble_cover(d: int, r: int, cfg: SamplerConfig | None = None, trial: int = 0,
                 max_rounds: int = 1000) -> tuple[list[Subcube], float]:
    rep = nibble_trial(d, r, cfg or SamplerConfig(d=d, r=r), trial, max_rounds)
    return rep.cubes, rep.coverage


def nibble_trial(d: int, r: int, cfg: SamplerConfig, trial: int = 0, max_rounds: int = 1000) -> NibbleReport:
    """Disjoint r-cubes by semi-random greedy rounds plus a final greedy sweep.

    Each round draws about NIBBLE_FRACTION of the uncovered vertices' worth
    of available r-cubes uniformly and keeps those that clash with no other
    draw.  Rounds stop once the average number of available cubes per
    uncovered vertex falls below NIBBLE_STOP times its initial value C(d, r).
    The sweep then repeatedly covers an uncovered vertex with the fewest
    available cubes, using a random one of them.
    """
    if not 2 <= r <= d:
        raise ValueError(f"need 2 <= r <= d, got r={r}, d={d}")
    rng = trial_rng(cfg.seed, trial)
    cubes, verts = r_subcube_table(d, r)
    size = 1 << r
    nvert = 1 << d
    covered = np.zeros(nvert, dtype=bool)
    chosen: list[int] = []
    rounds = 0
    stop_degree = NIBBLE_STOP * comb(d, r)
    while rounds < max_rounds:
        avail = np.flatnonzero(~covered[verts].any(axis=1))
        remaining = nvert - int(covered.sum())
        if avail.size == 0 or avail.size * size < stop_degree * remaining:
            break
        k = min(avail.size, max(1, math.ceil(NIBBLE_FRACTION * remaining / size)))
        pick = rng.choice(avail, size=k, replace=False)
        hits = np.bincount(verts[pick].ravel(), minlength=nvert)
        survivors = pick[(hits[verts[pick]] == 1).all(axis=1)]
        covered[verts[survivors].ravel()] = True
        chosen.extend(survivors.tolist())
        rounds += 1

    # incidence: cubes through each vertex
    order = np.argsort(verts.ravel(), kind="stable")
    through = (order // size).reshape(nvert, -1)
    avail = ~covered[verts].any(axis=1)
    count = np.bincount(verts[avail].ravel(), minlength=nvert)
    while True:
        open_ = np.flatnonzero((count > 0) & ~covered)
        if open_.size == 0:
            break
        low = count[open_].min()
        ties = open_[count[open_] == low]
        v = ties[rng.integers(ties.size)]
        options = through[v][avail[through[v]]]
        idx = int(options[rng.integers(options.size)])
        chosen.append(idx)
        newly = verts[idx]
        covered[newly] = True
        dead = np.unique(through[newly].ravel())
        dead = dead[avail[dead]]
        avail[dead] = False
        np.subtract.at(count, verts[dead].ravel(), 1)
    picked = [cubes[i] for i in chosen]
    return NibbleReport(trial, d, r, picked, float(covered.mean()), rounds)


def run_nibble(cfg: SamplerConfig) -> list[NibbleReport]:
    return [nibble_trial(cfg.d, cfg.r, cfg, t) for t in range(cfg.trials)]


def summarize(reports: list[SampleReport]) -> dict[str, float]:
    n = len(reports)
    return {
        "trials": n,
        "mean_removal_fraction": sum(r.removal_fraction for r in reports) / n,
        "mean_degree_outliers": sum(r.degree_outliers for r in reports) / n,
        "mean_zero_cubes": sum(r.zero_cubes for r in reports) / n,
        "mean_kept": sum(r.kept for r in reports) / n,
    }
