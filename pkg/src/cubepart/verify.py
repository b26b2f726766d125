"""Aggregate verification run behind ``cubepart verify``."""

from __future__ import annotations

import sys
import time

from . import bounds
from .codec import decode, encode
from .construct import SeedNotFound, find_seed_from, level_members, level_sizes
from .counting import (
    KNOWN_VALUES,
    Row,
    count_partitions,
    count_pm_permanent,
    iter_partitions,
    verify_known,
)
from .partition import is_irreducible, is_tight, validate


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _log(msg: str, quiet: bool) -> None:
    if not quiet:
        print(msg, file=sys.stderr, flush=True)


def sandwich_rows(d: int, m: int) -> list[Row]:
    """Lower bounds <= log2 m(d) <= Bregman-Minc, within bounds.TOL."""
    p = bounds.BoundParams(d, bounds.half_size(d))
    lm = bounds.log2_int(m)
    lower, upper = bounds.prop_pm_bounds(d)
    rows = []
    for name, val in (("vdw", bounds.vdw_log(p)), ("schrijver", bounds.schrijver_log(p)), ("pm_lower", lower)):
        rows.append(Row(f"bound:{name}<=m", d, None, "computed", _status(val <= lm + bounds.TOL)))
    rows.append(Row("bound:m<=bregman_minc", d, None, "computed", _status(lm <= upper + bounds.TOL)))
    return rows


def verify_all(d_max: int = 4, long: bool = False, threads: int | None = None, quiet: bool = True) -> list[Row]:
    """Every check; the run passes iff no row has status "fail"."""
    t0 = time.perf_counter()
    rows = verify_known(d_max, threads=threads)
    _log(f"verify_known done ({time.perf_counter() - t0:.1f}s)", quiet)

    # m(5) by both engines and f(5) from the memoized counter
    m5 = count_partitions(5, [1], threads=threads)
    p5 = count_pm_permanent(5, threads=threads)
    rows.append(Row("m", 5, m5, "computed", _status(m5 == KNOWN_VALUES[("m", 5)])))
    rows.append(Row("m[permanent]", 5, p5, "computed", _status(p5 == KNOWN_VALUES[("m", 5)])))
    f5 = count_partitions(5, threads=threads)
    rows.append(Row("f", 5, f5, "computed", _status(f5 == KNOWN_VALUES[("f", 5)])))

    if long:
        _log("long run: m(6) by Ryser permanent (minutes)", quiet)
        m6 = count_pm_permanent(6, threads=threads, progress=not quiet)
        rows.append(Row("m[permanent]", 6, m6, "computed", _status(m6 == KNOWN_VALUES[("m", 6)])))

    for d in range(2, 7 if long else 6):
        rows += sandwich_rows(d, KNOWN_VALUES[("m", d)])
    for d in range(1, 6):
        ok = bounds.f_upper_log(d) + bounds.TOL >= bounds.log2_int(KNOWN_VALUES[("f", d)])
        rows.append(Row("bound:f<=(d+1)^n", d, None, "computed", _status(ok)))
    _log(f"bounds done ({time.perf_counter() - t0:.1f}s)", quiet)

    for d in range(1, (4 if long else 3) + 1):
        ok = True
        count = 0
        for p in iter_partitions(d):
            count += 1
            if decode(encode(p)) != p:
                ok = False
                break
        rows.append(Row("codec:roundtrip", d, count, "computed", _status(ok and count == KNOWN_VALUES[("f", d)])))
    _log(f"codec done ({time.perf_counter() - t0:.1f}s)", quiet)

    try:
        seed = find_seed_from(3, 4)
    except SeedNotFound:
        rows.append(Row("construct:seed", 0, None, "computed", "fail"))
        return rows
    rows.append(Row("construct:seed", seed.d0, len(seed.members), "computed", "pass"))
    small = seed.truncated(3)
    expected = level_sizes(3, 2)
    for k, d in enumerate(range(seed.d0 + 1, seed.d0 + 3), 1):
        members, anchor = level_members(small, d)
        ok = (
            len(members) == expected[k]
            and len(set(members)) == expected[k]
            and all(validate(p) is True and is_tight(p) and anchor in p for p in members)
            and (d > 5 or all(is_irreducible(p) for p in members))
        )
        rows.append(Row("construct:x_{d+1}=x_d(x_d-1)", d, len(members), "computed", _status(ok)))
    _log(f"construct done ({time.perf_counter() - t0:.1f}s)", quiet)
    return rows


def failed(rows: list[Row]) -> list[Row]:
    return [r for r in rows if r.status == "fail"]
