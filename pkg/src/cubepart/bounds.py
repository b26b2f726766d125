"""Bound formulas in base-2 log space.

Every evaluator returns log2 of the bound as a float.  Factorials are summed
exactly as sum(log2 k) rather than through Stirling's formula.  Asymptotic
o(1) and Theta terms are dropped, so these values support one-sided
comparisons against exact counts only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LOG2E = math.log2(math.e)
TOL = 1e-9


@dataclass(frozen=True)
class BoundParams:
    """An a-regular bipartite graph with b vertices per class."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"need a >= 1 and b >= 1, got a={self.a}, b={self.b}")


def log2_factorial(m: int) -> float:
    if m < 0:
        raise ValueError("factorial of a negative number")
    return math.fsum(math.log2(k) for k in range(2, m + 1))


def log2_binom(n: int, k: int) -> float:
    return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k)


def log2_int(x: int) -> float:
    """log2 of a positive integer of any size."""
    if x <= 0:
        raise ValueError("log2 of a non-positive integer")
    shift = max(0, x.bit_length() - 60)
    return math.log2(x >> shift) + shift


def half_size(d: int) -> int:
    return 1 << (d - 1)


def log_N(d: int) -> float:
    """log2 of (d/e)^n with n = 2^(d-1)."""
    if d < 2:
        raise ValueError("log_N needs d >= 2")
    return half_size(d) * (math.log2(d) - LOG2E)


def bregman_minc_log(p: BoundParams) -> float:
    """Upper bound (a!)^(b/a) on perfect matchings of an a-regular bipartite graph."""
    return p.b / p.a * log2_factorial(p.a)


def vdw_log(p: BoundParams) -> float:
    """Lower bound b!/b^b * a^b from the doubly stochastic permanent minimum."""
    return log2_factorial(p.b) - p.b * math.log2(p.b) + p.b * math.log2(p.a)


def schrijver_log(p: BoundParams) -> float:
    """Lower bound ((a-1)^(a-1) / a^(a-2))^b."""
    a = p.a
    if a < 2:
        raise ValueError("Schrijver's bound needs a >= 2")
    return p.b * ((a - 1) * math.log2(a - 1) - (a - 2) * math.log2(a))


def prop_pm_bounds(d: int) -> tuple[float, float]:
    """(lower, upper) for m(d): e^(n/2d) N <= m(d) <= (d!)^(n/d)."""
    n = half_size(d)
    lower = log_N(d) + n / (2 * d) * LOG2E
    upper = bregman_minc_log(BoundParams(d, n))
    return lower, upper


def f_upper_log(d: int) -> float:
    """f(d) <= (d+1)^n, from the injective sequence encoding."""
    if d < 1:
        raise ValueError("f_upper_log needs d >= 1")
    return half_size(d) * math.log2(d + 1)


def _log2_sum(terms: list[float]) -> float:
    top = max(terms)
    return top + math.log2(math.fsum(2.0 ** (t - top) for t in terms))


def f0r_sum_log(d: int, r: int) -> float:
    """log2 of sum_{j <= r n / 2^(r-1)} C(n, j) d^j.

    Counts sequences of length n over {0..d} with at most r n / 2^(r-1)
    nonzero symbols, which bounds the partitions whose positive dimensions
    are all >= r.
    """
    n = half_size(d)
    jmax = (r * n) >> (r - 1)
    return _log2_sum([log2_binom(n, j) + j * math.log2(d) for j in range(jmax + 1)])


def f0r_bounds_log(d: int, r: int) -> tuple[float, float]:
    """(lower, upper) estimates for f_{0,r}(d).

    ``lower`` is the main term (r / 2^(r-1)) log2 N with o(1) taken as 0;
    ``upper`` is the explicit counting sum of :func:`f0r_sum_log`.
    """
    if not 2 <= r <= d:
        raise ValueError(f"need 2 <= r <= d, got r={r}, d={d}")
    main = r / 2 ** (r - 1) * log_N(d)
    return main, f0r_sum_log(d, r)


def f0r_main_log(d: int, r: int) -> float:
    if not 2 <= r <= d:
        raise ValueError(f"need 2 <= r <= d, got r={r}, d={d}")
    return r / 2 ** (r - 1) * log_N(d)


def approx_upper_log(d: int) -> float:
    """exp(20 n / d^(1/4)) * N, bounding partitions without 2-dimensional parts."""
    n = half_size(d)
    return log_N(d) + 20 * n * d ** -0.25 * LOG2E


def entropy(x: float) -> float:
    """Binary entropy h(x) in bits."""
    if not 0 < x < 1:
        raise ValueError("entropy is defined on the open interval (0, 1)")
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def matching_envelope(d: int, m: int, m_all: int) -> float:
    """Exponent c with m'(d) = m(d) * 2^(c n / sqrt d); reported, never asserted."""
    n = half_size(d)
    return (log2_int(m_all) - log2_int(m)) * math.sqrt(d) / n


def bound_table(d: int) -> list[tuple[str, float]]:
    """All evaluators at dimension d as (name, log2 value) rows."""
    n = half_size(d)
    rows: list[tuple[str, float]] = [("f_upper", f_upper_log(d))]
    if d >= 2:
        p = BoundParams(d, n)
        lo, hi = prop_pm_bounds(d)
        rows += [
            ("log_N", log_N(d)),
            ("bregman_minc", bregman_minc_log(p)),
            ("van_der_waerden", vdw_log(p)),
            ("schrijver", schrijver_log(p)),
            ("pm_lower", lo),
            ("pm_upper", hi),
            ("approx_upper", approx_upper_log(d)),
        ]
        for r in range(2, d + 1):
            main, upper = f0r_bounds_log(d, r)
            rows += [(f"f0r_main[r={r}]", main), (f"f0r_sum[r={r}]", upper)]
    return rows
