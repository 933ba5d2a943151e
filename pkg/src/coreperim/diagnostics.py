"""Numerical sanity checks behind the limit claims, at desk scale.

Everything here is exact until the final ratio: condition checks run over
rationals, tail probabilities are exact weight sums, and the only floats
are logs, square roots, and the reported quotients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .distributions import DiscreteDist
from .exactdist import dist_statistic
from .families import FamilySpec, normalize_stat


def _size_coefficients(n: int, d: int):
    """Per-coordinate quadratics g_i(y) = q y^2 + b_i y on y in 1..d.

    The size statistic decomposes as sum g_i(y_i) - sum_{i<j} y_i y_j up to
    an additive constant, which is the shape the sum-plus-pairs conditions
    speak about.
    """
    q = Fraction(n - 1, 2)
    c = Fraction(d + 1, 2)
    b = [Fraction(i) - Fraction(n - 1, 2) - (n - 2) * c for i in range(1, n)]
    return q, b


@dataclass(frozen=True)
class ConditionReport:
    """Exact evaluation of the four sum-plus-pairs normality conditions.

    Ratios are None when the infimum variance vanishes; that happens at
    d = 2, where y^2 is an affine function of y on {1, 2} and some g_i can
    collapse.  The nondegeneracy ratio is exact so the boundary case
    (correlation exactly 1 at d = 2) is visible as Fraction(1).
    """

    n: int
    d: int
    pair_coupling: int
    arithmetic_exact: bool
    zero_at_origin: bool
    var_x: Fraction
    inf_var_g: Fraction
    sup_g_sq: Fraction
    near_independence_ratio: float | None
    boundedness_ratio: float | None
    nondegeneracy_max: Fraction | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "pair_coupling": self.pair_coupling,
            "arithmetic_exact": self.arithmetic_exact,
            "zero_at_origin": self.zero_at_origin,
            "var_x": str(self.var_x),
            "inf_var_g": str(self.inf_var_g),
            "sup_g_sq": str(self.sup_g_sq),
            "near_independence_ratio": self.near_independence_ratio,
            "boundedness_ratio": self.boundedness_ratio,
            "nondegeneracy_max": None
            if self.nondegeneracy_max is None
            else str(self.nondegeneracy_max),
        }


def check_size_conditions(n: int, d: int) -> ConditionReport:
    if n < 3 or d < 2:
        raise ValueError("need n >= 3, d >= 2")
    q, bs = _size_coefficients(n, d)
    a = -1

    # moments of y uniform on 1..d
    m1 = Fraction(d + 1, 2)
    m2 = Fraction((d + 1) * (2 * d + 1), 6)
    m3 = Fraction(d * (d + 1) ** 2, 4)
    m4 = Fraction((d + 1) * (2 * d + 1) * (3 * d * d + 3 * d - 1), 30)
    var_x = m2 - m1 * m1

    def g(b, y):
        return q * y * y + b * y

    # g_{i+1}(y) - g_i(y) = y for every y: exact second differences vanish
    arithmetic = all(bs[i + 1] - bs[i] == 1 for i in range(len(bs) - 1))
    zero_at_origin = all(g(b, 0) == 0 for b in bs)

    variances = []
    covariances = []
    sup_gsq = Fraction(0)
    for b in bs:
        variances.append(q * q * (m4 - m2 * m2) + b * b * var_x + 2 * q * b * (m3 - m2 * m1))
        covariances.append(q * (m3 - m1 * m2) + b * var_x)
        sup_gsq = max(sup_gsq, max(g(b, y) ** 2 for y in range(1, d + 1)))
    inf_var = min(variances)
    degenerate = inf_var == 0
    nondeg = None
    if not degenerate:
        nondeg = max(c * c / (var_x * v) for c, v in zip(covariances, variances))
    return ConditionReport(
        n=n,
        d=d,
        pair_coupling=a,
        arithmetic_exact=arithmetic,
        zero_at_origin=zero_at_origin,
        var_x=var_x,
        inf_var_g=inf_var,
        sup_g_sq=sup_gsq,
        near_independence_ratio=None
        if degenerate
        else float(Fraction(a * a * n * n * d**4) / inf_var),
        boundedness_ratio=None if degenerate else float(sup_gsq / inf_var),
        nondegeneracy_max=nondeg,
    )


@dataclass(frozen=True)
class TailEntry:
    multiple: Fraction
    r: float
    tail: Fraction
    tail_float: float
    c_witness: float | None  # None when the exact tail is zero


@dataclass(frozen=True)
class TailReport:
    """Sub-Gaussian tail audit: P(|X - mu| >= r) vs 2 exp(-C r^2 / scale).

    witnessed_c is the largest constant C for which the bound holds at
    every grid radius, computed from exact tails; larger is stronger.
    """

    family: str
    stat: str
    n: int
    cap: int
    scale: int
    mean: Fraction
    variance: Fraction
    entries: tuple[TailEntry, ...]

    @property
    def witnessed_c(self) -> float | None:
        vals = [e.c_witness for e in self.entries if e.c_witness is not None]
        return min(vals) if vals else None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "stat": self.stat,
            "n": self.n,
            "cap": self.cap,
            "scale": self.scale,
            "mean": str(self.mean),
            "variance": str(self.variance),
            "witnessed_c": self.witnessed_c,
            "entries": [
                {
                    "multiple": str(e.multiple),
                    "r": e.r,
                    "tail": str(e.tail),
                    "tail_float": e.tail_float,
                    "c_witness": e.c_witness,
                }
                for e in self.entries
            ],
        }


def _tail_scale(family: str, stat, n: int, cap: int) -> int:
    kind, _ = normalize_stat(stat)
    if kind in ("length", "durfee"):
        return n * cap * cap
    if kind == "size":
        return n**3 * cap**4
    raise ValueError(f"no tail scale for stat {stat!r}")


def concentration_check(family: str, stat, n: int, cap: int, multiples: Sequence) -> TailReport:
    """Exact two-sided tails at radii given as multiples of sigma."""
    spec = FamilySpec(family, n, cap)
    dist = dist_statistic(spec, stat)
    var = dist.variance()
    if var == 0:
        raise ValueError("degenerate distribution has no tail scale")
    mu = dist.mean()
    scale = _tail_scale(family, stat, n, cap)
    sigma = math.sqrt(float(var))
    entries = []
    for mult in multiples:
        mult = Fraction(mult)
        if mult <= 0:
            raise ValueError("need positive sigma multiples")
        # (v - mu)^2 >= mult^2 var is an exact rational comparison
        thr = mult * mult * var
        weight = sum(w for v, w in dist.items() if (v - mu) ** 2 >= thr)
        tail = Fraction(weight, dist.total)
        r = float(mult) * sigma
        if tail == 0:
            c = None
        else:
            c = scale / float(thr) * math.log(2.0 / float(tail))
        entries.append(
            TailEntry(multiple=mult, r=r, tail=tail, tail_float=float(tail), c_witness=c)
        )
    return TailReport(
        family=family,
        stat=stat if isinstance(stat, str) else f"power:{stat[1]}",
        n=n,
        cap=cap,
        scale=scale,
        mean=mu,
        variance=var,
        entries=tuple(entries),
    )


def subset_sum_distribution(m: int, k: int) -> DiscreteDist:
    """Sum of a uniformly random k-subset of {1..m}, exact counts.

    The exact variance identity k(m-k)(m+1)/12 is asserted on the way out;
    it doubles as a self-check of the table.
    """
    if not 0 < k <= m:
        raise ValueError("need 0 < k <= m")
    counts = _subset_sum_counts(m, k)
    dist = DiscreteDist({s: c for s, c in enumerate(counts) if c})
    assert dist.variance() == Fraction(k * (m - k) * (m + 1), 12)
    return dist


def _subset_sum_counts(m: int, k: int) -> list[int]:
    top = k * m - k * (k - 1) // 2
    if comb(m, min(k, m - k)) < 1 << 63:
        # pack counts into 64-bit lanes of one integer per subset size;
        # dp[j] += dp[j-1] << 64v is the whole inner loop
        mask = (1 << 64) - 1
        dp = [0] * (k + 1)
        dp[0] = 1
        for v in range(1, m + 1):
            for j in range(min(k, v), 0, -1):
                dp[j] += dp[j - 1] << (64 * v)
        packed = dp[k]
        out = []
        for _ in range(top + 1):
            out.append(packed & mask)
            packed >>= 64
        return out
    dp = [{0: 1}] + [dict() for _ in range(k)]
    for v in range(1, m + 1):
        for j in range(min(k, v), 0, -1):
            for s, c in dp[j - 1].items():
                dp[j][s + v] = dp[j].get(s + v, 0) + c
    out = [0] * (top + 1)
    for s, c in dp[k].items():
        out[s] = c
    return out


def subset_sum_rates(ms: Iterable[int]) -> list[dict]:
    """Distance-to-normal sweep for the k = m//2 subset sums.

    The scaled columns multiply by sqrt(k(m-k)/m), the rate the sampling
    CLT predicts, so bounded values mean the predicted rate is visible.
    """
    from .gaussref import kolmogorov_to_normal, wasserstein_to_normal

    rows = []
    for m in ms:
        k = m // 2
        dist = subset_sum_distribution(m, k)
        d_k = kolmogorov_to_normal(dist)
        d_w = wasserstein_to_normal(dist)
        factor = math.sqrt(k * (m - k) / m)
        rows.append(
            {
                "m": m,
                "k": k,
                "dK": d_k,
                "dW": d_w,
                "scaled_dK": factor * d_k,
                "scaled_dW": factor * d_w,
            }
        )
    return rows
