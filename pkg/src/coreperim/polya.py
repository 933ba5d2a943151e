"""Match-count polynomial: real roots, Bernoulli splitting, tail bounds.

For vectors counted by the no-adjacent-support rule, the number U of
nonzero coordinates has weight C(n-k, k) d^k at k.  Its generating
polynomial has simple negative real roots, which splits U into a sum of
independent Bernoulli variables and buys sub-Gaussian lower tails.

Root finding here is certified, not numeric: roots of the derivative are
isolated recursively, consecutive critical intervals are refined until the
polynomial has a known sign on each, and every sign change then brackets
exactly one simple root.  All interval arithmetic is over Fraction with
integer sign evaluations, so a returned certificate is a proof, and a
polynomial that is not real-rooted fails loudly instead of quietly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .distributions import DiscreteDist

_REFINE_ROUNDS = 256
_REL_WIDTH = Fraction(1, 10**13)


class RealRootednessError(ValueError):
    """Raised when the requested real-root certificate cannot be produced."""


@dataclass(frozen=True)
class PFSequence:
    """Integer coefficient sequence a_0..a_m, ascending degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] == 0:
            raise ValueError("need a nonzero leading coefficient")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonnegative")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, q: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc


def _derivative(coeffs: Sequence[int]) -> tuple[int, ...]:
    return tuple(k * coeffs[k] for k in range(1, len(coeffs)))


def _eval_sign(coeffs: Sequence[int], q: Fraction) -> int:
    # sign of p(q) via the integer den^m * p(num/den)
    num, den = q.numerator, q.denominator
    acc = 0
    dp = 1
    for k in range(len(coeffs) - 1, -1, -1):
        acc = acc * num + coeffs[k] * dp
        dp *= den
    return (acc > 0) - (acc < 0)


def _root_bound(coeffs: Sequence[int]) -> Fraction:
    # Cauchy: every root has |z| < 1 + max|a_i| / |a_m|
    return 1 + Fraction(max(abs(c) for c in coeffs[:-1]), abs(coeffs[-1]))


def _bisect_once(coeffs: Sequence[int], br: list) -> None:
    # br = [lo, hi, sign(lo), sign(hi)] with differing nonzero signs
    lo, hi, s_lo, s_hi = br
    mid = (lo + hi) / 2
    s = _eval_sign(coeffs, mid)
    if s == 0:
        br[:] = [mid, mid, 0, 0]
    elif s == s_lo:
        br[:] = [mid, hi, s, s_hi]
    else:
        br[:] = [lo, mid, s_lo, s]


def _isolate(coeffs: Sequence[int]) -> list[tuple]:
    """Disjoint increasing intervals, each holding one simple real root.

    Entries are (lo, hi, sign at lo, sign at hi) with signs taken for this
    polynomial; exact rational roots collapse to (r, r, 0, 0).  Raises
    RealRootednessError if degree-many simple real roots cannot be
    certified (multiple root, or roots off the real line).
    """
    m = len(coeffs) - 1
    if m <= 0:
        return []
    if m == 1:
        r = Fraction(-coeffs[0], coeffs[1])
        return [(r, r, 0, 0)]
    dco = _derivative(coeffs)
    # child brackets carry dco signs, exactly what bisection on dco needs
    crit = [list(t) for t in _isolate(dco)]
    bound = _root_bound(coeffs)
    s_left = _eval_sign(coeffs, -bound)
    s_right = _eval_sign(coeffs, bound)
    for _ in range(_REFINE_ROUNDS):
        sites = _critical_signs(coeffs, crit)
        if sites is not None:
            found = _sign_changes(sites, bound, s_left, s_right)
            if len(found) == m:
                return found
        for br in crit:
            if br[0] != br[1]:
                _bisect_once(dco, br)
    raise RealRootednessError(f"no certificate of {m} simple real roots")


def _critical_signs(coeffs, crit):
    """(lo, hi, sign of p near the critical point), or None to refine more."""
    sites = []
    for lo, hi, _, _ in crit:
        if lo == hi:
            s = _eval_sign(coeffs, lo)
            if s == 0:
                raise RealRootednessError("multiple root")
            sites.append((lo, hi, s))
            continue
        s_lo = _eval_sign(coeffs, lo)
        s_hi = _eval_sign(coeffs, hi)
        if s_lo == s_hi and s_lo != 0:
            sites.append((lo, hi, s_lo))
        else:
            return None
    return sites


def _sign_changes(sites, bound, s_left, s_right):
    pts = [(-bound, -bound, s_left)] + sites + [(bound, bound, s_right)]
    out = []
    for (_, u1, s1), (l2, _, s2) in zip(pts, pts[1:]):
        if s1 != 0 and s2 != 0 and s1 != s2:
            out.append((u1, l2, s1, s2))
    return out


def _refine(coeffs, lo, hi, s_lo, s_hi):
    while hi - lo > _REL_WIDTH * max(1, abs(lo), abs(hi)):
        mid = (lo + hi) / 2
        s = _eval_sign(coeffs, mid)
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass(frozen=True)
class RootCertificate:
    """Exact bracketing proof for the full real root list."""

    degree: int
    brackets: tuple[tuple[Fraction, Fraction], ...]

    @property
    def all_negative(self) -> bool:
        return all(hi < 0 for _, hi in self.brackets)

    def all_at_most(self, bound: Fraction) -> bool:
        return all(hi <= bound for _, hi in self.brackets)


def pf_real_roots(seq: PFSequence | Iterable[int]) -> tuple[list[float], RootCertificate]:
    """All roots, certified real and simple, ascending.

    Brackets in the certificate are refined to relative width 1e-13, so the
    float roots carry comparable accuracy.
    """
    coeffs = tuple(seq.coefficients if isinstance(seq, PFSequence) else seq)
    if len(coeffs) < 2:
        return [], RootCertificate(degree=0, brackets=())
    refined = []
    for lo, hi, s_lo, s_hi in _isolate(coeffs):
        if lo != hi:
            lo, hi = _refine(coeffs, lo, hi, s_lo, s_hi)
        refined.append((lo, hi))
    cert = RootCertificate(degree=len(coeffs) - 1, brackets=tuple(refined))
    roots = [float((lo + hi) / 2) for lo, hi in refined]
    return roots, cert


def residual(coeffs: Sequence[int], root: float) -> float:
    """|p(root)| relative to the coefficient mass at |root|."""
    acc = 0.0
    scale = 0.0
    power = 1.0
    for c in coeffs:
        acc += c * power
        scale += abs(c) * abs(power)
        power *= root
    return abs(acc) / scale


def u_weights(n: int, d: int) -> list[int]:
    if n < 2 or d < 1:
        raise ValueError("need n >= 2, d >= 1")
    return [comb(n - k, k) * d**k for k in range(n // 2 + 1)]


def u_polynomial(n: int, d: int) -> PFSequence:
    return PFSequence(tuple(u_weights(n, d)))


def u_distribution(n: int, d: int) -> DiscreteDist:
    """Nonzero-coordinate count over the no-adjacent-support family."""
    return DiscreteDist(dict(enumerate(u_weights(n, d))))


@dataclass(frozen=True)
class BernoulliSplit:
    n: int
    d: int
    roots: tuple[float, ...]
    probabilities: tuple[float, ...]
    certificate: RootCertificate
    reconstruction_error: float


def bernoulli_decomposition(n: int, d: int) -> BernoulliSplit:
    """U as an independent Bernoulli sum, p_i = 1/(1 - z_i).

    The split is re-multiplied and compared against the exact weights; the
    max pmf discrepancy is recorded so callers can see the float loss.
    """
    roots, cert = pf_real_roots(u_polynomial(n, d))
    if not cert.all_negative:
        raise RealRootednessError("roots must be negative for a Bernoulli split")
    probs = [1.0 / (1.0 - z) for z in roots]
    pmf = [1.0]
    for p in probs:
        nxt = [0.0] * (len(pmf) + 1)
        for i, mass in enumerate(pmf):
            nxt[i] += mass * (1.0 - p)
            nxt[i + 1] += mass * p
        pmf = nxt
    dist = u_distribution(n, d)
    err = max(abs(pmf[k] - float(dist.probability(k))) for k in range(len(pmf)))
    return BernoulliSplit(
        n=n,
        d=d,
        roots=tuple(roots),
        probabilities=tuple(sorted(probs, reverse=True)),
        certificate=cert,
        reconstruction_error=err,
    )


@dataclass(frozen=True)
class UMeanBounds:
    n: int
    d: int
    mean: Fraction
    upper: Fraction
    meets_upper: bool
    linear_slack: float  # mean minus (5 - sqrt 5)/10 * n


def u_mean_bounds(n: int, d: int) -> UMeanBounds:
    mean = u_distribution(n, d).mean()
    upper = Fraction(n, 2)
    slope = (5.0 - math.sqrt(5.0)) / 10.0
    return UMeanBounds(
        n=n,
        d=d,
        mean=mean,
        upper=upper,
        meets_upper=mean <= upper,
        linear_slack=float(mean) - slope * n,
    )


@dataclass(frozen=True)
class LowerTailCheck:
    n: int
    d: int
    r: Fraction
    mean: Fraction
    tail: Fraction
    bound: float
    holds: bool


def pf_tail_bound(n: int, d: int, r) -> LowerTailCheck:
    """Exact P(U <= mean - r) against exp(-r^2 / (2 mean))."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("need r > 0")
    dist = u_distribution(n, d)
    mu = dist.mean()
    cut = mu - r
    tail = Fraction(sum(w for k, w in dist.items() if k <= cut), dist.total)
    bound = math.exp(-float(r * r) / (2.0 * float(mu)))
    return LowerTailCheck(
        n=n, d=d, r=r, mean=mu, tail=tail, bound=bound, holds=float(tail) <= bound
    )


def u_low_moment(n: int, d: int) -> float:
    """E[min(1/sqrt(U), 1)], the denominator control for ratio statistics."""
    dist = u_distribution(n, d)
    return sum(
        float(dist.probability(k)) * (1.0 if k == 0 else min(1.0, 1.0 / math.sqrt(k)))
        for k in dist.support()
    )


def u_variance_deviations(n_range: Iterable[int], d: int = 1) -> list[tuple[int, Fraction, float]]:
    """(n, exact Var U, |Var - n sqrt(5)/25|) rows; the gap should stay O(1)."""
    slope = math.sqrt(5.0) / 25.0
    rows = []
    for n in n_range:
        var = u_distribution(n, d).variance()
        rows.append((n, var, abs(float(var) - slope * n)))
    return rows
