"""Enumeration, counting and uniform sampling for the three vector families.

Families: "core" is {0..d}^(n-1); "strict" restricts to no two adjacent
nonzero entries; "selfconj" is {0..e}^n with x_i * x_{n+1-i} = 0.
Enumeration is lexicographic and guarded by a cardinality limit.  Sampling
is exactly uniform (big-integer suffix counts, no floating point) and fully
reproducible from (spec, seed, count); see rng.py for the stream contract.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from . import codec
from .distributions import DiscreteDist
from .rng import SplitMix64

FAMILIES = ("core", "strict", "selfconj")

ENUMERATION_LIMIT = 10**8


class FamilyTooLargeError(ValueError):
    """Enumeration refused: the family exceeds the cardinality limit."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    cap: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.n < 2:
            raise ValueError("modulus n must be at least 2")
        if self.cap < 0:
            raise ValueError("capacity must be non-negative")

    @property
    def width(self) -> int:
        # number of vector coordinates
        return self.n if self.family == "selfconj" else self.n - 1


def count_family(spec: FamilySpec) -> int:
    """Closed-form cardinality of the family."""
    n, cap = spec.n, spec.cap
    if spec.family == "core":
        return (cap + 1) ** (n - 1)
    if spec.family == "strict":
        return sum(math.comb(n - k, k) * cap**k for k in range(n // 2 + 1))
    # selfconj: each of the floor(n/2) antipodal pairs independently takes one
    # of 2e+1 assignments; the middle coordinate of odd n is forced to zero
    return (2 * cap + 1) ** (n // 2)


def enumerate_family(spec: FamilySpec, limit: int = ENUMERATION_LIMIT) -> Iterator[tuple[int, ...]]:
    """Yield every vector of the family exactly once, in lexicographic order."""
    total = count_family(spec)
    if total > limit:
        raise FamilyTooLargeError(f"{spec} has {total} elements, limit is {limit}")
    if spec.family == "core":
        yield from _lex_core(spec.n, spec.cap)
    elif spec.family == "strict":
        yield from _lex_strict(spec.n, spec.cap)
    else:
        yield from _lex_selfconj(spec.n, spec.cap)


def _lex_core(n: int, d: int) -> Iterator[tuple[int, ...]]:
    width = n - 1
    stack = [0] * width

    def rec(i):
        if i == width:
            yield tuple(stack)
            return
        for v in range(d + 1):
            stack[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def _lex_strict(n: int, d: int) -> Iterator[tuple[int, ...]]:
    width = n - 1
    stack = [0] * width

    def rec(i):
        if i == width:
            yield tuple(stack)
            return
        choices = range(d + 1) if i == 0 or stack[i - 1] == 0 else (0,)
        for v in choices:
            stack[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def _lex_selfconj(n: int, e: int) -> Iterator[tuple[int, ...]]:
    stack = [0] * n

    def rec(i):
        if i == n:
            yield tuple(stack)
            return
        partner = n - 1 - i
        if partner < i and stack[partner] != 0:
            choices = (0,)
        elif partner == i:
            choices = (0,)
        else:
            choices = range(e + 1)
        for v in choices:
            stack[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def member(spec: FamilySpec, x: tuple[int, ...]) -> bool:
    """Membership predicate for a raw tuple."""
    if len(x) != spec.width or any(not 0 <= v <= spec.cap for v in x):
        return False
    if spec.family == "strict":
        return all(a * b == 0 for a, b in zip(x, x[1:]))
    if spec.family == "selfconj":
        return all(x[i] * x[spec.n - 1 - i] == 0 for i in range(spec.n))
    return True


def strict_suffix_counts(n: int, d: int) -> list[int]:
    """f[i] = completions of positions i.. when position i is unconstrained.

    Recursion f[i] = f[i+1] + d*f[i+2]: either place 0, or one of d nonzero
    values which forces the next position to 0.
    """
    width = n - 1
    f = [0] * (width + 2)
    f[width] = f[width + 1] = 1
    for i in range(width - 1, -1, -1):
        f[i] = f[i + 1] + d * f[i + 2]
    return f


def sample(spec: FamilySpec, seed: int, count: int) -> list[tuple[int, ...]]:
    """Draw `count` vectors, each exactly uniform on the family.

    The output is a pure function of (spec, seed, count): coordinates are
    consumed left to right, one bounded draw per decision, from a single
    SplitMix64 stream seeded with `seed`.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    gen = SplitMix64(seed)
    out = []
    if spec.family == "core":
        for _ in range(count):
            out.append(tuple(gen.below(spec.cap + 1) for _ in range(spec.width)))
    elif spec.family == "strict":
        f = strict_suffix_counts(spec.n, spec.cap)
        for _ in range(count):
            out.append(_sample_strict(spec, gen, f))
    else:
        for _ in range(count):
            out.append(_sample_selfconj(spec, gen))
    return out


def _sample_strict(spec: FamilySpec, gen: SplitMix64, f: list[int]) -> tuple[int, ...]:
    width, d = spec.width, spec.cap
    x = [0] * width
    i = 0
    while i < width:
        u = gen.below(f[i])
        if u < f[i + 1]:
            i += 1  # weight f[i+1] for placing 0
        else:
            x[i] = 1 + (u - f[i + 1]) // f[i + 2]  # d values, f[i+2] completions each
            i += 2  # the next position is forced to 0
    return tuple(x)


def _sample_selfconj(spec: FamilySpec, gen: SplitMix64) -> tuple[int, ...]:
    n, e = spec.n, spec.cap
    x = [0] * n
    for i in range(n // 2):
        # pair (i+1, n-i) in 1-based terms: outcome t=0 is (0,0),
        # 1..e puts t on the left, e+1..2e puts t-e on the right
        t = gen.below(2 * e + 1)
        if 1 <= t <= e:
            x[i] = t
        elif t > e:
            x[n - 1 - i] = t - e
    return tuple(x)


def as_vector(spec: FamilySpec, x: tuple[int, ...]):
    if spec.family == "selfconj":
        return codec.DiagVector(spec.n, spec.cap, x)
    return codec.CoreVector(spec.n, spec.cap, x)


def statistic_value(spec: FamilySpec, stat, x: tuple[int, ...]) -> int:
    """Evaluate a statistic id ("length", "size", "durfee", ("power", k)) on a tuple."""
    kind, k = normalize_stat(stat)
    v = as_vector(spec, x)
    if spec.family == "selfconj":
        if kind == "length" or kind == "durfee":
            return codec.stat_durfee(v)
        if kind == "size":
            return codec.stat_power_sum(v, 1)
        return codec.stat_power_sum(v, k)
    if kind == "length":
        return codec.stat_length(v)
    if kind == "size":
        return codec.stat_size(v)
    if kind == "durfee":
        from .partitions import durfee_length

        return durfee_length(codec.decode_core(v))
    raise ValueError(f"statistic {stat!r} is not defined for family {spec.family!r}")


def normalize_stat(stat) -> tuple[str, int | None]:
    """Accept "length" | "size" | "durfee" | "power:k" | ("power", k)."""
    if isinstance(stat, tuple):
        kind, k = stat
    elif isinstance(stat, str) and stat.startswith("power"):
        kind, _, tail = stat.partition(":")
        k = int(tail) if tail else None
    else:
        kind, k = stat, None
    if kind not in ("length", "size", "durfee", "power"):
        raise ValueError(f"unknown statistic {stat!r}")
    if kind == "power":
        if k is None or k < 0:
            raise ValueError("power statistic needs a non-negative exponent, e.g. power:2")
        return kind, int(k)
    return kind, None


def oracle_distribution(spec: FamilySpec, stat, limit: int = ENUMERATION_LIMIT) -> DiscreteDist:
    """Exact pmf of a statistic by full enumeration; ground truth for the DP engines."""
    atoms: dict[int, int] = {}
    for x in enumerate_family(spec, limit):
        value = statistic_value(spec, stat, x)
        atoms[value] = atoms.get(value, 0) + 1
    return DiscreteDist(atoms)
