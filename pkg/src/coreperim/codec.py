"""Vector encodings of bounded-perimeter core partitions.

An n-core with perimeter at most d*n is determined by the sizes of the
residue classes of its beta-set mod n: class i (1 <= i <= n-1) is the run
{i, i+n, ..., i+(x_i-1)n}, so the partition maps to x in {0..d}^(n-1).
Strict cores land exactly on the vectors with no two adjacent nonzero
entries.  A self-conjugate n-core with perimeter at most 2*e*n similarly
maps through its main-diagonal hooks, split by odd residues 2i-1 mod 2n,
to x in {0..e}^n with x_i * x_{n+1-i} = 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .partitions import (
    Partition,
    beta_set,
    from_beta_set,
    is_s_core,
    is_self_conjugate,
    main_diagonal_hooks,
)


class CodecError(ValueError):
    """Base class for encode/decode failures."""


class NotCoreError(CodecError):
    """Input partition has a hook length divisible by the modulus."""


class PerimeterError(CodecError):
    """Input partition's perimeter exceeds the allowed cap."""


class NotSelfConjugateError(CodecError):
    """Input partition is not equal to its conjugate."""


@dataclass(frozen=True)
class CoreVector:
    n: int
    d: int
    x: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus n must be at least 2")
        if self.d < 0:
            raise ValueError("capacity d must be non-negative")
        if len(self.x) != self.n - 1:
            raise ValueError(f"vector must have length {self.n - 1}, got {len(self.x)}")
        if any(not 0 <= v <= self.d for v in self.x):
            raise ValueError(f"entries must lie in [0, {self.d}]")

    @property
    def is_strict(self) -> bool:
        return all(a * b == 0 for a, b in zip(self.x, self.x[1:]))


@dataclass(frozen=True)
class DiagVector:
    n: int
    e: int
    x: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus n must be at least 2")
        if self.e < 0:
            raise ValueError("capacity e must be non-negative")
        if len(self.x) != self.n:
            raise ValueError(f"vector must have length {self.n}, got {len(self.x)}")
        if any(not 0 <= v <= self.e for v in self.x):
            raise ValueError(f"entries must lie in [0, {self.e}]")
        for i in range(self.n):
            if self.x[i] * self.x[self.n - 1 - i] != 0:
                raise ValueError(
                    f"entries {i + 1} and {self.n - i} may not both be nonzero"
                )


def encode_core(p: Partition, n: int, d: int) -> CoreVector:
    """Map an n-core with perimeter <= d*n to its class-size vector."""
    if not is_s_core(p, n):
        raise NotCoreError(f"partition {p} is not a {n}-core")
    if p.perimeter > d * n:
        raise PerimeterError(f"perimeter {p.perimeter} exceeds {d}*{n} = {d * n}")
    counts = [0] * n
    for h in beta_set(p):
        counts[h % n] += 1
    assert counts[0] == 0  # hooks divisible by n would violate the core property
    return CoreVector(n, d, tuple(counts[1:]))


def decode_core(v: CoreVector) -> Partition:
    """Rebuild the partition whose beta-set classes have sizes v.x."""
    beta = []
    for i, count in enumerate(v.x, start=1):
        beta.extend(i + v.n * j for j in range(count))
    return from_beta_set(beta)


def stat_length(v: CoreVector) -> int:
    return sum(v.x)


def stat_size(v: CoreVector) -> int:
    """Size of decode_core(v), evaluated directly on the vector.

    Uses S = (V - A^2) / 2 with A = sum(x_i) and
    V = sum(n*x_i^2 + (2i - n + 1)*x_i); V - A^2 is always even.
    """
    a = 0
    v_acc = 0
    for i, xi in enumerate(v.x, start=1):
        a += xi
        v_acc += v.n * xi * xi + (2 * i - v.n + 1) * xi
    num = v_acc - a * a
    assert num % 2 == 0
    return num // 2


def encode_selfconj(p: Partition, n: int, e: int) -> DiagVector:
    """Map a self-conjugate n-core with perimeter <= 2*e*n to its diagonal vector."""
    if not is_self_conjugate(p):
        raise NotSelfConjugateError(f"partition {p} is not self-conjugate")
    if not is_s_core(p, n):
        raise NotCoreError(f"partition {p} is not a {n}-core")
    if p.perimeter > 2 * e * n:
        raise PerimeterError(f"perimeter {p.perimeter} exceeds 2*{e}*{n} = {2 * e * n}")
    counts = [0] * n
    for h in main_diagonal_hooks(p):
        r = h % (2 * n)
        assert r % 2 == 1  # diagonal hooks of a self-conjugate partition are odd
        counts[(r - 1) // 2] += 1
    return DiagVector(n, e, tuple(counts))


def decode_selfconj(v: DiagVector) -> Partition:
    """Rebuild the self-conjugate partition with the given diagonal classes.

    The diagonal hooks h_1 > ... > h_r give the rows through the Durfee
    square, lambda_i = (h_i - 1)/2 + i; rows below it follow by conjugacy.
    """
    hooks = sorted(diagonal_hooks(v), reverse=True)
    parts = [(h - 1) // 2 + i + 1 for i, h in enumerate(hooks)]
    r = len(parts)
    if parts:
        for j in range(r + 1, parts[0] + 1):
            parts.append(sum(1 for lam in parts[:r] if lam >= j))
    return Partition(tuple(parts))


def diagonal_hooks(v: DiagVector) -> tuple[int, ...]:
    """Expand the class runs {2i-1, 2n+2i-1, ...} into the diagonal hook set."""
    hooks = []
    for i, count in enumerate(v.x, start=1):
        hooks.extend(2 * i - 1 + 2 * v.n * j for j in range(count))
    return tuple(sorted(hooks, reverse=True))


def stat_durfee(v: DiagVector) -> int:
    return sum(v.x)


def stat_power_sum(v: DiagVector, k: int) -> int:
    """Sum of k-th powers of the diagonal hooks; k=0 counts them, k=1 is the size."""
    if k < 0:
        raise ValueError("power k must be non-negative")
    return sum(h**k for h in diagonal_hooks(v))


def parse_vector(text: str, header: str):
    """Parse "3,0,1" against a header "n=4 d=3" (or "n=3 e=1")."""
    fields = dict(tok.split("=") for tok in header.split())
    n = int(fields["n"])
    entries = tuple(int(tok) for tok in text.split(",")) if text.strip() else ()
    if "d" in fields:
        return CoreVector(n, int(fields["d"]), entries)
    return DiagVector(n, int(fields["e"]), entries)


def format_vector(v) -> tuple[str, str]:
    """Inverse of parse_vector; returns (text, header)."""
    if isinstance(v, CoreVector):
        return ",".join(map(str, v.x)), f"n={v.n} d={v.d}"
    return ",".join(map(str, v.x)), f"n={v.n} e={v.e}"


def vector_to_json(v) -> str:
    cap_key = "d" if isinstance(v, CoreVector) else "e"
    cap = v.d if isinstance(v, CoreVector) else v.e
    return json.dumps({"n": v.n, cap_key: cap, "x": list(v.x)})


def vector_from_json(text: str):
    obj = json.loads(text)
    if "d" in obj:
        return CoreVector(obj["n"], obj["d"], tuple(obj["x"]))
    return DiagVector(obj["n"], obj["e"], tuple(obj["x"]))
