"""Exact integer-valued distributions with big-integer weights.

A DiscreteDist stores {value -> weight} with all weights positive integers;
probabilities are the exact rationals weight/total.  Everything downstream
(moments, table reproduction, distances) starts from this representation,
so floating point enters only at final divisions.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt


class DiscreteDist:
    def __init__(self, atoms: dict[int, int]):
        cleaned = {}
        for value, weight in atoms.items():
            if weight < 0:
                raise ValueError(f"negative weight {weight} at {value}")
            if weight > 0:
                cleaned[int(value)] = weight
        if not cleaned:
            raise ValueError("distribution needs at least one atom")
        self._atoms = dict(sorted(cleaned.items()))
        self.total = sum(cleaned.values())

    @property
    def atoms(self) -> dict[int, int]:
        return dict(self._atoms)

    def items(self):
        """(value, weight) pairs in increasing value order."""
        return list(self._atoms.items())

    def support(self):
        return list(self._atoms)

    def weight(self, value: int) -> int:
        return self._atoms.get(value, 0)

    def probability(self, value: int) -> Fraction:
        return Fraction(self._atoms.get(value, 0), self.total)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiscreteDist):
            return NotImplemented
        # compare exact probabilities, not raw weights
        if self._atoms.keys() != other._atoms.keys():
            return False
        return all(
            w * other.total == other._atoms[v] * self.total
            for v, w in self._atoms.items()
        )

    def __repr__(self) -> str:
        if len(self._atoms) > 6:
            vals = self.support()
            return f"DiscreteDist({len(self._atoms)} atoms on [{vals[0]}, {vals[-1]}], total={self.total})"
        return f"DiscreteDist({self._atoms}, total={self.total})"

    def mean(self) -> Fraction:
        return Fraction(sum(v * w for v, w in self._atoms.items()), self.total)

    def moment(self, k: int) -> Fraction:
        return Fraction(sum(v**k * w for v, w in self._atoms.items()), self.total)

    def central_moment(self, k: int) -> Fraction:
        return self.central_moments(k)[k]

    def central_moments(self, k_max: int) -> list[Fraction]:
        """[mu_0 .. mu_k_max], exact.

        Raw power sums are pure-integer accumulations; the shift to central
        moments is a binomial transform on k_max+1 rationals, which keeps
        Fraction arithmetic off the per-atom path.
        """
        raw = [0] * (k_max + 1)
        for v, w in self._atoms.items():
            term = w
            for k in range(k_max + 1):
                raw[k] += term
                term *= v
        mu = self.mean() if k_max == 0 else Fraction(raw[1], self.total)
        out = []
        for k in range(k_max + 1):
            acc = Fraction(0)
            for j in range(k + 1):
                acc += comb(k, j) * Fraction(raw[j], self.total) * (-mu) ** (k - j)
            out.append(acc)
        return out

    def variance(self) -> Fraction:
        return self.central_moment(2)

    def affine(self, a: int, b: int) -> "DiscreteDist":
        """Distribution of a*X + b."""
        if a == 0:
            return DiscreteDist({b: self.total})
        return DiscreteDist({a * v + b: w for v, w in self._atoms.items()})

    def cdf_steps(self):
        """(value, F(value-), F(value)) with exact rational levels."""
        acc = 0
        steps = []
        for v, w in self._atoms.items():
            before = Fraction(acc, self.total)
            acc += w
            steps.append((v, before, Fraction(acc, self.total)))
        return steps


def point_mass(value: int) -> DiscreteDist:
    return DiscreteDist({value: 1})


def uniform_range(lo: int, hi: int) -> DiscreteDist:
    """Uniform on the integers lo..hi inclusive."""
    return DiscreteDist({v: 1 for v in range(lo, hi + 1)})


def convolve(a: DiscreteDist, b: DiscreteDist) -> DiscreteDist:
    """Distribution of the sum of independent draws; totals multiply."""
    out: dict[int, int] = {}
    for va, wa in a.items():
        for vb, wb in b.items():
            key = va + vb
            out[key] = out.get(key, 0) + wa * wb
    return DiscreteDist(out)


def round_half_away(sign: int, square: Fraction, digits: int = 3) -> str:
    """Round sign*sqrt(square) to `digits` decimals, halves away from zero.

    Exact integer arithmetic: with r = square * 10^(2*digits) = a/b, the
    magnitude is m0 = floor(sqrt(a/b)), bumped when a/b >= (m0 + 1/2)^2.
    """
    scaled = square * Fraction(10 ** (2 * digits))
    a, b = scaled.numerator, scaled.denominator
    m0 = isqrt(a * b) // b
    if 4 * a >= b * (2 * m0 + 1) ** 2:
        m0 += 1
    whole, frac = divmod(m0, 10**digits)
    prefix = "-" if sign < 0 and m0 > 0 else ""
    return f"{prefix}{whole}.{frac:0{digits}d}"
