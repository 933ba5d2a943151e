from fractions import Fraction

import pytest

from coreperim.distributions import DiscreteDist, point_mass
from coreperim.exactdist import (
    ConditionalStat,
    MomentReport,
    conditional_stat,
    dist_length,
    dist_power_sum_selfconj,
    dist_size,
    dist_statistic,
    legal_supports,
    mixture_identity_check,
    moments,
)
from coreperim.families import (
    FamilySpec,
    count_family,
    enumerate_family,
    oracle_distribution,
    statistic_value,
)


def stats_for(family):
    if family == "selfconj":
        return ["length", "size", "durfee", "power:2", "power:3"]
    return ["length", "size"]


def test_engines_match_enumeration_oracle():
    for family in ("core", "strict", "selfconj"):
        for n in range(2, 7):
            for cap in range(4):
                spec = FamilySpec(family, n, cap)
                for stat in stats_for(family):
                    assert dist_statistic(spec, stat) == oracle_distribution(
                        spec, stat
                    ), (family, n, cap, stat)


def test_dist_totals_are_family_counts():
    for family in ("core", "strict", "selfconj"):
        for n in (5, 8, 11):
            for cap in (1, 2, 3):
                spec = FamilySpec(family, n, cap)
                assert dist_length(spec).total == count_family(spec)
                assert dist_size(spec).total == count_family(spec)


def test_core_size_by_hand_n2():
    # single coordinate x: size is the triangular number x(x+1)/2
    d = dist_size(FamilySpec("core", 2, 3))
    assert d.atoms == {0: 1, 1: 1, 3: 1, 6: 1}


def test_selfconj_power_by_hand_n3():
    # vectors (a,0,c), a*c = 0; runs give diagonal hooks {1,7} and {5,11}
    d = dist_power_sum_selfconj(3, 2, 1)
    assert d.atoms == {0: 1, 1: 1, 5: 1, 8: 1, 16: 1}
    d0 = dist_power_sum_selfconj(3, 2, 0)
    assert d0.atoms == {0: 1, 1: 2, 2: 2}
    with pytest.raises(ValueError):
        dist_power_sum_selfconj(3, 2, -1)


def test_dist_statistic_dispatch_errors():
    with pytest.raises(ValueError):
        dist_statistic(FamilySpec("core", 5, 2), "durfee")
    with pytest.raises(ValueError):
        dist_statistic(FamilySpec("strict", 5, 2), "power:2")


def test_core_length_is_symmetric_sum():
    # sum of n-1 iid uniform{0..d}: odd central moments vanish exactly
    for n in (4, 7):
        for d in (1, 3):
            dist = dist_length(FamilySpec("core", n, d))
            assert dist.mean() == Fraction((n - 1) * d, 2)
            assert dist.variance() == Fraction((n - 1) * (d * d + 2 * d), 12)
            ms = dist.central_moments(7)
            assert ms[3] == ms[5] == ms[7] == 0


def test_moment_report_fields():
    spec = FamilySpec("core", 5, 3)
    rep = moments(dist_statistic(spec, "length"), 6, family="core", stat="length", n=5, cap=3)
    assert isinstance(rep, MomentReport)
    assert rep.family == "core" and rep.n == 5 and rep.cap == 3
    assert rep.mean == 6 and rep.variance == 5
    assert len(rep.central) == 7
    assert rep.central[2] == rep.variance
    assert not rep.degenerate
    assert rep.standardized[1] == "0.000"
    assert rep.standardized[2] == "1.000"
    assert rep.standardized[3] == "0.000"
    # kurtosis of the 4-fold uniform{0..3} sum
    assert rep.standardized[4] == "2.660"
    assert abs(rep.standardized_float(4) - 2.66) < 1e-12


def test_moment_report_degenerate():
    rep = moments(point_mass(7), 4)
    assert rep.degenerate
    assert rep.mean == 7 and rep.variance == 0
    assert rep.standardized == {}
    with pytest.raises(ZeroDivisionError):
        rep.standardized_float(3)


def test_legal_supports_counts_and_shape():
    for n in range(2, 10):
        supports = list(legal_supports(n))
        assert len(set(supports)) == len(supports)
        # one support per strict 0/1 pattern
        assert len(supports) == count_family(FamilySpec("strict", n, 1))
        for t in supports:
            assert all(b - a >= 2 for a, b in zip(t, t[1:]))
            assert all(1 <= i <= n - 1 for i in t)


def test_conditional_stat_validation():
    spec = FamilySpec("strict", 6, 2)
    with pytest.raises(ValueError):
        conditional_stat(FamilySpec("core", 6, 2), "length", (1,))
    with pytest.raises(ValueError):
        conditional_stat(spec, "power:2", (1,))
    with pytest.raises(ValueError):
        conditional_stat(spec, "length", (2, 3))  # adjacent
    with pytest.raises(ValueError):
        conditional_stat(spec, "length", (0, 4))  # out of range


def test_conditional_length_small():
    spec = FamilySpec("strict", 6, 2)
    c = conditional_stat(spec, "length", (1, 3))
    assert isinstance(c, ConditionalStat)
    # two independent uniform{1,2} coordinates
    assert c.dist.atoms == {2: 1, 3: 2, 4: 1}
    assert c.mean == c.closed_mean == 3
    assert c.variance == c.closed_variance == Fraction(1, 2)
    empty = conditional_stat(spec, "size", ())
    assert empty.dist == point_mass(0)
    assert empty.variance == 0


def test_conditional_size_matches_enumeration():
    spec = FamilySpec("strict", 6, 3)
    for t in legal_supports(6):
        c = conditional_stat(spec, "size", t)
        brute: dict[int, int] = {}
        for x in enumerate_family(spec):
            if tuple(i for i, v in enumerate(x, start=1) if v) == t:
                s = statistic_value(spec, "size", x)
                brute[s] = brute.get(s, 0) + 1
        assert c.dist == DiscreteDist(brute)
        assert c.mean == c.closed_mean
        assert c.variance == c.closed_variance


def test_mixture_identity_exact():
    for n in range(2, 7):
        for d in (1, 2, 3):
            spec = FamilySpec("strict", n, d)
            assert mixture_identity_check(spec, "length")
            assert mixture_identity_check(spec, "size")
