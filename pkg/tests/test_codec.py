from itertools import product

import pytest

from coreperim.codec import (
    CodecError,
    CoreVector,
    DiagVector,
    NotCoreError,
    NotSelfConjugateError,
    PerimeterError,
    decode_core,
    decode_selfconj,
    diagonal_hooks,
    encode_core,
    encode_selfconj,
    format_vector,
    parse_vector,
    stat_durfee,
    stat_length,
    stat_power_sum,
    stat_size,
    vector_from_json,
    vector_to_json,
)
from coreperim.partitions import (
    conjugate,
    from_parts,
    is_s_core,
    is_self_conjugate,
    is_strict,
    main_diagonal_hooks,
)


def all_core_vectors(n, d):
    return [CoreVector(n, d, x) for x in product(range(d + 1), repeat=n - 1)]


def all_diag_vectors(n, e):
    out = []
    for x in product(range(e + 1), repeat=n):
        if all(x[i] * x[n - 1 - i] == 0 for i in range(n)):
            out.append(DiagVector(n, e, x))
    return out


def test_worked_example():
    v = CoreVector(n=4, d=3, x=(3, 0, 1))
    p = decode_core(v)
    assert p == from_parts((6, 3, 2, 1))
    assert stat_length(v) == 4 == p.length
    assert stat_size(v) == 12 == p.size
    assert sorted(h % 4 for h in (9, 5, 3, 1)) == [1, 1, 1, 3]
    assert is_s_core(p, 4) and is_s_core(p, 6) and is_s_core(p, 11)
    assert encode_core(p, 4, 3) == v


def test_vector_validation():
    with pytest.raises(ValueError):
        CoreVector(1, 2, ())
    with pytest.raises(ValueError):
        CoreVector(4, 2, (1, 2))  # wrong length
    with pytest.raises(ValueError):
        CoreVector(4, 2, (3, 0, 0))  # entry above cap
    with pytest.raises(ValueError):
        DiagVector(4, 2, (1, 0, 0, 2))  # coupled pair both nonzero
    with pytest.raises(ValueError):
        DiagVector(3, 2, (0, 0))


def test_encode_error_kinds():
    p = from_parts((6, 3, 2, 1))  # perimeter 9
    with pytest.raises(NotCoreError):
        encode_core(p, 5, 3)
    with pytest.raises(PerimeterError):
        encode_core(p, 4, 2)
    with pytest.raises(NotSelfConjugateError):
        encode_selfconj(p, 4, 3)
    sc = from_parts((4, 2, 1, 1))  # self-conjugate 3-core, perimeter 7
    with pytest.raises(PerimeterError):
        encode_selfconj(sc, 3, 1)
    # diagonal hooks 7 and 1 share the odd residue class 1 mod 6
    assert encode_selfconj(sc, 3, 2).x == (2, 0, 0)
    # error kinds share a catchable base
    assert issubclass(NotCoreError, CodecError)
    assert issubclass(PerimeterError, CodecError)
    assert issubclass(NotSelfConjugateError, CodecError)
    assert issubclass(CodecError, ValueError)


def test_core_round_trip_exhaustive():
    for n in range(2, 9):
        for d in range(4):
            seen = set()
            for v in all_core_vectors(n, d):
                p = decode_core(v)
                assert is_s_core(p, n)
                assert p.perimeter <= d * n
                assert encode_core(p, n, d) == v
                seen.add(p.parts)
            # distinct vectors hit distinct partitions
            assert len(seen) == (d + 1) ** (n - 1)


def test_selfconj_round_trip_exhaustive():
    for n in range(2, 8):
        for e in range(4):
            vecs = all_diag_vectors(n, e)
            # odd n: the middle entry couples with itself, so it is forced to 0
            assert len(vecs) == (2 * e + 1) ** (n // 2)
            seen = set()
            for v in vecs:
                p = decode_selfconj(v)
                assert is_self_conjugate(p)
                assert is_s_core(p, n)
                assert p.perimeter <= 2 * e * n
                assert encode_selfconj(p, n, e) == v
                seen.add(p.parts)
            assert len(seen) == len(vecs)


def test_core_stats_match_decoded_partition():
    for n in range(2, 8):
        for d in range(4):
            for v in all_core_vectors(n, d):
                p = decode_core(v)
                assert stat_length(v) == p.length
                assert stat_size(v) == p.size


def test_selfconj_stats_match_decoded_partition():
    for n in range(2, 8):
        for e in range(3):
            for v in all_diag_vectors(n, e):
                p = decode_selfconj(v)
                hooks = main_diagonal_hooks(p)
                assert diagonal_hooks(v) == hooks
                assert stat_durfee(v) == len(hooks)
                assert stat_power_sum(v, 0) == len(hooks)
                assert stat_power_sum(v, 1) == p.size
                for k in (2, 3):
                    assert stat_power_sum(v, k) == sum(h**k for h in hooks)
    with pytest.raises(ValueError):
        stat_power_sum(DiagVector(3, 1, (1, 0, 0)), -1)


def test_strictness_matches_no_adjacent_nonzero():
    for n in range(2, 8):
        for d in range(4):
            for v in all_core_vectors(n, d):
                assert v.is_strict == is_strict(decode_core(v))


def test_decoded_selfconj_really_conjugate_fixed():
    for v in all_diag_vectors(6, 2):
        p = decode_selfconj(v)
        assert conjugate(p) == p


def test_parse_format_json():
    for v in (
        CoreVector(4, 3, (3, 0, 1)),
        CoreVector(2, 0, (0,)),
        DiagVector(5, 2, (2, 0, 0, 1, 0)),
    ):
        text, header = format_vector(v)
        assert parse_vector(text, header) == v
        assert vector_from_json(vector_to_json(v)) == v
    assert parse_vector("3,0,1", "n=4 d=3") == CoreVector(4, 3, (3, 0, 1))
    assert parse_vector("1,0,0", "n=3 e=2") == DiagVector(3, 2, (1, 0, 0))
    with pytest.raises(ValueError):
        parse_vector("1,2", "n=4 d=1")  # entry above cap
