"""Exhaustive searches: enumeration, census tables and claim sweeps."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from donlat import (
    CapExceededError,
    ClassVector,
    CycleConfig,
    CycleVerdict,
    IndexRangeError,
    NonCurve,
    betti_check,
    candidate_curve_classes,
    canonicalize_cycle,
    census,
    cycle_notation,
    effective_cap,
    enumerate_cycles,
    from_selfintersections,
    validate_cycle,
    verify_chain_dichotomy,
    verify_internonvide,
    verify_rational_pattern,
)

SelfIntLists = st.lists(st.integers(2, 4), min_size=2, max_size=4).map(tuple)

# class counts per (n, s), pinned once against the brute search
EXPECTED_COUNTS = {
    (1, 1): 1,
    (2, 1): 2,
    (2, 2): 4,
    (3, 1): 3,
    (3, 2): 8,
    (3, 3): 7,
    (4, 1): 4,
    (4, 2): 14,
    (4, 3): 17,
    (4, 4): 20,
    (5, 5): 62,
}


def test_candidate_pool():
    pool = candidate_curve_classes(2)
    assert len(pool) == 8
    assert ClassVector((1, 0)) in pool
    assert ClassVector((1, -1)) in pool
    assert ClassVector((-2, -1)) in pool
    assert len(set(pool)) == len(pool)
    with pytest.raises(IndexRangeError):
        candidate_curve_classes(0)


def test_enumeration_counts():
    for (n, s), count in EXPECTED_COUNTS.items():
        assert len(enumerate_cycles(n, s)) == count, (n, s)


def test_enumerated_cycles_validate():
    for n in range(1, 5):
        for s in range(1, n + 1):
            for cfg in enumerate_cycles(n, s):
                assert cfg.n == n and cfg.s == s
                assert validate_cycle(cfg).ok


def test_enumeration_is_deterministic():
    assert enumerate_cycles(4, 3) == enumerate_cycles(4, 3)


def test_rank_three_triangles_in_detail():
    got = [
        (cycle_notation(c), betti_check(c).verdict) for c in enumerate_cycles(3, 3)
    ]
    assert got == [
        ("(621)", CycleVerdict.ODD_IH),
        ("(531)", CycleVerdict.ODD_IH),
        ("(522)", CycleVerdict.ODD_IH),
        ("(521)", CycleVerdict.INADMISSIBLE),
        ("(333)", CycleVerdict.ODD_IH),
        ("(331)", CycleVerdict.INADMISSIBLE),
        ("(222)", CycleVerdict.PARTITION_CASE),
    ]


def test_raw_mode_covers_every_symmetry_class():
    for n, s, raw_count in ((2, 2, 14), (3, 3, 180)):
        raw = enumerate_cycles(n, s, symmetry=False)
        assert len(raw) == raw_count
        assert {canonicalize_cycle(c) for c in raw} == set(enumerate_cycles(n, s))


@given(SelfIntLists, st.integers(0, 3), st.booleans())
def test_canonical_form_ignores_rotation_and_reflection(ks, shift, flip):
    cfg = from_selfintersections(ks)
    curves = cfg.curves[shift % cfg.s :] + cfg.curves[: shift % cfg.s]
    if flip:
        curves = tuple(reversed(curves))
    moved = CycleConfig(cfg.n, curves, None)
    assert canonicalize_cycle(moved) == canonicalize_cycle(cfg)
    assert canonicalize_cycle(canonicalize_cycle(cfg)) == canonicalize_cycle(cfg)


def test_census_tables():
    P = CycleVerdict.PARTITION_CASE
    O = CycleVerdict.ODD_IH
    I = CycleVerdict.INADMISSIBLE
    assert census(2) == (
        (2, 1, P, 1),
        (2, 1, I, 1),
        (2, 2, P, 1),
        (2, 2, O, 2),
        (2, 2, I, 1),
    )
    assert census(3) == (
        (3, 1, P, 1),
        (3, 1, I, 2),
        (3, 2, P, 1),
        (3, 2, I, 7),
        (3, 3, P, 1),
        (3, 3, O, 4),
        (3, 3, I, 2),
    )
    assert census(4) == (
        (4, 1, P, 1),
        (4, 1, I, 3),
        (4, 2, P, 2),
        (4, 2, I, 12),
        (4, 3, P, 1),
        (4, 3, I, 16),
        (4, 4, P, 1),
        (4, 4, O, 13),
        (4, 4, I, 6),
    )


def test_caps():
    with pytest.raises(CapExceededError):
        enumerate_cycles(6, 2)
    with pytest.raises(CapExceededError):
        census(6)
    assert len(enumerate_cycles(6, 2, cap=6)) == 30
    with pytest.raises(IndexRangeError):
        enumerate_cycles(0, 1)
    with pytest.raises(IndexRangeError):
        enumerate_cycles(2, 0)


def test_cap_environment_override(monkeypatch):
    monkeypatch.delenv("DONLAT_CAP", raising=False)
    assert effective_cap() == 5
    monkeypatch.setenv("DONLAT_CAP", "6")
    assert effective_cap() == 6
    assert effective_cap(3) == 3  # explicit argument wins
    monkeypatch.setenv("DONLAT_CAP", "six")
    with pytest.raises(CapExceededError):
        effective_cap()


def test_rational_pattern_sweep():
    for n in (1, 2, 3, 4):
        report = verify_rational_pattern(n, 3)
        assert report.ok and report.witnesses == ()


def test_rational_pattern_catches_a_broken_classifier():
    report = verify_rational_pattern(2, 2, classifier=lambda x: NonCurve(0))
    assert not report.ok
    assert report.witnesses


def test_chain_dichotomy_sweep():
    for n in (2, 3, 4, 5):
        report = verify_chain_dichotomy(n)
        assert report.ok and report.witnesses == ()
        assert report.max_type_b_pairing == 0


def test_internonvide_sweep():
    positives = {}
    for n in range(2, 6):
        for j in range(2, n + 1):
            report = verify_internonvide(n, j)
            assert report.ok and report.witnesses == (), (n, j)
            positives[(n, j)] = len(report.positives)
    # interlocking chains exist at every size, pinned against the sweep
    assert positives == {
        (2, 2): 0,
        (3, 2): 6,
        (3, 3): 0,
        (4, 2): 72,
        (4, 3): 24,
        (4, 4): 0,
        (5, 2): 540,
        (5, 3): 480,
        (5, 4): 120,
        (5, 5): 0,
    }
    with pytest.raises(IndexRangeError):
        verify_internonvide(3, 1)


def test_larger_rank_regression():
    # one deliberately heavier run, still around a second
    assert len(enumerate_cycles(6, 6, cap=6)) == 228
