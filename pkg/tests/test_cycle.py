"""Cycle validation, the betti count and canonical numbering."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from donlat import (
    BadSelfIntersectionError,
    ClassVector,
    CycleConfig,
    CycleVerdict,
    NotNodalFormError,
    NotPartitionCaseError,
    RankTooSmallError,
    SchemaError,
    SingleCurveError,
    basis,
    betti_check,
    canonical_numbering,
    cycle_class,
    cycle_notation,
    from_selfintersections,
    intersection_matrix,
    odd_ih_cycle,
    selfintersections,
    validate_cycle,
    zero,
)

SelfIntLists = st.lists(st.integers(2, 5), min_size=2, max_size=5).map(tuple)


def test_from_selfintersections_kato_shape():
    cfg = from_selfintersections((5, 3))
    assert cfg.n == 6
    assert cfg.alphas == (0, 4)
    assert cfg.curves == (
        ClassVector((1, -1, -1, -1, -1, 0)),
        ClassVector((-1, 0, 0, 0, 1, -1)),
    )
    assert selfintersections(cfg) == (-5, -3)


def test_from_selfintersections_rejects_bad_input():
    with pytest.raises(SingleCurveError):
        from_selfintersections((4,))
    with pytest.raises(BadSelfIntersectionError):
        from_selfintersections((3, 1))


@given(SelfIntLists)
def test_builder_cycles_are_valid_partition_cases(ks):
    """Prescribed self-intersections come back verbatim and validate."""
    cfg = from_selfintersections(ks)
    assert cfg.n == sum(k - 1 for k in ks)
    assert selfintersections(cfg) == tuple(-k for k in ks)
    assert validate_cycle(cfg).ok
    verdict, value = betti_check(cfg)
    assert verdict is CycleVerdict.PARTITION_CASE
    assert value == cfg.n


def test_validate_reports_shape_violations():
    assert "empty" in validate_cycle(CycleConfig(2, ())).codes()
    mixed = CycleConfig(2, (basis(0, 2), basis(0, 3)))
    assert "rank-mismatch" in validate_cycle(mixed).codes()
    assert "single-not-nodal" in validate_cycle(
        CycleConfig(2, (ClassVector((0, -2)),))
    ).codes()
    junk = CycleConfig(2, (ClassVector((1, 1)), basis(0, 2)))
    assert "not-a-curve" in validate_cycle(junk).codes()
    double_b = CycleConfig(
        2, (ClassVector((-2, 0)), ClassVector((0, -2)))
    )
    assert "two-type-b" in validate_cycle(double_b).codes()


def test_validate_pair_and_adjacency_counts():
    pair = CycleConfig(2, (ClassVector((1, -1)), ClassVector((1, -1))))
    assert "pair-intersection" in validate_cycle(pair).codes()
    square4 = from_selfintersections((2, 2, 2, 2))
    c = square4.curves
    swapped = CycleConfig(4, (c[0], c[2], c[1], c[3]))
    codes = validate_cycle(swapped).codes()
    assert "adjacent-intersection" in codes
    assert "nonadjacent-intersection" in codes


def test_cycle_class_support():
    cfg = from_selfintersections((5, 3))
    total, support = cycle_class(cfg)
    assert total == ClassVector((0, -1, -1, -1, 0, -1))
    assert support == frozenset({1, 2, 3, 5})
    # a cycle of (-2)-curves covering everything sums to zero
    assert cycle_class(from_selfintersections((2, 2, 2, 2))) == (
        zero(4),
        frozenset(),
    )
    with pytest.raises(NotNodalFormError):
        cycle_class(CycleConfig(2, (ClassVector((1, -1)), ClassVector((1, -1)))))


def test_betti_verdicts():
    assert betti_check(from_selfintersections((5, 3))) == (
        CycleVerdict.PARTITION_CASE,
        6,
    )
    assert betti_check(odd_ih_cycle(3)) == (CycleVerdict.ODD_IH, 6)
    narrow = CycleConfig(
        3, (ClassVector((1, -1, 0)), ClassVector((-1, 1, 0)))
    )
    assert validate_cycle(narrow).ok
    assert betti_check(narrow) == (CycleVerdict.INADMISSIBLE, 2)


def test_betti_partition_needs_type_a_tails():
    # value == n alone is not enough once a -2 head is present
    cfg = CycleConfig(4, (ClassVector((0, -2, 0, 0)), ClassVector((0, 1, 0, -1))))
    assert validate_cycle(cfg).ok
    assert betti_check(cfg) == (CycleVerdict.INADMISSIBLE, 4)


def test_single_curve_cycles():
    nodal = CycleConfig(3, (ClassVector((0, -1, -1)),))
    assert validate_cycle(nodal).ok
    assert betti_check(nodal) == (CycleVerdict.PARTITION_CASE, 3)
    assert canonical_numbering(
        CycleConfig(3, (ClassVector((-1, 0, -1)),))
    ).curves == (ClassVector((0, -1, -1)),)


def test_odd_ih_cycle_shape():
    cfg = odd_ih_cycle(4)
    assert selfintersections(cfg) == (-6, -2, -2, -2)
    assert validate_cycle(cfg).ok
    with pytest.raises(RankTooSmallError):
        odd_ih_cycle(1)


def test_cycle_notation():
    assert cycle_notation(from_selfintersections((5, 2, 2, 3, 3, 2))) == "(522332)"
    assert cycle_notation(from_selfintersections((12, 2))) == "(12,2)"


def test_intersection_matrix():
    assert intersection_matrix(from_selfintersections((5, 3))) == (
        (-5, 2),
        (2, -3),
    )


@given(SelfIntLists)
def test_canonical_numbering_is_idempotent(ks):
    cfg = from_selfintersections(ks)
    canon = canonical_numbering(cfg)
    assert canonical_numbering(canon) == canon
    assert sorted(selfintersections(canon)) == sorted(selfintersections(cfg))


@given(SelfIntLists, st.integers(0, 4))
def test_canonical_numbering_kills_rotations(ks, shift):
    """Any rotation of the curve tuple lands on the same canonical form."""
    cfg = from_selfintersections(ks)
    r = shift % cfg.s
    rotated = CycleConfig(cfg.n, cfg.curves[r:] + cfg.curves[:r], None)
    assert canonical_numbering(rotated) == canonical_numbering(cfg)


def test_canonical_numbering_prefers_the_steep_start():
    assert canonical_numbering(from_selfintersections((3, 5))) == (
        from_selfintersections((5, 3))
    )
    with pytest.raises(NotPartitionCaseError):
        canonical_numbering(odd_ih_cycle(3))


def test_cycle_json_round_trip():
    cfg = from_selfintersections((5, 3))
    assert CycleConfig.from_json(cfg.to_json()) == cfg
    bare = CycleConfig(2, (ClassVector((0, -1)),))
    assert CycleConfig.from_json(bare.to_json()) == bare


def test_cycle_json_rejects_bad_payloads():
    with pytest.raises(SchemaError):
        CycleConfig.from_json({"curves": [[0, -1]]})
    with pytest.raises(SchemaError):
        CycleConfig.from_json({"n": 2, "curves": [[0, "x"]]})
    with pytest.raises(SchemaError):
        CycleConfig.from_json({"n": True, "curves": [[0, -1]]})
    with pytest.raises(SchemaError):
        CycleConfig.from_json([1])
