"""Cycles of rational curves as lattice configurations.

A cycle of s rational curves is stored as an ordered tuple of classes,
consecutive in the cyclic order.  The shape constraints are purely
numerical:

  * s = 1:  a single class of the -e_I shape (rational curve with one
            node);
  * s = 2:  two curve classes meeting twice (two points of the cycle);
  * s >= 3: consecutive classes meet once, all other pairs are disjoint.

For s >= 2 every class must be type A or type B and at most one type B
may occur (two of them can never both sit in one cycle).

The central invariant of a cycle C with class sum C is the quantity
s - C.C  (number of curves minus self-intersection), which for
configurations realized on a surface with second Betti number n equals
either n or 2n.  `betti_check` reports which case holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .curveclass import NonCurve, TypeA, TypeB, classify, is_nodal_cycle_class
from .errors import (
    BadSelfIntersectionError,
    NotNodalFormError,
    NotPartitionCaseError,
    RankTooSmallError,
    SchemaError,
    SingleCurveError,
)
from .lattice import ClassVector, basis, e_sum, intersect, square, zero

__all__ = [
    "BettiResult",
    "CycleConfig",
    "CycleReport",
    "CycleVerdict",
    "Violation",
    "betti_check",
    "canonical_numbering",
    "cycle_class",
    "cycle_notation",
    "from_selfintersections",
    "intersection_matrix",
    "odd_ih_cycle",
    "selfintersections",
    "validate_cycle",
]


@dataclass(frozen=True)
class Violation:
    """One violated constraint: stable code plus human-readable detail."""

    code: str
    message: str


@dataclass(frozen=True)
class CycleReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> tuple[str, ...]:
        return tuple(v.code for v in self.violations)


@dataclass(frozen=True)
class CycleConfig:
    """Ordered cycle data: rank, curve classes, optional head numbering.

    `alphas` records the strictly increasing head indices of a
    canonically numbered partition-case cycle; it is None whenever no
    such numbering applies.
    """

    n: int
    curves: tuple[ClassVector, ...]
    alphas: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "curves", tuple(self.curves))
        if self.alphas is not None:
            object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def s(self) -> int:
        """Number of curves in the cycle."""
        return len(self.curves)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "curves": [c.to_json() for c in self.curves],
            "alphas": list(self.alphas) if self.alphas is not None else None,
        }

    @classmethod
    def from_json(cls, data: object) -> "CycleConfig":
        if not isinstance(data, dict):
            raise SchemaError(f"expected a cycle object, got {data!r}")
        n = data.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise SchemaError("cycle needs a positive integer 'n'")
        raw = data.get("curves")
        if not isinstance(raw, list) or not raw:
            raise SchemaError("cycle needs a non-empty 'curves' array")
        curves = tuple(ClassVector.from_json(c) for c in raw)
        alphas = data.get("alphas")
        if alphas is not None:
            if not isinstance(alphas, list) or any(
                not isinstance(a, int) or isinstance(a, bool) for a in alphas
            ):
                raise SchemaError("'alphas' must be an integer array or null")
            alphas = tuple(alphas)
        return cls(n, curves, alphas)


def validate_cycle(cfg: CycleConfig) -> CycleReport:
    """Check every cycle-shape constraint; report rather than raise."""
    bad: list[Violation] = []
    if not cfg.curves:
        return CycleReport((Violation("empty", "a cycle needs at least one curve"),))
    for pos, c in enumerate(cfg.curves):
        if c.n != cfg.n:
            bad.append(
                Violation("rank-mismatch", f"curve {pos} has rank {c.n}, config says {cfg.n}")
            )
    if bad:
        # intersection checks below assume a uniform rank
        return CycleReport(tuple(bad))

    s = cfg.s
    if s == 1:
        ok, _ = is_nodal_cycle_class(cfg.curves[0])
        if not ok:
            bad.append(
                Violation(
                    "single-not-nodal",
                    "a one-curve cycle must have the -e_I shape with nonempty I",
                )
            )
        return CycleReport(tuple(bad))

    kinds = [classify(c) for c in cfg.curves]
    for pos, k in enumerate(kinds):
        if isinstance(k, NonCurve):
            bad.append(
                Violation("not-a-curve", f"curve {pos} is not a rational curve class")
            )
    type_b = [pos for pos, k in enumerate(kinds) if isinstance(k, TypeB)]
    if len(type_b) > 1:
        bad.append(
            Violation("two-type-b", f"curves {type_b} all have a -2 head; at most one allowed")
        )

    if s == 2:
        got = intersect(cfg.curves[0], cfg.curves[1])
        if got != 2:
            bad.append(
                Violation("pair-intersection", f"the two curves meet {got} times, need 2")
            )
    else:
        for i in range(s):
            for j in range(i + 1, s):
                got = intersect(cfg.curves[i], cfg.curves[j])
                adjacent = j - i == 1 or (i == 0 and j == s - 1)
                if adjacent and got != 1:
                    bad.append(
                        Violation(
                            "adjacent-intersection",
                            f"consecutive curves {i},{j} meet {got} times, need 1",
                        )
                    )
                if not adjacent and got != 0:
                    bad.append(
                        Violation(
                            "nonadjacent-intersection",
                            f"non-consecutive curves {i},{j} meet {got} times, need 0",
                        )
                    )
    return CycleReport(tuple(bad))


class CycleClass(NamedTuple):
    vector: ClassVector
    support: frozenset[int]


def cycle_class(cfg: CycleConfig) -> CycleClass:
    """Sum the curve classes and read off C = -e_{I_C}.

    The support I_C may be empty (the class sum of a cycle of
    (-2)-curves covering every index is zero).

    Raises:
        NotNodalFormError: some coefficient of the sum is outside {0, -1}.
    """
    total = _total(cfg)
    if any(a not in (0, -1) for a in total.coeffs):
        raise NotNodalFormError(f"cycle class {list(total.coeffs)} has a coefficient outside {{0,-1}}")
    return CycleClass(total, frozenset(k for k, a in enumerate(total.coeffs) if a == -1))


def _total(cfg: CycleConfig) -> ClassVector:
    total = zero(cfg.n)
    for c in cfg.curves:
        total = total + c
    return total


class CycleVerdict(Enum):
    PARTITION_CASE = "PartitionCase"
    ODD_IH = "OddIH"
    INADMISSIBLE = "Inadmissible"


class BettiResult(NamedTuple):
    verdict: CycleVerdict
    value: int


def betti_check(cfg: CycleConfig) -> BettiResult:
    """Compare s - C.C against the rank.

    The count equals the number of curves plus intersection points of
    the cycle minus C.C, i.e. exactly s - C.C.  Verdicts:

      * PartitionCase: value == n and (for s >= 2) every curve is type A
        with the tail sets partitioning [0, n-1]; for s == 1 the value
        test alone decides, the nodal curve playing the degenerate role.
      * OddIH: value == 2n (the configuration only fits a surface whose
        cycle homology sits with index 2).
      * Inadmissible: anything else.
    """
    total = _total(cfg)
    value = cfg.s - intersect(total, total)
    # value == n and value == 2n cannot both hold (n >= 1), so order is free
    if value == cfg.n and (cfg.s == 1 or _is_partition(cfg)):
        return BettiResult(CycleVerdict.PARTITION_CASE, value)
    if value == 2 * cfg.n:
        return BettiResult(CycleVerdict.ODD_IH, value)
    return BettiResult(CycleVerdict.INADMISSIBLE, value)


def _is_partition(cfg: CycleConfig) -> bool:
    """All curves type A and their tails partition [0, n-1]."""
    seen: set[int] = set()
    for c in cfg.curves:
        kind = classify(c)
        if not isinstance(kind, TypeA):
            return False
        if seen & kind.tail:
            return False
        seen |= kind.tail
    return seen == set(range(cfg.n))


def from_selfintersections(ks: Sequence[int]) -> CycleConfig:
    """Build the canonically numbered cycle with prescribed -D_i.D_i.

    For self-intersection opposites (k_0, ..., k_{s-1}), all >= 2, the
    rank is n = sum (k_i - 1), the heads are alpha_0 = 0 and
    alpha_{i+1} = alpha_i + k_i - 1, and curve i is

        e_{alpha_i} - (e_{alpha_i + 1} + ... + e_{alpha_{i+1}})

    with the last tail wrapping around to include e_0.

    Raises:
        SingleCurveError: fewer than two entries.
        BadSelfIntersectionError: some entry below 2.
    """
    ks = tuple(ks)
    if len(ks) < 2:
        raise SingleCurveError("need at least two self-intersections")
    for k in ks:
        if k < 2:
            raise BadSelfIntersectionError(f"self-intersection opposite {k} below 2")
    s = len(ks)
    n = sum(k - 1 for k in ks)
    alphas = [0]
    for k in ks[:-1]:
        alphas.append(alphas[-1] + k - 1)
    curves = []
    for i in range(s):
        lo = alphas[i] + 1
        hi = alphas[i + 1] + 1 if i + 1 < s else n
        tail = list(range(lo, hi))
        if i == s - 1:
            tail.append(0)
        curves.append(basis(alphas[i], n) - e_sum(tail, n))
    return CycleConfig(n, tuple(curves), tuple(alphas))


def odd_ih_cycle(n: int) -> CycleConfig:
    """The unique cycle shape containing a type B curve, at rank n >= 2.

    Curves: D_0 = -2 e_1 - e_{[2, n-1]}, then D_j = e_j - e_{j+1} for
    1 <= j <= n-2, and D_{n-1} = e_{n-1} - e_0.  The self-intersection
    opposites come out as (n+2, 2, ..., 2) and s - C.C = 2n.
    """
    if n < 2:
        raise RankTooSmallError(f"need rank >= 2, got {n}")
    head = [0] * n
    head[1] = -2
    for j in range(2, n):
        head[j] = -1
    curves = [ClassVector(tuple(head))]
    for j in range(1, n - 1):
        curves.append(basis(j, n) - basis(j + 1, n))
    curves.append(basis(n - 1, n) - basis(0, n))
    return CycleConfig(n, tuple(curves), None)


def selfintersections(cfg: CycleConfig) -> tuple[int, ...]:
    """Self-intersection of each curve, in cycle order (negative values)."""
    return tuple(square(c) for c in cfg.curves)


def cycle_notation(cfg: CycleConfig) -> str:
    """Compact display of the self-intersection opposites, e.g. "(522332)".

    Digits are concatenated while every entry stays below 10; larger
    entries switch to comma separation.
    """
    ks = [-v for v in selfintersections(cfg)]
    if all(k <= 9 for k in ks):
        return "(" + "".join(str(k) for k in ks) + ")"
    return "(" + ",".join(str(k) for k in ks) + ")"


def intersection_matrix(cfg: CycleConfig) -> tuple[tuple[int, ...], ...]:
    """Full pairwise intersection matrix in the stored curve order."""
    return tuple(
        tuple(intersect(a, b) for b in cfg.curves) for a in cfg.curves
    )


def canonical_numbering(cfg: CycleConfig) -> CycleConfig:
    """Relabel basis indices and rotate a partition-case cycle to the
    canonical head numbering alpha_0 = 0 < alpha_1 < ...

    The rotation puts the lexicographically smallest self-intersection
    sequence first (ties resolved by the earliest rotation); the output
    curves are exactly those of `from_selfintersections` on the rotated
    sequence, so the pairwise intersection matrix is preserved and the
    map is idempotent.

    Raises:
        NotPartitionCaseError: betti_check does not report PartitionCase.
    """
    verdict, _ = betti_check(cfg)
    if verdict is not CycleVerdict.PARTITION_CASE:
        raise NotPartitionCaseError(f"verdict is {verdict.value}")
    if cfg.s == 1:
        # value == n forces |I| = n - 1; relabel the support onto [1, n-1]
        support = list(range(1, cfg.n))
        return CycleConfig(cfg.n, (zero(cfg.n) - e_sum(support, cfg.n),), None)
    sq = selfintersections(cfg)
    s = cfg.s
    rotations = [tuple(sq[(r + i) % s] for i in range(s)) for r in range(s)]
    best = min(range(s), key=lambda r: rotations[r])
    ks = tuple(-v for v in rotations[best])
    return from_selfintersections(ks)
