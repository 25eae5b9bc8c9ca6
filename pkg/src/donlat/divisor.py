"""Maximal divisors: a cycle of rational curves plus attached chains.

A maximal divisor D = C + A consists of a cycle C and a finite set of
trees A.  In this shape every tree is a chain of type A curves whose
first curve meets exactly one curve of the cycle exactly once, and
distinct trees hang off distinct cycle curves.

Accepting a configuration replays the index bookkeeping that pins down
the class of D: starting from the support I_C of the cycle class
(C = -e_{I_C}), each tree curve e_a - e_T consumes its head from the
running support and contributes its tail,

    support <- (support - {a}) | T,

legal only while a is in the support, T is disjoint from it, and the
curve meets the union built so far in exactly one point.  After the
last of the q tree curves the divisor class is -e_support and the
arithmetic genus of the whole configuration is still 1 (the cycle's
loop survives, trees add nothing).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .curveclass import NonCurve, TypeA, TypeB, classify, is_nodal_cycle_class
from .cycle import (
    CycleConfig,
    Violation,
    cycle_class,
    validate_cycle,
)
from .errors import (
    InvalidDivisorError,
    NonCurveComponentError,
    NotDisjointError,
    NotLemmaFormError,
    NotNodalFormError,
    NotTreeShapedError,
    SchemaError,
)
from .lattice import ClassVector, e_sum, intersect, square, zero

__all__ = [
    "DivisorReport",
    "MaximalDivisorConfig",
    "SecondComponentResult",
    "SecondComponentVerdict",
    "TreeConfig",
    "arithmetic_genus",
    "second_component_check",
    "simply_connected_class",
    "total_class",
    "validate_maximal_divisor",
]


@dataclass(frozen=True)
class TreeConfig:
    """One chain of curves; the first entry is the one meeting the cycle.

    `attach` is the position (index into the cycle's curve tuple) of the
    cycle curve the chain hangs from.
    """

    chain: tuple[ClassVector, ...]
    attach: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", tuple(self.chain))

    def to_json(self) -> dict:
        return {"chain": [c.to_json() for c in self.chain], "attach": self.attach}

    @classmethod
    def from_json(cls, data: object) -> "TreeConfig":
        if not isinstance(data, dict):
            raise SchemaError(f"expected a tree object, got {data!r}")
        raw = data.get("chain")
        if not isinstance(raw, list) or not raw:
            raise SchemaError("tree needs a non-empty 'chain' array")
        attach = data.get("attach")
        if not isinstance(attach, int) or isinstance(attach, bool):
            raise SchemaError("tree needs an integer 'attach'")
        return cls(tuple(ClassVector.from_json(c) for c in raw), attach)


@dataclass(frozen=True)
class MaximalDivisorConfig:
    cycle: CycleConfig
    trees: tuple[TreeConfig, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "trees", tuple(self.trees))

    def all_curves(self) -> tuple[ClassVector, ...]:
        """Cycle curves first, then each tree root to leaf."""
        out = list(self.cycle.curves)
        for tree in self.trees:
            out.extend(tree.chain)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "cycle": self.cycle.to_json(),
            "trees": [t.to_json() for t in self.trees],
        }

    @classmethod
    def from_json(cls, data: object) -> "MaximalDivisorConfig":
        if not isinstance(data, dict) or "cycle" not in data:
            raise SchemaError(f"expected a divisor object with 'cycle', got {data!r}")
        trees = data.get("trees", [])
        if not isinstance(trees, list):
            raise SchemaError("'trees' must be an array")
        return cls(
            CycleConfig.from_json(data["cycle"]),
            tuple(TreeConfig.from_json(t) for t in trees),
        )


@dataclass(frozen=True)
class DivisorReport:
    violations: tuple[Violation, ...] = ()
    trace: tuple[frozenset[int], ...] = ()
    total: ClassVector | None = None
    support: frozenset[int] | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> tuple[str, ...]:
        return tuple(v.code for v in self.violations)


def validate_maximal_divisor(cfg: MaximalDivisorConfig) -> DivisorReport:
    """Check the full divisor shape and replay the support bookkeeping.

    Violations are collected, never raised.  Tree processing order is
    derived internally (trees sorted by attachment position, each chain
    root to leaf), so acceptance and the final support never depend on
    the order trees are listed.
    """
    bad: list[Violation] = list(validate_cycle(cfg.cycle).violations)
    n = cfg.cycle.n

    for t_idx, tree in enumerate(cfg.trees):
        for c_idx, c in enumerate(tree.chain):
            if c.n != n:
                bad.append(
                    Violation(
                        "rank-mismatch",
                        f"tree {t_idx} curve {c_idx} has rank {c.n}, config says {n}",
                    )
                )
    if bad:
        return DivisorReport(tuple(bad))

    s = cfg.cycle.s
    seen_attach: dict[int, int] = {}
    for t_idx, tree in enumerate(cfg.trees):
        if not 0 <= tree.attach < s:
            bad.append(
                Violation(
                    "attach-out-of-range",
                    f"tree {t_idx} attaches at position {tree.attach}, cycle has {s} curves",
                )
            )
            continue
        if tree.attach in seen_attach:
            bad.append(
                Violation(
                    "shared-attachment",
                    f"trees {seen_attach[tree.attach]} and {t_idx} both attach to cycle curve "
                    f"{tree.attach}; trees must meet pairwise distinct cycle curves",
                )
            )
        else:
            seen_attach[tree.attach] = t_idx

    for t_idx, tree in enumerate(cfg.trees):
        for c_idx, c in enumerate(tree.chain):
            if not isinstance(classify(c), TypeA):
                bad.append(
                    Violation(
                        "tree-curve-not-type-a",
                        f"tree {t_idx} curve {c_idx} is not of the e_i - e_I shape; "
                        "only the cycle may carry a -2 head",
                    )
                )
        m = len(tree.chain)
        for i in range(m):
            for j in range(i + 1, m):
                got = intersect(tree.chain[i], tree.chain[j])
                want = 1 if j == i + 1 else 0
                if got != want:
                    bad.append(
                        Violation(
                            "tree-not-chain",
                            f"tree {t_idx} curves {i},{j} meet {got} times, need {want}; "
                            "trees must be chains",
                        )
                    )
        if 0 <= tree.attach < s:
            for c_idx, c in enumerate(tree.chain):
                hits = [
                    (pos, intersect(c, cc))
                    for pos, cc in enumerate(cfg.cycle.curves)
                    if intersect(c, cc) != 0
                ]
                if c_idx == 0:
                    if hits != [(tree.attach, 1)]:
                        bad.append(
                            Violation(
                                "tree-attach-mismatch",
                                f"tree {t_idx} root meets cycle at {hits}, "
                                f"need exactly one point on curve {tree.attach}",
                            )
                        )
                elif hits:
                    bad.append(
                        Violation(
                            "tree-interior-meets-cycle",
                            f"tree {t_idx} curve {c_idx} meets the cycle at {hits}",
                        )
                    )

    for a_idx in range(len(cfg.trees)):
        for b_idx in range(a_idx + 1, len(cfg.trees)):
            for i, ca in enumerate(cfg.trees[a_idx].chain):
                for j, cb in enumerate(cfg.trees[b_idx].chain):
                    if intersect(ca, cb) != 0:
                        bad.append(
                            Violation(
                                "trees-overlap",
                                f"tree {a_idx} curve {i} meets tree {b_idx} curve {j}",
                            )
                        )

    if bad:
        return DivisorReport(tuple(bad))

    # structural shape holds; replay the support updates
    try:
        _, support = cycle_class(cfg.cycle)
    except NotNodalFormError:
        bad.append(
            Violation(
                "cycle-class-not-nodal",
                "cycle class has a coefficient outside {0,-1}; no support to update",
            )
        )
        return DivisorReport(tuple(bad))

    trace = [support]
    union: list[ClassVector] = list(cfg.cycle.curves)
    for tree in sorted(cfg.trees, key=lambda t: t.attach):
        for c_idx, c in enumerate(tree.chain):
            kind = classify(c)
            assert isinstance(kind, TypeA)  # guaranteed by the checks above
            step = f"tree at {tree.attach} curve {c_idx}"
            meets = sum(intersect(c, u) for u in union)
            if meets != 1:
                bad.append(
                    Violation(
                        "meets-union-not-once",
                        f"{step} meets the growing union {meets} times, need 1",
                    )
                )
            if kind.head not in support:
                bad.append(
                    Violation(
                        "head-not-in-support",
                        f"{step}: head {kind.head} not in running support {sorted(support)}",
                    )
                )
            if kind.tail & support:
                bad.append(
                    Violation(
                        "tail-overlaps-support",
                        f"{step}: tail {sorted(kind.tail)} overlaps running support "
                        f"{sorted(support)}",
                    )
                )
            if bad:
                return DivisorReport(tuple(bad), tuple(trace))
            support = (support - {kind.head}) | kind.tail
            trace.append(support)
            union.append(c)

    total = zero(n)
    for c in union:
        total = total + c
    expected = zero(n) - e_sum(support, n)
    if total != expected:
        bad.append(
            Violation(
                "total-class-mismatch",
                f"divisor class {list(total.coeffs)} differs from -e_support "
                f"{list(expected.coeffs)}",
            )
        )
        return DivisorReport(tuple(bad), tuple(trace))
    return DivisorReport((), tuple(trace), total, frozenset(support))


class TotalClass(NamedTuple):
    vector: ClassVector
    support: frozenset[int]


def total_class(cfg: MaximalDivisorConfig) -> TotalClass:
    """Class of the whole divisor, -e_support.

    Raises:
        InvalidDivisorError: validation fails; the report rides along.
    """
    report = validate_maximal_divisor(cfg)
    if not report.ok:
        raise InvalidDivisorError(
            "; ".join(v.message for v in report.violations), report
        )
    assert report.total is not None and report.support is not None
    return TotalClass(report.total, report.support)


def arithmetic_genus(curves: Sequence[ClassVector]) -> int:
    """Arithmetic genus 1 + (K.D + D.D)/2 of a reduced divisor D.

    K is never materialized: adjunction gives K.D_i = -D_i.D_i - 2 for a
    smooth rational component, while a component of the -e_I shape is
    the rational curve with one node (genus 1), for which
    K.D_i = -D_i.D_i.  Cycles come out as 1, chains as 0.

    Raises:
        NonCurveComponentError: a component fits neither shape.
    """
    if not curves:
        raise NonCurveComponentError("empty divisor has no genus")
    adjunction = 0
    total = zero(curves[0].n)
    for c in curves:
        kind = classify(c)
        if isinstance(kind, (TypeA, TypeB)):
            adjunction += -square(c) - 2
        else:
            nodal, _ = is_nodal_cycle_class(c)
            if not nodal:
                raise NonCurveComponentError(
                    f"component {list(c.coeffs)} is neither a curve class nor -e_I"
                )
            adjunction += -square(c)
        total = total + c
    value = adjunction + square(total)
    # value = -2 (#smooth components) + 2 (#pairwise meetings), always even
    return 1 + value // 2


def _pairwise_graph(curves: Sequence[ClassVector]) -> list[list[int]]:
    """Symmetric matrix of pairwise intersection numbers.

    Raises:
        NotTreeShapedError: some distinct pair meets negatively (the
            classes cannot be distinct curves on one surface).
    """
    m = len(curves)
    mat = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            got = intersect(curves[i], curves[j])
            if got < 0:
                raise NotTreeShapedError(
                    f"components {i} and {j} meet {got} times; "
                    "distinct curves never pair negatively"
                )
            mat[i][j] = mat[j][i] = got
    return mat


def _components(mat: list[list[int]]) -> list[list[int]]:
    m = len(mat)
    seen: set[int] = set()
    out: list[list[int]] = []
    for start in range(m):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(m):
                if w not in seen and mat[v][w] > 0:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def simply_connected_class(curves: Sequence[ClassVector]) -> tuple[int, frozenset[int]]:
    """Class sum e_k - e_K of a connected, tree-shaped configuration.

    Raises:
        NotTreeShapedError: disconnected, or the dual graph (edge
            multiplicity = intersection number) contains a cycle.
        NotLemmaFormError: the sum is not of the e_k - e_K shape.
    """
    if not curves:
        raise NotTreeShapedError("empty configuration")
    mat = _pairwise_graph(curves)
    m = len(curves)
    if len(_components(mat)) != 1:
        raise NotTreeShapedError("configuration is disconnected")
    edge_load = sum(mat[i][j] for i in range(m) for j in range(i + 1, m))
    if edge_load != m - 1:
        raise NotTreeShapedError(
            f"dual graph carries {edge_load} meeting points over {m} curves; "
            "a tree needs exactly one fewer"
        )
    total = zero(curves[0].n)
    for c in curves:
        total = total + c
    ones = [k for k, a in enumerate(total.coeffs) if a == 1]
    if len(ones) != 1 or any(a not in (-1, 0, 1) for a in total.coeffs):
        raise NotLemmaFormError(
            f"sum {list(total.coeffs)} is not of the e_k - e_K shape"
        )
    k = ones[0]
    return k, frozenset(j for j, a in enumerate(total.coeffs) if a == -1)


class SecondComponentVerdict(Enum):
    NO_SECOND_COMPONENT = "NoSecondComponent"
    TWO_CYCLES = "TwoCycles"
    CONTRADICTION = "Contradiction"
    TREE_CONSTRAINTS_HOLD = "TreeConstraintsHold"


@dataclass(frozen=True)
class SecondComponentResult:
    verdict: SecondComponentVerdict
    notes: tuple[str, ...] = ()
    tree_conflict: bool = False


def second_component_check(
    divisor: MaximalDivisorConfig, other: Sequence[ClassVector]
) -> SecondComponentResult:
    """Decide what a hypothetical second curve component can look like.

    Given a valid maximal divisor D (cycle C + trees A) and the curves
    of a candidate configuration disjoint from D:

      * empty            -> NoSecondComponent.
      * contains a cycle -> TwoCycles; if D also carries trees that is
        flagged, since with two cycles no trees may remain.
      * forest           -> every connected component must sum to
        e_k - e_K with k in I_C (the cycle's support) and exactly one
        element of K in I_C; any failure is a Contradiction, otherwise
        TreeConstraintsHold (ruling these out as well takes deformation
        arguments beyond this bookkeeping).

    Raises:
        InvalidDivisorError: the divisor itself does not validate.
        NotDisjointError: some candidate curve meets the divisor class.
        NonCurveComponentError: a candidate fits no curve shape.
    """
    vector, _ = total_class(divisor)
    _, cycle_support = cycle_class(divisor.cycle)
    if not other:
        return SecondComponentResult(SecondComponentVerdict.NO_SECOND_COMPONENT)

    nodal_flags: list[bool] = []
    for idx, c in enumerate(other):
        if intersect(vector, c) != 0:
            raise NotDisjointError(
                f"candidate curve {idx} meets the divisor "
                f"({intersect(vector, c)} points)"
            )
        kind = classify(c)
        if isinstance(kind, (TypeA, TypeB)):
            nodal_flags.append(False)
        else:
            nodal, _ = is_nodal_cycle_class(c)
            if not nodal:
                raise NonCurveComponentError(
                    f"candidate {list(c.coeffs)} is neither a curve class nor -e_I"
                )
            nodal_flags.append(True)

    mat = _pairwise_graph(other)
    comps = _components(mat)
    has_cycle = any(nodal_flags) or any(
        sum(mat[i][j] for i in comp for j in comp if i < j) >= len(comp)
        for comp in comps
    )
    if has_cycle:
        notes = []
        conflict = bool(divisor.trees)
        if conflict:
            notes.append(
                "second cycle found while the divisor carries trees; "
                "with two cycles the tree part must be empty"
            )
        return SecondComponentResult(
            SecondComponentVerdict.TWO_CYCLES, tuple(notes), conflict
        )

    notes = []
    failed = False
    for comp in comps:
        try:
            k, tail = simply_connected_class([other[i] for i in comp])
        except NotLemmaFormError as exc:
            notes.append(f"component {comp}: {exc}")
            failed = True
            continue
        if k not in cycle_support:
            notes.append(
                f"component {comp}: head {k} lies outside the cycle support "
                f"{sorted(cycle_support)}"
            )
            failed = True
        overlap = tail & cycle_support
        if len(overlap) != 1:
            notes.append(
                f"component {comp}: tail meets the cycle support in "
                f"{sorted(overlap)}, need exactly one index"
            )
            failed = True
    if failed:
        return SecondComponentResult(
            SecondComponentVerdict.CONTRADICTION, tuple(notes)
        )
    return SecondComponentResult(
        SecondComponentVerdict.TREE_CONSTRAINTS_HOLD, tuple(notes)
    )
