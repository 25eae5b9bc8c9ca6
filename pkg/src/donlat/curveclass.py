"""Recognition and composition of rational curve classes.

On a surface whose intersection lattice is diagonalized as in
:mod:`donlat.lattice`, the class of a smooth rational curve D satisfies
the adjunction constraint K.D + D.D + 2 = 0, which in coordinates reads

    sum_k (a_k^2 + a_k) = 2.

The integer solutions with the right positivity split into exactly two
shapes, with head index i never in the tail set I:

  * type A:  D = e_i - e_I      (one coefficient +1, the rest 0 or -1)
  * type B:  D = -2 e_i - e_I   (one coefficient -2, the rest 0 or -1)

Everything else is NonCurve and carries its genus defect
2 - sum_k (a_k^2 + a_k) for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    NotACurveError,
    NotAdjacentError,
    NotTypeAError,
    SchemaError,
    TwoTypeBError,
)
from .lattice import ClassVector, intersect

__all__ = [
    "CurveKind",
    "NonCurve",
    "TypeA",
    "TypeB",
    "classify",
    "compose_chain",
    "distinct_heads",
    "genus_defect",
    "is_nodal_cycle_class",
    "kind_from_json",
    "kind_to_json",
    "reconstruct",
]


@dataclass(frozen=True)
class TypeA:
    """Class e_head - e_tail of a smooth rational curve."""

    head: int
    tail: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", frozenset(self.tail))
        if self.head in self.tail:
            raise ValueError(f"head {self.head} may not lie in the tail")


@dataclass(frozen=True)
class TypeB:
    """Class -2 e_head - e_tail of a smooth rational curve."""

    head: int
    tail: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", frozenset(self.tail))
        if self.head in self.tail:
            raise ValueError(f"head {self.head} may not lie in the tail")


@dataclass(frozen=True)
class NonCurve:
    """Anything failing the rational-curve pattern; keeps the genus defect."""

    defect: int


CurveKind = Union[TypeA, TypeB, NonCurve]


def genus_defect(x: ClassVector) -> int:
    """2 - sum_k (a_k^2 + a_k); zero for every rational curve class."""
    return 2 - sum(a * a + a for a in x.coeffs)


def classify(x: ClassVector) -> CurveKind:
    """Decide the curve shape of a class.

    Returns TypeA(i, I) when exactly one coefficient is +1 and the rest
    lie in {0, -1}; TypeB(i, I) when exactly one coefficient is -2 and
    the rest lie in {0, -1}; otherwise NonCurve with the genus defect.
    """
    special = [(k, a) for k, a in enumerate(x.coeffs) if a not in (0, -1)]
    if len(special) == 1:
        k, a = special[0]
        tail = frozenset(j for j, c in enumerate(x.coeffs) if c == -1)
        if a == 1:
            return TypeA(k, tail)
        if a == -2:
            return TypeB(k, tail)
    return NonCurve(genus_defect(x))


def reconstruct(kind: CurveKind, n: int) -> ClassVector:
    """Inverse of classify for curve kinds: rebuild the coefficient vector."""
    if isinstance(kind, NonCurve):
        raise NotACurveError("cannot reconstruct a NonCurve")
    coeffs = [0] * n
    coeffs[kind.head] = 1 if isinstance(kind, TypeA) else -2
    for j in kind.tail:
        coeffs[j] = -1
    return ClassVector(tuple(coeffs))


def is_nodal_cycle_class(x: ClassVector) -> tuple[bool, frozenset[int] | None]:
    """Test for the -e_I shape of a rational curve with one node.

    Returns (ok, I) where ok holds iff every coefficient is 0 or -1 and
    x is nonzero; I is the set of -1 positions whenever all coefficients
    lie in {0, -1} (so the zero class yields (False, empty set)), and
    None when some coefficient falls outside that range.
    """
    if any(a not in (0, -1) for a in x.coeffs):
        return False, None
    support = frozenset(k for k, a in enumerate(x.coeffs) if a == -1)
    return bool(support), support


def compose_chain(a: ClassVector, b: ClassVector) -> CurveKind:
    """Merge two curve classes meeting transversally in one point.

    The sum of adjacent type A/B classes is again type A or type B, and
    it is type B as soon as one operand is (two type B classes can never
    meet exactly once, their pairing is always <= 0).

    Raises:
        NotACurveError: an operand is NonCurve.
        TwoTypeBError: both operands are type B.
        NotAdjacentError: intersect(a, b) != 1.
    """
    ka, kb = classify(a), classify(b)
    if isinstance(ka, NonCurve) or isinstance(kb, NonCurve):
        raise NotACurveError("chain composition needs two curve classes")
    if isinstance(ka, TypeB) and isinstance(kb, TypeB):
        raise TwoTypeBError("two -2-head classes never meet exactly once")
    if intersect(a, b) != 1:
        raise NotAdjacentError(f"intersection is {intersect(a, b)}, need 1")
    return classify(a + b)


def distinct_heads(a: ClassVector, b: ClassVector) -> bool:
    """Whether two type A classes have different head indices.

    Two type A classes sharing a head always pair negatively
    (intersect = -(1 + |tail overlap|)), so any pair meeting with
    intersection >= 0 necessarily reports True here.

    Raises:
        NotTypeAError: an operand is not of the e_i - e_I shape.
    """
    ka, kb = classify(a), classify(b)
    if not isinstance(ka, TypeA) or not isinstance(kb, TypeA):
        raise NotTypeAError("head comparison is defined for type A classes")
    return ka.head != kb.head


# --- JSON form ----------------------------------------------------------

def kind_to_json(kind: CurveKind) -> dict:
    """{"kind": "A"|"B", "i": head, "I": sorted tail} or {"kind": "none", "defect": d}."""
    if isinstance(kind, TypeA):
        return {"kind": "A", "i": kind.head, "I": sorted(kind.tail)}
    if isinstance(kind, TypeB):
        return {"kind": "B", "i": kind.head, "I": sorted(kind.tail)}
    return {"kind": "none", "defect": kind.defect}


def kind_from_json(data: object) -> CurveKind:
    if not isinstance(data, dict) or "kind" not in data:
        raise SchemaError(f"expected a curve-kind object, got {data!r}")
    tag = data["kind"]
    if tag == "none":
        defect = data.get("defect")
        if not isinstance(defect, int) or isinstance(defect, bool):
            raise SchemaError("non-curve kind needs an integer 'defect'")
        return NonCurve(defect)
    if tag in ("A", "B"):
        head, tail = data.get("i"), data.get("I")
        if not isinstance(head, int) or isinstance(head, bool):
            raise SchemaError("curve kind needs an integer head 'i'")
        if not isinstance(tail, list) or any(
            not isinstance(j, int) or isinstance(j, bool) for j in tail
        ):
            raise SchemaError("curve kind needs an integer array tail 'I'")
        cls = TypeA if tag == "A" else TypeB
        return cls(head, frozenset(tail))
    raise SchemaError(f"unknown curve kind tag {tag!r}")
