"""Finite Boolean algebra carrier P(n) and eventually periodic sequences.

Elements are bit-masks over atom indices, so meet/join/complement are plain
integer operations and the whole carrier fits in a tuple of 2^n values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

MAX_ATOMS = 5


class CarrierMismatchError(ValueError):
    """Operands belong to Boolean algebras with different atom counts."""


@dataclass(frozen=True)
class Element:
    """One element of P(n): a set of atom indices packed into ``mask``."""

    mask: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("element width must be at least 1")
        if not 0 <= self.mask < (1 << self.width):
            raise ValueError(f"mask {self.mask} out of range for width {self.width}")

    @property
    def atoms(self) -> frozenset[int]:
        return frozenset(i for i in range(self.width) if self.mask >> i & 1)

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.atoms)) + "}"


def _check_same(a: Element, b: Element) -> None:
    if a.width != b.width:
        raise CarrierMismatchError(f"widths differ: {a.width} vs {b.width}")


def meet(a: Element, b: Element) -> Element:
    _check_same(a, b)
    return Element(a.mask & b.mask, a.width)


def join(a: Element, b: Element) -> Element:
    _check_same(a, b)
    return Element(a.mask | b.mask, a.width)


def complement(a: Element) -> Element:
    return Element(a.mask ^ ((1 << a.width) - 1), a.width)


def leq(a: Element, b: Element) -> bool:
    _check_same(a, b)
    return a.mask & b.mask == a.mask


def upset(elements: Iterable[Element]) -> frozenset[Element]:
    """All carrier elements lying above some member of ``elements``."""
    elems = list(elements)
    if not elems:
        return frozenset()
    width = elems[0].width
    for e in elems:
        _check_same(elems[0], e)
    return frozenset(
        Element(m, width)
        for m in range(1 << width)
        if any(e.mask & m == e.mask for e in elems)
    )


def downset(elements: Iterable[Element]) -> frozenset[Element]:
    """All carrier elements lying below some member of ``elements``."""
    elems = list(elements)
    if not elems:
        return frozenset()
    width = elems[0].width
    for e in elems:
        _check_same(elems[0], e)
    return frozenset(
        Element(m, width)
        for m in range(1 << width)
        if any(e.mask & m == m for e in elems)
    )


class Carrier:
    """The algebra P(n) with its 2^n elements in ascending mask order."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_ATOMS:
            raise ValueError(f"atom count must be in 1..{MAX_ATOMS}, got {n}")
        self.n = n
        self.size = 1 << n
        self.elements: tuple[Element, ...] = tuple(
            Element(m, n) for m in range(self.size)
        )
        # up_masks[p] / down_masks[p]: carrier-subset masks of {q : q >= p} / {q : q <= p}
        self.up_masks = tuple(
            sum(1 << q for q in range(self.size) if q & p == p)
            for p in range(self.size)
        )
        self.down_masks = tuple(
            sum(1 << q for q in range(self.size) if q & p == q)
            for p in range(self.size)
        )

    @property
    def bottom(self) -> Element:
        return self.elements[0]

    @property
    def top(self) -> Element:
        return self.elements[-1]

    def element(self, atoms: Iterable[int]) -> Element:
        mask = 0
        for i in atoms:
            if not 0 <= i < self.n:
                raise ValueError(f"atom index {i} out of range for P({self.n})")
            mask |= 1 << i
        return self.elements[mask]

    def subset_mask(self, elems: Iterable[Element]) -> int:
        """Pack a set of elements into a carrier-subset bit-mask."""
        mask = 0
        for e in elems:
            if e.width != self.n:
                raise CarrierMismatchError(f"element width {e.width} != {self.n}")
            mask |= 1 << e.mask
        return mask

    def subset_from_mask(self, mask: int) -> frozenset[Element]:
        return frozenset(
            self.elements[p] for p in range(self.size) if mask >> p & 1
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Carrier) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("Carrier", self.n))

    def __repr__(self) -> str:
        return f"Carrier(P({self.n}))"


def _primitive_period(period: tuple[Element, ...]) -> tuple[Element, ...]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


def _least_rotation(period: tuple[Element, ...]) -> tuple[Element, ...]:
    rotations = [period[i:] + period[:i] for i in range(len(period))]
    return min(rotations, key=lambda r: tuple(e.mask for e in r))


@dataclass(frozen=True)
class EPSeq:
    """Eventually periodic sequence: finite preperiod then a repeating period.

    The period is stored in canonical form: shortest repeating block, rotated
    to its lexicographically least rotation.  Canonicalization preserves the
    set of infinitely occurring values, which is all any consumer depends on.
    """

    preperiod: tuple[Element, ...]
    period: tuple[Element, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        width = self.period[0].width
        for e in self.preperiod + self.period:
            if e.width != width:
                raise CarrierMismatchError("mixed-width entries in sequence")
        canon = _least_rotation(_primitive_period(tuple(self.period)))
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", canon)

    @property
    def width(self) -> int:
        return self.period[0].width

    def value_at(self, i: int) -> Element:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, length: int) -> list[Element]:
        return [self.value_at(i) for i in range(length)]


def liminf(x: EPSeq) -> Element:
    """Largest element below all but finitely many entries: meet of the period."""
    return reduce(meet, set(x.period))


def limsup(x: EPSeq) -> Element:
    """Smallest element above infinitely many entries: join of the period."""
    return reduce(join, set(x.period))


def pointwise_complement(x: EPSeq) -> EPSeq:
    return EPSeq(
        tuple(complement(e) for e in x.preperiod),
        tuple(complement(e) for e in x.period),
    )
