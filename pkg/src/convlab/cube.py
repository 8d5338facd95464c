"""Coordinatewise limits on the power set of the naturals.

Elements are finite or cofinite subsets of the naturals, so every set is
described by a finite support.  The three cube topologies (half-open
coordinates, reversed half-open coordinates, discrete coordinates) are never
materialized; their limit predicates are evaluated coordinatewise over the
finitely many exceptional coordinates plus one representative generic one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional


@dataclass(frozen=True)
class FCSet:
    """A finite or cofinite subset of the naturals.

    ``support`` is the set itself when finite, its complement when cofinite;
    the representation is canonical by construction.
    """

    cofinite: bool
    support: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", frozenset(self.support))
        if any(i < 0 for i in self.support):
            raise ValueError("supports are sets of naturals")

    def contains(self, i: int) -> bool:
        return (i in self.support) != self.cofinite

    def __repr__(self) -> str:
        inner = ",".join(str(i) for i in sorted(self.support))
        return f"~{{{inner}}}" if self.cofinite else f"{{{inner}}}"


def fc_finite(items: Iterable[int]) -> FCSet:
    return FCSet(False, frozenset(items))


def fc_cofinite(excluded: Iterable[int]) -> FCSet:
    return FCSet(True, frozenset(excluded))


FC_EMPTY = fc_finite(())
FC_FULL = fc_cofinite(())


def fc_complement(a: FCSet) -> FCSet:
    return FCSet(not a.cofinite, a.support)


def fc_union(a: FCSet, b: FCSet) -> FCSet:
    if a.cofinite and b.cofinite:
        return FCSet(True, a.support & b.support)
    if a.cofinite:
        return FCSet(True, a.support - b.support)
    if b.cofinite:
        return FCSet(True, b.support - a.support)
    return FCSet(False, a.support | b.support)


def fc_intersection(a: FCSet, b: FCSet) -> FCSet:
    return fc_complement(fc_union(fc_complement(a), fc_complement(b)))


def fc_difference(a: FCSet, b: FCSet) -> FCSet:
    return fc_intersection(a, fc_complement(b))


def _least_rotation(period: tuple[FCSet, ...]) -> tuple[FCSet, ...]:
    def key(r: tuple[FCSet, ...]):
        return tuple((s.cofinite, tuple(sorted(s.support))) for s in r)

    return min((period[i:] + period[:i] for i in range(len(period))), key=key)


def _primitive(period: tuple[FCSet, ...]) -> tuple[FCSet, ...]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            return period[:d]
    return period


@dataclass(frozen=True)
class FCSeq:
    """Eventually periodic sequence of finite/cofinite sets."""

    preperiod: tuple[FCSet, ...]
    period: tuple[FCSet, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", _least_rotation(_primitive(tuple(self.period))))

    def value_at(self, i: int) -> FCSet:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]


def fc_liminf(x: FCSeq) -> FCSet:
    """Points belonging to all but finitely many entries."""
    out = FC_FULL
    for v in set(x.period):
        out = fc_intersection(out, v)
    return out


def fc_limsup(x: FCSeq) -> FCSet:
    """Points belonging to infinitely many entries."""
    out = FC_EMPTY
    for v in set(x.period):
        out = fc_union(out, v)
    return out


def _window(x: FCSeq, extra: Iterable[FCSet] = ()) -> tuple[list[int], int]:
    """Exceptional coordinates: supports of everything in sight, plus one
    representative generic coordinate beyond them."""
    coords: set[int] = set()
    for v in list(x.preperiod) + list(x.period) + list(extra):
        coords |= v.support
    generic = (max(coords) + 1) if coords else 0
    return sorted(coords), generic


def lim_alexandrov(x: FCSeq) -> Callable[[FCSet], bool]:
    """Limit predicate for the cube whose coordinates have only {0} as a
    proper neighborhood: a coordinate at 0 in the candidate forces the
    sequence's coordinate to 0 eventually; a coordinate at 1 is unconstrained.
    """
    vals = list(set(x.period))

    def holds(a: FCSet) -> bool:
        coords, generic = _window(x, [a])
        for i in coords + [generic]:
            if not a.contains(i) and any(v.contains(i) for v in vals):
                return False
        return True

    return holds


def lim_alexandrov_dual(x: FCSeq) -> Callable[[FCSet], bool]:
    """Dual cube ({1} is the proper neighborhood): a coordinate at 1 in the
    candidate forces the sequence's coordinate to 1 eventually."""
    vals = list(set(x.period))

    def holds(a: FCSet) -> bool:
        coords, generic = _window(x, [a])
        for i in coords + [generic]:
            if a.contains(i) and not all(v.contains(i) for v in vals):
                return False
        return True

    return holds


def lim_cantor(x: FCSeq) -> Optional[FCSet]:
    """Limit in the cube with discrete coordinates: every coordinate must be
    eventually constant; the limit is that coordinatewise value."""
    vals = list(set(x.period))
    coords, generic = _window(x)
    for i in coords + [generic]:
        flags = {v.contains(i) for v in vals}
        if len(flags) > 1:
            return None
    out = fc_limsup(x)
    return out


def candidate_limits(x: FCSeq, rng, count: int = 8) -> list[FCSet]:
    """A candidate pool for predicate sweeps: structured candidates derived
    from the sequence plus seeded random finite/cofinite sets in its window."""
    li, ls = fc_liminf(x), fc_limsup(x)
    coords, generic = _window(x)
    pool = [li, ls, fc_complement(li), fc_complement(ls), FC_EMPTY, FC_FULL]
    universe = coords + [generic]
    for _ in range(count):
        support = frozenset(i for i in universe if rng.random() < 0.5)
        pool.append(FCSet(rng.random() < 0.5, support))
    return pool


def check_T1235a(sample: list[FCSeq], rng) -> bool:
    """The conjunction of the two half-open cube predicates characterizes
    exactly the discrete-cube limit, over a candidate pool per sequence."""
    for x in sample:
        alex = lim_alexandrov(x)
        dual = lim_alexandrov_dual(x)
        cantor = lim_cantor(x)
        for a in candidate_limits(x, rng):
            both = alex(a) and dual(a)
            if both != (cantor is not None and cantor == a):
                return False
    return True
