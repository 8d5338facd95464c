"""Convergence structures on a finite Boolean algebra.

A convergence is represented extensionally as a total map from
infinite-occurrence classes to sets of candidate limits.  Internally both are
bit-masks over the carrier enumeration, so the exhaustive sweeps over all
2^(2^n) - 1 classes reduce to integer transforms.
"""

from __future__ import annotations

import warnings
from typing import Callable, Optional

from .algebra import Carrier, CarrierMismatchError, Element
from .seqclass import InfClass, class_from_mask, class_mask


class SweepCapacityError(RuntimeError):
    """An exhaustive class sweep was requested on a carrier too large to enumerate."""


class ClosureAxiomError(ValueError):
    """A convergence violates the (L1)/(L2) precondition of the operation."""


def _require_table_capacity(carrier: Carrier) -> None:
    if carrier.size > 16:
        raise SweepCapacityError(
            f"carrier P({carrier.n}) has 2^{carrier.size} - 1 classes; "
            "exhaustive enumeration is only supported for up to 4 atoms"
        )


def sos_union(table: list[int], m: int) -> list[int]:
    """Subset transform: out[A] = union of table[S] over all S contained in A."""
    out = list(table)
    for e in range(m):
        bit = 1 << e
        for a in range(1 << m):
            if a & bit:
                out[a] |= out[a ^ bit]
    return out


def sos_intersection_nonempty(table: list[int], m: int) -> list[int]:
    """out[A] = intersection of table[S] over all nonempty S contained in A."""
    full = (1 << m) - 1
    out = list(table)
    out[0] = full
    for e in range(m):
        bit = 1 << e
        for a in range(1 << m):
            if a & bit:
                out[a] &= out[a ^ bit]
    return out


class Convergence:
    """A total map from infinite-occurrence classes to sets of limits."""

    def __init__(
        self,
        carrier: Carrier,
        rule: Optional[Callable[[InfClass], frozenset[Element]]] = None,
        table: Optional[list[int]] = None,
        name: str = "",
    ):
        if rule is None and table is None:
            raise ValueError("either a rule or a table is required")
        self.carrier = carrier
        self.name = name
        self._rule = rule
        self._table = table
        self._memo: dict[int, int] = {}

    @property
    def table(self) -> list[int]:
        """Full limit-set table indexed by class mask (entry 0 unused)."""
        if self._table is None:
            _require_table_capacity(self.carrier)
            assert self._rule is not None
            built = [0] * (1 << self.carrier.size)
            for mask in range(1, 1 << self.carrier.size):
                built[mask] = self.limit_mask(mask)
            self._table = built
        return self._table

    def limit_mask(self, mask: int) -> int:
        if self._table is not None:
            return self._table[mask]
        if mask in self._memo:
            return self._memo[mask]
        assert self._rule is not None
        s = class_from_mask(self.carrier, mask)
        value = self.carrier.subset_mask(self._rule(s))
        self._memo[mask] = value
        return value

    def __call__(self, s: InfClass) -> frozenset[Element]:
        if s.width != self.carrier.n:
            raise CarrierMismatchError(
                f"class over P({s.width}) fed to convergence on P({self.carrier.n})"
            )
        return self.carrier.subset_from_mask(self.limit_mask(class_mask(self.carrier, s)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Convergence):
            return NotImplemented
        return self.carrier == other.carrier and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.carrier, tuple(self.table)))

    def __repr__(self) -> str:
        return f"Convergence({self.name or 'anonymous'}, P({self.carrier.n}))"


def _sup_table(carrier: Carrier) -> list[int]:
    """sup[S] = element mask of the join of the class with characteristic mask S."""
    m = carrier.size
    sup = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        sup[s] = sup[s ^ low] | (low.bit_length() - 1)
    return sup


def _inf_table(carrier: Carrier) -> list[int]:
    m = carrier.size
    inf = [m - 1] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        prev = inf[s ^ low] if s ^ low else m - 1
        inf[s] = prev & (low.bit_length() - 1)
    return inf


def lambda_ls(carrier: Carrier) -> Convergence:
    """Limits are everything above the limsup: upset of the join of the class."""
    from .algebra import join as el_join, upset

    def rule(s: InfClass) -> frozenset[Element]:
        top = carrier.bottom
        for v in s.values:
            top = el_join(top, v)
        return upset([top])

    if carrier.size <= 16:
        sup = _sup_table(carrier)
        table = [0] * (1 << carrier.size)
        for s in range(1, 1 << carrier.size):
            table[s] = carrier.up_masks[sup[s]]
        return Convergence(carrier, rule=rule, table=table, name="lambda_ls")
    return Convergence(carrier, rule=rule, name="lambda_ls")


def lambda_li(carrier: Carrier) -> Convergence:
    """Limits are everything below the liminf: downset of the meet of the class."""
    from .algebra import downset, meet as el_meet

    def rule(s: InfClass) -> frozenset[Element]:
        bot = carrier.top
        for v in s.values:
            bot = el_meet(bot, v)
        return downset([bot])

    if carrier.size <= 16:
        inf = _inf_table(carrier)
        table = [0] * (1 << carrier.size)
        for s in range(1, 1 << carrier.size):
            table[s] = carrier.down_masks[inf[s]]
        return Convergence(carrier, rule=rule, table=table, name="lambda_li")
    return Convergence(carrier, rule=rule, name="lambda_li")


def lambda_s(carrier: Carrier) -> Convergence:
    """The unique limit when liminf and limsup coincide, no limit otherwise."""

    def rule(s: InfClass) -> frozenset[Element]:
        if len(s.values) == 1:
            return frozenset(s.values)
        return frozenset()

    if carrier.size <= 16:
        table = [0] * (1 << carrier.size)
        for s in range(1, 1 << carrier.size):
            if s & (s - 1) == 0:
                table[s] = 1 << (s.bit_length() - 1)
        return Convergence(carrier, rule=rule, table=table, name="lambda_s")
    return Convergence(carrier, rule=rule, name="lambda_s")


def _check_same_carrier(a: Convergence, b: Convergence) -> None:
    if a.carrier != b.carrier:
        raise CarrierMismatchError("convergences live on different carriers")


def meet_conv(a: Convergence, b: Convergence) -> Convergence:
    """Pointwise intersection of limit sets."""
    _check_same_carrier(a, b)
    table = [x & y for x, y in zip(a.table, b.table)]
    name = f"({a.name} & {b.name})" if a.name and b.name else ""
    return Convergence(a.carrier, table=table, name=name)


def leq_conv(a: Convergence, b: Convergence) -> bool:
    """a <= b iff a's limit set is contained in b's on every class."""
    _check_same_carrier(a, b)
    return all(x & ~y == 0 for x, y in zip(a.table, b.table))


def check_L1(lam: Convergence) -> bool:
    """Constant sequences converge to their value."""
    return all(
        lam.limit_mask(1 << a) >> a & 1 for a in range(lam.carrier.size)
    )


def check_L2(lam: Convergence) -> bool:
    """Subsequences inherit limits: lam(S) contained in lam(S') for S' subset of S.

    Single-element removals suffice; chains of removals reach every subset.
    """
    t = lam.table
    m = lam.carrier.size
    for s in range(1, 1 << m):
        if s & (s - 1) == 0:
            continue
        rest = s
        while rest:
            bit = rest & -rest
            rest ^= bit
            if t[s] & ~t[s ^ bit]:
                return False
    return True


def star(lam: Convergence, warn: bool = True) -> Convergence:
    """Least extension closed under (L1)-(L3).

    On classes the double subsequence quantifier becomes: intersect over
    nonempty S' of S, the union over nonempty S'' of S' of lam(S'').
    """
    if warn and not (check_L1(lam) and check_L2(lam)):
        warnings.warn(
            "star-closure applied to a convergence violating (L1)/(L2)",
            stacklevel=2,
        )
    m = lam.carrier.size
    inner = sos_union(lam.table, m)
    outer = sos_intersection_nonempty(inner, m)
    outer[0] = 0
    return Convergence(lam.carrier, table=outer, name=f"star({lam.name})")


def check_L3(lam: Convergence) -> bool:
    """The Urysohn condition: if every subsequence has a further subsequence
    converging to a, then a is already a limit of the original sequence."""
    m = lam.carrier.size
    inner = sos_union(lam.table, m)
    outer = sos_intersection_nonempty(inner, m)
    t = lam.table
    return all(outer[s] & ~t[s] == 0 for s in range(1, 1 << m))


def is_hausdorff(lam: Convergence) -> bool:
    """At most one limit per class."""
    return all(v & (v - 1) == 0 for v in lam.table)


def hbar_witness(s: InfClass) -> InfClass:
    """Subclass all of whose subclasses share its limsup: the least singleton."""
    least = min(s.values, key=lambda e: e.mask)
    return InfClass(frozenset([least]))


def check_hbar(carrier: Carrier) -> bool:
    """Every class has a subclass on which the limsup is subsequence-stable.

    Candidates are scanned in characteristic-mask order; the first singleton
    always works on a finite carrier, so the scan is cheap but honest.
    """
    _require_table_capacity(carrier)
    m = carrier.size
    sup = _sup_table(carrier)
    for s in range(1, 1 << m):
        found = False
        cand = s & -s  # subsets of s in ascending mask order, starting at the least
        while True:
            # check all nonempty subsets of cand share its join
            target = sup[cand]
            t = cand
            ok = True
            while t:
                if sup[t] != target:
                    ok = False
                    break
                t = (t - 1) & cand
            if ok:
                found = True
                break
            # next nonempty subset of s in ascending order
            cand += 1
            while cand <= s and cand & s != cand:
                cand += 1
            if cand > s:
                break
        if not found:
            return False
    return True
