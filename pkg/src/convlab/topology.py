"""Explicit finite topologies and the convergence/topology adjunction.

Open sets are carrier-subset bit-masks.  Synthesis of the sequential topology
of a convergence, topological limits, joins, and the space properties needed
for the diagram reports all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import Carrier, CarrierMismatchError, Element, EPSeq
from .convergence import (
    ClosureAxiomError,
    Convergence,
    SweepCapacityError,
    check_L1,
    check_L2,
    sos_union,
)
from .seqclass import InfClass, inf_class


class Topology:
    """A family of open carrier-subsets, closed under union and intersection."""

    def __init__(self, carrier: Carrier, opens: Iterable[int]):
        self.carrier = carrier
        self.full = (1 << carrier.size) - 1
        self.opens = frozenset(opens)
        if 0 not in self.opens or self.full not in self.opens:
            raise ValueError("a topology must contain the empty set and the carrier")
        self._min_nbhd: tuple[int, ...] | None = None

    @property
    def min_neighborhoods(self) -> tuple[int, ...]:
        """Smallest open set around each point (finite spaces always have one)."""
        if self._min_nbhd is None:
            m = self.carrier.size
            mins = [self.full] * m
            for o in self.opens:
                for p in range(m):
                    if o >> p & 1:
                        mins[p] &= o
            self._min_nbhd = tuple(mins)
        return self._min_nbhd

    def is_open(self, subset: Iterable[Element]) -> bool:
        return self.carrier.subset_mask(subset) in self.opens

    def closed_masks(self) -> frozenset[int]:
        return frozenset(self.full ^ o for o in self.opens)

    def open_families(self) -> list[frozenset[Element]]:
        """Opens as element sets, in canonical (ascending mask) order."""
        return [self.carrier.subset_from_mask(o) for o in sorted(self.opens)]

    def validate(self) -> bool:
        """Check closure under pairwise union and intersection (small families)."""
        for a in self.opens:
            for b in self.opens:
                if (a | b) not in self.opens or (a & b) not in self.opens:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return self.carrier == other.carrier and self.opens == other.opens

    def __hash__(self) -> int:
        return hash((self.carrier, self.opens))

    def __len__(self) -> int:
        return len(self.opens)

    def __repr__(self) -> str:
        return f"Topology(P({self.carrier.n}), {len(self.opens)} opens)"


def _check_same_carrier(a, b) -> None:
    if a.carrier != b.carrier:
        raise CarrierMismatchError("operands live on different carriers")


def discrete(carrier: Carrier) -> Topology:
    if carrier.size > 16:
        raise SweepCapacityError("discrete topology too large to materialize")
    return Topology(carrier, range(1 << carrier.size))


def antidiscrete(carrier: Carrier) -> Topology:
    return Topology(carrier, (0, (1 << carrier.size) - 1))


def generate(carrier: Carrier, subbase: Iterable[int]) -> Topology:
    """Smallest topology containing the subbase.

    Each point's minimal neighborhood is the intersection of the subbase sets
    containing it; the opens are exactly the unions of minimal neighborhoods.
    """
    if carrier.size > 16:
        raise SweepCapacityError("topology generation beyond 4 atoms is unsupported")
    m = carrier.size
    full = (1 << m) - 1
    subbase = list(subbase)
    mins = [full] * m
    for s in subbase:
        for p in range(m):
            if s >> p & 1:
                mins[p] &= s
    opens = {0}
    for b in sorted(set(mins)):
        opens |= {o | b for o in opens}
    opens.add(full)
    return Topology(carrier, opens)


def generate_from_elements(
    carrier: Carrier, subbase: Iterable[Iterable[Element]]
) -> Topology:
    return generate(carrier, [carrier.subset_mask(s) for s in subbase])


def sequential_closure(lam: Convergence, subset_mask: int) -> int:
    """One application of the closure operator: all limits of sequences from A."""
    m = lam.carrier.size
    u = sos_union(lam.table, m)
    return u[subset_mask]


def _closure_table(lam: Convergence) -> list[int]:
    return sos_union(lam.table, lam.carrier.size)


def synthesize_O_lambda(lam: Convergence, strategy: str = "auto") -> Topology:
    """The sequential topology of lam: opens are complements of the subsets
    fixed by the sequential-closure operator.

    strategy "brute" tests every carrier subset for fixedness; "closure"
    iterates point closures to fixed points and closes under union.  Both
    agree wherever both run (cross-validated in the test suite).
    """
    if not (check_L1(lam) and check_L2(lam)):
        raise ClosureAxiomError(
            "sequential topology requires a convergence satisfying (L1) and (L2)"
        )
    m = lam.carrier.size
    full = (1 << m) - 1
    u = _closure_table(lam)
    if strategy == "auto":
        strategy = "brute"
    if strategy == "brute":
        opens = [full ^ a for a in range(1 << m) if u[a] & ~a == 0]
        return Topology(lam.carrier, opens)
    if strategy == "closure":
        closures = []
        for p in range(m):
            a = 1 << p
            while True:
                nxt = a | u[a]
                if nxt == a:
                    break
                a = nxt
            closures.append(a)
        closed = {0}
        for c in sorted(set(closures)):
            closed |= {f | c for f in closed}
        closed.add(full)
        return Topology(lam.carrier, [full ^ f for f in closed])
    raise ValueError(f"unknown strategy {strategy!r}")


def lim_topo(o: Topology, x: EPSeq) -> frozenset[Element]:
    """Topological limits: points whose every neighborhood eventually absorbs x."""
    if x.width != o.carrier.n:
        raise CarrierMismatchError("sequence and topology on different carriers")
    return lim_topo_class(o, inf_class(x))


def lim_topo_class(o: Topology, s: InfClass) -> frozenset[Element]:
    smask = o.carrier.subset_mask(s.values)
    mins = o.min_neighborhoods
    return frozenset(
        o.carrier.elements[a]
        for a in range(o.carrier.size)
        if smask & ~mins[a] == 0
    )


def join_topologies(o1: Topology, o2: Topology) -> Topology:
    """Minimal topology containing both; generated by pairwise intersections."""
    _check_same_carrier(o1, o2)
    return generate(o1.carrier, list(o1.opens) + list(o2.opens))


def lim_of_topology_as_convergence(o: Topology) -> Convergence:
    """The adjoint direction: classes to their sets of topological limits."""
    m = o.carrier.size
    mins = o.min_neighborhoods
    table = [0] * (1 << m)
    for a in range(m):
        sub = mins[a]
        while True:
            table[sub] |= 1 << a
            if sub == 0:
                break
            sub = (sub - 1) & mins[a]
    table[0] = 0
    return Convergence(o.carrier, table=table, name="lim_O")


def is_sequential(o: Topology) -> bool:
    """O is sequential iff synthesizing from its own limit operator returns O."""
    return synthesize_O_lambda(lim_of_topology_as_convergence(o)) == o


def _up_closed_masks(carrier: Carrier) -> frozenset[int]:
    m = carrier.size
    result = []
    for a in range(1 << m):
        ok = True
        for p in range(m):
            if a >> p & 1 and carrier.up_masks[p] & ~a:
                ok = False
                break
        if ok:
            result.append(a)
    return frozenset(result)


def _down_closed_masks(carrier: Carrier) -> frozenset[int]:
    m = carrier.size
    result = []
    for a in range(1 << m):
        ok = True
        for p in range(m):
            if a >> p & 1 and carrier.down_masks[p] & ~a:
                ok = False
                break
        if ok:
            result.append(a)
    return frozenset(result)


def check_closed_char(o: Topology, direction: str = "up") -> bool:
    """Closed sets are exactly the upward-closed (resp. downward-closed) sets
    that also contain meets of decreasing chains drawn from them.

    On a finite carrier decreasing chains stabilize, so the chain clause is
    automatic; both the family equality and the chain clause are exercised.
    """
    from .algebra import meet as el_meet

    carrier = o.carrier
    closed = o.closed_masks()
    expected = _up_closed_masks(carrier) if direction == "up" else _down_closed_masks(carrier)
    if closed != expected:
        return False
    # chain clause: the meet of every 2-step decreasing chain stays inside
    for f in closed:
        members = [carrier.elements[p] for p in range(carrier.size) if f >> p & 1]
        for a in members:
            for b in members:
                if b.mask & a.mask == b.mask:  # b <= a: chain a, b, b, ...
                    if f >> el_meet(a, b).mask & 1 == 0:
                        return False
    return True


def complement_homeomorphism_check(o_ls: Topology, o_li: Topology) -> bool:
    """b -> b' maps the left topology's opens bijectively onto the right's."""
    _check_same_carrier(o_ls, o_li)
    m = o_ls.carrier.size
    top = m - 1

    def map_open(u: int) -> int:
        out = 0
        for p in range(m):
            if u >> p & 1:
                out |= 1 << (top ^ p)
        return out

    return frozenset(map_open(u) for u in o_ls.opens) == o_li.opens


@dataclass(frozen=True)
class SpaceProperties:
    t0: bool
    connected: bool
    compact: bool
    compact_note: str = "finite carrier"


def space_properties(o: Topology) -> SpaceProperties:
    m = o.carrier.size
    mins = o.min_neighborhoods
    t0 = len(set(mins)) == m
    full = o.full
    connected = not any(
        u != 0 and u != full and (full ^ u) in o.opens for u in o.opens
    )
    return SpaceProperties(t0=t0, connected=connected, compact=True)
