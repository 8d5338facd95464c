"""The exhaustive verification suite driven by ``convlab verify``.

Each criterion is a function returning (passed, detail); the runner prints
one line per criterion in fixed order.  Expected counts come from independent
brute-force enumerators kept deliberately separate from the code paths they
check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .algebra import Carrier, EPSeq
from .convergence import (
    Convergence,
    check_hbar,
    check_L1,
    check_L2,
    hbar_witness,
    is_hausdorff,
    lambda_li,
    lambda_ls,
    lambda_s,
    leq_conv,
    meet_conv,
    star,
)
from .cube import FCSeq, FCSet, candidate_limits, check_T1235a, fc_limsup, lim_alexandrov, lim_cantor
from .seqclass import class_from_mask, inf_class
from .submeasure import Submeasure, metric_topology, validate_submeasure
from .topology import (
    Topology,
    complement_homeomorphism_check,
    check_closed_char,
    join_topologies,
    lim_of_topology_as_convergence,
    lim_topo,
    space_properties,
    synthesize_O_lambda,
)


@dataclass
class VerifyContext:
    atoms: int
    seed: int = 0
    samples: int = 1000
    submeasure_path: Optional[str] = None
    _cache: dict = field(default_factory=dict)

    def carrier(self, n: int) -> Carrier:
        return self._get(("carrier", n), lambda: Carrier(n))

    def conv(self, name: str, n: int) -> Convergence:
        builders = {"ls": lambda_ls, "li": lambda_li, "s": lambda_s}
        return self._get((name, n), lambda: builders[name](self.carrier(n)))

    def topo(self, name: str, n: int) -> Topology:
        if name == "lsi":
            return self._get(
                ("O_lsi", n),
                lambda: join_topologies(self.topo("ls", n), self.topo("li", n)),
            )
        return self._get(
            ("O_" + name, n),
            lambda: synthesize_O_lambda(self.conv(name, n)),
        )

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def scales(self, cap: int = 4) -> range:
        return range(1, min(self.atoms, cap) + 1)


@dataclass(frozen=True)
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str


def random_epseq(carrier: Carrier, rng: random.Random) -> EPSeq:
    pre = tuple(
        carrier.elements[rng.randrange(carrier.size)]
        for _ in range(rng.randrange(0, 4))
    )
    per = tuple(
        carrier.elements[rng.randrange(carrier.size)]
        for _ in range(rng.randrange(1, 5))
    )
    return EPSeq(pre, per)


def random_fcseq(rng: random.Random, window: int = 8) -> FCSeq:
    def rand_set() -> FCSet:
        support = frozenset(i for i in range(window) if rng.random() < 0.4)
        return FCSet(rng.random() < 0.5, support)

    pre = tuple(rand_set() for _ in range(rng.randrange(0, 3)))
    per = tuple(rand_set() for _ in range(rng.randrange(1, 4)))
    return FCSeq(pre, per)


def brute_downsets(n: int) -> int:
    """Independent down-set counter: subsets of P(n) as frozensets of atom
    sets, down-closedness via plain subset tests."""
    points = [frozenset(i for i in range(n) if m >> i & 1) for m in range(1 << n)]
    below = [
        sum(1 << q for q in range(len(points)) if points[q] <= points[p])
        for p in range(len(points))
    ]
    count = 0
    for bits in range(1 << len(points)):
        ok = all(
            bits & below[p] == below[p]
            for p in range(len(points))
            if bits >> p & 1
        )
        if ok:
            count += 1
    return count


def _crit_pointwise_meet(ctx: VerifyContext):
    for n in ctx.scales():
        if meet_conv(ctx.conv("ls", n), ctx.conv("li", n)) != ctx.conv("s", n):
            return False, f"pointwise meet mismatch at n={n}"
    return True, f"all classes up to n={max(ctx.scales())}"


def _crit_star_fixed(ctx: VerifyContext):
    for n in ctx.scales():
        ls, li, s = ctx.conv("ls", n), ctx.conv("li", n), ctx.conv("s", n)
        stars = {name: star(c) for name, c in (("ls", ls), ("li", li), ("s", s))}
        for name, c in (("ls", ls), ("li", li), ("s", s)):
            if stars[name] != c:
                return False, f"star(lambda_{name}) != lambda_{name} at n={n}"
        if stars["s"] != meet_conv(stars["ls"], stars["li"]):
            return False, f"star meet identity fails at n={n}"
    return True, "star fixes all three convergences"


def _crit_open_counts(ctx: VerifyContext):
    expected = {1: 3, 2: 6, 3: 20, 4: 168}
    for n in ctx.scales():
        got = len(ctx.topo("ls", n).opens)
        independent = brute_downsets(n)
        if got != expected[n] or independent != expected[n]:
            return False, f"n={n}: opens={got}, brute={independent}, expected={expected[n]}"
        if len(ctx.topo("s", n).opens) != 1 << (1 << n):
            return False, f"n={n}: O_s is not discrete"
    return True, "down-set counts and discreteness match"


def _crit_closed_char(ctx: VerifyContext):
    for n in ctx.scales():
        if not check_closed_char(ctx.topo("ls", n), "up"):
            return False, f"left closed sets != up-sets at n={n}"
        if not check_closed_char(ctx.topo("li", n), "down"):
            return False, f"right closed sets != down-sets at n={n}"
    return True, "closed sets match the order characterization"


def _crit_join_collapse(ctx: VerifyContext):
    for n in ctx.scales():
        o_lsi, o_s = ctx.topo("lsi", n), ctx.topo("s", n)
        if o_lsi != o_s:
            return False, f"join != O_s at n={n}"
        if metric_topology(Submeasure.counting(ctx.carrier(n))) != o_s:
            return False, f"metric topology != O_s at n={n}"
        if lim_of_topology_as_convergence(o_lsi) != ctx.conv("s", n):
            return False, f"lim of join != lambda_s at n={n}"
    return True, "join, metric and discrete topologies coincide"


def _crit_limit_intersection(ctx: VerifyContext):
    rng = random.Random(ctx.seed)
    for n in ctx.scales():
        o_ls, o_li, o_lsi = ctx.topo("ls", n), ctx.topo("li", n), ctx.topo("lsi", n)
        for _ in range(ctx.samples):
            x = random_epseq(ctx.carrier(n), rng)
            if lim_topo(o_lsi, x) != lim_topo(o_ls, x) & lim_topo(o_li, x):
                return False, f"intersection law fails at n={n} for {x}"
    return True, f"{ctx.samples} sequences per carrier"


def _crit_strictness(ctx: VerifyContext):
    for n in ctx.scales():
        car = ctx.carrier(n)
        zero_class = inf_class(EPSeq((), (car.bottom,)))
        if car.top not in ctx.conv("ls", n)(zero_class):
            return False, f"top not a left-limit of the constant-0 sequence at n={n}"
        if car.top in ctx.conv("s", n)(zero_class):
            return False, f"top wrongly a two-sided limit at n={n}"
        for name in ("ls", "li"):
            extra = sorted(ctx.topo("lsi", n).opens - ctx.topo(name, n).opens)
            if not extra:
                return False, f"O_{name} not strictly below the join at n={n}"
    return True, "witness classes and witness opens found"


def _crit_homeo_and_props(ctx: VerifyContext):
    for n in ctx.scales():
        if not complement_homeomorphism_check(ctx.topo("ls", n), ctx.topo("li", n)):
            return False, f"complement map is not a homeomorphism at n={n}"
        props = space_properties(ctx.topo("ls", n))
        if not (props.t0 and props.connected and props.compact):
            return False, f"space properties fail at n={n}: {props}"
    return True, "homeomorphic, T0, connected, compact"


def _random_l12_convergence(carrier: Carrier, rng: random.Random) -> Convergence:
    """A random extensional convergence repaired to satisfy (L1) and (L2):
    seed limits randomly, force constants, then intersect over subclasses."""
    m = carrier.size
    table = [0] * (1 << m)
    for s in range(1, 1 << m):
        table[s] = rng.randrange(1 << m)
    for a in range(m):
        table[1 << a] |= 1 << a
    from .convergence import sos_intersection_nonempty

    repaired = sos_intersection_nonempty(table, m)
    repaired[0] = 0
    return Convergence(carrier, table=repaired, name="random")


def _random_topology(carrier: Carrier, rng: random.Random) -> Topology:
    from .topology import generate

    k = rng.randrange(1, 5)
    subbase = [rng.randrange(1 << carrier.size) for _ in range(k)]
    return generate(carrier, subbase)


def _crit_galois(ctx: VerifyContext):
    rng = random.Random(ctx.seed + 1)
    for n in ctx.scales(cap=3):
        car = ctx.carrier(n)
        convs = [ctx.conv("ls", n), ctx.conv("li", n), ctx.conv("s", n)]
        topos = [
            ctx.topo("ls", n),
            ctx.topo("li", n),
            ctx.topo("s", n),
            ctx.topo("lsi", n),
        ]
        convs += [_random_l12_convergence(car, rng) for _ in range(50)]
        topos += [_random_topology(car, rng) for _ in range(50)]
        for lam in convs:
            f_lam = synthesize_O_lambda(lam)
            for o in topos:
                left = o.opens <= f_lam.opens
                right = leq_conv(lam, lim_of_topology_as_convergence(o))
                if left != right:
                    return False, f"adjunction fails at n={n}"
    return True, "no counterexamples over built-in and random pairs"


def _crit_cube(ctx: VerifyContext):
    rng = random.Random(ctx.seed + 2)
    sample = [random_fcseq(rng) for _ in range(ctx.samples)]
    cand_rng = random.Random(ctx.seed + 3)
    for x in sample:
        alex = lim_alexandrov(x)
        ls = fc_limsup(x)
        for a in candidate_limits(x, cand_rng):
            from .cube import fc_union

            if alex(a) != (fc_union(a, ls) == a):
                return False, f"coordinatewise limit disagrees with limsup rule for {x}"
        cantor = lim_cantor(x)
        vals = set(x.period)
        expect = next(iter(vals)) if len(vals) == 1 else None
        if cantor != expect:
            return False, f"discrete-cube limit disagrees with the unique-value rule for {x}"
    if not check_T1235a(sample, random.Random(ctx.seed + 4)):
        return False, "predicate conjunction does not characterize the discrete limit"
    return True, f"{len(sample)} sequences"


def _crit_submeasures(ctx: VerifyContext):
    for n in ctx.scales():
        car = ctx.carrier(n)
        counting = validate_submeasure(Submeasure.counting(car))
        if not (
            counting.zero_on_bottom
            and counting.monotone
            and counting.subadditive
            and counting.strictly_positive
            and counting.continuous
        ):
            return False, f"counting measure fails an axiom at n={n}"
        truncated = validate_submeasure(Submeasure.truncated_cardinality(car))
        if not (
            truncated.zero_on_bottom
            and truncated.monotone
            and truncated.subadditive
            and truncated.continuous
        ):
            return False, f"truncated submeasure fails an axiom at n={n}"
    for n in ctx.scales(cap=3):
        car = ctx.carrier(n)
        mu = Submeasure.counting(car)
        for a in car.elements:
            for b in car.elements:
                for c in car.elements:
                    if mu.distance(a, c) > mu.distance(a, b) + mu.distance(b, c):
                        return False, f"triangle inequality fails at n={n}"
    if ctx.submeasure_path:
        car = ctx.carrier(min(ctx.atoms, 4))
        loaded = Submeasure.from_file(ctx.submeasure_path, car)
        rep = validate_submeasure(loaded)
        if not rep.is_submeasure():
            return False, f"loaded table is not a submeasure: {rep}"
        if rep.strictly_positive and metric_topology(loaded) != ctx.topo("s", car.n):
            return False, "loaded strictly positive submeasure does not induce O_s"
    return True, "axioms and triangle inequality verified"


def _crit_hbar(ctx: VerifyContext):
    for n in ctx.scales():
        car = ctx.carrier(n)
        if not check_hbar(car):
            return False, f"subsequence-stability condition fails at n={n}"
        sample = class_from_mask(car, (1 << car.size) - 1)
        if len(hbar_witness(sample).values) != 1:
            return False, f"witness is not a singleton at n={n}"
    return True, "singleton witnesses on every class"


CRITERIA: list[tuple[str, Callable[[VerifyContext], tuple[bool, str]]]] = [
    ("pointwise meet identity", _crit_pointwise_meet),
    ("star-closure fixed points", _crit_star_fixed),
    ("sequential topology open counts", _crit_open_counts),
    ("closed-set characterization", _crit_closed_char),
    ("join collapse to discrete/metric", _crit_join_collapse),
    ("limit intersection law", _crit_limit_intersection),
    ("strictness witnesses", _crit_strictness),
    ("complement homeomorphism and space properties", _crit_homeo_and_props),
    ("antitone adjunction", _crit_galois),
    ("coordinatewise cube limits", _crit_cube),
    ("submeasure axioms and metric", _crit_submeasures),
    ("subsequence-stable limsup condition", _crit_hbar),
]


def run_all(ctx: VerifyContext) -> list[CriterionResult]:
    results = []
    for i, (name, fn) in enumerate(CRITERIA, start=1):
        passed, detail = fn(ctx)
        results.append(CriterionResult(i, name, passed, detail))
    return results


def format_results(results: list[CriterionResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{r.index:2d}/{len(results)}] {status}  {r.name}: {r.detail}")
    total = sum(1 for r in results if r.passed)
    lines.append(f"{total}/{len(results)} criteria passed")
    return "\n".join(lines)
