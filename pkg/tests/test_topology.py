import random

import pytest

from convlab.algebra import Carrier, EPSeq
from convlab.convergence import (
    ClosureAxiomError,
    Convergence,
    lambda_li,
    lambda_ls,
    lambda_s,
    leq_conv,
)
from convlab.seqclass import InfClass, all_classes
from convlab.topology import (
    Topology,
    antidiscrete,
    check_closed_char,
    complement_homeomorphism_check,
    discrete,
    generate,
    generate_from_elements,
    is_sequential,
    join_topologies,
    lim_of_topology_as_convergence,
    lim_topo,
    sequential_closure,
    space_properties,
    synthesize_O_lambda,
)
from convlab.verify import _random_l12_convergence, _random_topology, brute_downsets

from test_algebra import random_epseq


class TestGenerate:
    def test_empty_subbase_is_antidiscrete(self, p2):
        assert generate(p2, []) == antidiscrete(p2)

    def test_singletons_generate_discrete(self, p2):
        topo = generate(p2, [1 << p for p in range(p2.size)])
        assert topo == discrete(p2)
        assert len(topo.opens) == 1 << p2.size

    def test_up_and_down_sets_generate_discrete(self, p1):
        from convlab.algebra import downset, upset

        subbase = [upset([e]) for e in p1.elements] + [downset([e]) for e in p1.elements]
        topo = generate_from_elements(p1, subbase)
        assert topo == discrete(p1)

    def test_result_is_a_topology(self, p2):
        rng = random.Random(41)
        for _ in range(50):
            topo = _random_topology(p2, rng)
            assert topo.validate()


class TestSynthesis:
    def test_left_topology_opens_are_downsets_p2(self, p2):
        topo = synthesize_O_lambda(lambda_ls(p2))
        assert len(topo.opens) == 6 == brute_downsets(2)

    def test_left_topology_p3_has_20_opens(self, p3):
        assert len(synthesize_O_lambda(lambda_ls(p3)).opens) == 20 == brute_downsets(3)

    def test_left_topology_p4_has_168_opens(self, p4):
        assert len(synthesize_O_lambda(lambda_ls(p4)).opens) == 168 == brute_downsets(4)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_two_sided_topology_is_discrete(self, n):
        carrier = Carrier(n)
        assert synthesize_O_lambda(lambda_s(carrier)) == discrete(carrier)

    def test_requires_L1_L2(self, p2):
        empty = Convergence(p2, table=[0] * (1 << p2.size))
        with pytest.raises(ClosureAxiomError):
            synthesize_O_lambda(empty)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_strategies_agree(self, n):
        carrier = Carrier(n)
        rng = random.Random(43 + n)
        lams = [lambda_ls(carrier), lambda_li(carrier), lambda_s(carrier)]
        lams += [_random_l12_convergence(carrier, rng) for _ in range(20)]
        for lam in lams:
            brute = synthesize_O_lambda(lam, strategy="brute")
            closure = synthesize_O_lambda(lam, strategy="closure")
            assert brute == closure

    def test_single_closure_step(self, p2):
        lam = lambda_ls(p2)
        a_mask = p2.subset_mask([p2.element([0]), p2.element([1])])
        closed = sequential_closure(lam, a_mask)
        # the class {{0},{1}} has limsup = top, so top joins the closure
        assert closed >> p2.top.mask & 1


class TestLimits:
    def test_constant_zero_in_left_topology(self, p2):
        o_ls = synthesize_O_lambda(lambda_ls(p2))
        limits = lim_topo(o_ls, EPSeq((), (p2.bottom,)))
        assert p2.top in limits
        assert limits == frozenset(p2.elements)

    def test_constant_zero_in_right_topology(self, p2):
        # right-topology opens are up-closed; the minimal open around any
        # a > 0 misses bottom, so the constant-0 sequence only converges to 0
        o_li = synthesize_O_lambda(lambda_li(p2))
        assert lim_topo(o_li, EPSeq((), (p2.bottom,))) == frozenset({p2.bottom})

    def test_discrete_limits_are_eventual_constants(self, p2):
        topo = discrete(p2)
        a = p2.element([0])
        assert lim_topo(topo, EPSeq((p2.top,), (a,))) == frozenset({a})
        assert lim_topo(topo, EPSeq((), (a, p2.top))) == frozenset()

    def test_antidiscrete_limits_are_everything(self, p2):
        rng = random.Random(47)
        topo = antidiscrete(p2)
        for _ in range(20):
            x = random_epseq(p2, rng)
            assert lim_topo(topo, x) == frozenset(p2.elements)


class TestJoin:
    def test_join_of_up_and_down_is_discrete(self, p3):
        o_ls = synthesize_O_lambda(lambda_ls(p3))
        o_li = synthesize_O_lambda(lambda_li(p3))
        assert join_topologies(o_ls, o_li) == discrete(p3)

    def test_join_with_antidiscrete_is_identity(self, p2):
        o_ls = synthesize_O_lambda(lambda_ls(p2))
        assert join_topologies(o_ls, antidiscrete(p2)) == o_ls

    def test_join_idempotent(self, p2):
        o_ls = synthesize_O_lambda(lambda_ls(p2))
        assert join_topologies(o_ls, o_ls) == o_ls

    def test_join_contains_both(self, p2):
        rng = random.Random(53)
        for _ in range(20):
            o1 = _random_topology(p2, rng)
            o2 = _random_topology(p2, rng)
            joined = join_topologies(o1, o2)
            assert o1.opens <= joined.opens
            assert o2.opens <= joined.opens

    def test_limits_in_join_are_intersections(self, p3):
        o_ls = synthesize_O_lambda(lambda_ls(p3))
        o_li = synthesize_O_lambda(lambda_li(p3))
        joined = join_topologies(o_ls, o_li)
        rng = random.Random(59)
        for _ in range(300):
            x = random_epseq(p3, rng)
            assert lim_topo(joined, x) == lim_topo(o_ls, x) & lim_topo(o_li, x)


class TestAdjunction:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_left_limits_recover_ls(self, n):
        carrier = Carrier(n)
        lam = lambda_ls(carrier)
        assert lim_of_topology_as_convergence(synthesize_O_lambda(lam)) == lam

    def test_discrete_limits_are_two_sided(self, p3):
        assert lim_of_topology_as_convergence(discrete(p3)) == lambda_s(p3)

    def test_antidiscrete_limits_are_everything(self, p2):
        lam = lim_of_topology_as_convergence(antidiscrete(p2))
        full = frozenset(p2.elements)
        for s in all_classes(p2):
            assert lam(s) == full

    @pytest.mark.parametrize("n", [1, 2])
    def test_every_finite_topology_is_sequential(self, n):
        carrier = Carrier(n)
        rng = random.Random(61 + n)
        for _ in range(30):
            assert is_sequential(_random_topology(carrier, rng))

    def test_downset_topology_sequential(self, p3):
        assert is_sequential(synthesize_O_lambda(lambda_ls(p3)))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_galois_connection(self, n):
        carrier = Carrier(n)
        rng = random.Random(67 + n)
        convs = [lambda_ls(carrier), lambda_li(carrier), lambda_s(carrier)]
        convs += [_random_l12_convergence(carrier, rng) for _ in range(50)]
        topos = [
            synthesize_O_lambda(lambda_ls(carrier)),
            discrete(carrier),
            antidiscrete(carrier),
        ]
        topos += [_random_topology(carrier, rng) for _ in range(50)]
        for lam in convs:
            f_lam = synthesize_O_lambda(lam)
            for o in topos:
                assert (o.opens <= f_lam.opens) == leq_conv(
                    lam, lim_of_topology_as_convergence(o)
                )

    def test_antitone_both_directions(self, p2):
        rng = random.Random(71)
        convs = [_random_l12_convergence(p2, rng) for _ in range(20)]
        for l1 in convs:
            for l2 in convs:
                if leq_conv(l1, l2):
                    assert (
                        synthesize_O_lambda(l2).opens
                        <= synthesize_O_lambda(l1).opens
                    )
        topos = [_random_topology(p2, rng) for _ in range(20)]
        for o1 in topos:
            for o2 in topos:
                if o1.opens <= o2.opens:
                    assert leq_conv(
                        lim_of_topology_as_convergence(o2),
                        lim_of_topology_as_convergence(o1),
                    )


class TestCharacterizations:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_closed_sets_of_left_topology(self, n):
        carrier = Carrier(n)
        assert check_closed_char(synthesize_O_lambda(lambda_ls(carrier)), "up")

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_closed_sets_of_right_topology(self, n):
        carrier = Carrier(n)
        assert check_closed_char(synthesize_O_lambda(lambda_li(carrier)), "down")

    def test_complement_homeomorphism(self, p1, p3):
        for carrier in (p1, p3):
            o_ls = synthesize_O_lambda(lambda_ls(carrier))
            o_li = synthesize_O_lambda(lambda_li(carrier))
            assert complement_homeomorphism_check(o_ls, o_li)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_complement_map_fails_on_same_side(self, n):
        carrier = Carrier(n)
        o_ls = synthesize_O_lambda(lambda_ls(carrier))
        assert not complement_homeomorphism_check(o_ls, o_ls)

    def test_space_properties_left(self, p2):
        props = space_properties(synthesize_O_lambda(lambda_ls(p2)))
        assert props.t0 and props.connected and props.compact

    def test_discrete_disconnected(self, p2):
        props = space_properties(discrete(p2))
        assert not props.connected
        assert props.t0

    def test_antidiscrete_not_t0(self, p2):
        props = space_properties(antidiscrete(p2))
        assert not props.t0
        assert props.connected


class TestTopologyType:
    def test_must_contain_empty_and_full(self, p2):
        with pytest.raises(ValueError):
            Topology(p2, [0])

    def test_open_families_in_canonical_order(self, p1):
        topo = discrete(p1)
        masks = [p1.subset_mask(f) for f in topo.open_families()]
        assert masks == sorted(topo.opens)
