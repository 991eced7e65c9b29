"""Tests for the finite group constructors and invariants."""

import numpy as np
import pytest

from ce_lab import groups as G
from ce_lab.errors import (
    NotAGroup,
    NotAnAutomorphism,
    NotAHomomorphism,
    UnsupportedParameter,
)


class TestConstruction:
    def test_bad_table_rejected(self):
        with pytest.raises(NotAGroup):
            G.FiniteGroup(["e", "x"], [[0, 1], [1, 1]])

    def test_non_associative_rejected(self):
        # a Latin square with identity that fails associativity
        table = [[0, 1, 2, 3, 4],
                 [1, 0, 3, 4, 2],
                 [2, 4, 0, 1, 3],
                 [3, 2, 4, 0, 1],
                 [4, 3, 1, 2, 0]]
        with pytest.raises(NotAGroup):
            G.FiniteGroup(list("eabcd"), table)

    def test_json_round_trip(self):
        q8 = G.quaternion_q8()
        again = G.FiniteGroup.from_json(q8.to_json())
        assert again == q8

    def test_order_cap(self):
        with pytest.raises(UnsupportedParameter):
            G.heisenberg_g(2, 5)


class TestCyclicAndProducts:
    def test_klein_group(self):
        v4 = G.direct_product(G.cyclic(2), G.cyclic(2))
        assert v4.order == 4
        assert v4.is_commutative()
        assert v4.nilpotence_class() == 1

    def test_cyclic_orders(self):
        c6 = G.cyclic(6)
        assert c6.element_order(c6.index_of("a")) == 6
        assert c6.element_order(c6.index_of("a^3")) == 2

    def test_semidirect_rejects_non_automorphism(self):
        c4 = G.cyclic(4)
        c2 = G.cyclic(2)
        # the map a -> a^2 is not injective
        with pytest.raises(NotAnAutomorphism):
            G.semidirect_product(c4, c2,
                                 [[0, 1, 2, 3], [0, 2, 0, 2]])

    def test_semidirect_rejects_non_homomorphism(self):
        c3 = G.cyclic(3)
        c2 = G.cyclic(2)
        # inversion attached to the identity of C2 breaks phi(e) = id
        with pytest.raises((NotAHomomorphism, NotAnAutomorphism)):
            G.semidirect_product(c3, c2, [[0, 2, 1], [0, 2, 1]])

    def test_semidirect_builds_s3(self):
        c3 = G.cyclic(3)
        c2 = G.cyclic(2)
        s3 = G.semidirect_product(c3, c2, [[0, 1, 2], [0, 2, 1]])
        assert s3.order == 6
        assert not s3.is_commutative()
        assert s3.nilpotence_class() is None


class TestNamedGroups:
    def test_q8_conjugacy_classes(self):
        q8 = G.quaternion_q8()
        classes = {frozenset(q8.labels[i] for i in c)
                   for c in q8.conjugacy_classes()}
        assert classes == {
            frozenset({"e"}), frozenset({"a^2"}),
            frozenset({"a", "a^3"}), frozenset({"b", "a^2b"}),
            frozenset({"ab", "a^3b"}),
        }

    def test_q8_relations(self):
        q8 = G.quaternion_q8()
        a = q8.index_of("a")
        b = q8.index_of("b")
        assert q8.power(a, 4) == q8.identity
        assert q8.power(b, 2) == q8.power(a, 2)
        assert q8.op(q8.op(b, a), q8.inv(b)) == q8.inv(a)

    def test_d4_relations_and_center(self):
        d4 = G.dihedral(8)
        a = d4.index_of("a")
        b = d4.index_of("b")
        assert d4.power(a, 4) == d4.identity
        assert d4.power(b, 2) == d4.identity
        assert d4.power(d4.op(a, b), 2) == d4.identity
        z = set(d4.center())
        assert z == set(d4.commutator_subgroup())
        assert z == {d4.identity, d4.power(a, 2)}

    def test_order16_families(self):
        q16 = G.generalized_quaternion(16)
        sd16 = G.semidihedral(16)
        d16 = G.dihedral(16)
        for g in (q16, sd16, d16):
            assert g.order == 16
            assert g.nilpotence_class() == 3
        # Q16: unique element of order 2
        assert sum(1 for i in range(16)
                   if q16.element_order(i) == 2) == 1
        # SD16: b a b^{-1} = a^3
        a = sd16.index_of("a")
        b = sd16.index_of("b")
        assert sd16.conjugate(b, a) == sd16.power(a, 3)
        with pytest.raises(UnsupportedParameter):
            G.generalized_quaternion(32)
        with pytest.raises(UnsupportedParameter):
            G.semidihedral(8)

    def test_heisenberg_commutator_formula(self):
        hg = G.heisenberg_g(2, 1)
        q = 2
        c = hg.index_of("c")

        def elem(y, z, x):
            lab_parts = []
            if y:
                lab_parts.append("b" if y == 1 else f"b^{y}")
            if z:
                lab_parts.append("c" if z == 1 else f"c^{z}")
            if x:
                lab_parts.append("a" if x == 1 else f"a^{x}")
            return hg.index_of("".join(lab_parts) or "e")

        for y1 in range(q):
            for z1 in range(q):
                for x1 in range(q):
                    for y2 in range(q):
                        for z2 in range(q):
                            for x2 in range(q):
                                g1 = elem(y1, z1, x1)
                                g2 = elem(y2, z2, x2)
                                comm = hg.op(hg.op(g1, g2),
                                             hg.op(hg.inv(g1), hg.inv(g2)))
                                want = hg.power(c, (x1 * y2 - y1 * x2) % q)
                                assert comm == want

    def test_heisenberg_class_two(self):
        for p, n in [(2, 1), (3, 1), (2, 2)]:
            hg = G.heisenberg_g(p, n)
            assert hg.order == p ** (3 * n)
            assert hg.nilpotence_class() == 2


class TestInvariants:
    @pytest.mark.parametrize("g", [G.quaternion_q8(), G.dihedral(8),
                                   G.dihedral(6), G.heisenberg_g(3, 1),
                                   G.generalized_quaternion(16)])
    def test_class_equation(self, g):
        classes = g.conjugacy_classes()
        assert sum(len(c) for c in classes) == g.order
        for c in classes:
            assert g.order % len(c) == 0

    def test_series_strictly_increasing(self):
        for g in (G.quaternion_q8(), G.order32_nc3_group(),
                  G.heisenberg_g(2, 2)):
            series = g.upper_central_series()
            for a, b in zip(series, series[1:]):
                assert set(a) < set(b)

    def test_order32_group_structure(self):
        g = G.order32_nc3_group()
        assert g.order == 32
        series = g.upper_central_series()
        assert len(series[1]) == 2
        assert len(series[2]) == 8
        assert g.nilpotence_class() == 3
        assert set(g.centralizer(series[2])) == set(series[2])

    def test_order243_group_structure(self):
        g = G.order243_nc3_group()
        assert g.order == 243
        series = g.upper_central_series()
        assert len(series[1]) == 9
        assert len(series[2]) == 27
        assert g.nilpotence_class() == 3


class TestSylow:
    def test_direct_product_splits(self):
        g = G.direct_product(G.quaternion_q8(), G.cyclic(3))
        dec = g.sylow_direct_decomposition(2)
        assert dec is not None
        P, H = dec
        assert len(P) == 8 and len(H) == 3

    def test_s3_does_not_split(self):
        s3 = G.dihedral(6)
        assert s3.sylow_direct_decomposition(3) is None
        assert s3.sylow_direct_decomposition(2) is None

    def test_p_group_trivial_complement(self):
        q8 = G.quaternion_q8()
        dec = q8.sylow_direct_decomposition(2)
        assert dec == (tuple(range(8)), (q8.identity,))

    def test_coprime_prime(self):
        q8 = G.quaternion_q8()
        dec = q8.sylow_direct_decomposition(3)
        assert dec is not None
        P, H = dec
        assert len(P) == 1 and len(H) == 8
