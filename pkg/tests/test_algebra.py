"""Structure-constant algebras: arithmetic, checks, combinators, quotients."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ce_lab import linalg, scalars
from ce_lab.algebra import (
    Algebra,
    DerivationTriangularRing,
    associator,
    commutator,
    direct_sum,
    get_dim_cap,
    ideal_generated_by,
    nilpotency_index,
    quotient_by_ideal,
    set_dim_cap,
    subspace_product,
    tensor_product,
)
from ce_lab.errors import (
    AlgebraMismatch,
    DimensionCapExceeded,
    DimensionMismatch,
    NotAnIdeal,
    QuotientNotFree,
    ScalarMismatch,
)

F3 = scalars.prime_field(3)
F5 = scalars.prime_field(5)
Q = scalars.rationals()
Z4 = scalars.residue_ring(4)
Z6 = scalars.residue_ring(6)


def upper_triangular_2x2(ring):
    """Basis e11, e12, e22 of the 2x2 upper triangular matrices."""
    z, o = ring.zero, ring.one
    t = [[[z, z, z] for _ in range(3)] for _ in range(3)]
    t[0][0] = [o, z, z]
    t[0][1] = [z, o, z]
    t[1][2] = [z, o, z]
    t[2][2] = [z, z, o]
    return Algebra(ring, ("e11", "e12", "e22"), t, unit=[o, z, o])


def complex_like(ring):
    """1, i with i^2 = -1 and conjugation as involution."""
    z, o = ring.zero, ring.one
    m = ring.neg(o)
    t = [[[o, z], [z, o]], [[z, o], [m, z]]]
    return Algebra(ring, ("1", "i"), t, unit=[o, z],
                   involution=[[o, z], [z, m]])


def zero_mult(ring, dim):
    z = ring.zero
    t = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    return Algebra(ring, tuple(f"z{i}" for i in range(dim)), t)


def dual_numbers(ring):
    """ring[x]/(x^2): basis 1, x."""
    z, o = ring.zero, ring.one
    t = [[[o, z], [z, o]], [[z, o], [z, z]]]
    return Algebra(ring, ("1", "x"), t, unit=[o, z])


def reference_product(algebra, a, b):
    """Triple-loop product used as the oracle for the fast paths."""
    ring = algebra.ring
    out = [ring.zero] * algebra.dim
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            xy = ring.mul(x, y)
            for k, c in enumerate(algebra.table[i][j]):
                out[k] = ring.add(out[k], ring.mul(xy, ring.mul(c, ring.one)))
    return tuple(out)


class TestElements:
    def test_arithmetic(self):
        A = upper_triangular_2x2(F3)
        a = A.element([1, 2, 0])
        b = A.element([0, 1, 1])
        assert (a + b).coords == (1, 0, 1)
        assert (a - b).coords == (1, 1, 2)
        assert (-a).coords == (2, 1, 0)
        assert a.scale(2).coords == (2, 1, 0)
        # e11*e12 + 2*e12*e22 = 3*e12 vanishes mod 3
        assert (a * b).is_zero()
        e11, e12, e22 = (A.basis_element(i) for i in range(3))
        assert (e11 * e12) == e12
        assert (e12 * e22) == e12
        assert (e12 * e11).is_zero()

    def test_product_against_reference(self):
        rng = random.Random(3)
        for A in (upper_triangular_2x2(F3), upper_triangular_2x2(Q),
                  dual_numbers(Z6)):
            for _ in range(30):
                a = A.random_element(rng)
                b = A.random_element(rng)
                assert (a * b).coords == reference_product(
                    A, a.coords, b.coords)

    def test_mixed_algebras_rejected(self):
        A = upper_triangular_2x2(F3)
        B = upper_triangular_2x2(F3)
        with pytest.raises(AlgebraMismatch):
            A.element([1, 0, 0]) + B.element([1, 0, 0])

    def test_unit(self):
        A = upper_triangular_2x2(F3)
        one = A.one()
        for i in range(3):
            e = A.basis_element(i)
            assert one * e == e
            assert e * one == e

    def test_describe(self):
        A = upper_triangular_2x2(F3)
        assert A.describe_element((1, 0, 2)) == "e11 + 2*e22"
        assert A.describe_element((0, 0, 0)) == "0"


@st.composite
def f5_coords(draw):
    return draw(st.lists(st.integers(0, 4), min_size=3, max_size=3))


class TestBilinearity:
    @given(f5_coords(), f5_coords(), f5_coords())
    @settings(max_examples=60, deadline=None)
    def test_modular_path(self, a, b, c):
        A = upper_triangular_2x2(F5)
        x, y, z = A.element(a), A.element(b), A.element(c)
        assert (x + y) * z == x * z + y * z
        assert x * (y + z) == x * y + x * z

    @given(f5_coords(), f5_coords())
    @settings(max_examples=40, deadline=None)
    def test_generic_path_matches_modular(self, a, b):
        Amod = upper_triangular_2x2(F5)
        Agen = upper_triangular_2x2(Q)
        got = Amod.element(a) * Amod.element(b)
        want = Agen.element(a) * Agen.element(b)
        assert got.coords == tuple(c % 5 for c in want.coords)


class TestConstructionChecks:
    def test_bad_unit_rejected(self):
        z, o = F3.zero, F3.one
        t = [[[o, z], [z, o]], [[z, o], [z, z]]]
        with pytest.raises(AlgebraMismatch):
            Algebra(F3, ("1", "x"), t, unit=[z, o])

    def test_wrong_unit_length(self):
        z, o = F3.zero, F3.one
        t = [[[o, z], [z, o]], [[z, o], [z, z]]]
        with pytest.raises(DimensionMismatch):
            Algebra(F3, ("1", "x"), t, unit=[o])

    def test_duplicate_labels(self):
        z = F3.zero
        t = [[[z, z]] * 2] * 2
        with pytest.raises(DimensionMismatch):
            Algebra(F3, ("a", "a"), t)

    def test_involution_must_square(self):
        z, o = Q.zero, Q.one
        t = [[[o, z], [z, o]], [[z, o], [Q.neg(o), z]]]
        with pytest.raises(AlgebraMismatch):
            Algebra(Q, ("1", "i"), t, unit=[o, z],
                    involution=[[z, z], [z, z]])

    def test_involution_must_reverse(self):
        # the identity map is not an anti-automorphism of a
        # noncommutative algebra
        ring = F3
        z, o = ring.zero, ring.one
        t = [[[z, z, z] for _ in range(3)] for _ in range(3)]
        t[0][0] = [o, z, z]
        t[0][1] = [z, o, z]
        t[1][2] = [z, o, z]
        t[2][2] = [z, z, o]
        ident = [[o, z, z], [z, o, z], [z, z, o]]
        with pytest.raises(AlgebraMismatch):
            Algebra(ring, ("e11", "e12", "e22"), t, involution=ident)

    def test_transpose_style_involution_accepted(self):
        # e11 <-> e22, e12 fixed reverses products on the triangular algebra
        ring = F3
        z, o = ring.zero, ring.one
        t = [[[z, z, z] for _ in range(3)] for _ in range(3)]
        t[0][0] = [o, z, z]
        t[0][1] = [z, o, z]
        t[1][2] = [z, o, z]
        t[2][2] = [z, z, o]
        swap = [[z, z, o], [z, o, z], [o, z, z]]
        A = Algebra(ring, ("e11", "e12", "e22"), t, unit=[o, z, o],
                    involution=swap)
        a = A.element([1, 2, 0])
        b = A.element([0, 1, 2])
        assert (a * b).star() == b.star() * a.star()

    def test_dim_cap(self):
        old = set_dim_cap(4)
        try:
            with pytest.raises(DimensionCapExceeded):
                zero_mult(F3, 5)
            assert get_dim_cap() == 4
            zero_mult(F3, 4)
        finally:
            set_dim_cap(old)


class TestPredicates:
    def test_associativity(self):
        assert upper_triangular_2x2(F3).is_associative()
        assert upper_triangular_2x2(Q).is_associative()
        assert zero_mult(F3, 3).is_associative()

    def test_nonassociative_detected(self):
        # e1*e1 = e2, e2*e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
        z, o = Q.zero, Q.one
        t = [[[z, o], [z, z]], [[o, z], [z, z]]]
        A = Algebra(Q, ("a", "b"), t)
        assert not A.is_associative()
        a = A.basis_element(0)
        assert not associator(a, a, a).is_zero()

    def test_commutativity(self):
        assert not upper_triangular_2x2(F3).is_commutative()
        assert complex_like(Q).is_commutative()
        a = upper_triangular_2x2(F3).basis_element(0)
        b = upper_triangular_2x2(F3)
        assert not commutator(b.basis_element(0), b.basis_element(1)).is_zero()

    def test_find_unit(self):
        ring = F3
        z, o = ring.zero, ring.one
        t = [[[z, z, z] for _ in range(3)] for _ in range(3)]
        t[0][0] = [o, z, z]
        t[0][1] = [z, o, z]
        t[1][2] = [z, o, z]
        t[2][2] = [z, z, o]
        A = Algebra(ring, ("e11", "e12", "e22"), t)
        u = A.find_unit()
        assert u is not None and u.coords == (1, 0, 1)
        assert A.unit == (1, 0, 1)

    def test_find_unit_absent(self):
        assert zero_mult(F3, 2).find_unit() is None
        assert zero_mult(Q, 2).find_unit() is None


class TestMatrices:
    def test_conventions(self):
        rng = random.Random(11)
        for A in (upper_triangular_2x2(F3), upper_triangular_2x2(Q)):
            for _ in range(20):
                a = A.random_element(rng)
                b = A.random_element(rng)
                left = [list(r) for r in A.left_matrix(b.coords)]
                right = [list(r) for r in A.right_matrix(b.coords)]
                lv = linalg.vec_mat(A.ring, list(a.coords), left)
                rv = linalg.vec_mat(A.ring, list(a.coords), right)
                assert tuple(lv) == (b * a).coords
                assert tuple(rv) == (a * b).coords


class TestSerialization:
    def test_round_trip(self):
        rng = random.Random(5)
        for A in (upper_triangular_2x2(F3), complex_like(Q),
                  dual_numbers(Z4)):
            blob = json.dumps(A.to_json(), sort_keys=True)
            B = Algebra.from_json(json.loads(blob))
            assert json.dumps(B.to_json(), sort_keys=True) == blob
            for _ in range(10):
                a = A.random_element(rng)
                b = A.random_element(rng)
                assert (B.element(a.coords) * B.element(b.coords)).coords \
                    == (a * b).coords

    def test_label_count_checked(self):
        data = upper_triangular_2x2(F3).to_json()
        data["labels"] = data["labels"][:-1]
        with pytest.raises(DimensionMismatch):
            Algebra.from_json(data)


class TestCombinators:
    def test_direct_sum(self):
        A = upper_triangular_2x2(F3)
        B = dual_numbers(F3)
        S = direct_sum(A, B)
        assert S.dim == 5
        assert S.labels[0] == "p1.e11" and S.labels[3] == "p2.1"
        assert S.unit == (1, 0, 1, 1, 0)
        assert S.is_associative()
        # cross products vanish
        a = S.basis_element(0)
        b = S.basis_element(3)
        assert (a * b).is_zero() and (b * a).is_zero()

    def test_direct_sum_needs_common_ring(self):
        with pytest.raises(ScalarMismatch):
            direct_sum(upper_triangular_2x2(F3), upper_triangular_2x2(F5))

    def test_tensor_square_of_complex(self):
        C = complex_like(Q)
        T = tensor_product(C, C)
        assert T.dim == 4
        assert T.is_associative() and T.is_commutative()
        assert T.unit is not None
        ii = T.basis_element(3)
        assert (ii * ii) == T.one()

    def test_tensor_needs_field(self):
        with pytest.raises(ScalarMismatch):
            tensor_product(dual_numbers(Z6), dual_numbers(Z6))


class TestSubspaceOps:
    def test_subspace_product(self):
        A = upper_triangular_2x2(F3)
        e12 = A.span([A.basis_element(1)])
        full = A.full_space()
        left = subspace_product(A, full, e12)
        right = subspace_product(A, e12, full)
        assert left.is_subspace_of(e12)
        assert right.is_subspace_of(e12)

    def test_ideal_generated_by(self):
        A = upper_triangular_2x2(F3)
        ideal = ideal_generated_by(A, [A.basis_element(1)])
        assert ideal.rank == 1
        grown = ideal_generated_by(A, [A.basis_element(0)])
        # e11 drags e12 along: e11*e12 = e12
        assert grown.rank == 2
        assert grown.contains([0, 1, 0])

    def test_nilpotency_index(self):
        # strictly upper triangular 3x3: e12*e23 = e13, all else zero
        z, o = Q.zero, Q.one
        t = [[[z, z, z] for _ in range(3)] for _ in range(3)]
        t[0][2] = [z, o, z]
        A = Algebra(Q, ("e12", "e13", "e23"), t)
        full = A.full_space()
        assert nilpotency_index(A, full) == 3
        assert nilpotency_index(A, A.zero_space()) == 1
        B = upper_triangular_2x2(F3)
        assert nilpotency_index(B, B.span([B.basis_element(0)])) is None


class TestQuotients:
    def test_ut2_mod_radical(self):
        A = upper_triangular_2x2(F3)
        rad = A.span([A.basis_element(1)])
        Qa, proj = quotient_by_ideal(A, rad)
        assert Qa.dim == 2
        assert Qa.is_commutative()
        assert Qa.unit == (1, 1)
        rng = random.Random(2)
        for _ in range(25):
            a = A.random_element(rng)
            b = A.random_element(rng)
            assert proj(a * b) == proj(a) * proj(b)
            assert proj(a + b) == proj(a) + proj(b)

    def test_not_an_ideal(self):
        A = upper_triangular_2x2(F3)
        with pytest.raises(NotAnIdeal):
            quotient_by_ideal(A, A.span([A.basis_element(0)]))

    def test_quotient_not_free(self):
        A = dual_numbers(Z4)
        two_x = A.span([A.element([0, 2])])
        with pytest.raises(QuotientNotFree):
            quotient_by_ideal(A, two_x)

    def test_quotient_over_z4_with_unit_pivot(self):
        A = dual_numbers(Z4)
        ideal = A.span([A.element([0, 1])])
        Qa, proj = quotient_by_ideal(A, ideal)
        assert Qa.dim == 1
        assert proj(A.element([3, 2])).coords == (3,)


class TestDerivationTriangular:
    def build(self, base):
        ring = scalars.polynomial_ring(base, ("x", "y"))
        return DerivationTriangularRing(ring, "d/dx", "d/dy")

    def test_matrix_model_is_multiplicative(self):
        rng = random.Random(9)
        for base in ("int", 5):
            J = self.build(base)
            for _ in range(100):
                a = J.random_element(rng)
                b = J.random_element(rng)
                assert J.matrix_model(J.mul(a, b)) == J.matrix_multiply(
                    J.matrix_model(a), J.matrix_model(b))

    def test_second_component_is_central(self):
        rng = random.Random(10)
        J = self.build("int")
        g = J.ring.random_element(rng)
        e = (J.ring.zero, g)
        assert J.commutes_with_sample(e, rng, trials=30)

    def test_generators_do_not_commute(self):
        J = self.build("int")
        x = (J.ring.generator("x"), J.ring.zero)
        y = (J.ring.generator("y"), J.ring.zero)
        assert J.mul(x, y) != J.mul(y, x)

    def test_one_and_zero(self):
        rng = random.Random(12)
        J = self.build(5)
        a = J.random_element(rng)
        assert J.mul(J.one, a) == a
        assert J.mul(a, J.one) == a
        assert J.add(a, J.neg(a)) == J.zero
