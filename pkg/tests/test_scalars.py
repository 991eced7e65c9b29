"""Tests for the scalar ring handles."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ce_lab import scalars as S
from ce_lab.errors import (
    CharacteristicZero,
    InfiniteRing,
    NoSuchDerivation,
    NonPrimeModulus,
    NotAUnit,
    ParseError,
    ReduciblePolynomial,
    UnsupportedVariableCount,
)


def ring_axioms(ring, elements):
    zero, one = ring.zero, ring.one
    for a in elements:
        assert ring.add(a, zero) == a
        assert ring.mul(a, one) == a
        assert ring.add(a, ring.neg(a)) == zero
        for b in elements:
            assert ring.add(a, b) == ring.add(b, a)
            assert ring.mul(a, b) == ring.mul(b, a)
            for c in elements:
                assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
                assert ring.mul(a, ring.add(b, c)) == ring.add(
                    ring.mul(a, b), ring.mul(a, c))


class TestPrimeField:
    def test_rejects_composite(self):
        with pytest.raises(NonPrimeModulus):
            S.prime_field(6)

    def test_axioms(self):
        F = S.prime_field(5)
        ring_axioms(F, list(F.enumerate_elements()))

    def test_inverse(self):
        F = S.prime_field(7)
        for a in range(1, 7):
            assert F.mul(a, F.invert(a)) == 1
        with pytest.raises(NotAUnit):
            F.invert(0)

    def test_frobenius_is_identity(self):
        F = S.prime_field(5)
        assert [F.frobenius(a) for a in range(5)] == list(range(5))


class TestResidueRing:
    def test_units(self):
        Z = S.residue_ring(12)
        for a in (1, 5, 7, 11):
            assert Z.mul(a, Z.invert(a)) == 1
        for a in (0, 2, 3, 4, 6, 8, 9, 10):
            with pytest.raises(NotAUnit):
                Z.invert(a)

    def test_axioms(self):
        Z = S.residue_ring(8)
        ring_axioms(Z, list(Z.enumerate_elements()))

    def test_frobenius_needs_prime_characteristic(self):
        Z = S.residue_ring(4)
        with pytest.raises(CharacteristicZero):
            Z.frobenius(2)

    def test_prime_modulus_is_field(self):
        assert S.residue_ring(3).is_field
        assert not S.residue_ring(4).is_field


class TestGaloisField:
    def test_gf4_table(self):
        F = S.galois_field(2, 2)
        t = F.parse("t")
        # t^2 = t + 1 under the default defining polynomial
        assert F.mul(t, t) == F.parse("t + 1")
        assert F.mul(t, F.parse("t + 1")) == F.one

    def test_axioms(self):
        F = S.galois_field(2, 2)
        ring_axioms(F, list(F.enumerate_elements()))

    def test_every_nonzero_invertible(self):
        F = S.galois_field(3, 2)
        for a in F.enumerate_elements():
            if a == F.zero:
                continue
            assert F.mul(a, F.invert(a)) == F.one

    def test_rejects_reducible(self):
        with pytest.raises(ReduciblePolynomial):
            S.galois_field(2, 2, (1, 0, 1))  # t^2 + 1 = (t + 1)^2

    def test_frobenius_is_field_automorphism(self):
        F = S.galois_field(2, 3)
        rng = random.Random(7)
        for _ in range(200):
            a = F.random_element(rng)
            b = F.random_element(rng)
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a),
                                                     F.frobenius(b))
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a),
                                                     F.frobenius(b))
        # order of Frobenius equals the extension degree
        for a in F.enumerate_elements():
            x = a
            for _ in range(3):
                x = F.frobenius(x)
            assert x == a

    def test_enumeration_size(self):
        F = S.galois_field(2, 3)
        elems = list(F.enumerate_elements())
        assert len(elems) == 8
        assert len(set(elems)) == 8


class TestRationals:
    def test_parse_format_round_trip(self):
        Q = S.rationals()
        for s in ["0", "1", "-1", "1/2", "-3/4", "22/7"]:
            assert Q.format(Q.parse(s)) == s

    def test_arithmetic(self):
        Q = S.rationals()
        assert Q.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
        assert Q.invert(Fraction(-2, 5)) == Fraction(-5, 2)
        with pytest.raises(NotAUnit):
            Q.invert(Fraction(0))

    def test_infinite(self):
        with pytest.raises(InfiniteRing):
            S.rationals().enumerate_elements()


class TestPolynomialRing:
    def test_two_variable_round_trip(self):
        P = S.polynomial_ring("int", ("x", "y"))
        for s in ["0", "1", "x", "2*x^2*y + 1", "x*y - y^2", "-3*x + 2"]:
            assert P.format(P.parse(s)) == s

    def test_partial_derivatives(self):
        P = S.polynomial_ring("int", ("x", "y"))
        e = P.parse("2*x^2*y + 1")
        assert P.format(P.derive(e, "d/dx")) == "4*x*y"
        assert P.format(P.derive(e, "d/dy")) == "2*x^2"
        with pytest.raises(NoSuchDerivation):
            P.derive(e, "d/dt")

    def test_leibniz_rule(self):
        P = S.polynomial_ring(3, ("x", "y"))
        rng = random.Random(11)
        for _ in range(500):
            a = P.random_element(rng)
            b = P.random_element(rng)
            for name in P.derivations:
                lhs = P.derive(P.mul(a, b), name)
                rhs = P.add(P.mul(P.derive(a, name), b),
                            P.mul(a, P.derive(b, name)))
                assert lhs == rhs

    def test_variable_count_limits(self):
        with pytest.raises(UnsupportedVariableCount):
            S.polynomial_ring("int", ("x", "y", "z"))
        with pytest.raises(UnsupportedVariableCount):
            S.polynomial_ring("int", ())

    def test_units(self):
        P = S.polynomial_ring("int", ("x",))
        assert P.invert(P.parse("-1")) == P.parse("-1")
        with pytest.raises(NotAUnit):
            P.invert(P.parse("2"))
        Pp = S.polynomial_ring(5, ("x",))
        assert Pp.mul(Pp.parse("2"), Pp.invert(Pp.parse("2"))) == Pp.one
        with pytest.raises(NotAUnit):
            Pp.invert(Pp.parse("x"))


class TestRationalFunctionField:
    def test_round_trip(self):
        R = S.rational_function_field(3, "t")
        for s in ["0", "1", "t", "t^2 + 1", "(t^2 + 1)/(t + 1)"]:
            assert R.parse(R.format(R.parse(s))) == R.parse(s)

    def test_denominator_is_monic_and_reduced(self):
        R = S.rational_function_field(3, "t")
        x = R.parse("(2*t + 2)/(2*t)")
        num, den = x
        assert den[-1] == 1
        # (2t + 2)/(2t) = (t + 1)/t
        assert x == R.parse("(t + 1)/t")

    def test_field_inverse(self):
        R = S.rational_function_field(2, "t")
        rng = random.Random(3)
        for _ in range(200):
            a = R.random_element(rng)
            if a == R.zero:
                continue
            assert R.mul(a, R.invert(a)) == R.one

    def test_derivation_quotient_rule(self):
        R = S.rational_function_field(3, "t")
        inv_t = R.invert(R.parse("t"))
        assert R.derive(inv_t, "d/dt") == R.neg(R.invert(R.parse("t^2")))
        rng = random.Random(5)
        for _ in range(300):
            a = R.random_element(rng)
            b = R.random_element(rng)
            lhs = R.derive(R.mul(a, b), "d/dt")
            rhs = R.add(R.mul(R.derive(a, "d/dt"), b),
                        R.mul(a, R.derive(b, "d/dt")))
            assert lhs == rhs


class TestSpecRoundTrip:
    @pytest.mark.parametrize("ring", [
        S.prime_field(2),
        S.prime_field(5),
        S.residue_ring(4),
        S.residue_ring(12),
        S.galois_field(2, 2),
        S.galois_field(3, 2),
        S.rationals(),
        S.polynomial_ring("int", ("x", "y")),
        S.polynomial_ring(3, ("x",)),
        S.rational_function_field(2, "t"),
    ])
    def test_spec_reconstructs_equal_ring(self, ring):
        spec = ring.spec()
        again = S.make_scalar_ring(spec)
        assert again == ring
        via_json = S.make_scalar_ring(spec.to_json())
        assert via_json == ring

    def test_unknown_kind_rejected(self):
        with pytest.raises(ParseError):
            S.make_scalar_ring({"kind": "mystery"})


@given(st.integers(-50, 50), st.integers(-50, 50))
@settings(max_examples=100, deadline=None)
def test_from_int_is_a_ring_map(a, b):
    F = S.prime_field(7)
    assert F.from_int(a + b) == F.add(F.from_int(a), F.from_int(b))
    assert F.from_int(a * b) == F.mul(F.from_int(a), F.from_int(b))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_gf4_distributes(a0, a1, b0, b1):
    F = S.galois_field(2, 2)
    a = (a0 % 2, a1 % 2)
    b = (b0 % 2, b1 % 2)
    c = F.parse("t")
    assert F.mul(F.add(a, b), c) == F.add(F.mul(a, c), F.mul(b, c))
