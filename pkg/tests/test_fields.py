from fractions import Fraction

import pytest

from leavitt import (
    FieldError,
    FieldMismatchError,
    GaussianRationals,
    OMEGA,
    PrimeField,
    QuadraticExtField,
    Rationals,
    parse_field_spec,
)

from conftest import ALL_FIELDS

Q = Rationals()
QI_ID = GaussianRationals(conjugation=False)
QI_CONJ = GaussianRationals(conjugation=True)
GF2, GF3, GF5, GF7, GF13 = (PrimeField(p) for p in (2, 3, 5, 7, 13))
GF4, GF9, GF25 = (QuadraticExtField(p) for p in (2, 3, 5))

FINITE = (GF2, GF3, GF5, GF4, GF9, GF25)


class TestArithmetic:
    def test_rational_add(self):
        assert Q.parse_literal("1/2") + Q.parse_literal("1/3") == Q.parse_literal("5/6")

    def test_gf5_inverse(self):
        assert GF5.from_int(2).inv() == GF5.from_int(3)

    def test_ext_generator_satisfies_modulus(self):
        # for p = 3 the modulus is t^2 - 2 (2 is the least non-residue)
        t = GF9.t
        assert t * t == GF9.from_int(2)
        # and for p = 2 it is t^2 + t + 1
        t4 = GF4.t
        assert t4 * t4 == t4 + GF4.one

    def test_inverses_exhaustive(self):
        for k in FINITE:
            for x in k.elements():
                if x:
                    assert x * x.inv() == k.one
                else:
                    with pytest.raises(ZeroDivisionError):
                        x.inv()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Q.one / Q.zero

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatchError):
            Q.one + GF3.one

    def test_gaussian_mul(self):
        i = QI_CONJ.i
        assert i * i == -QI_CONJ.one
        x = QI_CONJ.parse_literal("1+2i")
        y = QI_CONJ.parse_literal("3-i")
        assert x * y == QI_CONJ.parse_literal("5+5i")


class TestConjugation:
    def test_gaussian_conjugation(self):
        assert QI_CONJ.parse_literal("1+i").conj() == QI_CONJ.parse_literal("1-i")

    def test_identity_involutions(self):
        for k in (Q, QI_ID, GF2, GF3, GF5):
            x = k.sample(__import__("random").Random(1))
            assert x.conj() == x

    def test_frobenius_is_cubing_on_gf9(self):
        for x in GF9.elements():
            cube = x * x * x
            assert x.conj() == cube

    def test_frobenius_is_involution(self):
        for k in (GF4, GF9, GF25):
            for x in k.elements():
                assert x.conj().conj() == x

    def test_conj_laws(self, rng):
        for k in ALL_FIELDS:
            assert k.zero.conj() == k.zero
            assert k.one.conj() == k.one
            for _ in range(25):
                a, b = k.sample(rng), k.sample(rng)
                assert (a + b).conj() == a.conj() + b.conj()
                assert (a * b).conj() == a.conj() * b.conj()
                assert a.conj().conj() == a


EXPECTED_LEVELS = [
    (Q, OMEGA),
    (QI_CONJ, OMEGA),
    (QI_ID, 1),
    (GF2, 1),
    (GF3, 2),
    (GF5, 1),
    (GF7, 2),
    (GF13, 1),
    (GF4, 1),
    (GF9, 1),
    (GF25, 1),
]


def tuple_is_witness(k, tup):
    total = k.zero
    for x in tup:
        total = total + x.conj() * x
    return any(tup) and total == k.zero


class TestProperness:
    def test_levels(self):
        for k, level in EXPECTED_LEVELS:
            assert k.properness_level() == level, k.spec_string()

    def test_levels_against_search_oracle(self):
        # the exhaustive improper_tuple search must agree with the level
        for k, level in EXPECTED_LEVELS:
            if level is OMEGA:
                continue
            assert k.improper_tuple(level) is None
            witness = k.improper_tuple(level + 1)
            assert witness is not None and tuple_is_witness(k, witness)

    def test_downward_closure(self):
        for k, level in EXPECTED_LEVELS:
            top = 3 if level is OMEGA else min(level, 3)
            for n in range(1, top + 1):
                assert k.improper_tuple(n) is None
            if level is not OMEGA:
                for n in range(level + 1, level + 3):
                    witness = k.improper_tuple(n)
                    assert witness is not None and tuple_is_witness(k, witness)
                    assert len(witness) == n

    def test_gaussian_identity_witness(self):
        assert QI_ID.improper_tuple(2) == (QI_ID.one, QI_ID.i)

    def test_gf5_witness(self):
        assert GF5.improper_tuple(2) == (GF5.one, GF5.from_int(2))

    def test_rationals_always_none(self):
        for n in (1, 2, 3, 4, 5):
            assert Q.improper_tuple(n) is None

    def test_rationals_bounded_height_oracle(self):
        # no small-height rational tuple has vanishing sum of squares: each
        # square is non-negative and positive unless the entry is zero
        pool = [Fraction(a, b) for a in range(-2, 3) for b in (1, 2)]
        for x in pool:
            for y in pool:
                if x * x + y * y == 0:
                    assert x == 0 and y == 0


class TestLiterals:
    def test_round_trips(self, rng):
        for k in ALL_FIELDS:
            for _ in range(50):
                x = k.sample(rng)
                assert k.parse_literal(k.format(x)) == x

    def test_gaussian_forms(self):
        cases = ["0", "1", "-1", "i", "-i", "2i", "1+i", "1-i", "-1/2+3i", "3-2/5i"]
        for text in cases:
            x = QI_CONJ.parse_literal(text)
            assert QI_CONJ.format(x) == text

    def test_ext_forms(self):
        for text in ["0", "1", "2", "t", "2t", "1+t", "2+2t"]:
            x = GF9.parse_literal(text)
            assert GF9.format(x) == text

    def test_malformed(self):
        for k, bad in [(Q, "x"), (Q, "1/"), (GF3, "1/2"), (QI_ID, "1+"), (GF9, "i")]:
            with pytest.raises(FieldError):
                k.parse_literal(bad)


class TestSpecStrings:
    def test_parse_and_print(self):
        for text in ["Q", "Q[i]/id", "Q[i]/conj", "GF(3)", "GF(5)", "GF(2)", "GF(3,2)"]:
            assert parse_field_spec(text).spec_string() == text

    def test_rejects(self):
        for bad in ["R", "GF(4)", "GF(6)", "GF(3,3)", "Q[i]"]:
            with pytest.raises(FieldError):
                parse_field_spec(bad)

    def test_equality_is_structural(self):
        assert parse_field_spec("GF(3)") == PrimeField(3)
        assert PrimeField(3) != PrimeField(5)
        assert GaussianRationals(True) != GaussianRationals(False)
