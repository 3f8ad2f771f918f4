import itertools
import math

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .arithmetic import bracket, isqrt_ceil, isqrt_floor, krawtchouk, prime_power, qbin, snumb, vp
from .fields import PrimePowerField, field_for


FIELD_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


class BracketAndBinomialTests(SimpleTestCase):
    def test_bracket_values(self):
        self.assertEqual(bracket(8, 2), 255)
        self.assertEqual(bracket(0, 5), 0)
        self.assertEqual(bracket(4, 3), 40)

    def test_bracket_rejects_negative_length(self):
        with self.assertRaises(ValidationError):
            bracket(-1, 2)

    def test_qbin_values(self):
        self.assertEqual(qbin(3, 2, 2), 7)
        self.assertEqual(qbin(9, 0, 4), 1)
        self.assertEqual(qbin(4, 2, 2), 35)
        self.assertEqual(qbin(3, 5, 2), 0)
        self.assertEqual(qbin(3, -1, 2), 0)

    def test_qbin_symmetry_and_pascal_grid(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            for v in range(1, 13):
                for k in range(0, v + 1):
                    self.assertEqual(qbin(v, k, q), qbin(v, v - k, q))
                    self.assertEqual(
                        qbin(v, k, q),
                        qbin(v - 1, k - 1, q) + q ** k * qbin(v - 1, k, q),
                    )
                    self.assertEqual(
                        qbin(v, k, q),
                        q ** (v - k) * qbin(v - 1, k - 1, q) + qbin(v - 1, k, q),
                    )

    @given(st.integers(min_value=1, max_value=40), st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
    def test_bracket_matches_qbin(self, v, q):
        self.assertEqual(bracket(v, q), qbin(v, 1, q))
        self.assertEqual(bracket(v, q), qbin(v, v - 1, q))

    def test_snumb_sequences(self):
        self.assertEqual([snumb(2, i, 2) for i in range(3)], [7, 6, 4])
        self.assertEqual([snumb(3, i, 3) for i in range(4)], [40, 39, 36, 27])
        self.assertEqual(snumb(5, 5, 7), 7 ** 5)

    def test_snumb_domain(self):
        with self.assertRaises(ValidationError):
            snumb(2, 3, 2)


class KrawtchoukTests(SimpleTestCase):
    def test_constant_and_linear_terms(self):
        for j in range(8):
            self.assertEqual(krawtchouk(0, j, 7, 2), 1)
        self.assertEqual(krawtchouk(1, 0, 7, 2), 7)

    def test_simplex_code_identity(self):
        # Símplex [7,3]_2: siete palabras de peso 4; su dual es el Hamming [7,4]_2.
        A = [1, 0, 0, 0, 7, 0, 0, 0]
        B = [1, 0, 0, 7, 7, 0, 0, 1]
        for i in range(8):
            total = sum(krawtchouk(i, j, 7, 2) * A[j] for j in range(8))
            self.assertEqual(total, 2 ** 3 * B[i])


class NumberTheoryTests(SimpleTestCase):
    def test_valuations(self):
        self.assertEqual(vp(8, 2), 3)
        self.assertEqual(vp(0, 3), math.inf)
        self.assertEqual(vp(math.comb(5, 5), 2), 0)
        self.assertEqual(vp(-12, 2), 2)

    def test_prime_power(self):
        self.assertEqual(prime_power(8), (2, 3))
        self.assertEqual(prime_power(9), (3, 2))
        self.assertEqual(prime_power(7), (7, 1))
        for bad in (1, 6, 12):
            with self.assertRaises(ValidationError):
                prime_power(bad)

    @given(st.integers(min_value=0, max_value=10 ** 40))
    def test_integer_square_root_brackets(self, n):
        lo, hi = isqrt_floor(n), isqrt_ceil(n)
        self.assertLessEqual(lo * lo, n)
        self.assertLess(n, (lo + 1) ** 2)
        self.assertGreaterEqual(hi * hi, n)
        self.assertLessEqual(hi - lo, 1)


class FieldTests(SimpleTestCase):
    def test_field_axioms_exhaustive(self):
        for q in FIELD_ORDERS:
            F = field_for(q)
            elems = range(q)
            for a in elems:
                self.assertEqual(F.add(a, 0), a)
                self.assertEqual(F.mul(a, 1), a)
                self.assertEqual(F.add(a, F.neg(a)), 0)
                if a:
                    self.assertEqual(F.mul(a, F.inv(a)), 1)
                for b in elems:
                    self.assertEqual(F.add(a, b), F.add(b, a))
                    self.assertEqual(F.mul(a, b), F.mul(b, a))
                    self.assertIn(F.add(a, b), elems)
                    self.assertIn(F.mul(a, b), elems)
            for a, b, c in itertools.product(elems, repeat=3):
                self.assertEqual(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
                self.assertEqual(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
                self.assertEqual(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))

    def test_f4_reduction(self):
        F = PrimePowerField(4, [1, 1, 1])
        x = F.element(2)
        self.assertEqual((x * x).value, 3)
        self.assertEqual((x * x * x).value, 1)

    def test_default_moduli(self):
        self.assertEqual(field_for(4).modulus, (1, 1, 1))
        self.assertEqual(field_for(8).modulus, (1, 1, 0, 1))
        self.assertEqual(field_for(9).modulus, (1, 0, 1))

    def test_reducible_modulus_rejected(self):
        with self.assertRaises(ValidationError):
            PrimePowerField(4, [1, 0, 1])  # x^2 + 1 = (x + 1)^2 sobre F_2

    def test_element_operators(self):
        F = field_for(9)
        for a in F.elements():
            if a:
                self.assertEqual((a * a.inverse()).value, 1)
                self.assertEqual((a / a).value, 1)
            self.assertEqual((a - a).value, 0)
            self.assertEqual((a ** 8).value, 1 if a else 0)

    def test_normalize_point_examples(self):
        F3 = field_for(3)
        self.assertEqual(F3.normalize_point((2, 1, 0)), (1, 2, 0))
        self.assertEqual(F3.normalize_point((1, 0, 1)), (1, 0, 1))
        with self.assertRaises(ValidationError):
            F3.normalize_point((0, 0, 0))

    def test_normalize_point_orbits(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            F = field_for(q)
            for vec in itertools.product(range(q), repeat=4):
                if not any(vec):
                    continue
                rep = F.normalize_point(vec)
                self.assertEqual(F.normalize_point(rep), rep)
                for c in range(1, q):
                    self.assertEqual(F.normalize_point(F.scale(c, vec)), rep)

    def test_points_count(self):
        for q in (2, 3, 4):
            for v in range(1, 5):
                pts = list(field_for(q).points(v))
                self.assertEqual(len(pts), bracket(v, q))
                self.assertEqual(len(set(pts)), len(pts))

    @settings(max_examples=50)
    @given(st.sampled_from(FIELD_ORDERS), st.data())
    def test_power_laws(self, q, data):
        F = field_for(q)
        a = data.draw(st.integers(min_value=1, max_value=q - 1))
        e = data.draw(st.integers(min_value=-20, max_value=20))
        self.assertEqual(F.mul(F.pow(a, e), F.pow(a, -e)), 1)
        self.assertEqual(F.pow(a, q - 1), 1)
