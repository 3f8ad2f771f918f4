import os
from unittest import mock

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from django.urls import reverse
from hypothesis import given, settings, strategies as st

from qarith.exceptions import BudgetExceeded, UnsupportedExponent
from qarith.fields import field_for

from .expansion import (
    NEG_INF,
    Unsupported,
    ceil_qr,
    ceil_qr_lambda,
    delta_feasible,
    feasible_lengths,
    floor_qr,
    floor_qr_lambda,
    frobenius,
    known_fractional_lengths,
    multiset_feasible,
    sqr_expand,
    ward_decompose,
)


Q_VALUES = [2, 3, 4, 5, 7, 8, 9]


def _divisible_cardinalities_by_search(q, delta, v, n_max):
    """
    Búsqueda exhaustiva independiente: estados = número de puntos fuera de
    cada hiperplano de PG(v-1,q), módulo Δ. Un multiconjunto es Δ-divisible
    si todos esos números son ≡ 0.
    """
    F = field_for(q)
    points = list(F.points(v))
    hyperplanes = points
    steps = [
        tuple(1 if F.dot(P, H) else 0 for H in hyperplanes)
        for P in points
    ]
    zero = (0,) * len(hyperplanes)
    layer = {zero}
    found = [0]
    for n in range(1, n_max + 1):
        layer = {
            tuple((s + c) % delta for s, c in zip(state, step))
            for state in layer
            for step in steps
        }
        if zero in layer:
            found.append(n)
    return found


class ExpansionTests(SimpleTestCase):
    def test_documented_expansions(self):
        e = sqr_expand(11, 2, 2)
        self.assertEqual((e.digits, e.leading), ((1, 0), 1))
        e = sqr_expand(9, 2, 2)
        self.assertEqual((e.digits, e.leading), ((1, 1), -1))
        e = sqr_expand(137, 3, 3)
        self.assertEqual((e.digits, e.leading), ((2, 1, 2), -2))
        e = sqr_expand(0, 5, 3)
        self.assertEqual((e.digits, e.leading), ((0, 0, 0), 0))

    @given(
        st.integers(min_value=-10 ** 6, max_value=10 ** 6),
        st.sampled_from(Q_VALUES),
        st.integers(min_value=0, max_value=6),
    )
    def test_round_trip(self, n, q, r):
        e = sqr_expand(n, q, r)
        self.assertEqual(e.reconstruct(), n)
        self.assertTrue(all(0 <= a < q for a in e.digits))
        self.assertEqual(len(e.digits), r)

    def test_to_dict_is_json_friendly(self):
        data = sqr_expand(137, 3, 3).to_dict()
        self.assertEqual(data["leading"], "-2")
        self.assertEqual(data["base"], ["40", "39", "36", "27"])
        self.assertFalse(data["feasible"])


class FeasibilityTests(SimpleTestCase):
    def test_small_cases(self):
        self.assertFalse(multiset_feasible(9, 2, 2))
        self.assertTrue(multiset_feasible(0, 3, 4))
        self.assertFalse(multiset_feasible(-4, 2, 2))

    def test_feasible_sets(self):
        self.assertEqual(
            feasible_lengths(2, 2, 20),
            [0, 4, 6, 7, 8] + list(range(10, 21)),
        )
        self.assertEqual(
            feasible_lengths(2, 3, 60),
            [0, 8, 12, 14, 15, 16, 20, 22, 23, 24] + list(range(26, 33)) + list(range(34, 61)),
        )
        self.assertEqual(feasible_lengths(3, 1, 30), [0, 3, 4] + list(range(6, 31)))

    def test_frobenius_values(self):
        self.assertEqual(frobenius(2, 2), 9)
        for q in Q_VALUES:
            self.assertEqual(frobenius(q, 0), -1)
        self.assertEqual(frobenius(3, 3), 203)
        self.assertFalse(multiset_feasible(137, 3, 3))

    def test_frobenius_against_scan(self):
        for q in (2, 3, 4, 5):
            for r in range(0, 5):
                f = frobenius(q, r)
                window = range(0, f + q ** r + 1)
                infeasible = [n for n in window if not multiset_feasible(n, q, r)]
                self.assertEqual(max(infeasible, default=-1), f)
                for n in range(f + 1, f + q ** r + 1):
                    self.assertTrue(multiset_feasible(n, q, r))

    @settings(max_examples=200)
    @given(
        st.integers(min_value=0, max_value=5000),
        st.integers(min_value=0, max_value=5000),
        st.sampled_from(Q_VALUES),
        st.integers(min_value=0, max_value=4),
    )
    def test_semigroup_closure(self, n1, n2, q, r):
        if multiset_feasible(n1, q, r) and multiset_feasible(n2, q, r):
            self.assertTrue(multiset_feasible(n1 + n2, q, r))

    def test_agrees_with_exhaustive_search(self):
        # PG(2,2) ya realiza todas las cardinalidades 2- y 4-divisibles hasta 20.
        for r in (0, 1, 2):
            found = _divisible_cardinalities_by_search(2, 2 ** r, 3, 20)
            self.assertEqual(found, feasible_lengths(2, r, 20))


class RoundingTests(SimpleTestCase):
    def test_plane_cover_example(self):
        self.assertEqual(floor_qr(3 * 255, 7, 2, 2), 107)

    def test_zero_numerator(self):
        for q in (2, 3):
            for r in (0, 1, 2, 3):
                self.assertEqual(floor_qr(0, 5, q, r), 0)
                self.assertEqual(ceil_qr(0, 5, q, r), 0)

    def test_exponent_zero_is_ordinary_rounding(self):
        self.assertEqual(floor_qr(23, 4, 3, 0), 5)
        self.assertEqual(ceil_qr(23, 4, 3, 0), 6)

    def test_zero_or_negative_divisor_rejected(self):
        with self.assertRaises(ValidationError):
            floor_qr(10, 0, 2, 2)
        with self.assertRaises(ValidationError):
            ceil_qr(10, -3, 2, 2)

    @settings(max_examples=500)
    @given(
        st.integers(min_value=0, max_value=10 ** 5),
        st.integers(min_value=1, max_value=400),
        st.sampled_from([2, 3, 4, 5]),
        st.integers(min_value=0, max_value=3),
    )
    def test_monotone_chain(self, a, b, q, r):
        chain = [
            floor_qr(a, b, q, r + 1),
            floor_qr(a, b, q, r),
            a // b,
            -(-a // b),
            ceil_qr(a, b, q, r),
        ]
        self.assertEqual(chain, sorted(chain))

    def test_lambda_with_multiset_oracle_matches_floor(self):
        def excluded(n):
            return not multiset_feasible(n, 2, 2)

        for a in range(0, 300, 7):
            self.assertEqual(floor_qr_lambda(a, 7, 2, 2, 1, excluded), floor_qr(a, 7, 2, 2))
            self.assertEqual(ceil_qr_lambda(a, 7, 2, 2, 1, excluded), ceil_qr(a, 7, 2, 2))

    def test_lambda_large_delegates(self):
        def everything(n):
            return True

        self.assertEqual(floor_qr_lambda(3 * 255, 7, 2, 2, 4, everything), 107)

    def test_lambda_projective_example(self):
        projective_gaps = set(range(1, 7)) | set(range(9, 14))

        def excluded(n):
            return n in projective_gaps

        self.assertEqual(floor_qr_lambda(127 * 21, 7, 2, 2, 1, excluded), 381)

    def test_lambda_without_candidates(self):
        self.assertEqual(floor_qr_lambda(5, 7, 2, 2, 1, lambda n: True), NEG_INF)
        self.assertEqual(floor_qr_lambda(2 * 255, 7, 2, 2, 1, lambda n: True), NEG_INF)

    def test_lambda_stops_at_zero_quotient(self):
        self.assertEqual(floor_qr_lambda(5, 7, 2, 2, 1, lambda n: n != 5), 0)
        self.assertEqual(floor_qr_lambda(40, 7, 2, 2, 1, lambda n: n != 33), 1)

    def test_ceil_lambda_scan_budget(self):
        with mock.patch.dict(os.environ, {"DIVISIBLE_CODES_ROUNDING_SCAN_LIMIT": "50"}):
            with self.assertRaises(BudgetExceeded):
                ceil_qr_lambda(5, 7, 2, 2, 1, lambda n: True)


class DeltaReductionTests(SimpleTestCase):
    def test_decompositions(self):
        dec = ward_decompose(12, 2)
        self.assertEqual((dec.s, dec.e, dec.r), (3, 2, 2))
        dec = ward_decompose(27, 3)
        self.assertEqual((dec.s, dec.e, dec.r), (1, 3, 3))
        dec = ward_decompose(16, 4)
        self.assertEqual((dec.s, dec.e, dec.r), (1, 4, 2))
        dec = ward_decompose(5, 2)
        self.assertEqual((dec.s, dec.e), (5, 0))

    def test_delta_feasible(self):
        self.assertTrue(delta_feasible(12, 12, 2))
        self.assertFalse(delta_feasible(27, 12, 2))
        self.assertFalse(delta_feasible(13, 12, 2))
        self.assertTrue(delta_feasible(5, 4, 4))
        self.assertFalse(delta_feasible(3, 4, 4))

    def test_fractional_exponent(self):
        outcome = delta_feasible(5, 2, 4)
        self.assertIsInstance(outcome, Unsupported)
        self.assertFalse(outcome)
        with self.assertRaises(UnsupportedExponent):
            ward_decompose(2, 4).require_integral()

    def test_known_fractional_lengths(self):
        lengths = known_fractional_lengths(4, 2, 30)
        self.assertEqual(set(range(31)) - set(lengths), {1, 3})
        lengths = known_fractional_lengths(4, 8, 60)
        excluded = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 23, 25, 27, 33, 35, 43} | {2, 4, 6, 12, 14, 22}
        self.assertEqual(set(range(61)) - set(lengths), excluded)
        with self.assertRaises(UnsupportedExponent):
            known_fractional_lengths(8, 2, 10)


class LengthViewsTests(SimpleTestCase):
    def test_expand_endpoint(self):
        response = self.client.get(reverse("lengths:expand"), {"n": 9, "q": 2, "r": 2})
        self.assertEqual(response.status_code, 200)
        payload = response.json()
        self.assertTrue(payload["ok"])
        self.assertEqual(payload["expansion"]["leading"], "-1")

    def test_feasible_endpoint(self):
        response = self.client.get(reverse("lengths:feasible"), {"n": 11, "q": 2, "r": 2})
        self.assertEqual(response.json()["status"], "REALIZABLE")
        response = self.client.get(reverse("lengths:feasible"), {"n": 9, "q": 2, "r": 2})
        self.assertEqual(response.json()["status"], "EXCLUDED")

    def test_bad_parameters(self):
        response = self.client.get(reverse("lengths:expand"), {"n": "x", "q": 2, "r": 2})
        self.assertEqual(response.status_code, 400)
        self.assertFalse(response.json()["ok"])
