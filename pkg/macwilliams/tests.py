from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from qarith.exceptions import InexactDivision

from .distributions import (
    Spectrum,
    WeightDistribution,
    distribution_from_spectrum,
    macwilliams_transform,
    spectrum_from_distribution,
)
from .enumeration import enumerate_integer_solutions
from .systems import (
    GE,
    LinearSystem,
    first_t_system,
    matrix_rank,
    power_moments,
    power_moments_q2,
    solve_standard_equations,
    standard_equations,
)


def even_13_5(a6, a8, a10, a12):
    return WeightDistribution.from_enumerator(2, 13, 5, {6: a6, 8: a8, 10: a10, 12: a12})


class TransformTests(SimpleTestCase):
    def test_even_codes_of_length_13(self):
        B = macwilliams_transform(even_13_5(24, 3, 4, 0))
        self.assertEqual(B.A, (1, 0, 0, 4, 30, 57, 36, 36, 57, 30, 4, 0, 0, 1))
        self.assertEqual(B.k, 8)
        B = macwilliams_transform(even_13_5(23, 6, 1, 1))
        self.assertEqual(B.A, (1, 0, 0, 2, 40, 39, 46, 46, 39, 40, 2, 0, 0, 1))

    def test_transform_is_an_involution(self):
        A = even_13_5(24, 3, 4, 0)
        self.assertEqual(macwilliams_transform(macwilliams_transform(A)), A)

    def test_trivial_code(self):
        zero = WeightDistribution(q=3, n=4, k=0, A=(1, 0, 0, 0, 0))
        full = macwilliams_transform(zero)
        self.assertEqual(full.k, 4)
        self.assertEqual(sum(full.A), 3 ** 4)

    def test_invalid_distribution_is_rejected(self):
        bogus = WeightDistribution.from_enumerator(2, 7, 3, {3: 7})
        with self.assertRaises(InexactDivision):
            macwilliams_transform(bogus)

    def test_length_must_match(self):
        with self.assertRaises(ValidationError):
            WeightDistribution(q=2, n=3, k=1, A=(1, 1))

    def test_validity_and_json(self):
        A = even_13_5(24, 3, 4, 0)
        self.assertTrue(A.is_valid())
        self.assertTrue(A.is_divisible_by(2))
        self.assertFalse(A.is_divisible_by(4))
        self.assertEqual(WeightDistribution.from_json(A.to_json()), A)
        self.assertEqual(A.enumerator(), {0: 1, 6: 24, 8: 3, 10: 4})
        broken = WeightDistribution.from_enumerator(3, 4, 2, {3: 3})
        self.assertIn("Los A_i (i >= 1) deben ser múltiplos de q-1.", broken.errors())


class SpectrumTests(SimpleTestCase):
    def test_simplex(self):
        simplex = WeightDistribution.from_enumerator(2, 7, 3, {4: 7})
        sp = spectrum_from_distribution(simplex)
        self.assertEqual(sp.support(), {3: 7})
        self.assertEqual(sp.errors(), [])
        self.assertEqual(distribution_from_spectrum(sp), simplex)

    def test_hill_cap(self):
        hill = WeightDistribution.from_enumerator(3, 56, 6, {36: 616, 45: 112})
        sp = spectrum_from_distribution(hill)
        self.assertEqual(sp.support(), {20: 308, 11: 56})
        self.assertEqual(sp.errors(), [])

    def test_spanning_is_required(self):
        with self.assertRaises(ValidationError):
            distribution_from_spectrum(Spectrum(q=2, k=2, n=2, a=(0, 2, 1)))


class FirstEquationsTests(SimpleTestCase):
    def test_projective_52_9_rows(self):
        system = first_t_system(52, 2, 8, 4, k=9, projective=True)
        self.assertEqual([c.rhs for c in system.constraints], [511, 13260, 168402, 1392300])
        self.assertEqual(system.constraints[3].coefficients["B3"], -64)
        self.assertNotIn("B1", system.variables)
        self.assertNotIn("B2", system.variables)
        self.assertEqual(system.meta["weights"], [8, 16, 24, 32, 40, 48])

    def test_even_13_5_rows(self):
        system = first_t_system(13, 2, 2, 4, k=5, forbidden_weights=(2, 4))
        self.assertEqual([c.rhs for c in system.constraints], [31, 195, 546, 858])
        known_point = {
            "B1": Fraction(3, 8), "B2": 0, "B3": 0,
            "A6": Fraction(109, 4), "A8": 0, "A10": Fraction(13, 4), "A12": Fraction(1, 2),
        }
        for c in system.constraints[:2]:
            self.assertTrue(c.satisfied(known_point))

    def test_actual_codes_satisfy_system(self):
        system = first_t_system(13, 2, 2, 4, k=5, forbidden_weights=(2, 4))
        for A, b3 in ((even_13_5(24, 3, 4, 0), 4), (even_13_5(23, 6, 1, 1), 2)):
            values = {f"A{w}": a for w, a in A.enumerator().items() if w}
            values.update({"B1": 0, "B2": 0, "B3": b3})
            self.assertTrue(system.satisfied(values))

    def test_dimension_free_mode(self):
        system = first_t_system(52, 2, 8, 4, projective=True)
        self.assertIn("y", system.variables)
        self.assertIn("x3", system.variables)
        self.assertNotIn("y", system.steps)
        # Con k = 9: y = 2^6 y x3 = 0 (un [52,9] proyectivo sin B3).
        values = {"y": 64, "x3": 0}
        row0 = system.constraints[0]
        self.assertEqual(row0.coefficients["y"], -8)
        self.assertEqual(row0.rhs, -1)
        self.assertEqual(row0.lhs(values), -512)

    def test_t_out_of_range(self):
        with self.assertRaises(ValidationError):
            first_t_system(5, 2, 1, 0, k=2)


class PowerMomentTests(SimpleTestCase):
    @settings(max_examples=40)
    @given(st.integers(min_value=5, max_value=40), st.integers(min_value=1, max_value=12))
    def test_binary_moments_match_closed_forms(self, n, k):
        rows = {c.label: c for c in power_moments_q2(n, k, 5).constraints}
        h = Fraction(2) ** k
        self.assertEqual(rows["PM0"].rhs, h - 1)

        pm1 = rows["PM1"]
        self.assertEqual(pm1.coefficients.get("B1"), h / 2)
        self.assertEqual(pm1.rhs, h / 2 * n)

        pm2 = rows["PM2"]
        self.assertEqual(pm2.coefficients.get("B2"), -h / 2)
        self.assertEqual(pm2.coefficients.get("B1"), h / 2 * n)
        self.assertEqual(pm2.rhs, h / 2 * Fraction(n * (n + 1), 2))

        pm3 = rows["PM3"]
        self.assertEqual(pm3.coefficients.get("B3"), 3 * h / 4)
        self.assertEqual(pm3.coefficients.get("B2"), -3 * n * h / 4)
        self.assertEqual(pm3.coefficients.get("B1"), h / 4 * Fraction(3 * n * n + 3 * n - 2, 2))
        self.assertEqual(pm3.rhs, h / 4 * Fraction(n * n * (n + 3), 2))

        pm4 = rows["PM4"]
        g = h / 16
        self.assertEqual(pm4.coefficients.get("B4"), -24 * g)
        self.assertEqual(pm4.coefficients.get("B3"), 24 * n * g)
        self.assertEqual(pm4.coefficients.get("B2"), -4 * (3 * n * n + 3 * n - 4) * g)
        self.assertEqual(pm4.coefficients.get("B1"), 4 * (n ** 3 + 3 * n * n - 2 * n) * g)
        self.assertEqual(pm4.rhs, g * (n ** 4 + 6 * n ** 3 + 3 * n * n - 2 * n))

    def test_fourth_moment_of_single_coordinate_code(self):
        # [5,1] generado por e1: A1 = 1, dual con B_j = C(4, j)
        pm4 = {c.label: c for c in power_moments_q2(5, 1, 5).constraints}["PM4"]
        self.assertEqual(pm4.coefficients["B1"], 95)
        values = {f"A{w}": 0 for w in range(1, 6)}
        values.update({"A1": 1, "B1": 4, "B2": 6, "B3": 4, "B4": 1})
        self.assertTrue(pm4.satisfied(values))

    def test_moments_hold_for_simplex(self):
        system = power_moments(7, 3, 2, 5)
        values = {"A4": 7, "B1": 0, "B2": 0, "B3": 7, "B4": 7}
        self.assertTrue(all(c.satisfied(values) for c in system.constraints))

    def test_moments_span_macwilliams_rows(self):
        n, k, q, t = 11, 4, 3, 4
        moments = power_moments(n, k, q, t)
        mw = first_t_system(n, q, 1, t, k=k)
        names = [f"A{w}" for w in range(1, n + 1)] + ["B1", "B2", "B3"]
        rows = moments.rows(names) + mw.rows(names)
        self.assertEqual(matrix_rank(rows), t)

    def test_binary_depth_limit(self):
        with self.assertRaises(ValidationError):
            power_moments_q2(10, 3, 6)


class StandardEquationTests(SimpleTestCase):
    def test_ternary_eight_points(self):
        self.assertEqual(
            solve_standard_equations(8, 3, support=[2, 5], lambdas={1: 8}),
            [(4, {2: 32, 5: 8})],
        )

    def test_twenty_one_points(self):
        self.assertEqual(
            solve_standard_equations(21, 2, support=[9, 13], lambdas={1: 21}),
            [(6, {9: 42, 13: 21})],
        )

    def test_twenty_one_points_spectrum_in_dimension_six(self):
        system = standard_equations(21, 2, 6, lambdas={1: 21}, support=[9, 13])
        self.assertTrue(system.satisfied({"a9": 42, "a13": 21}))
        self.assertFalse(system.satisfied({"a9": 42, "a13": 12}))
        self.assertEqual(system.constraints[0].rhs, 63)

    def test_two_skew_subspaces(self):
        # Dos subespacios disjuntos de dimensión r+1: n = 2[r+1]_q.
        for q, r in ((2, 1), (2, 2), (3, 1)):
            b = (q ** r - 1) // (q - 1)
            c = (q ** (r + 1) - 1) // (q - 1)
            found = solve_standard_equations(
                2 * c, q, support=[2 * b, b + c], lambdas={1: 2 * c}, k_values=range(2, 2 * r + 5),
            )
            self.assertEqual(found, [(2 * r + 2, {2 * b: (q ** (r + 1) - 1) * c, b + c: 2 * c})])

    def test_double_point_shifts_second_equation(self):
        # Un punto doble añade q^{k-2}·C(2,2) al segundo momento.
        system = standard_equations(8, 3, 4, lambdas={1: 6, 2: 1}, support=[2, 5])
        self.assertEqual(system.constraints[2].rhs, 28 * 4 + 9)

    def test_dimension_one_rejected(self):
        with self.assertRaises(ValidationError):
            standard_equations(3, 2, 1)


class EnumerationTests(SimpleTestCase):
    def test_even_13_5(self):
        system = first_t_system(13, 2, 2, 4, k=5, forbidden_weights=(2, 4))
        found = enumerate_integer_solutions(system)
        keys = ("B1", "B2", "B3", "A6", "A8", "A10", "A12")
        self.assertEqual(
            sorted(tuple(s[v] for v in keys) for s in found),
            [(0, 0, 2, 23, 6, 1, 1), (0, 0, 4, 24, 3, 4, 0)],
        )

    def test_seventeen_projective_points(self):
        found = {}
        for k in range(1, 18):
            system = first_t_system(17, 2, 4, 4, k=k, projective=True)
            for solution in enumerate_integer_solutions(system):
                found[k] = solution
        self.assertEqual(sorted(found), [6, 7, 8])
        self.assertEqual(found[6], {"A4": 2, "A8": 49, "A12": 12, "A16": 0, "B3": 6})
        self.assertEqual(found[7], {"A4": 7, "A8": 95, "A12": 25, "A16": 0, "B3": 2})
        self.assertEqual(found[8], {"A4": 17, "A8": 187, "A12": 51, "A16": 0, "B3": 0})

    def test_infeasible_system(self):
        system = first_t_system(52, 2, 8, 4, k=10, projective=True)
        self.assertEqual(enumerate_integer_solutions(system), [])

    def test_inconsistent_equalities(self):
        system = LinearSystem(variables=["a1"], steps={"a1": 1})
        system.add({"a1": 1}, rhs=2)
        system.add({"a1": 2}, rhs=3)
        self.assertEqual(enumerate_integer_solutions(system), [])

    def test_explicit_bounds_and_inequalities(self):
        system = LinearSystem(variables=["a1", "a2"], steps={"a1": 1, "a2": 1})
        system.add({"a1": 1, "a2": 1}, rhs=4)
        system.add({"a1": 1}, GE, 1)
        found = enumerate_integer_solutions(system, bounds={"a2": (0, 10)})
        self.assertEqual(sorted(s["a1"] for s in found), [1, 2, 3, 4])


class LinearSystemTests(SimpleTestCase):
    def test_unknown_variable(self):
        system = LinearSystem(variables=["A1"])
        with self.assertRaises(ValidationError):
            system.add({"B1": 1}, rhs=0)

    def test_unknown_relation(self):
        system = LinearSystem(variables=["A1"])
        with self.assertRaises(ValidationError):
            system.add({"A1": 1}, "<>", 0)

    def test_copy_is_independent(self):
        system = first_t_system(13, 2, 2, 3, k=5)
        clone = system.copy()
        clone.add({"A2": 1}, GE, 1)
        self.assertEqual(len(system.constraints), 3)
        self.assertEqual(system.rank(), 3)
        self.assertEqual(system.to_dict()["constraints"][0]["rhs"], "31")
