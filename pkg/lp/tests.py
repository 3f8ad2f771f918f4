from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from macwilliams.systems import GE, LE, LinearSystem, first_t_system

from .rounding import divisible_feasible, tighten_bounds
from .simplex import (
    RationalLinearProgram,
    certificate_from_json,
    certificate_to_json,
    certify_infeasible,
    check_duality,
    optimise,
    solve,
)


def even_13_5():
    return first_t_system(13, 2, 2, 4, k=5, forbidden_weights=(2, 4))


def projective_52_9():
    return first_t_system(52, 2, 8, 4, k=9, projective=True)


class SimplexTests(SimpleTestCase):
    def test_even_13_5_maximum_b1(self):
        system = even_13_5()
        outcome = optimise(system, "B1")
        self.assertTrue(outcome.is_optimal)
        self.assertEqual(outcome.value, Fraction(3, 8))
        lp = RationalLinearProgram.from_system(system, "B1")
        self.assertTrue(check_duality(lp, outcome))

    def test_empty_program(self):
        outcome = solve(RationalLinearProgram.from_system(LinearSystem(variables=[])))
        self.assertTrue(outcome.is_optimal)
        self.assertEqual(outcome.value, 0)

    def test_mixed_relations(self):
        system = LinearSystem(variables=["a", "b"])
        system.add({"a": 1, "b": 2}, LE, 4, label="r1")
        system.add({"a": 1}, LE, 3, label="r2")
        system.add({"a": 1, "b": -1}, GE, -1, label="r3")
        lp = RationalLinearProgram.from_system(system, {"a": 1, "b": 1})
        outcome = solve(lp)
        self.assertEqual(outcome.value, Fraction(7, 2))
        self.assertEqual(outcome.primal, {"a": 3, "b": Fraction(1, 2)})
        self.assertTrue(check_duality(lp, outcome))

    def test_minimization(self):
        system = LinearSystem(variables=["a", "b"])
        system.add({"a": 1, "b": 1}, GE, 2, label="cover")
        lp = RationalLinearProgram.from_system(system, {"a": 1, "b": 3}, maximize=False)
        outcome = solve(lp)
        self.assertEqual(outcome.value, 2)
        self.assertTrue(check_duality(lp, outcome))

    def test_free_variable(self):
        system = LinearSystem(variables=["z", "a"], free={"z"})
        system.add({"z": 1, "a": 1}, rhs=-3, label="fix")
        system.add({"a": 1}, LE, 0, label="zero")
        lp = RationalLinearProgram.from_system(system, {"z": 1})
        outcome = solve(lp)
        self.assertEqual(outcome.value, -3)
        self.assertTrue(check_duality(lp, outcome))

    def test_unbounded_ray(self):
        system = LinearSystem(variables=["a", "b"])
        system.add({"a": 1, "b": -1}, rhs=0, label="diag")
        lp = RationalLinearProgram.from_system(system, {"a": 1})
        outcome = solve(lp)
        self.assertTrue(outcome.is_unbounded)
        ray = outcome.ray
        self.assertGreater(lp.evaluate(ray), 0)
        self.assertEqual(ray["a"] - ray["b"], 0)
        self.assertTrue(all(x >= 0 for x in ray.values()))

    def test_projective_52_9_is_infeasible(self):
        system = projective_52_9()
        outcome = solve(RationalLinearProgram.from_system(system))
        self.assertTrue(outcome.is_infeasible)
        self.assertTrue(certify_infeasible(system, outcome.farkas))

    def test_published_multipliers(self):
        multipliers = {
            "MW0": Fraction(-80, 87),
            "MW1": Fraction(47, 609),
            "MW2": Fraction(-2, 609),
        }
        lp = RationalLinearProgram.from_system(projective_52_9())
        self.assertTrue(certify_infeasible(lp, multipliers))
        _, total = lp.combined(multipliers)
        self.assertEqual(total, Fraction(256, 609))

    def test_zero_multipliers_do_not_certify(self):
        self.assertFalse(certify_infeasible(projective_52_9(), {"MW0": 0}))

    def test_wrong_sign_on_inequality(self):
        system = LinearSystem(variables=["a"])
        system.add({"a": 1}, LE, -1, label="neg")
        self.assertTrue(certify_infeasible(system, {"neg": -1}))
        self.assertFalse(certify_infeasible(system, {"neg": 1}))

    def test_unknown_label(self):
        with self.assertRaises(ValidationError):
            certify_infeasible(projective_52_9(), {"nope": 1})

    def test_certificate_json(self):
        multipliers = {"MW0": Fraction(-80, 87), "MW1": Fraction(47, 609), "MW3": 0}
        data = certificate_to_json("farkas", multipliers)
        self.assertEqual(data["multipliers"]["MW0"], ["-80", "87"])
        self.assertNotIn("MW3", data["multipliers"])
        self.assertEqual(
            certificate_from_json(data),
            {"MW0": Fraction(-80, 87), "MW1": Fraction(47, 609)},
        )
        with self.assertRaises(ValidationError):
            certificate_from_json({"multipliers": {"MW0": ["1", "0"]}})

    def test_deterministic(self):
        a = solve(RationalLinearProgram.from_system(projective_52_9()))
        b = solve(RationalLinearProgram.from_system(projective_52_9()))
        self.assertEqual(a.farkas, b.farkas)


class TightenBoundsTests(SimpleTestCase):
    def test_even_13_5(self):
        result = tighten_bounds(even_13_5())
        self.assertTrue(result.feasible)
        expected = {
            "B1": (0, 0), "B2": (0, 0), "B3": (2, 4),
            "A6": (23, 24), "A8": (3, 6), "A10": (1, 4), "A12": (0, 1),
        }
        self.assertEqual(result.bounds, expected)

    def test_integral_optimum_needs_one_round(self):
        system = LinearSystem(variables=["a1", "a2"], steps={"a1": 1, "a2": 1})
        system.add({"a1": 1, "a2": 1}, rhs=4)
        result = tighten_bounds(system)
        self.assertEqual(result.rounds, 1)
        self.assertEqual(result.bounds, {"a1": (0, 4), "a2": (0, 4)})

    def test_round_limit_is_flagged(self):
        result = tighten_bounds(even_13_5(), max_rounds=1)
        self.assertTrue(result.exhausted)

    def test_projective_41_6(self):
        system = first_t_system(41, 2, 2, 4, k=6, projective=True, weights={20, 24, 26, 40})
        result = tighten_bounds(system)
        self.assertFalse(result.feasible)
        multipliers = certificate_from_json(result.certificate)
        self.assertTrue(certify_infeasible(result.system, multipliers))


class DivisibleFeasibleTests(SimpleTestCase):
    def test_no_projective_8_divisible_52(self):
        result = divisible_feasible(2, 8, 52, projective=True)
        self.assertFalse(result.feasible)
        self.assertIn(result.kind, ("farkas", "bounds"))
        if result.kind == "farkas":
            system = first_t_system(52, 2, 8, 4, projective=True)
            self.assertTrue(certify_infeasible(system, certificate_from_json(result.certificate)))

    def test_ternary_89_fails_power_check(self):
        result = divisible_feasible(3, 9, 89, projective=True)
        self.assertEqual(result.details["t"], 5)
        self.assertFalse(result.feasible)
        self.assertEqual(result.kind, "power")
        self.assertEqual(result.certificate["y"], "189")

    def test_affine_solid(self):
        result = divisible_feasible(2, 4, 8, k_range=range(1, 9), projective=True)
        self.assertTrue(result.feasible)
        self.assertEqual(result.to_dict()["feasible"], True)
