from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from django.urls import reverse
from hypothesis import given, settings, strategies as st

from exclusion.classify import classify_projective, load_data
from exclusion.criteria import cubic_terms
from lengths.expansion import POS_INF
from macwilliams.distributions import WeightDistribution

from .conditions import (
    dodunekov_check,
    even_subcode_check,
    spanned_by_min_weight_counts,
    ward_dimension_bound,
    weight_window,
)
from .packing import cover_bound, johnson_step, pack_bound
from .spreads import (
    DescentOracle,
    divisible_spread_bound,
    drake_freeman_bound,
    known_spread_bound,
    parametric_2_candidates,
    parametric_bound_2,
    parametric_bound_3,
    published_spread_rows,
    render_grid,
    spread_bound_report,
    spread_grid,
    spread_lower_bound,
    trivial_bound,
)
from .vsp import (
    improved_tail_violation,
    parse_vsp_type,
    tail_violation,
    vsp_feasible,
)


class SpreadBoundTests(SimpleTestCase):
    def test_lower_bound(self):
        self.assertEqual(spread_lower_bound(2, 11, 4), 129)
        self.assertEqual(spread_lower_bound(2, 15, 6), 513)
        self.assertEqual(spread_lower_bound(2, 8, 4), 17)

    def test_drake_freeman(self):
        self.assertEqual(drake_freeman_bound(5, 16, 6), 9765941)
        self.assertEqual(drake_freeman_bound(2, 15, 6), 516)
        self.assertEqual(drake_freeman_bound(2, 11, 4), 133)

    def test_parametric_2(self):
        self.assertEqual(parametric_bound_2(2, 15, 6), 515)
        self.assertEqual(parametric_bound_2(9, 18, 8), 3486784420)
        best = min(parametric_2_candidates(5, 15, 6), key=lambda c: c[2])
        self.assertEqual(best, (5, 26, 1953186))

    def test_parametric_2_at_y_equal_t_is_drake_freeman(self):
        checked = 0
        for q in [2, 3, 4, 5]:
            for t in [3, 4, 5]:
                for s in range(1, t):
                    v = 2 * t + s
                    at_t = [c for c in parametric_2_candidates(q, v, t) if c[0] == t]
                    if at_t:
                        self.assertEqual(at_t[0][2], drake_freeman_bound(q, v, t), (q, v, t))
                        checked += 1
        self.assertGreater(checked, 0)

    def test_parametric_3(self):
        self.assertEqual(parametric_bound_3(2, 11, 4), 133)
        # z = 0: coincide con la construcción
        self.assertEqual(parametric_bound_3(2, 9, 4), spread_lower_bound(2, 9, 4))
        self.assertEqual(parametric_bound_3(2, 8, 4), POS_INF)

    def test_parametric_3_minimal_z(self):
        # z = [s]_q + 1 - t + u con u >= 0: el mínimo admisible es max(0, [s]_q + 1 - t)
        report = spread_bound_report(2, 11, 4)
        self.assertEqual(report.upper["parametric_3"], {"value": 133, "z": 4})
        self.assertGreater(report.upper["parametric_3"]["value"], report.best)
        self.assertEqual(parametric_bound_3(2, 8, 3), 4 * 8 + 1 + 1)

    def test_divisible_bound(self):
        self.assertEqual(divisible_spread_bound(2, 11, 4), 132)
        self.assertEqual(divisible_spread_bound(2, 13, 5), 259)
        self.assertEqual(divisible_spread_bound(2, 8, 4), 17)

    def test_descent_chain_over_f8(self):
        oracle = DescentOracle(8, 4)
        self.assertTrue(oracle.is_excluded(1759, 2))
        self.assertTrue(oracle.is_excluded(18143, 3))
        self.assertTrue(oracle.is_excluded(177887))

    def test_oracle_never_excludes_realizable(self):
        for q, r, n_max in [(2, 2, 40), (2, 3, 90), (3, 1, 30), (4, 1, 30)]:
            oracle = DescentOracle(q, r)
            for n in classify_projective(q, r, n_max).realizable():
                self.assertFalse(oracle.is_excluded(n), (q, r, n))

    def test_report(self):
        report = spread_bound_report(2, 11, 4)
        self.assertEqual(report.lower, 129)
        self.assertEqual(report.best, 132)
        self.assertEqual(report.best_method, "divisible")
        self.assertEqual(report.upper["trivial"]["value"], 136)
        data = report.to_dict()
        self.assertEqual(data["best"], "132")
        self.assertEqual(data["upper"]["parametric_2"]["z"], 4)

    def test_report_without_parametric_2(self):
        data = spread_bound_report(2, 8, 4).to_dict()
        self.assertIsNone(data["upper"]["parametric_2"]["value"])
        self.assertEqual(data["best"], "17")

    def test_best_upper_at_least_lower(self):
        for q in [2, 3]:
            for t in [2, 3]:
                for rep in spread_grid(q, t, v_max=3 * t + 1):
                    self.assertLessEqual(rep.lower, rep.best, (q, rep.v, t))
                    self.assertLessEqual(rep.best, trivial_bound(q, rep.v, t))

    def test_render_grid(self):
        text = render_grid(spread_grid(2, 4, v_max=11))
        self.assertIn("132", text)
        self.assertIn("divisible", text)

    def test_published_rows(self):
        rows = published_spread_rows()
        self.assertEqual(len(rows), 22)
        for row in rows:
            self.assertEqual(spread_lower_bound(row["q"], row["v"], row["t"]), row["lower"], row)
        self.assertEqual(known_spread_bound(8, 12, 5)["upper"], 2097177)
        self.assertIsNone(known_spread_bound(2, 9, 4))

    def test_published_cubic_parameters(self):
        for q, delta, n, t in [(2, 8, 52, 3), (8, 64, 1759, 24)]:
            h, g2 = cubic_terms(n, q, delta, t)
            self.assertTrue(h >= 0 > g2, (q, n))

    def test_report_carries_published_row(self):
        report = spread_bound_report(2, 11, 4)
        self.assertEqual(report.known["upper"], report.best)

    def test_small_v_rejected(self):
        with self.assertRaises(ValidationError):
            spread_lower_bound(2, 5, 3)


class PackingTests(SimpleTestCase):
    def test_pack_bound(self):
        self.assertEqual(pack_bound(2, 8, 3, 3), 107)
        self.assertEqual(pack_bound(2, 8, 3, 0), 0)

    def test_cover_bound(self):
        self.assertEqual(cover_bound(2, 5, 2, 1), 11)

    def test_johnson_step(self):
        self.assertEqual(johnson_step(2, 7, 4, 3, 21), 381)
        self.assertEqual(johnson_step(2, 6, 4, 3, 9), 81)
        self.assertEqual(johnson_step(2, 7, 4, 3, 0), 0)

    def test_johnson_rejects_distance(self):
        with self.assertRaises(ValidationError):
            johnson_step(2, 7, 9, 3, 21)


class VspTests(SimpleTestCase):
    def check(self, text, q, v):
        return vsp_feasible(parse_vsp_type(text, q, v))

    def test_parse(self):
        vsp = parse_vsp_type("4^16 3^1 2^2 1^2", 2, 8)
        self.assertEqual(vsp.dims, {4: 16, 3: 1, 2: 2, 1: 2})
        self.assertEqual(vsp.present, [1, 2, 3, 4])
        self.assertEqual(str(vsp), "4^16 3^1 2^2 1^2")

    def test_parse_errors(self):
        for text in ["", "4^", "4-16", "2^1 2^3"]:
            with self.assertRaises(ValidationError):
                parse_vsp_type(text, 2, 8)
        with self.assertRaises(ValidationError):
            parse_vsp_type("9^1", 2, 8)

    def test_two_point_tail(self):
        verdict = self.check("4^16 3^1 2^2 1^2", 2, 8)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.condition, "prefix")
        self.assertEqual(verdict.details["n"], 2)

    def test_flattened_lines(self):
        verdict = self.check("4^17 3^35 2^2 1^5", 2, 9)
        self.assertEqual(verdict.condition, "prefix")
        self.assertEqual((verdict.details["n"], verdict.details["r"]), (11, 2))

    def test_spread(self):
        for q in [2, 3, 4]:
            self.assertTrue(self.check(f"2^{q * q + 1}", q, 4).passed)

    def test_point_count(self):
        self.assertEqual(self.check("2^4", 2, 4).condition, "points")

    def test_dimension(self):
        self.assertEqual(self.check("3^2 1^1", 2, 4).condition, "dimension")
        self.assertEqual(self.check("3^1 2^2 1^2", 2, 5).condition, "points")
        # 2 + 2 = 4 > 3: dos rectas disjuntas no caben en PG(2,2)
        self.assertEqual(self.check("2^2 1^1", 2, 3).condition, "dimension")

    def test_small_classification(self):
        for q in [2, 3]:
            for j in range(q * q + 2):
                self.assertTrue(self.check(f"2^{q * q + 1 - j} 1^{(q + 1) * j}", q, 4).passed, (q, j))
            self.assertTrue(self.check(f"3^1 1^{q ** 3}", q, 4).passed)

    def test_dimension_five_grid(self):
        q = 2
        self.assertTrue(self.check("4^1 1^16", q, 5).passed)
        for j in range(q ** 3 + 1):
            self.assertTrue(self.check(f"3^1 2^{q ** 3 - j} 1^{(q + 1) * j}", q, 5).passed, j)
        for j in range(q ** 3 + 2):
            self.assertTrue(self.check(f"2^{q ** 3 + 1 - j} 1^{q * q + (q + 1) * j}", q, 5).passed, j)

    def test_lines_in_pg4_need_enough_points(self):
        verdict = self.check("2^30 1^1", 3, 5)
        self.assertEqual(verdict.condition, "prefix")

    def test_excluded_types_in_pg7(self):
        for a, b, c in [
            (1, 33, 3), (4, 27, 2), (5, 24, 4), (7, 21, 1), (8, 18, 3),
            (11, 12, 2), (12, 9, 4), (14, 6, 1), (15, 3, 3),
        ]:
            verdict = self.check(f"4^{a} 3^{b} 2^{c}", 2, 8)
            self.assertEqual(verdict.condition, "prefix", (a, b, c))

    def test_two_disjoint_planes(self):
        verdict = self.check("3^7 2^3 1^5", 2, 6)
        self.assertEqual(verdict.condition, "structure")
        self.assertEqual(verdict.details["spaces"], 2)
        self.assertEqual(self.check("3^26 2^4 1^10", 3, 6).condition, "structure")

    def test_no_line_in_affine_size(self):
        verdict = self.check("4^16 3^1 2^1 1^5", 2, 8)
        self.assertEqual(verdict.condition, "structure")
        self.assertEqual(verdict.details["n"], 8)

    def test_facts_can_be_disabled(self):
        data = load_data()
        data["vsp_facts"] = {}
        verdict = vsp_feasible(parse_vsp_type("3^7 2^3 1^5", 2, 6), data)
        self.assertTrue(verdict.passed)

    def test_tail_conditions(self):
        self.assertEqual(tail_violation(2, 2, 3, 3), "i")
        self.assertEqual(tail_violation(2, 2, 3, 4), "iii")
        self.assertIsNone(tail_violation(2, 2, 3, 6))
        self.assertEqual(tail_violation(2, 1, 3, 3), "ii")
        self.assertIsNone(tail_violation(2, 2, 4, 5))
        self.assertEqual(tail_violation(2, 1, 3, 4), "iv")

    def test_improved_tail(self):
        self.assertIsNone(tail_violation(2, 2, 5, 17))
        self.assertEqual(improved_tail_violation(2, 2, 5, 17), "i")
        self.assertIsNone(improved_tail_violation(2, 2, 5, 21))
        self.assertIsNone(improved_tail_violation(2, 2, 4, 5))


class ConditionTests(SimpleTestCase):
    def test_ward_bound(self):
        b, m = weight_window([8, 16, 24, 32, 40], 8)
        self.assertEqual((b, m), (5, 5))
        self.assertEqual(ward_dimension_bound(2, 8, b, m), 20)
        for q, r in [(2, 3), (3, 2), (4, 2), (5, 1)]:
            self.assertEqual(ward_dimension_bound(q, q ** r, 1, 1), r + 1)

    def test_ward_bound_rejects_window(self):
        with self.assertRaises(ValidationError):
            ward_dimension_bound(2, 8, 2, 3)
        with self.assertRaises(ValidationError):
            weight_window([8, 12], 8)

    def test_dodunekov_rejects_32_10(self):
        dist = WeightDistribution.from_enumerator(2, 32, 10, {8: 61, 16: 899, 24: 63})
        result = dodunekov_check(dist, 8)
        self.assertFalse(result.passed)
        self.assertEqual(result.details["T"], 900)
        self.assertEqual(result.details["t"], 5)
        self.assertEqual((result.details["alpha"], result.details["beta"]), (4, 4))
        self.assertEqual(result.details["delta"], 16)

    def test_dodunekov_passes_50_8(self):
        dist = WeightDistribution.from_enumerator(2, 50, 8, {16: 5, 24: 210, 32: 40})
        result = dodunekov_check(dist, 8)
        self.assertTrue(result.passed)
        self.assertEqual(result.details["T"], 46)

    def test_dodunekov_requires_divisibility(self):
        dist = WeightDistribution.from_enumerator(2, 50, 8, {16: 5, 24: 210, 32: 40})
        with self.assertRaises(ValidationError):
            dodunekov_check(dist, 16)
        with self.assertRaises(ValidationError):
            dodunekov_check(dist, 6)

    def test_even_subcode(self):
        dist = WeightDistribution.from_enumerator(2, 50, 8, {16: 5, 24: 210, 32: 40})
        self.assertTrue(even_subcode_check(dist).passed)
        self.assertEqual(even_subcode_check(dist).details["even"], 256)
        odd = WeightDistribution.from_enumerator(2, 3, 2, {1: 3})
        self.assertFalse(even_subcode_check(odd).passed)
        ternary = WeightDistribution.from_enumerator(3, 3, 1, {3: 2})
        with self.assertRaises(ValidationError):
            even_subcode_check(ternary)

    def test_spanned_by_weight_eight(self):
        values = spanned_by_min_weight_counts(8, 2, 24)
        self.assertEqual(len(values), 29)
        self.assertEqual(
            spanned_by_min_weight_counts(8, 2, 24, max_components=2),
            [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 15,
             16, 17, 18, 21, 22, 25, 29, 30, 31, 33, 37, 45],
        )
        # 61 palabras de peso 8 no son posibles
        self.assertNotIn(61, values)

    def test_spanned_small_cases(self):
        self.assertEqual(spanned_by_min_weight_counts(4, 2, 4), [0, 1, 3, 7])
        self.assertEqual(spanned_by_min_weight_counts(8, 2, 7), [0])
        self.assertEqual(spanned_by_min_weight_counts(9, 3, 9), [0, 1, 4, 13])

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 3), st.integers(1, 4))
    def test_spanned_monotone_in_weight(self, a, extra):
        delta = 2 ** a
        small = set(spanned_by_min_weight_counts(delta, 2, delta * extra))
        large = set(spanned_by_min_weight_counts(delta, 2, delta * (extra + 1)))
        self.assertTrue(small <= large)


class ApplicationViewTests(SimpleTestCase):
    def test_spread_bound_endpoint(self):
        response = self.client.get(reverse("applications:spread-bound"), {"q": 2, "v": 11, "t": 4})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertTrue(data["ok"])
        self.assertEqual(data["report"]["best"], "132")

    def test_vsp_endpoint(self):
        response = self.client.get(
            reverse("applications:vsp-check"), {"q": 2, "v": 8, "type": "4^16 3^1 2^2 1^2"},
        )
        self.assertEqual(response.status_code, 200)
        self.assertFalse(response.json()["verdict"]["passed"])

    def test_vsp_endpoint_missing_type(self):
        response = self.client.get(reverse("applications:vsp-check"), {"q": 2, "v": 8})
        self.assertEqual(response.status_code, 400)
