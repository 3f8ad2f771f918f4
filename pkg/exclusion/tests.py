from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, TestCase, tag
from django.urls import reverse
from hypothesis import given, settings, strategies as st

from geometry.constructions import affine, simplex
from geometry.multisets import hyperplane_multiplicities
from qarith.arithmetic import bracket

from .classify import (
    base_examples,
    classify_multiset_lambda,
    classify_projective,
    compress,
    load_data,
    render_table,
    verify_table,
)
from .criteria import (
    attainable_hyperplane_values,
    cubic_condition,
    descent,
    interval_exclusion,
    linear_condition,
    quadratic_case,
    quadratic_condition,
    tau,
    verify_certificate,
)
from .models import ClassificationRun, LengthVerdict


Status = LengthVerdict.Status


def not_excluded(table):
    return lambda m: not table.is_excluded(m)


def spans(*ranges):
    values = []
    for item in ranges:
        low, high = item if isinstance(item, tuple) else (item, item)
        values.extend(range(low, high + 1))
    return sorted(values)


def closed_exclusion(n, q, r, lower):
    delta = q ** r
    attainable = attainable_hyperplane_values(n, q, r, lower_oracle=not_excluded(lower))
    return (
        interval_exclusion(n, q, r)
        or linear_condition(n, q, delta, attainable)
        or quadratic_condition(n, q, delta)
        or cubic_condition(n, q, delta)
        or descent(n, q, r, attainable)
    )


class LinearConditionTests(SimpleTestCase):
    def test_attainable_values_for_nine(self):
        lower = classify_projective(2, 1, 40, use_lp=False)
        self.assertEqual(attainable_hyperplane_values(9, 2, 2, lower_oracle=not_excluded(lower)), [5])

    def test_attainable_values_for_thirty_three(self):
        lower = classify_projective(2, 2, 40, use_lp=False)
        self.assertEqual(attainable_hyperplane_values(33, 2, 3, lower_oracle=not_excluded(lower)), [17, 25])

    def test_simplex_complement_case(self):
        self.assertEqual(attainable_hyperplane_values(8, 2, 3), [0])

    def test_linear_examples(self):
        cert = linear_condition(9, 2, 4, [5])
        self.assertEqual((cert["u"], cert["m"]), (5, 1))
        cert = linear_condition(33, 2, 8, [17, 25])
        self.assertEqual((cert["u"], cert["m"]), (17, 2))
        self.assertIsNone(linear_condition(0, 2, 4, []))
        self.assertIsNone(linear_condition(8, 2, 8, [0]))

    def test_empty_attainable_set_excludes(self):
        cert = linear_condition(1, 2, 2, [])
        self.assertEqual((cert["u"], cert["m"]), (1, 0))


class QuadraticConditionTests(SimpleTestCase):
    def test_first_gaps_of_four_divisible_sets(self):
        excluded = {n for n in range(1, 31) if quadratic_condition(n, 2, 4)}
        self.assertEqual(excluded, set(range(1, 7)) | set(range(10, 14)))

    def test_m_five_for_sixteen(self):
        for n in range(133, 155):
            self.assertEqual(quadratic_case(n, 2, 16, 5), "a", n)
        self.assertIsNone(quadratic_case(155, 2, 16, 5))

    def test_tau_vanishes_at_single_value(self):
        for q, delta in [(2, 4), (2, 8), (3, 9), (4, 16), (5, 25)]:
            zeros = [u for u in range(0, 3 * delta) if tau(u, delta, 1, q) == 0]
            self.assertEqual(zeros, [(delta - 1) // (q - 1)])

    def test_certificate_fields(self):
        cert = quadratic_condition(12, 2, 4)
        self.assertEqual(cert["kind"], "quadratic")
        self.assertEqual(cert["u"] + cert["m"] * 4, 12)
        self.assertEqual(cert["tau"], tau(cert["u"], 4, cert["m"], 2))


class CubicConditionTests(SimpleTestCase):
    def test_sixteen_divisible(self):
        for n in [33, 66, 99, 132, 166, 200, 235]:
            self.assertIsNotNone(cubic_condition(n, 2, 16), n)

    def test_fifty_two(self):
        cert = cubic_condition(52, 2, 8)
        self.assertEqual((cert["t"], cert["h"], cert["g2"]), (3, 4, -4))

    def test_thirty_two_divisible(self):
        for n in [325, 390, 456, 521, 587, 652, 718, 784, 850, 917, 985]:
            self.assertIsNotNone(cubic_condition(n, 2, 32), n)

    def test_realizable_lengths_not_excluded(self):
        for n in [15, 16, 30, 31, 32, 45, 48, 49, 50, 51, 60]:
            self.assertIsNone(cubic_condition(n, 2, 8), n)


class IntervalTests(SimpleTestCase):
    def test_three_ranges_for_eight(self):
        excluded = [n for n in range(1, 61) if interval_exclusion(n, 2, 3)]
        self.assertEqual(excluded, list(range(1, 15)) + list(range(17, 30)) + list(range(33, 45)))

    def test_ovoid_case(self):
        self.assertEqual(interval_exclusion(5, 3, 1)["kind"], "interval")
        self.assertIsNone(interval_exclusion(9, 3, 1))
        self.assertIsNone(interval_exclusion(8, 3, 1))

    def test_simplex_never_excluded(self):
        for q in [2, 3, 4, 5]:
            for r in [1, 2, 3]:
                self.assertIsNone(interval_exclusion(bracket(r + 1, q), q, r))


class ClassificationTests(SimpleTestCase):
    def test_q2_r1(self):
        table = classify_projective(2, 1, 20, cross_check=True)
        self.assertEqual(table.realizable(), list(range(3, 21)))
        self.assertEqual(table.excluded(), [1, 2])

    def test_q2_r2(self):
        table = classify_projective(2, 2, 30, cross_check=True)
        self.assertEqual(table.realizable(), [7, 8] + list(range(14, 31)))
        self.assertEqual(table.excluded(), list(range(1, 7)) + list(range(9, 14)))
        self.assertEqual(table.open(), [])

    def test_q2_r3(self):
        table = classify_projective(2, 3, 80, cross_check=True)
        expected = [15, 16, 30, 31, 32] + list(range(45, 52)) + list(range(60, 81))
        self.assertEqual(table.realizable(), expected)
        self.assertEqual(table.open(), [])
        self.assertEqual(table[59].status, Status.EXCLUDED)
        self.assertEqual(table[52].criterion, "cubic")

    def test_q2_r4_open_lengths(self):
        table = classify_projective(2, 4, 310)
        self.assertEqual(table.open(), [
            130, 163, 164, 165, 185, 215, 216, 232, 233, 244,
            245, 246, 247, 274, 275, 277, 278, 306, 309,
        ])
        self.assertEqual(table[131].status, Status.EXCLUDED)

    def test_q3_r1(self):
        table = classify_projective(3, 1, 30, cross_check=True)
        self.assertEqual(table.realizable(), [4] + list(range(8, 31)))

    def test_q3_r2_open_lengths(self):
        table = classify_projective(3, 2, 130)
        self.assertEqual(table.open(), [70, 77, 99, 100, 101, 102, 113, 114, 115, 128])
        self.assertEqual(table[89].criterion, "lp")
        self.assertEqual(table[126].status, Status.REALIZABLE)
        self.assertIn(126, dict(base_examples(3, 2)))

    def test_q4_r1(self):
        table = classify_projective(4, 1, 30, cross_check=True)
        self.assertEqual(table.realizable(), [5, 10, 15, 16, 17] + list(range(20, 31)))
        self.assertEqual(table.open(), [])

    def test_q5_r1(self):
        table = classify_projective(5, 1, 45, cross_check=True)
        self.assertEqual(
            table.realizable(),
            [6, 12, 18, 24, 25, 26, 30, 31, 32, 36, 37, 38, 39] + list(range(41, 46)),
        )
        self.assertEqual(table.open(), [40])

    def test_no_open_lengths_below_threshold(self):
        for q, r in [(2, 1), (2, 2), (2, 3), (3, 1), (4, 1), (5, 1)]:
            table = classify_projective(q, r, r * q ** (r + 1))
            self.assertEqual(table.open(), [], (q, r))

    def test_certificates_verify(self):
        for q, r, n_max in [(2, 2, 30), (2, 3, 80), (3, 1, 30), (4, 1, 30)]:
            self.assertEqual(verify_table(classify_projective(q, r, n_max)), [], (q, r))

    def test_tampered_certificate_fails(self):
        table = classify_projective(2, 2, 30)
        cert = dict(table[9].certificate)
        self.assertTrue(verify_certificate(cert, 9, 2, 2))
        self.assertFalse(verify_certificate(cert, 7, 2, 2))
        with self.assertRaises(ValidationError):
            verify_certificate({"kind": "unknown"}, 9, 2, 2)

    def test_witness_spectra_are_attainable(self):
        lower = classify_projective(2, 1, 20, use_lp=False)
        for M in [simplex(3, 2), affine(4, 2)]:
            attainable = attainable_hyperplane_values(M.size, 2, 2, lower_oracle=not_excluded(lower))
            values = {m for _, m in hyperplane_multiplicities(M) if m < M.size}
            self.assertTrue(values <= set(attainable), (M, values, attainable))

    def test_witness_parts_sum_to_n(self):
        table = classify_projective(2, 3, 80)
        for n in table.realizable():
            self.assertEqual(sum(p["n"] for p in table[n].witness["parts"]), n)

    def test_base_examples_include_data(self):
        data = load_data()
        sizes = dict(base_examples(2, 3, data))
        self.assertEqual(sizes[15], "simplex")
        self.assertEqual(sizes[49], "affine-switching")
        self.assertIn(50, sizes)
        self.assertIn(21, dict(base_examples(4, 1, data)))

    def test_out_of_range(self):
        table = classify_projective(2, 1, 10)
        with self.assertRaises(ValidationError):
            table[11]


@tag("slow")
class PublishedTableTests(SimpleTestCase):
    def test_q4_r2(self):
        table = classify_projective(4, 2, 335)
        self.assertEqual(table.excluded(), spans(
            (1, 20), (22, 41), 43, (44, 62), 65, (66, 83), 86, (87, 104), 107, 108,
            (109, 125), 130, (131, 146), 152, (153, 167), (174, 188), (196, 209),
            (218, 230), (240, 250), (262, 271), (284, 292), (306, 312), (329, 332),
        ))
        listed_open = spans(
            129, 150, 151, 172, 173, (193, 195), (215, 217), (236, 239), 251, 258, 259,
            261, 272, 279, 280, 282, 283, 293, 301, 305, 313, 314, 322, 326, (333, 335),
        )
        # 327 y 328 sin ejemplo base conocido
        self.assertEqual(table.open(), sorted(listed_open + [327, 328]))
        self.assertEqual(sorted(p["n"] for p in table[304].witness["parts"]), [304])

    def test_q2_r5(self):
        table = classify_projective(2, 5, 1185, use_lp=False)
        self.assertEqual(table.excluded(), spans(
            (1, 62), (65, 125), (129, 188), (193, 251), (257, 314), (324, 377),
            (390, 440), (456, 502), (521, 565), (587, 627), (652, 690), (718, 752),
            (784, 814), (850, 876), (917, 937), (985, 997),
        ))

        listed_open = spans(
            322, 323, (385, 389), (449, 454), 503, (513, 517), 520, 566, (577, 580),
            (584, 586), 628, 629, (641, 642), (648, 651), 691, 692, 705, (712, 717),
            (753, 755), (776, 779), (781, 783), (815, 818), (840, 842), (846, 849),
            (877, 881), 904, 905, (911, 916), (938, 944), 968, (976, 984), (998, 1007),
            (1057, 1070), (1121, 1133), 1185,
        )
        sums = [385, 449, 513, 577, 641, 642, 705, 776, 840, 904, 968]
        self.assertEqual(table.open(), sorted(set(listed_open) - set(sums) | {643}))
        for n in sums:
            self.assertEqual(table[n].status, Status.REALIZABLE, n)
        self.assertEqual(sorted(p["n"] for p in table[385].witness["parts"]), [64, 321])
        self.assertEqual(sorted(p["n"] for p in table[642].witness["parts"]), [321, 321])
        self.assertEqual(sorted(p["n"] for p in table[776].witness["parts"]), [321, 455])
        self.assertEqual(table[379].status, Status.REALIZABLE)
        self.assertEqual(table[844].status, Status.REALIZABLE)

    def assertIntervalsExcluded(self, q, r, lower, intervals, realizable):
        for low, high in intervals:
            for n in range(low, high + 1):
                self.assertIsNotNone(closed_exclusion(n, q, r, lower), (q, r, n))
        for n in realizable:
            self.assertIsNone(closed_exclusion(n, q, r, lower), (q, r, n))

    def test_q2_r6_intervals(self):
        lower = classify_projective(2, 5, 4039, use_lp=False)
        self.assertIntervalsExcluded(2, 6, lower, [
            (1, 126), (129, 253), (257, 380), (385, 507), (513, 634), (641, 761),
            (772, 888), (902, 1015), (1032, 1142), (1161, 1269), (1291, 1395),
            (1420, 1522), (1549, 1649), (1678, 1776), (1808, 1902), (1937, 2029),
            (2066, 2156), (2196, 2282), (2325, 2409), (2455, 2535), (2585, 2661),
            (2714, 2788), (2844, 2914), (2974, 3040), (3104, 3166), (3234, 3292),
            (3364, 3418), (3495, 3543), (3626, 3668), (3757, 3793), (3889, 3917),
            (4023, 4039),
        ], realizable=[127, 128, 254, 255, 256])

    def test_q3_r3_intervals(self):
        lower = classify_projective(3, 2, 793)
        self.assertIntervalsExcluded(3, 3, lower, [
            (1, 39), (41, 79), (82, 119), (122, 159), (163, 199), (203, 239),
            (246, 279), (287, 319), (329, 359), (370, 399), (411, 439), (452, 478),
            (493, 518), (535, 558), (576, 597), (618, 637), (659, 676), (701, 715),
            (743, 754), (786, 793),
        ], realizable=[40, 80, 81, 120, 121])

    def test_q5_r2_intervals(self):
        lower = classify_projective(5, 1, 955)
        self.assertIntervalsExcluded(5, 2, lower, [
            (1, 30), (32, 61), (63, 92), (94, 123), (126, 154), (157, 185),
            (188, 216), (219, 247), (252, 278), (283, 309), (316, 340), (347, 371),
            (379, 402), (410, 433), (442, 464), (473, 495), (505, 526), (537, 557),
            (568, 587), (600, 618), (632, 649), (663, 680), (695, 711), (727, 742),
            (758, 772), (790, 803), (822, 834), (854, 864), (886, 895), (918, 925),
            (951, 955),
        ], realizable=[31, 62, 93, 124, 125])


class MultisetClassificationTests(SimpleTestCase):
    def test_unbounded_multiplicity(self):
        table = classify_multiset_lambda(2, 2, 4, 20)
        self.assertEqual(table.realizable(), [4, 6, 7, 8] + list(range(10, 21)))
        self.assertEqual(table[9].criterion, "expansion")

    def test_lambda_one_is_projective(self):
        self.assertEqual(
            classify_multiset_lambda(2, 2, 1, 30).realizable(),
            classify_projective(2, 2, 30).realizable(),
        )

    def test_doubled_point(self):
        self.assertEqual(classify_multiset_lambda(2, 1, 2, 5)[2].status, Status.REALIZABLE)

    def test_intermediate_lambda(self):
        table = classify_multiset_lambda(2, 2, 2, 20)
        self.assertEqual(table[6].status, Status.REALIZABLE)
        self.assertEqual(table[7].status, Status.REALIZABLE)
        self.assertEqual(table[9].status, Status.EXCLUDED)

    def test_invalid_lambda(self):
        with self.assertRaises(ValidationError):
            classify_multiset_lambda(2, 2, 0, 10)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 40))
    def test_lambda_tables_are_nested(self, n):
        sets = classify_projective(2, 2, 40)
        doubled = classify_multiset_lambda(2, 2, 2, 40)
        if sets[n].status == Status.REALIZABLE:
            self.assertEqual(doubled[n].status, Status.REALIZABLE)


class RenderTests(SimpleTestCase):
    def test_compress(self):
        self.assertEqual(compress([1, 2, 3, 5, 7, 8]), "1-3, 5, 7-8")
        self.assertEqual(compress([]), "—")

    def test_render(self):
        text = render_table(classify_projective(2, 2, 20))
        self.assertIn("7-8, 14-20", text)
        self.assertIn("1-6, 9-13", text)


class ClassifyViewTests(SimpleTestCase):
    def test_classify_endpoint(self):
        response = self.client.get(reverse("exclusion:classify"), {"q": 2, "r": 2, "n_max": 20})
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data["table"]["lengths"]["9"]["status"], "EXCLUDED")
        self.assertEqual(data["table"]["lengths"]["7"]["status"], "REALIZABLE")

    def test_bad_range(self):
        response = self.client.get(reverse("exclusion:classify"), {"q": 2, "r": 2, "n_max": 0})
        self.assertEqual(response.status_code, 400)
        self.assertFalse(response.json()["ok"])


class PersistenceTests(TestCase):
    def test_store_run(self):
        table = classify_projective(2, 2, 30)
        run = ClassificationRun.store(table, notes="prueba")
        self.assertEqual(run.verdicts.count(), 30)
        self.assertEqual(run.count(Status.EXCLUDED), 11)
        self.assertEqual(run.open_lengths, [])
        verdict = run.verdicts.get(n=9)
        self.assertEqual(verdict.get_status_display(), "Excluida")
        self.assertEqual(verdict.certificate["kind"], verdict.criterion)
