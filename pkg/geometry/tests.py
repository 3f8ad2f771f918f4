import os
from unittest import mock

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from macwilliams.distributions import distribution_from_spectrum
from qarith.arithmetic import bracket
from qarith.exceptions import BudgetExceeded

from .constructions import (
    affine,
    affine_baer_subspace,
    affine_switching,
    baer,
    complement,
    concatenate_simplex,
    cone_minus_vertex,
    cone_with_vertex,
    contains_subspace,
    desarguesian_spread,
    disjoint_sum,
    elliptic_quadric,
    generalized_switching,
    lines_through,
    parity_extension,
    projective_base,
    repeat,
    simplex,
    switching,
)
from .fixtures import fixture_ids, load_fixture, parse_matrix, verify_fixture
from .incidence import check_kernel, incidence_matrix, rank_mod
from .multisets import (
    GeneratorMatrix,
    PointMultiset,
    dim_span,
    hyperplane_multiplicities,
    is_divisible,
    matrix_from_multiset,
    max_multiplicity,
    multiset_from_matrix,
    restrict,
    spectrum_bruteforce,
    weight_distribution_bruteforce,
)


class MultisetTests(SimpleTestCase):
    def test_points_are_normalized(self):
        M = PointMultiset(3, 2, {(2, 1): 1, (1, 2): 2})
        self.assertEqual(M.items(), [((1, 2), 3)])
        self.assertEqual(M[(2, 1)], 3)
        self.assertEqual(M[(0, 0)], 0)

    def test_negative_multiplicity(self):
        with self.assertRaises(ValidationError):
            PointMultiset(2, 2, {(1, 0): -1})

    def test_generator_matrix_with_zero_column(self):
        G = load_fixture("generator-example")
        self.assertEqual(G.effective_length, 5)
        M = multiset_from_matrix(G)
        self.assertEqual(M.zero_columns, 1)
        self.assertEqual(M.counts(), {(1, 2, 0): 3, (1, 0, 1): 1, (0, 0, 1): 1})

    def test_round_trip(self):
        M = multiset_from_matrix(load_fixture("holes-17-6"))
        self.assertEqual(multiset_from_matrix(matrix_from_multiset(M)), M)

    def test_empty_multiset_gives_zero_width_matrix(self):
        G = matrix_from_multiset(PointMultiset(2, 3))
        self.assertEqual((G.k, G.n), (3, 0))

    def test_sum_requires_same_space(self):
        with self.assertRaises(ValidationError):
            simplex(2, 2) + simplex(3, 2)

    def test_simplex_generator(self):
        M = simplex(3, 3)
        self.assertEqual(M.size, bracket(3, 3))
        self.assertEqual(max_multiplicity(M), 1)
        self.assertEqual(dim_span(M), 3)


class BruteForceTests(SimpleTestCase):
    def test_code_50_8(self):
        W = weight_distribution_bruteforce(load_fixture("code-50-8"))
        self.assertEqual(W.enumerator(), {0: 1, 16: 5, 24: 210, 32: 40})

    def test_identity_1x1(self):
        W = weight_distribution_bruteforce(GeneratorMatrix(q=2, rows=((1,),)))
        self.assertEqual(W.A, (1, 1))

    def test_cylinder_spectrum_over_f8(self):
        M = multiset_from_matrix(load_fixture("cylinder-64-4-q8"))
        self.assertEqual(spectrum_bruteforce(M).support(), {0: 29, 8: 528, 16: 28})

    def test_affine_space_divisibility(self):
        for k, q in [(3, 2), (4, 2), (3, 3)]:
            self.assertTrue(is_divisible(affine(k, q), q ** (k - 2)))
        self.assertFalse(is_divisible(affine(4, 2), 8))

    def test_empty_multiset_is_divisible(self):
        M = PointMultiset(2, 3)
        self.assertTrue(all(is_divisible(M, d) for d in (2, 7, 1024)))

    def test_enumeration_budget(self):
        with mock.patch.dict(os.environ, {"DIVISIBLE_CODES_ENUMERATION_BUDGET": "100"}):
            with self.assertRaises(BudgetExceeded):
                weight_distribution_bruteforce(load_fixture("code-50-8"))

    def test_hyperplane_budget(self):
        with mock.patch.dict(os.environ, {"DIVISIBLE_CODES_HYPERPLANE_BUDGET": "10"}):
            with self.assertRaises(BudgetExceeded):
                spectrum_bruteforce(simplex(4, 2))


class CorrespondenceTests(SimpleTestCase):
    def test_weights_match_spectrum(self):
        for fixture in ["rm-2-4-1", "hill-cap", "code-41-5-q5", "holes-17-7", "baer-plane-q4"]:
            with self.subTest(fixture=fixture):
                G = load_fixture(fixture)
                W = weight_distribution_bruteforce(G)
                sp = spectrum_bruteforce(multiset_from_matrix(G))
                self.assertEqual(distribution_from_spectrum(sp).A, W.A)

    def test_restrictions_inherit_divisibility(self):
        M = multiset_from_matrix(load_fixture("hill-cap"))
        for h, _ in hyperplane_multiplicities(M)[:25]:
            self.assertTrue(is_divisible(restrict(M, h), 3))

    def test_some_hyperplane_is_below_average(self):
        witnesses = [
            simplex(3, 2), affine(4, 3), projective_base(5), affine_switching(2),
            multiset_from_matrix(load_fixture("code-50-8")),
        ]
        for M in witnesses:
            smallest = min(m for _, m in hyperplane_multiplicities(M))
            self.assertLess(smallest * M.q, M.size)

    def test_complement(self):
        A = affine(3, 2)
        for lam in (1, 2):
            C = complement(A, lam)
            self.assertEqual(C.size, lam * 7 - 4)
            self.assertTrue(is_divisible(C, 2))
        with self.assertRaises(ValidationError):
            complement(repeat(A, 2), 1)


class ConstructionTests(SimpleTestCase):
    def test_basic_families(self):
        self.assertTrue(is_divisible(simplex(4, 2), 8))
        base = projective_base(6)
        self.assertEqual(base.size, 7)
        self.assertTrue(is_divisible(base, 2))
        self.assertEqual(repeat(simplex(1, 5), 1).items(), [((1,), 1)])
        self.assertTrue(is_divisible(repeat(simplex(2, 3), 3), 3))
        s = disjoint_sum(simplex(2, 2), affine(3, 2))
        self.assertEqual((s.v, s.size), (5, 7))
        self.assertTrue(is_divisible(s, 2))

    def test_cone_over_projective_base(self):
        M = cone_with_vertex(1, projective_base(6))
        self.assertEqual(M.size, 15)
        self.assertTrue(is_divisible(M, 4))
        with self.assertRaises(ValidationError):
            cone_minus_vertex(1, projective_base(6))

    def test_cone_minus_vertex(self):
        M = cone_minus_vertex(1, projective_base(7))
        self.assertEqual(M.size, 16)
        self.assertTrue(is_divisible(M, 4))

    def test_spread_switching_chain(self):
        spread = desarguesian_spread(2, 2)
        self.assertEqual(len(spread), 5)
        self.assertEqual(sum(len(line) for line in spread), 15)
        M = simplex(4, 2)
        sizes = [M.size]
        for line in spread:
            M = switching(M, line)
            sizes.append(M.size)
            self.assertTrue(is_divisible(M, 4))
            self.assertEqual(max_multiplicity(M), 1)
        self.assertEqual(sizes, list(range(15, 21)))

    def test_switching_outside_support(self):
        with self.assertRaises(ValidationError):
            switching(affine(3, 2), [(0, 1, 0)])

    def test_ovoid_concatenation(self):
        ovoid = elliptic_quadric(4)
        self.assertEqual(ovoid.size, 17)
        self.assertTrue(is_divisible(ovoid, 4))
        M = concatenate_simplex(ovoid, 2)
        self.assertEqual((M.q, M.v, M.size), (2, 8, 51))
        self.assertEqual(max_multiplicity(M), 1)
        self.assertTrue(is_divisible(M, 8))

    def test_quadric_switching_gives_126_points(self):
        quadric = elliptic_quadric(3, 6)
        self.assertEqual(quadric.size, 112)
        self.assertTrue(is_divisible(quadric, 9))
        line = [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (1, 0, 1, 0, 0, 0), (1, 0, 2, 0, 0, 0)]
        M = switching(quadric, line)
        self.assertEqual(M.size, 126)
        self.assertEqual(max_multiplicity(M), 1)
        self.assertTrue(is_divisible(M, 9))

    def test_elliptic_quadric_needs_even_dimension(self):
        with self.assertRaises(ValidationError):
            elliptic_quadric(3, 5)

    def test_affine_switching(self):
        for r, size in [(2, 17), (3, 49), (4, 129)]:
            M = affine_switching(r)
            self.assertEqual(M.size, size)
            self.assertEqual(max_multiplicity(M), 1)
        self.assertTrue(is_divisible(affine_switching(3), 8))

    def test_parity_extension(self):
        self.assertEqual(parity_extension(PointMultiset(2, 2, {(1, 0): 1}), 0).counts(), {(1, 0): 2})
        punctured = PointMultiset(2, 3, {p: 1 for p in simplex(3, 2).support() if p != (0, 1, 1)})
        self.assertEqual(parity_extension(punctured, 0), simplex(3, 2))
        with self.assertRaises(ValidationError):
            parity_extension(simplex(2, 2), 1)

    def test_generalized_switching(self):
        line = PointMultiset(2, 3, {(0, 1, 0): 1, (0, 0, 1): 1, (0, 1, 1): 1})
        M = generalized_switching(simplex(3, 2), [simplex(3, 2)], line, 2)
        self.assertEqual(M, repeat(affine(3, 2), 2))
        self.assertTrue(is_divisible(M, 4))
        with self.assertRaises(ValidationError):
            generalized_switching(simplex(3, 2), [], line, 2)

    def test_affine_baer_subspace(self):
        M = affine_baer_subspace(2, 2)
        self.assertEqual((M.q, M.v, M.size), (4, 3, 4))
        subline = baer(PointMultiset(2, 3, {(0, 1, 0): 1, (0, 0, 1): 1, (0, 1, 1): 1}), 2)
        self.assertEqual(M + subline, baer(simplex(3, 2), 2))
        self.assertTrue(is_divisible(baer(simplex(3, 2), 2), 2))

    def test_lines_and_subspaces(self):
        lines = lines_through(simplex(3, 2), (1, 0, 0))
        self.assertEqual(len(lines), 3)
        self.assertTrue(all(m == 3 for m in lines.values()))
        self.assertTrue(contains_subspace(simplex(3, 2), [(1, 0, 0), (0, 1, 0)]))
        self.assertFalse(contains_subspace(affine(3, 2), [(1, 0, 0), (0, 1, 0)]))


class IncidenceTests(SimpleTestCase):
    def test_fano_plane(self):
        A = incidence_matrix(3, 2, 2)
        self.assertEqual(set(A.row_sums()), {3})
        self.assertEqual(set(A.column_sums()), {3})
        profile = rank_mod(A.rows, 2)
        self.assertEqual((profile.rank, profile.kernel_dimension), (4, 3))
        self.assertTrue(check_kernel(A.rows, profile))

    def test_planes_of_pg_3_2(self):
        A = incidence_matrix(4, 2, 3)
        self.assertEqual(set(A.row_sums()), {7})
        mod2 = rank_mod(A.rows, 2)
        self.assertEqual((mod2.rank, mod2.kernel_dimension), (5, 10))
        mod4 = rank_mod(A.rows, 4)
        self.assertEqual((mod4.rank, mod4.kernel_dimension), (11, 4))
        self.assertTrue(check_kernel(A.rows, mod4))

    def test_identity_over_large_prime(self):
        profile = rank_mod([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 2 ** 61 - 1)
        self.assertEqual(profile.rank, 3)
        self.assertEqual(profile.kernel, [])

    def test_modulus_must_be_prime_power(self):
        with self.assertRaises(ValidationError):
            rank_mod([[1]], 6)


class FixtureTests(SimpleTestCase):
    def test_every_fixture_verifies(self):
        for fixture in fixture_ids():
            with self.subTest(fixture=fixture):
                report = verify_fixture(fixture)
                self.assertTrue(report["ok"], report["checks"])

    def test_published_enumerators(self):
        self.assertEqual(
            verify_fixture("code-74-12")["weights"],
            {"0": 1, "8": 3, "24": 60, "32": 1423, "40": 2585, "48": 24},
        )
        self.assertEqual(verify_fixture("hill-cap")["weights"], {"0": 1, "36": 616, "45": 112})

    def test_malformed_matrix(self):
        with self.assertRaises(ValidationError):
            parse_matrix("2 2 3\n101\n")
        with self.assertRaises(ValidationError):
            parse_matrix("2 1 3\n10\n")
        with self.assertRaises(ValidationError):
            load_fixture("no-such-code")
