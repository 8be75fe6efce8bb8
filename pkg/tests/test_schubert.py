"""Tests for type A Schubert calculus."""
import itertools
import os
import sys
import unittest

# Add parent directory to path to import isohorn
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from isohorn.constants import ENV_SLOW_TESTS
from isohorn.errors import InvalidIndexError, PreconditionError
from isohorn.index import AIndex, dual, partitions_in_box
from isohorn.schubert import (
    gr_nonvanishing, gr_product, grassmann_duality_check, hive_lr_coefficient,
    horn_inequality_check, horn_list, lr_coefficient, lr_multi_product,
    lr_product, ordinary_duality_check, point_coefficient, sl_invariant_dim,
)
SLOW = os.getenv(ENV_SLOW_TESTS) == "1"


def partitions_of(size, max_rows=None):
    """All partitions of `size`, trimmed."""
    def build(left, cap):
        if left == 0:
            yield ()
            return
        for part in range(min(left, cap), 0, -1):
            for rest in build(left - part, part):
                yield (part,) + rest
    for p in build(size, size):
        if max_rows is None or len(p) <= max_rows:
            yield p


class TestLittlewoodRichardson(unittest.TestCase):
    """Test LR coefficients against known values and the hive model."""

    def test_unit(self):
        self.assertEqual(lr_coefficient((2, 1), (), (2, 1)), 1)

    def test_small_values(self):
        self.assertEqual(lr_coefficient((1,), (1, 1), (2, 1)), 1)
        self.assertEqual(lr_coefficient((2, 1), (2, 1), (3, 2, 1)), 2)
        self.assertEqual(lr_coefficient((1,), (1,), (2,)), 1)

    def test_size_mismatch_is_zero(self):
        self.assertEqual(lr_coefficient((1,), (1,), (3,)), 0)

    def test_pieri(self):
        self.assertEqual(lr_product((1,), (1,)), {(2,): 1, (1, 1): 1})

    def test_symmetry(self):
        for a in range(4):
            for b in range(4):
                for lam in partitions_of(a):
                    for mu in partitions_of(b):
                        self.assertEqual(lr_product(lam, mu), lr_product(mu, lam))

    def test_associativity(self):
        """(s_lam s_mu) s_nu == s_lam (s_mu s_nu)."""
        limit = 8 if SLOW else 6
        for sizes in itertools.product(range(4), repeat=3):
            if sum(sizes) > limit:
                continue
            for lam, mu, nu in itertools.product(*(partitions_of(s) for s in sizes)):
                left = lr_multi_product([lam, mu, nu])
                right = {}
                for inner, mult in lr_product(mu, nu).items():
                    for shape, value in lr_product(lam, inner).items():
                        right[shape] = right.get(shape, 0) + mult * value
                self.assertEqual(left, right)

    def test_hive_oracle_agrees(self):
        for a in range(4):
            for b in range(4):
                for lam in partitions_of(a, 3):
                    for mu in partitions_of(b, 3):
                        for nu in partitions_of(a + b, 3):
                            self.assertEqual(lr_coefficient(lam, mu, nu),
                                             hive_lr_coefficient(lam, mu, nu),
                                             msg=f"{lam} {mu} {nu}")

    def test_sl_invariants(self):
        self.assertEqual(sl_invariant_dim([(1,), (1,), (1,)], 3), 1)
        self.assertEqual(sl_invariant_dim([(1,)] * 4, 2), 2)
        self.assertEqual(sl_invariant_dim([(1,), (1,)], 3), 0)
        self.assertEqual(sl_invariant_dim([(1, 1, 1, 1)], 3), 0)


class TestGrassmannian(unittest.TestCase):
    """Test products in H*(Gr(m, N))."""

    def test_sigma_one_squared(self):
        sigma1 = AIndex((2, 4), 4)
        product = gr_product([sigma1, sigma1], 2, 4)
        self.assertEqual(product.terms, {AIndex((1, 4), 4): 1, AIndex((2, 3), 4): 1})

    def test_fundamental_class(self):
        top = AIndex((3, 4), 4)
        for index in (AIndex((2, 4), 4), AIndex((1, 3), 4), AIndex((1, 2), 4)):
            self.assertEqual(gr_product([top, index], 2, 4).terms, {index: 1})

    def test_codimension_overflow(self):
        point = AIndex((1,), 4)
        self.assertFalse(gr_nonvanishing([point, point], 1, 4))
        self.assertTrue(gr_product([point, point], 1, 4).is_zero())

    def test_point_coefficient_symmetric(self):
        indices = [AIndex((2, 4), 4)] * 2 + [AIndex((1, 4), 4)]
        values = {point_coefficient(list(p), 2, 4) for p in itertools.permutations(indices)}
        self.assertEqual(values, {1})

    def test_point_coefficient_needs_full_degree(self):
        self.assertEqual(point_coefficient([AIndex((2, 4), 4)], 2, 4), 0)

    def test_degree_and_positivity(self):
        family = [AIndex(c, 5) for c in itertools.combinations(range(1, 6), 2)]
        for first, second in itertools.product(family, repeat=2):
            product = gr_product([first, second], 2, 5)
            self.assertTrue(product.is_nonnegative())
            for index in product.terms:
                self.assertEqual(index.codim, first.codim + second.codim)

    def test_mixed_parameters_rejected(self):
        with self.assertRaises(InvalidIndexError):
            gr_product([AIndex((1, 2), 4), AIndex((1,), 4)], 2, 4)


class TestHornLists(unittest.TestCase):
    """Test Horn list enumeration and Horn inequality checks."""

    def test_full_sets(self):
        self.assertEqual(horn_list(2, 2, 3), ((AIndex((1, 2), 2),) * 3,))

    def test_projective_line(self):
        tuples = horn_list(1, 2, 3)
        self.assertEqual(len(tuples), 4)
        for combo in tuples:
            self.assertLessEqual(sum(2 - index.elements[0] for index in combo), 1)

    def test_degree_bound(self):
        for combo in horn_list(2, 4, 3):
            self.assertLessEqual(sum(index.codim for index in combo), 4)

    def test_point_variant(self):
        for combo in horn_list(2, 4, 3, point_only=True):
            self.assertEqual(sum(index.codim for index in combo), 4)
            self.assertNotEqual(point_coefficient(combo, 2, 4), 0)

    def test_zero_partitions_hold(self):
        self.assertTrue(horn_inequality_check([(0, 0)] * 3, 0, 2))

    def test_rank_one(self):
        self.assertTrue(horn_inequality_check([(1,), (1,), (0,)], 2, 1))
        self.assertFalse(horn_inequality_check([(2,), (1,), (0,)], 2, 1))

    def test_witness_at_second_level(self):
        result = horn_inequality_check([(2, 0)] * 3, 2, 2)
        self.assertFalse(result.holds)
        d, combo, lhs, rhs = result.witness
        self.assertEqual((d, lhs, rhs), (2, 6, 4))
        self.assertTrue(horn_inequality_check([(2, 0)] * 3, 2, 2, d_range=[1]))


class TestDualities(unittest.TestCase):
    """Test Grassmann duality and ordinary duality of invariant dimensions."""

    def test_examples(self):
        self.assertTrue(grassmann_duality_check([(1, 0), (1, 0), (1, 1)], 2, 2))
        mu = (2, 1)
        self.assertTrue(grassmann_duality_check([mu, dual(mu, 3).parts], 2, 3))

    def test_size_precondition(self):
        with self.assertRaises(PreconditionError):
            grassmann_duality_check([(1, 0)], 2, 2)

    def test_exhaustive(self):
        for r in range(1, 4):
            for k in range(1, 4):
                box = [p.parts for p in partitions_in_box(r, k)]
                for triple in itertools.combinations_with_replacement(box, 3):
                    total = sum(sum(mu) for mu in triple)
                    if total > 12:
                        continue
                    self.assertTrue(ordinary_duality_check(triple, r, k))
                    if total == k * r:
                        self.assertTrue(grassmann_duality_check(triple, r, k),
                                        msg=f"{triple} r={r} k={k}")


if __name__ == '__main__':
    unittest.main()
