"""Tests for characters, tensor invariants, transfer checks and saturation scans."""
import itertools
import os
import sys
import unittest
from fractions import Fraction

# Add parent directory to path to import isohorn
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from isohorn.constants import ENV_SLOW_TESTS
from isohorn.errors import InvalidIndexError, PreconditionError, RankCapError
from isohorn.index import GroupSpec, Weight, fundamental_weight, partitions_in_box
from isohorn.reps import (
    character, clef_scan, clef_transfer_check, dominant_conjugate, dual_weight,
    invariant_dim, saturation_scan, tensor_decompose, walk_check, walk_scan,
    weyl_dimension,
)
from isohorn.schubert import sl_invariant_dim

SLOW = os.getenv(ENV_SLOW_TESTS) == "1"

SL2 = GroupSpec("A", 1)
SL3 = GroupSpec("A", 2)
SL4 = GroupSpec("A", 3)
SP4 = GroupSpec("C", 2)
SP6 = GroupSpec("C", 3)
SO5 = GroupSpec("B", 2)
SPIN5 = GroupSpec("Spin", 2)


class TestDimensions(unittest.TestCase):
    """Test characters against the Weyl dimension formula."""

    def test_known_dimensions(self):
        cases = [
            (SL3, (1, 0, 0), 3), (SL3, (1, 1, 0), 3), (SL3, (2, 1, 0), 8),
            (SP4, (1, 0), 4), (SP4, (1, 1), 5), (SP4, (2, 0), 10),
            (SO5, (1, 0), 5), (SO5, (1, 1), 10),
            (SPIN5, (Fraction(1, 2), Fraction(1, 2)), 4),
        ]
        for group, coords, expected in cases:
            weight = Weight(coords, group)
            self.assertEqual(weyl_dimension(group, weight), expected, msg=f"{group} {coords}")
            self.assertEqual(character(group, weight).dimension, expected, msg=f"{group} {coords}")

    def test_character_mass_matches_weyl_formula(self):
        for group in (SL4, SP4, SP6, SO5):
            for coords in itertools.product(range(3), repeat=group.coords):
                weight = Weight(coords, group)
                if not weight.is_dominant():
                    continue
                self.assertEqual(character(group, weight).dimension,
                                 weyl_dimension(group, weight), msg=f"{group} {coords}")

    def test_weyl_invariance(self):
        for group, coords in [(SP4, (2, 1)), (SO5, (2, 1)), (SL3, (2, 1, 0))]:
            self.assertTrue(character(group, Weight(coords, group)).is_weyl_invariant())

    def test_spin_is_not_an_so_weight(self):
        with self.assertRaises(InvalidIndexError):
            character(SO5, Weight((Fraction(1, 2), Fraction(1, 2)), SO5))

    def test_non_dominant(self):
        with self.assertRaises(InvalidIndexError):
            weyl_dimension(SP4, Weight((0, 1), SP4))

    def test_rank_cap(self):
        group = GroupSpec("C", 5)
        with self.assertRaises(RankCapError):
            character(group, Weight((0,) * 5, group))


class TestTensorProducts(unittest.TestCase):
    """Test Brauer-Klimyk products and invariant dimensions."""

    def test_sl2_clebsch_gordan(self):
        omega = Weight((1, 0), SL2)
        product = {w.coords: m for w, m in tensor_decompose(SL2, omega, omega).items()}
        self.assertEqual(product, {(2, 0): 1, (0, 0): 1})

    def test_product_matches_character_product(self):
        for group, left, right in [(SP4, (1, 0), (1, 1)), (SO5, (1, 0), (1, 0)),
                                   (SL3, (1, 0, 0), (2, 1, 0))]:
            a, b = Weight(left, group), Weight(right, group)
            expected = {w.coords: m for w, m in tensor_decompose(group, a, b).items()}
            self.assertEqual((character(group, a) * character(group, b)).decompose(), expected)

    def test_dominant_conjugate_sign(self):
        self.assertEqual(dominant_conjugate((Fraction(-1), Fraction(2)), "C"),
                         ((2, 1), 1, False))
        self.assertTrue(dominant_conjugate((Fraction(1), Fraction(1)), "C")[2])
        self.assertEqual(dominant_conjugate((Fraction(0), Fraction(1)), "A")[1], -1)

    def test_invariant_examples(self):
        self.assertEqual(invariant_dim(SL2, [fundamental_weight(SL2, 1)] * 2), 1)
        self.assertEqual(invariant_dim(SP4, [fundamental_weight(SP4, 1)] * 2), 1)
        self.assertEqual(invariant_dim(SO5, [fundamental_weight(SO5, 1)] * 3), 0)
        spin = Weight((Fraction(1, 2), Fraction(1, 2)), SPIN5)
        self.assertEqual(invariant_dim(SPIN5, [spin, spin]), 1)
        self.assertEqual(invariant_dim(SPIN5, [spin] * 3), 0)

    def test_dual_pairing(self):
        for group in (SL3, SP4, SO5):
            for coords in itertools.product(range(3), repeat=group.coords):
                weight = Weight(coords, group)
                if weight.is_dominant():
                    self.assertEqual(invariant_dim(group, [weight, dual_weight(weight)]), 1)

    def test_factor_order_irrelevant(self):
        weights = [Weight((2, 1), SP4), Weight((1, 0), SP4), Weight((1, 0), SP4), Weight((1, 1), SP4)]
        values = {invariant_dim(SP4, list(order)) for order in itertools.permutations(weights)}
        self.assertEqual(len(values), 1)

    def test_sl_cross_check(self):
        """invariant_dim raises if characters and LR disagree."""
        for r in ((2, 3) if SLOW else (2,)):
            group = GroupSpec("A", r - 1)
            shapes = [mu.parts for mu in partitions_in_box(r, 4)]
            for combo in itertools.combinations_with_replacement(shapes, 3):
                if sum(sum(mu) for mu in combo) > 12:
                    continue
                value = invariant_dim(group, [Weight(mu, group) for mu in combo])
                self.assertEqual(value, sl_invariant_dim(combo, r))


class TestTransfer(unittest.TestCase):
    """Test restriction of invariants from SL(N)."""

    def test_second_fundamental(self):
        omega2 = Weight((1, 1, 0, 0), SL4)
        record = clef_transfer_check([omega2, omega2])
        self.assertEqual(record.source_dim, 1)
        self.assertEqual(record.target_dim, 1)
        self.assertEqual(record.target, "Sp(4)")

    def test_trivial(self):
        zero = Weight((0, 0, 0, 0), SL4)
        record = clef_transfer_check([zero, zero, zero])
        self.assertTrue(record.passed)
        self.assertEqual((record.source_dim, record.target_dim), (1, 1))

    def test_inapplicable(self):
        omega1 = Weight((1, 0, 0, 0), SL4)
        with self.assertRaises(PreconditionError):
            clef_transfer_check([omega1, omega1])

    def test_wrong_target(self):
        omega2 = Weight((1, 1, 0, 0), SL4)
        with self.assertRaises(InvalidIndexError):
            clef_transfer_check([omega2, omega2], target="B")

    def test_symplectic_scan(self):
        counts = clef_scan(2, "C", total_bound=6)
        self.assertGreater(counts["applicable"], 0)

    def test_orthogonal_scan(self):
        counts = clef_scan(2, "B", total_bound=5)
        self.assertGreater(counts["applicable"], 0)


class TestWalk(unittest.TestCase):
    """Test the flip-and-restrict construction."""

    def test_rank_one(self):
        record = walk_check([(2,), (1,), (1,)], 2)
        self.assertEqual(record.sl_dim, 1)
        self.assertEqual([nu.coords for nu in record.nus], [(1, 1), (1, 0), (1, 0)])
        self.assertTrue(record.passed)

    def test_rectangles(self):
        record = walk_check([(2, 2), (2, 2), (0, 0)], 2)
        self.assertEqual([nu.coords for nu in record.nus], [(2, 2), (2, 2), (0, 0)])
        self.assertEqual(record.sp_dim, 1)

    def test_size_precondition(self):
        with self.assertRaises(PreconditionError):
            walk_check([(1,), (1,)], 2)

    def test_zero_sl_invariant(self):
        with self.assertRaises(PreconditionError):
            walk_check([(3, 1), (4, 0), (0, 0)], 2)

    def test_scans(self):
        for r in ((1, 2, 3) if SLOW else (1, 2)):
            self.assertGreater(walk_scan(2, r)["applicable"], 0)


class TestSaturation(unittest.TestCase):
    """Test the saturation scans."""

    def test_symplectic(self):
        report = saturation_scan(SP4, bound=2, n_max=4)
        self.assertTrue(report.passed)
        self.assertEqual(report.factor, 2)
        self.assertGreater(len(report.witnesses), 0)
        witness = report.witnesses[0]
        self.assertEqual(witness.at_one, 0)
        self.assertGreater(witness.at_two, 0)

    def test_zero_triple(self):
        report = saturation_scan(SP4, bound=0, n_max=2)
        self.assertEqual(report.tuples, 1)
        self.assertEqual(report.positive, 1)

    def test_orthogonal(self):
        self.assertTrue(saturation_scan(SO5, bound=1, n_max=4).passed)

    def test_spin(self):
        report = saturation_scan(SPIN5, bound=1, n_max=4)
        self.assertEqual(report.factor, 4)
        self.assertTrue(report.passed)

    def test_unsupported_group(self):
        with self.assertRaises(InvalidIndexError):
            saturation_scan(SL3, bound=1)


if __name__ == '__main__':
    unittest.main()
