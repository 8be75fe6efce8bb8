"""Tests for index sets, partitions, Weyl elements and weights."""
import itertools
import os
import sys
import unittest
from fractions import Fraction

# Add parent directory to path to import isohorn
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from isohorn.errors import InvalidIndexError, PreconditionError
from isohorn.index import (
    AIndex, BIndex, CIndex, GroupSpec, Partition, SignedPerm, Weight,
    all_elements, cell_stats, cell_stats_b, complements, conjugate,
    dominance_count, dual, flip, fundamental_coweight, ig_dimension,
    is_minimal_rep, isotropic_subsets, max_coset_rep, mu_functional, mubar,
    og_dimension, og_plus_compress, og_triple_bijection, og_triple_inverse,
    orthogonal_subsets, parabolic_longest, parse_index, partition_subset,
    partitions_in_box, reindex_io, reindex_jo, restrict_weight,
    subset_partition, subsets, theta_values, weyl_element,
)
from isohorn.index.weyl import apply_transpositions, embedded_simple


class TestDominanceCount(unittest.TestCase):
    """Test |I > K| and |I >= K|."""

    def test_examples(self):
        self.assertEqual(dominance_count({2}, {1, 4}), 1)
        self.assertEqual(dominance_count({3, 4}, {1, 2}), 4)

    def test_empty_set(self):
        """|A > empty| is zero."""
        self.assertEqual(dominance_count({1, 2, 3}, set()), 0)

    def test_non_strict(self):
        self.assertEqual(dominance_count({2}, {2, 1}, strict=False), 2)


class TestIndexTypes(unittest.TestCase):
    """Test construction and complements of the three index types."""

    def test_c_complements(self):
        self.assertEqual(complements(CIndex((2,), 2)), ((3,), (1, 4)))
        self.assertEqual(complements(CIndex((1, 3), 2)), ((2, 4), ()))

    def test_b_complements(self):
        self.assertEqual(complements(BIndex((1, 4), 2)), ((2, 5), (3,)))

    def test_rejects_isotropy_violation(self):
        with self.assertRaises(InvalidIndexError):
            CIndex((1, 4), 2)

    def test_rejects_middle_value(self):
        with self.assertRaises(InvalidIndexError):
            BIndex((3,), 2)

    def test_rejects_unsorted(self):
        with self.assertRaises(InvalidIndexError):
            AIndex((3, 1), 4)

    def test_partition_of_ambient(self):
        """I, I bar and I tilde partition [2n]."""
        for n in range(1, 4):
            for r in range(n + 1):
                for index in isotropic_subsets(r, n):
                    bar, tilde = index.complements()
                    together = sorted(index.elements + bar + tilde)
                    self.assertEqual(together, list(range(1, 2 * n + 1)))

    def test_middle_value_in_tilde(self):
        for index in orthogonal_subsets(2, 3):
            self.assertIn(4, index.tilde)

    def test_enumeration_sizes(self):
        """|FS(r,2n)| = |FS'(r,2n+1)| = 2^r C(n,r)."""
        self.assertEqual(len(list(isotropic_subsets(2, 3))), 12)
        self.assertEqual(len(list(orthogonal_subsets(2, 3))), 12)
        self.assertEqual(len(list(subsets(2, 4))), 6)
        self.assertEqual(list(isotropic_subsets(0, 2)), [CIndex((), 2)])

    def test_parse_index(self):
        self.assertEqual(parse_index("[1, 3]"), (1, 3))
        self.assertEqual(parse_index("{4 2}"), (2, 4))
        self.assertEqual(parse_index("[]"), ())
        with self.assertRaises(InvalidIndexError):
            parse_index("1,x")


class TestCellStats(unittest.TestCase):
    """Test the cell record of IG(r,2n) and OG(r,2n+1)."""

    def test_identity_cell(self):
        stats = cell_stats(CIndex((1, 2), 3))
        self.assertEqual((stats.dim, stats.mu, stats.sym2), (0, 0, 0))

    def test_lagrangian_example(self):
        stats = cell_stats(CIndex((2, 4), 2))
        self.assertEqual(stats.mu, 1)
        self.assertEqual(stats.sym2, 2)
        self.assertEqual(stats.wedge2, 1)
        self.assertEqual(stats.dim, 2)
        self.assertEqual(stats.codim, 1)

    def test_top_cell(self):
        self.assertEqual(cell_stats(CIndex((3, 4), 2)).dim, ig_dimension(2, 2))
        self.assertEqual(ig_dimension(2, 2), 3)

    def test_identities_for_all_indices(self):
        """sym2 + wedge2 = |I > I bar|, cosym2 - cowedge2 = mubar, dim = length."""
        for n in range(1, 4):
            for r in range(n + 1):
                for index in isotropic_subsets(r, n):
                    stats = cell_stats(index)
                    crossing = dominance_count(index.elements, index.bar)
                    self.assertEqual(stats.sym2 + stats.wedge2, crossing)
                    self.assertEqual(stats.cosym2 - stats.cowedge2, mubar(index))
                    w = weyl_element(index)
                    self.assertEqual(stats.dim, w.length())
                    self.assertEqual(stats.dim, len(w.reduced_word()))
                    self.assertEqual(stats.mu, w.neg_count())

    def test_b_examples(self):
        self.assertEqual(cell_stats_b(BIndex((1, 2), 3)).dim, 0)
        self.assertEqual(cell_stats_b(BIndex((5,), 2)).dim, 3)
        self.assertEqual(og_dimension(1, 2), 3)
        self.assertEqual(cell_stats_b(BIndex((2,), 2)).dim, 1)
        self.assertEqual(cell_stats_b(BIndex((2, 5), 3)).dim, 3)

    def test_b_dimension_matches_length(self):
        for n in range(1, 4):
            for r in range(n + 1):
                for index in orthogonal_subsets(r, n):
                    stats = cell_stats_b(index)
                    self.assertEqual(stats.dim, weyl_element(index).length())
                    self.assertGreaterEqual(stats.codim, 0)

    def test_wrong_type_rejected(self):
        with self.assertRaises(InvalidIndexError):
            cell_stats(BIndex((1,), 2))


class TestSignedPerm(unittest.TestCase):
    """Test Weyl group arithmetic."""

    def test_identity_element(self):
        w = weyl_element(CIndex((1, 2), 3))
        self.assertEqual(w, SignedPerm.identity(3))
        self.assertEqual(w.length(), 0)

    def test_reduced_word_example(self):
        w = weyl_element(CIndex((2, 4), 2))
        self.assertEqual(w.window, (2, -1))
        self.assertEqual(w.length(), 2)

    def test_s_n_count_is_mu(self):
        """Every reduced word of w_{3,4} uses s_2 exactly twice."""
        w = weyl_element(CIndex((3, 4), 2))
        for word in (w.reduced_word(), w.reduced_word(largest=True)):
            self.assertEqual(word.count(2), 2)

    def test_s_n_count_all_indices(self):
        for n in range(1, 5):
            for r in range(n + 1):
                for index in isotropic_subsets(r, n):
                    word = weyl_element(index).reduced_word()
                    self.assertEqual(word.count(n), dominance_count(index.elements, [n]))

    def test_known_length(self):
        self.assertEqual(SignedPerm((-1, 2)).length(), 3)
        self.assertEqual(SignedPerm.longest(3).length(), 9)

    def test_words_and_lengths_agree(self):
        for n in range(1, 4):
            for family in ("B", "C"):
                for w in all_elements(n, family):
                    self.assertEqual(w.length_b(), w.length_c())
                    for largest in (False, True):
                        word = w.reduced_word(largest=largest)
                        self.assertEqual(len(word), w.length())
                        self.assertEqual(SignedPerm.from_word(word, n, family), w)

    def test_embedding_symmetry(self):
        for w in all_elements(3, "C"):
            a = w.embedding()
            self.assertTrue(all(a[6 - i] == 7 - a[i - 1] for i in range(1, 7)))
        for w in all_elements(3, "B"):
            a = w.embedding()
            self.assertEqual(a[3], 4)
            self.assertTrue(all(a[7 - i] == 8 - a[i - 1] for i in range(1, 8)))

    def test_embedded_simple_reflections(self):
        """s_i = r_i r_{2n-i}, s_n = r_n in C; s'_n = r_n r_{n+1} r_n in B."""
        n = 3
        for family in ("B", "C"):
            for w in all_elements(n, family):
                for i in range(1, n + 1):
                    left = w.times_simple(i).embedding()
                    right = apply_transpositions(w.embedding(), embedded_simple(i, n, family))
                    self.assertEqual(left, right)

    def test_coxeter_relations(self):
        e = SignedPerm.identity(3)
        for i in range(1, 4):
            self.assertEqual(SignedPerm.from_word([i, i], 3), e)
        self.assertEqual(SignedPerm.from_word([2, 3] * 4, 3), e)
        self.assertEqual(SignedPerm.from_word([1, 2] * 3, 3), e)

    def test_inverse_and_compose(self):
        for w in all_elements(2):
            self.assertEqual(w.compose(w.inverse()), SignedPerm.identity(2))

    def test_minimal_representatives(self):
        for n in range(1, 4):
            for r in range(1, n + 1):
                reps = [w for w in all_elements(n) if is_minimal_rep(w, r)]
                indices = list(isotropic_subsets(r, n))
                self.assertEqual(len(reps), len(indices))
                self.assertEqual(set(reps), {weyl_element(i) for i in indices})

    def test_max_coset_rep_length(self):
        longest = parabolic_longest(3, 2).length()
        for index in isotropic_subsets(2, 3):
            w = weyl_element(index)
            self.assertEqual(max_coset_rep(w, 2).length(), w.length() + longest)

    def test_bad_window(self):
        with self.assertRaises(InvalidIndexError):
            SignedPerm((1, 1))


class TestPartitions(unittest.TestCase):
    """Test conjugate, flip, dual and the subset bijection."""

    def test_conjugate(self):
        self.assertEqual(conjugate((3, 1)).parts, (2, 1, 1))

    def test_flip_examples(self):
        self.assertEqual(flip((0, 0), 3).parts, (2, 2, 2))
        self.assertEqual(flip((2, 0), 2).parts, (1, 1))

    def test_flip_involution(self):
        for r in range(1, 4):
            for m in range(1, 4):
                for mu in partitions_in_box(r, m):
                    self.assertEqual(flip(flip(mu, m), r).parts, mu.parts)
                    self.assertEqual(flip(mu, m).size, r * m - mu.size)

    def test_flip_rejects_wide(self):
        with self.assertRaises(InvalidIndexError):
            flip((3, 0), 2)

    def test_dual(self):
        self.assertEqual(dual((2, 1, 0), 3).parts, (3, 2, 1))

    def test_partition_subset(self):
        self.assertEqual(partition_subset((0, 0), 2, 4).elements, (3, 4))
        self.assertEqual(partition_subset((2, 2), 2, 4).elements, (1, 2))
        self.assertEqual(partition_subset((1, 0), 2, 4).elements, (2, 4))

    def test_round_trip(self):
        for mu in partitions_in_box(2, 3):
            index = partition_subset(mu, 2, 5)
            self.assertEqual(subset_partition(index).parts, mu.parts)
            self.assertEqual(index.codim, mu.size)

    def test_out_of_box(self):
        with self.assertRaises(InvalidIndexError):
            partition_subset((3, 0), 2, 4)

    def test_invalid_partition(self):
        with self.assertRaises(InvalidIndexError):
            Partition((1, 2))


class TestReindexing(unittest.TestCase):
    """Test reindex_io, reindex_jo and the OG+ bijection."""

    def test_reindex_io_examples(self):
        self.assertEqual(reindex_io(CIndex((1, 4), 3)).elements, (1, 3))
        self.assertEqual(reindex_io(CIndex((2, 3), 3)).elements, (1, 2))

    def test_reindex_io_identity_when_lagrangian(self):
        for index in isotropic_subsets(2, 2):
            self.assertEqual(reindex_io(index), index)

    def test_reindex_io_preserves_mubar_and_sym2(self):
        for n in range(1, 4):
            for r in range(1, n + 1):
                for index in isotropic_subsets(r, n):
                    small = reindex_io(index)
                    self.assertEqual(mubar(small), mubar(index))
                    self.assertEqual(cell_stats(small).sym2, cell_stats(index).sym2)

    def test_og_triple_examples(self):
        self.assertEqual(og_triple_bijection((1, 2, 3), 3).elements, (1, 2))
        self.assertEqual(og_triple_bijection((2, 4, 6), 3).elements, (2, 4))

    def test_og_triple_rejects_parity(self):
        with self.assertRaises(InvalidIndexError):
            og_triple_bijection((1, 2, 4), 3)

    def test_og_triple_round_trip(self):
        for r in range(1, 5):
            for index in isotropic_subsets(r - 1, r - 1):
                lifted = og_triple_inverse(index)
                self.assertEqual(og_triple_bijection(lifted, r), index)

    def test_reindex_jo_through_bijection(self):
        """reindex_jo is the OG+ bijection applied to the compressed index."""
        for n in range(1, 4):
            for r in range(1, n + 1):
                for index in orthogonal_subsets(r, n):
                    self.assertEqual(og_triple_bijection(og_plus_compress(index), r),
                                     reindex_jo(index))

    def test_og_plus_compress(self):
        self.assertEqual(og_plus_compress(BIndex((1, 3), 3)), (1, 2))
        for n in range(1, 4):
            for r in range(1, n + 1):
                for index in orthogonal_subsets(r, n):
                    compressed = og_plus_compress(index)
                    self.assertEqual(sum(1 for x in compressed if x <= r) % 2, r % 2)


class TestWeights(unittest.TestCase):
    """Test weights, restriction and the theta functionals."""

    def test_group_parse(self):
        self.assertEqual(GroupSpec.parse("SL(4)"), GroupSpec("A", 3))
        self.assertEqual(GroupSpec.parse("Sp(4)"), GroupSpec("C", 2))
        self.assertEqual(GroupSpec.parse("SO(5)"), GroupSpec("B", 2))
        self.assertEqual(GroupSpec.parse("Spin(5)").name, "Spin(5)")
        with self.assertRaises(InvalidIndexError):
            GroupSpec.parse("SO(4)")

    def test_restriction_examples(self):
        sl4, sl5 = GroupSpec("A", 3), GroupSpec("A", 4)
        self.assertEqual(restrict_weight(Weight((1, 1, 0, 0), sl4)).coords, (1, 1))
        self.assertEqual(restrict_weight(Weight((1, 0, 0, 0), sl4)).coords, (1, 0))
        restricted = restrict_weight(Weight((1, 1, 0, 0, 0), sl5))
        self.assertEqual(restricted.coords, (1, 1))
        self.assertEqual(restricted.group, GroupSpec("B", 2))

    def test_restriction_pairs_with_folded_coroots(self):
        """<lambda_C, beta_i> = <lambda, alpha_i + alpha_{2n-i}>, same for B."""
        for size in (4, 5, 6):
            group = GroupSpec("A", size - 1)
            n = size // 2
            for parts in itertools.combinations_with_replacement(range(3, -1, -1), size):
                weight = Weight(parts, group)
                restricted = restrict_weight(weight)
                self.assertTrue(restricted.is_dominant())
                a = weight.coroot_pairings()
                b = restricted.coroot_pairings()
                for i in range(1, n):
                    self.assertEqual(b[i - 1], a[i - 1] + a[size - i - 1])
                if size % 2 == 0:
                    self.assertEqual(b[n - 1], a[n - 1])
                else:
                    self.assertEqual(b[n - 1], 2 * (a[n - 1] + a[n]))

    def test_restriction_of_fundamental_weights(self):
        group = GroupSpec("A", 5)
        for m in range(1, 4):
            weight = Weight(tuple(1 if k < m else 0 for k in range(6)), group)
            expected = tuple(1 if k < m else 0 for k in range(3))
            self.assertEqual(restrict_weight(weight).coords, expected)

    def test_non_dominant_rejected(self):
        with self.assertRaises(InvalidIndexError):
            restrict_weight(Weight((0, 1, 0, 0), GroupSpec("A", 3)))

    def test_integrality(self):
        with self.assertRaises(InvalidIndexError):
            Weight.integral((Fraction(1, 2), Fraction(1, 2)), GroupSpec("B", 2))
        spin = Weight.integral((Fraction(1, 2), Fraction(1, 2)), GroupSpec("Spin", 2))
        self.assertTrue(spin.is_dominant())

    def test_coweights_dual_to_simple_roots(self):
        for family in ("B", "C"):
            group = GroupSpec(family, 3)
            roots = [(1, -1, 0), (0, 1, -1), (0, 0, 2 if family == "C" else 1)]
            for i in range(1, 4):
                x = fundamental_coweight(group, i).coords
                for j, root in enumerate(roots, start=1):
                    value = sum(Fraction(a) * b for a, b in zip(root, x))
                    self.assertEqual(value, 1 if i == j else 0)

    def test_theta_against_itself(self):
        index = CIndex((2, 4), 2)
        values = theta_values(index, [index], 2, 2)
        self.assertEqual((values.theta_c, values.theta_b), (0, 0))

    def test_theta_example(self):
        values = theta_values(CIndex((2,), 2), [CIndex((3,), 2), CIndex((3,), 2)], 1, 2)
        self.assertEqual(values.theta_c, 1)

    def test_theta_identity_exhaustive(self):
        """theta_values asserts the companion identity on every call."""
        for n in (1, 2):
            for r in range(1, n + 1):
                family = list(isotropic_subsets(r, n))
                for index in family:
                    for context in itertools.combinations_with_replacement(family, 2):
                        theta_values(index, context, r, n)

    def test_theta_rank_mismatch(self):
        with self.assertRaises(PreconditionError):
            theta_values(CIndex((2,), 2), [CIndex((2, 4), 2)], 1, 2)

    def test_mu_functional(self):
        self.assertEqual(mu_functional(CIndex((2, 4), 2)), 0)
        for index in isotropic_subsets(2, 3):
            self.assertEqual(mu_functional(index),
                             2 - 2 * dominance_count(index.elements, [3]))


if __name__ == '__main__':
    unittest.main()
