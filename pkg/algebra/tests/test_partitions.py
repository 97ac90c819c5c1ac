from itertools import combinations
from unittest import TestCase

from algebra.partitions import (
    Bipartition, Partition, bipartitions_of, c_coeff, contains, multiset_difference,
    multiset_union, partitions_of, scale_div, sub_multisets, z_order,
)


def P(*parts):
    return Partition(parts)


class TestPartitionOps(TestCase):
    def test_parts_are_sorted(self):
        self.assertEqual(Partition((1, 3, 2)).parts, (3, 2, 1))
        self.assertEqual(P().size, 0)

    def test_rejects_non_positive_parts(self):
        with self.assertRaises(ValueError):
            Partition((2, 0))

    def test_contains(self):
        self.assertTrue(contains(P(2, 1, 1), P(1)))
        self.assertFalse(contains(P(2, 1), P(1, 1)))
        self.assertTrue(contains(P(3, 2), P(3, 2)))
        self.assertTrue(contains(P(3, 2), P()))

    def test_multiset_union(self):
        self.assertEqual(multiset_union(P(2, 1), P(1)), P(2, 1, 1))
        self.assertEqual(multiset_union(P(2, 1), P()), P(2, 1))
        self.assertEqual(multiset_union(P(3), P(3)), P(3, 3))
        union = multiset_union(P(4), P(2, 1), P(1))
        self.assertEqual(union.size, 8)
        for piece in (P(4), P(2, 1), P(1)):
            self.assertTrue(contains(union, piece))

    def test_multiset_difference(self):
        self.assertEqual(multiset_difference(P(2, 1, 1), P(1)), P(2, 1))
        with self.assertRaises(ValueError):
            multiset_difference(P(2), P(1))

    def test_scale_div(self):
        self.assertEqual(scale_div(P(4, 2), 2), P(2, 1))
        self.assertEqual(scale_div(P(3, 1), 1), P(3, 1))
        with self.assertRaises(ValueError):
            scale_div(P(3, 2), 2)

    def test_c_coeff_examples(self):
        self.assertEqual(c_coeff(P(2, 1, 1), P(1)), 2)
        self.assertEqual(c_coeff(P(2, 1), P(2, 1)), 1)
        self.assertEqual(c_coeff(P(2, 2, 1, 1), P(2, 1)), 4)
        self.assertEqual(c_coeff(P(2, 1), P(1, 1)), 0)
        with self.assertRaises(ValueError):
            c_coeff(P(2, 1), P(1, 1), strict=True)

    def test_c_coeff_counts_sub_multisets(self):
        for n in range(7):
            for mu in partitions_of(n):
                for sub in sub_multisets(mu):
                    chosen = sum(
                        1 for idx in combinations(range(len(mu.parts)), len(sub.parts))
                        if Partition(tuple(mu.parts[i] for i in idx)) == sub
                    )
                    self.assertEqual(c_coeff(mu, sub), chosen)

    def test_sub_multisets_are_distinct(self):
        subs = list(sub_multisets(P(2, 1, 1)))
        self.assertEqual(len(subs), len(set(subs)))
        self.assertEqual(set(subs), {P(), P(1), P(2), P(1, 1), P(2, 1), P(2, 1, 1)})


class TestEnumeration(TestCase):
    def test_partition_counts(self):
        self.assertEqual([len(partitions_of(n)) for n in range(7)], [1, 1, 2, 3, 5, 7, 11])
        self.assertEqual(partitions_of(2), (P(2), P(1, 1)))

    def test_bipartitions_of_two(self):
        expected = {
            Bipartition(P(2), P()), Bipartition(P(1, 1), P()), Bipartition(P(1), P(1)),
            Bipartition(P(), P(2)), Bipartition(P(), P(1, 1)),
        }
        self.assertEqual(set(bipartitions_of(2)), expected)
        self.assertEqual(len(bipartitions_of(2)), 5)

    def test_z_order(self):
        self.assertEqual(z_order(P(2, 1)), 2)
        self.assertEqual(z_order(P(1, 1, 1)), 6)
        self.assertEqual(z_order(P(2, 2)), 8)
        self.assertEqual(z_order(P()), 1)
