import unittest

from torus_homfly.combinatorics import (
    Partition,
    PartitionTuple,
    add_partitions,
    addable_contents,
    class_size,
    degree_vectors_upto,
    dimension,
    divisors,
    hooks_contents,
    kappa,
    mobius,
    partitions_of,
    row_word_contents,
    standard_tableaux,
    stretch,
    superstandard_word,
    tuples_of_degree,
    z_value,
)
from torus_homfly.errors import InvalidColors


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


class PartitionTester(unittest.TestCase):
    def test_rejects_bad_parts(self):
        with self.assertRaises(ValueError):
            Partition((1, 2))
        with self.assertRaises(ValueError):
            Partition((2, 0))
        with self.assertRaises(TypeError):
            Partition([2, 1])  # type: ignore[arg-type]

    def test_from_string(self):
        self.assertEqual(P(2, 1), Partition.from_string("2,1"))
        self.assertEqual(P(2, 1), Partition.from_string("(2,1)"))
        self.assertEqual(P(), Partition.from_string(""))
        self.assertEqual("2,1", str(P(2, 1)))
        self.assertEqual("(2,1)", P(2, 1).label())

    def test_from_parts_sorts(self):
        self.assertEqual(P(3, 1, 1), Partition.from_parts([1, 0, 3, 1]))

    def test_conjugate(self):
        self.assertEqual(P(2, 1, 1), P(3, 1).conjugate())
        self.assertEqual(P(2, 2), P(2, 2).conjugate())

    def test_partition_tuple_syntax(self):
        colors = PartitionTuple.from_string("2|1,1")
        self.assertEqual((P(2), P(1, 1)), colors.entries)
        self.assertEqual("2|1,1", str(colors))
        self.assertEqual((2, 2), colors.degree())
        with_empty = PartitionTuple.from_string("|1")
        self.assertTrue(with_empty[0].is_empty())
        self.assertEqual((P(1),), with_empty.nonempty())
        with self.assertRaises(InvalidColors):
            PartitionTuple(())


class EnumerationTester(unittest.TestCase):
    def test_partitions_order(self):
        self.assertEqual([P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)], partitions_of(4))
        self.assertEqual([P()], partitions_of(0))
        self.assertEqual(11, len(partitions_of(6)))

    def test_degree_vectors(self):
        self.assertEqual([(0, 1), (1, 0), (1, 1)], degree_vectors_upto((1, 1)))
        self.assertEqual([(1,), (2,)], degree_vectors_upto((2,)))

    def test_tuples_of_degree(self):
        self.assertEqual(4, len(tuples_of_degree((2, 2))))
        self.assertEqual(3, len(tuples_of_degree((0, 3))))


class StatisticsTester(unittest.TestCase):
    def test_z_value_and_class_size(self):
        self.assertEqual(4, z_value(P(2, 1, 1)))
        self.assertEqual(8, z_value(P(2, 2)))
        self.assertEqual(6, z_value(P(1, 1, 1)))
        self.assertEqual(6, class_size(P(2, 1, 1)))
        self.assertEqual(24, sum(class_size(mu) for mu in partitions_of(4)))

    def test_kappa(self):
        self.assertEqual(2, kappa(P(2)))
        self.assertEqual(-2, kappa(P(1, 1)))
        self.assertEqual(0, kappa(P(2, 1)))
        self.assertEqual(6, kappa(P(3)))

    def test_dimension(self):
        self.assertEqual(5, dimension(P(3, 2)))
        self.assertEqual(2, dimension(P(2, 2)))
        self.assertEqual(6, dimension(P(3, 1, 1)))
        for n in range(1, 7):
            self.assertEqual([len(standard_tableaux(lam)) for lam in partitions_of(n)], [dimension(lam) for lam in partitions_of(n)])

    def test_hooks_and_contents(self):
        self.assertEqual([(3, 0), (1, 1), (1, -1)], hooks_contents(P(2, 1)))
        self.assertEqual([(3, 0), (2, 1), (1, 2)], hooks_contents(P(3)))

    def test_divisors(self):
        self.assertEqual([1, 2, 3, 6], divisors(6))
        self.assertEqual([1], divisors(1))

    def test_stretch_and_add(self):
        self.assertEqual(P(4, 2), stretch(P(2, 1), 2))
        self.assertEqual(P(2, 1, 1), add_partitions(P(2, 1), P(1)))

    def test_addable_contents(self):
        self.assertEqual([2, 0, -2], addable_contents(P(2, 1)))
        self.assertEqual([0], addable_contents(P()))

    def test_tableaux(self):
        self.assertEqual(((0, 0, 1), (0, 1, 0)), standard_tableaux(P(2, 1)))
        self.assertEqual((0, -1, 1), row_word_contents((0, 1, 0)))
        self.assertEqual((0, 0, 1), superstandard_word(P(2, 1)))
        self.assertEqual(superstandard_word(P(3, 2)), standard_tableaux(P(3, 2))[0])

    def test_mobius(self):
        self.assertEqual([1, -1, -1, 0, -1, 1], [mobius(n) for n in range(1, 7)])
        with self.assertRaises(ValueError):
            mobius(0)


if __name__ == "__main__":
    unittest.main()
