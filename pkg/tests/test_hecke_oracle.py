import unittest
from fractions import Fraction

import pytest

from torus_homfly.combinatorics import Partition, PartitionTuple, partitions_of
from torus_homfly.errors import SizeMismatch
from torus_homfly.hecke_oracle import (
    BraidWord,
    block_projector,
    braid_pipeline,
    braid_relations_hold,
    cable,
    cabled_trace_check,
    colored_homfly_braid,
    desk_instances,
    expected_projector_rank,
    full_twist,
    full_twist_check,
    irrep_character,
    jm_projector,
    projector_rank,
    quadratic_relation_holds,
    seminormal_irrep,
    sum_of_squares_check,
    torus_braid,
)
from torus_homfly.polyring import ExactLaurent, RationalFunction
from torus_homfly.symfunc import s_star
from torus_homfly.torus import TorusLinkSpec, colored_homfly_torus, invert_both

HALF = Fraction(1, 2)


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


class BraidWordTester(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            BraidWord(2, (2,))
        with self.assertRaises(ValueError):
            BraidWord(3, (0,))
        with self.assertRaises(ValueError):
            BraidWord(0)
        with self.assertRaises(SizeMismatch):
            BraidWord(2, (1,)) * BraidWord(3, (1,))

    def test_inverse_and_power(self):
        word = BraidWord(3, (1, -2))
        self.assertEqual(BraidWord(3, (2, -1)), word.inverse())
        self.assertEqual(BraidWord(3, (2, -1, 2, -1)), word.power(-2))
        self.assertEqual(4, len(word.power(2)))

    def test_components(self):
        self.assertEqual([0, 0], BraidWord(2, (1,)).components())
        self.assertEqual([0, 1], BraidWord(2, (1, 1)).components())
        self.assertEqual([0, 0, 0], BraidWord(3, (1, -2, 1, -2)).components())
        self.assertEqual([0, 1], torus_braid(TorusLinkSpec(1, 1, 2)).components())
        self.assertEqual([0, 1, 0, 1], torus_braid(TorusLinkSpec(2, 1, 2)).components())

    def test_writhes(self):
        self.assertEqual({0: 3}, BraidWord(2, (1, 1, 1)).component_writhes())
        self.assertEqual({0: 0, 1: 0}, BraidWord(2, (1, 1)).component_writhes())
        self.assertEqual({0: 0}, BraidWord(3, (1, -2, 1, -2)).component_writhes())

    def test_torus_braids(self):
        self.assertEqual((1, 1, 1), torus_braid(TorusLinkSpec(2, 3)).letters)
        self.assertEqual((1, 1), torus_braid(TorusLinkSpec(1, 1, 2)).letters)
        self.assertEqual((-2, -1, -2, -1), torus_braid(TorusLinkSpec(3, -2)).letters)
        self.assertEqual((1, 2, 1, 2, 1, 2), full_twist(3).letters)


class CablingTester(unittest.TestCase):
    def test_positive_crossing(self):
        self.assertEqual((2, 1), cable(BraidWord(2, (1,)), [2, 1]).word.letters)
        self.assertEqual((1, 2), cable(BraidWord(2, (1,)), [1, 2]).word.letters)

    def test_negative_crossing(self):
        self.assertEqual((-2, -1), cable(BraidWord(2, (-1,)), [2, 1]).word.letters)

    def test_labels_and_offsets(self):
        cabled = cable(BraidWord(2, (1, 1)), [2, 1])
        self.assertEqual((0, 0, 1), cabled.strand_labels)
        self.assertEqual([0, 2], cabled.block_offsets())

    def test_self_crossings_scale_with_cable_size(self):
        cabled = cable(torus_braid(TorusLinkSpec(2, 3)), [2, 2])
        self.assertEqual({0: 12}, cabled.word.component_writhes(cabled.strand_labels))

    def test_rejects_bad_sizes(self):
        with self.assertRaises(SizeMismatch):
            cable(BraidWord(2, (1,)), [1])
        with self.assertRaises(ValueError):
            cable(BraidWord(2, (1,)), [1, 0])


class SeminormalTester(unittest.TestCase):
    def test_one_dimensional_characters(self):
        sigma = BraidWord(2, (1,))
        self.assertEqual(RationalFunction(ExactLaurent({(-HALF, 0): 1})), irrep_character(P(2), sigma))
        self.assertEqual(RationalFunction(ExactLaurent({(HALF, 0): -1})), irrep_character(P(1, 1), sigma))
        self.assertEqual(2, irrep_character(P(2, 1), BraidWord(3)))
        with self.assertRaises(SizeMismatch):
            irrep_character(P(2), BraidWord(3))

    def test_hecke_relations(self):
        for n in range(2, 5):
            for lam in partitions_of(n):
                irrep = seminormal_irrep(lam)
                self.assertEqual(len(irrep.tableaux), irrep.dimension)
                for i in range(1, n):
                    self.assertTrue(quadratic_relation_holds(irrep, i), msg=f"{lam.label()} g_{i}")
                self.assertTrue(braid_relations_hold(irrep), msg=lam.label())

    def test_full_twist_is_central(self):
        for n in range(1, 5):
            for lam in partitions_of(n):
                self.assertTrue(full_twist_check(lam), msg=lam.label())
        self.assertFalse(full_twist_check(P(2, 1), kappa_value=2))

    def test_sum_of_squares(self):
        for n in range(1, 6):
            self.assertTrue(sum_of_squares_check(n))
        with self.assertRaises(ValueError):
            sum_of_squares_check(0)


class ProjectorTester(unittest.TestCase):
    def test_single_block(self):
        projector = block_projector(P(2, 1), P(2), 0)
        self.assertTrue(projector.is_idempotent())
        self.assertTrue(projector.commutes_with_blocks())
        self.assertEqual(1, projector.rank())

    def test_diagonal_matches_interpolated(self):
        for lam in partitions_of(4):
            for m in (2, 3):
                for mu in partitions_of(m):
                    self.assertEqual(block_projector(lam, mu, 0).matrix, block_projector(lam, mu, 0, interpolate=True).matrix)

    def test_shifted_block(self):
        blocks = PartitionTuple.of(P(1), P(2))
        projector = jm_projector(3, blocks, P(2, 1))
        self.assertTrue(projector.is_idempotent())
        self.assertTrue(projector.commutes_with_blocks())
        self.assertEqual(expected_projector_rank(P(2, 1), blocks), projector.rank())
        self.assertEqual(1, projector.rank())

    def test_two_blocks(self):
        for lam in partitions_of(4):
            for blocks in (PartitionTuple.of(P(2), P(2)), PartitionTuple.of(P(1, 1), P(2)), PartitionTuple.of(P(2), P(1))):
                projector = jm_projector(4, blocks, lam)
                self.assertTrue(projector.is_idempotent())
                self.assertEqual(expected_projector_rank(lam, blocks), projector.rank(), msg=f"{blocks} in {lam.label()}")

    def test_projector_rank(self):
        self.assertEqual(1, projector_rank(P(2, 1), PartitionTuple.of(P(2))))

    def test_expected_rank_without_blocks(self):
        self.assertEqual(2, expected_projector_rank(P(2, 1), PartitionTuple.of(P())))

    def test_block_must_fit(self):
        with self.assertRaises(SizeMismatch):
            block_projector(P(2), P(2), 1)
        with self.assertRaises(SizeMismatch):
            jm_projector(2, PartitionTuple.of(P(2), P(1)), P(2))


class BraidInvariantTester(unittest.TestCase):
    def test_cabled_trace_formula(self):
        for r, k, text in ((2, 3, "1"), (2, -1, "2"), (1, 1, "1|1"), (3, 1, "1")):
            spec_colors = PartitionTuple.from_string(text)
            for lam in partitions_of(r * spec_colors.size()):
                self.assertTrue(cabled_trace_check(r, k, spec_colors, lam), msg=f"r={r} k={k} {text} {lam.label()}")

    def test_braid_pipeline_matches_torus_formula(self):
        for link, text in ((TorusLinkSpec(2, 3), "1"), (TorusLinkSpec(2, 3), "2"), (TorusLinkSpec(3, 2), "1"), (TorusLinkSpec(1, 1, 2), "2|1"), (TorusLinkSpec(2, -1), "1,1")):
            spec_colors = PartitionTuple.from_string(text)
            self.assertEqual(colored_homfly_torus(link, spec_colors).value, braid_pipeline(link, spec_colors).value, msg=f"{link.name()} {text}")

    def test_unknot_diagrams(self):
        """A kinked unknot still evaluates to s*."""
        for mu in (P(1), P(2), P(1, 1)):
            self.assertEqual(s_star(mu), colored_homfly_braid(BraidWord(1), [mu]))
            self.assertEqual(s_star(mu), colored_homfly_braid(BraidWord(2, (1,)), [mu]))
            self.assertEqual(s_star(mu), colored_homfly_braid(BraidWord(2, (-1,)), [mu]))

    def test_markov_stabilization(self):
        trefoil = colored_homfly_braid(BraidWord(2, (1, 1, 1)), [P(1)])
        self.assertEqual(colored_homfly_torus(TorusLinkSpec(2, 3), PartitionTuple.of(P(1))).value, trefoil)
        self.assertEqual(trefoil, colored_homfly_braid(BraidWord(3, (1, 1, 1, 2)), [P(1)]))
        self.assertEqual(trefoil, colored_homfly_braid(BraidWord(3, (1, 1, 1, -2)), [P(1)]))

    def test_figure_eight_is_amphichiral(self):
        figure_eight = BraidWord(3, (1, -2, 1, -2))
        value = colored_homfly_braid(figure_eight, [P(1)])
        self.assertEqual(invert_both(value), value)
        self.assertNotEqual(s_star(P(1)), value)

    def test_color_count_must_match(self):
        with self.assertRaises(SizeMismatch):
            colored_homfly_braid(BraidWord(2, (1, 1)), [P(1)])
        with self.assertRaises(ValueError):
            colored_homfly_braid(BraidWord(2, (1, 1)), [P(1), P()])

    def test_desk_instances(self):
        instances = desk_instances(2)
        self.assertEqual(10, len(instances))
        for link, spec_colors in instances:
            self.assertLessEqual(link.r * spec_colors.size(), 2)

    def test_small_desk_sweep(self):
        for link, spec_colors in desk_instances(3):
            self.assertEqual(colored_homfly_torus(link, spec_colors).value, braid_pipeline(link, spec_colors).value, msg=f"{link.name()} {spec_colors}")

    @pytest.mark.slow
    def test_full_desk_sweep(self):
        for link, spec_colors in desk_instances(5):
            self.assertEqual(colored_homfly_torus(link, spec_colors).value, braid_pipeline(link, spec_colors).value, msg=f"{link.name()} {spec_colors}")

    @pytest.mark.slow
    def test_figure_eight_colored(self):
        value = colored_homfly_braid(BraidWord(3, (1, -2, 1, -2)), [P(2)])
        self.assertEqual(invert_both(value), value)


if __name__ == "__main__":
    unittest.main()
