import unittest
from fractions import Fraction

import pytest

from torus_homfly.combinatorics import Partition, PartitionTuple, degree_vectors_upto
from torus_homfly.errors import SizeMismatch
from torus_homfly.golden import G_TORUS_KNOT_2, G_TORUS_KNOT_3, G_TORUS_LINK_2, swap_two_colors
from torus_homfly.lmv import (
    SymSeries,
    apply_m,
    build_z,
    extract_g,
    fhat_closed_form_T2k,
    fhat_from_f,
    fhat_from_g,
    fhat_vs_g_consistency,
    formal_log_series,
    g_table,
    plethystic_exp,
    plethystic_log,
    reformulated_table,
    run_lmv,
    t_to_u,
    tables_agree,
    u_to_t,
)
from torus_homfly.polyring import ExactLaurent
from torus_homfly.selftest import fhat_tables_agree, g_table_matches
from torus_homfly.torus import TorusLinkSpec

HALF = Fraction(1, 2)
UNKNOT = TorusLinkSpec(1, 1)
TREFOIL = TorusLinkSpec(2, 3)
HOPF = TorusLinkSpec(1, 1, 2)


def colors(text: str) -> PartitionTuple:
    return PartitionTuple.from_string(text)


class PlethysticTester(unittest.TestCase):
    def test_negative_caps_rejected(self):
        with self.assertRaises(ValueError):
            SymSeries((2, -1))

    def test_exp_inverts_log(self):
        z = build_z(TREFOIL, (2,))
        self.assertTrue(plethystic_exp(plethystic_log(z)).equals(z))

    def test_exp_inverts_log_two_alphabets(self):
        z = build_z(HOPF, (1, 1))
        self.assertTrue(plethystic_exp(plethystic_log(z)).equals(z))

    def test_caps_must_match_components(self):
        with self.assertRaises(SizeMismatch):
            build_z(HOPF, (1,))
        with self.assertRaises(ValueError):
            build_z(TREFOIL, (-1,))


class IntegralityTester(unittest.TestCase):
    def test_unknot_invariants(self):
        """The unknot has N = +-1 at Q = +-1/2 in degree one and nothing above."""
        run = run_lmv(UNKNOT, (3,))
        self.assertTrue(run.passed())
        first = run.degrees[0]
        self.assertEqual({(0, HALF): 1, (0, -HALF): -1}, first.bps.values(colors("1")))
        self.assertEqual({}, run.degrees[1].fhat.entries)
        self.assertEqual({}, run.degrees[2].fhat.entries)

    def test_small_knots_and_links(self):
        for link, caps in ((TREFOIL, (2,)), (TorusLinkSpec(3, 2), (1,)), (HOPF, (1, 1)), (TorusLinkSpec(1, 2, 2), (1, 1))):
            run = run_lmv(link, caps, jobs=2)
            self.assertTrue(run.passed(), msg=f"{link.name()} caps={caps}")
            self.assertEqual([], run.findings)

    def test_zero_entry_degrees_read_the_sublink(self):
        """Degrees (0,1) and (1,0) of the Hopf link carry the unknot's invariants."""
        run = run_lmv(HOPF, (1, 1))
        self.assertTrue(run.passed())
        by_degree = {result.degree: result for result in run.degrees}
        unknot = {(0, HALF): 1, (0, -HALF): -1}
        self.assertEqual(unknot, by_degree[(0, 1)].bps.values(colors("|1")))
        self.assertEqual(unknot, by_degree[(1, 0)].bps.values(colors("1|")))

    def test_three_component_link(self):
        run = run_lmv(TorusLinkSpec(1, 1, 3), (1, 1, 1))
        self.assertTrue(run.passed())
        self.assertEqual([], run.findings)

    def test_fhat_closed_form_other_k(self):
        for k in (1, 5):
            fhat = run_lmv(TorusLinkSpec(2, k), (2,)).degrees[-1].fhat
            for mu in (Partition((2,)), Partition((1, 1))):
                self.assertEqual(fhat_closed_form_T2k(mu, k), fhat[PartitionTuple.of(mu)], msg=f"k={k} {mu.label()}")

    def test_integer_invariants(self):
        run = run_lmv(TREFOIL, (2,))
        for result in run.degrees:
            self.assertTrue(result.bps.all_integer)
            self.assertTrue(all(n.denominator == 1 for n in result.bps.entries.values()))

    def test_fault_injection_is_reported(self):
        run = run_lmv(TREFOIL, (1,), inject_fault=True)
        self.assertFalse(run.passed())
        self.assertEqual(1, len(run.findings))
        finding = run.findings[0]
        self.assertEqual("certify_polynomial", finding.stage)
        self.assertEqual((1,), finding.degree)

    def test_fhat_closed_form(self):
        run = run_lmv(TREFOIL, (2,))
        fhat = run.degrees[-1].fhat
        for mu in (Partition((2,)), Partition((1, 1))):
            self.assertEqual(fhat_closed_form_T2k(mu, 3), fhat[PartitionTuple.of(mu)])

    def test_fhat_closed_form_rejects(self):
        with self.assertRaises(ValueError):
            fhat_closed_form_T2k(Partition((2,)), 2)
        with self.assertRaises(ValueError):
            fhat_closed_form_T2k(Partition((2, 1)), 3)

    def test_m_contraction_round_trip(self):
        f = reformulated_table(plethystic_log(build_z(HOPF, (1, 1))), (1, 1))
        self.assertTrue(tables_agree(f, apply_m(fhat_from_f(f))))


class FormalPipelineTester(unittest.TestCase):
    def test_formal_and_direct_agree(self):
        self.assertTrue(fhat_tables_agree(TREFOIL, (2,)))
        self.assertTrue(fhat_tables_agree(HOPF, (1, 1)))

    def test_formal_f_table(self):
        direct = plethystic_log(build_z(TREFOIL, (2,)))
        formal = formal_log_series(TREFOIL, (2,))
        for degree in degree_vectors_upto((2,)):
            self.assertTrue(tables_agree(reformulated_table(direct, degree), formal.f_table(degree)))


class GTableTester(unittest.TestCase):
    def test_u_substitution(self):
        g_t = ExactLaurent({(-3, 0): 1, (3, 0): 1})
        g_u = t_to_u(g_t, 3)
        self.assertEqual(ExactLaurent({(1, 0): 1, (-1, 0): 1}), g_u)
        self.assertEqual(g_t, u_to_t(g_u, 3))

    def test_trefoil_table(self):
        self.assertTrue(g_table_matches(TREFOIL, G_TORUS_KNOT_2, (3,)))

    def test_three_strand_table(self):
        self.assertTrue(g_table_matches(TorusLinkSpec(3, 2), G_TORUS_KNOT_3, (2,)))

    def test_hopf_table(self):
        self.assertTrue(g_table_matches(HOPF, swap_two_colors(G_TORUS_LINK_2), (2, 2)))

    def test_k_one_tables(self):
        self.assertTrue(g_table_matches(TorusLinkSpec(2, 1), G_TORUS_KNOT_2, (3,)))
        self.assertTrue(g_table_matches(TorusLinkSpec(3, 1), G_TORUS_KNOT_3, (2,)))

    def test_exponents_scale_with_k(self):
        """In t, the k=3 entries are the k=1 entries with every exponent tripled."""
        base = extract_g(TorusLinkSpec(2, 1), (2,))
        tripled = extract_g(TREFOIL, (2,))
        self.assertEqual({(c, lam) for c, lam, g in base.nonzero() if g}, {(c, lam) for c, lam, g in tripled.nonzero() if g})
        for c, lam, g in base.nonzero():
            expected = ExactLaurent({(3 * et, ev): n for (et, ev), n in u_to_t(g, 1).items()})
            self.assertEqual(expected, u_to_t(tripled.entry(c, lam), 3))

    def test_zero_size_component(self):
        table = extract_g(HOPF, (0, 1))
        self.assertEqual(ExactLaurent.one(), table.entry(colors("|1"), Partition((1,))))

    def test_all_zero_sizes_rejected(self):
        with self.assertRaises(ValueError):
            extract_g(TREFOIL, (0,))

    def test_g_table_run(self):
        run = g_table(TREFOIL, (2,), jobs=2)
        self.assertEqual([(1,), (2,)], [table.sizes for table in run.tables])
        self.assertEqual([], run.findings)
        self.assertTrue(all(table.integral and table.palindromic for table in run.tables))

    def test_fhat_rebuilt_from_g(self):
        self.assertTrue(fhat_vs_g_consistency(TREFOIL, (2,)))
        self.assertTrue(fhat_vs_g_consistency(HOPF, (1, 1)))

    def test_fhat_from_g_selected_colors(self):
        table = extract_g(TREFOIL, (2,))
        chosen = fhat_from_g(table, [colors("2")])
        self.assertEqual({colors("2")}, set(chosen.entries))
        self.assertEqual(fhat_closed_form_T2k(Partition((2,)), 3), chosen[colors("2")])

    @pytest.mark.slow
    def test_hopf_table_total_size_five(self):
        self.assertTrue(g_table_matches(HOPF, swap_two_colors(G_TORUS_LINK_2), (4, 4), max_total=5))

    @pytest.mark.slow
    def test_trefoil_table_degree_four(self):
        self.assertTrue(g_table_matches(TREFOIL, G_TORUS_KNOT_2, (4,)))

    @pytest.mark.slow
    def test_three_strand_table_degree_three(self):
        self.assertTrue(g_table_matches(TorusLinkSpec(3, 2), G_TORUS_KNOT_3, (3,)))


if __name__ == "__main__":
    unittest.main()
