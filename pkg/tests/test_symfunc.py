import unittest
from fractions import Fraction

from torus_homfly.combinatorics import Partition, PartitionTuple, partitions_of
from torus_homfly.polyring import ExactLaurent, RationalFunction, bracket_laurent
from torus_homfly.symfunc import (
    S_on_k_points,
    inverse_phi,
    k_point_powersum_value,
    m_matrix,
    m_matrix_inverse,
    matrix_product,
    phi,
    powersum_to_schur,
    principal_specialize_sq,
    s_mu_q_powersum,
    s_q_laurent,
    s_q_vector,
    s_star,
    s_star_hook,
    schur_to_powersum,
    stretched_lr,
    verify_m_inverse,
)
from torus_homfly.types import Variable

T = Variable.T
NU = Variable.NU


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


class StretchedLRTester(unittest.TestCase):
    def test_plethysm_of_a_single_box(self):
        """s_1(x^2) = p_2 = s_2 - s_11."""
        self.assertEqual({P(2): 1, P(1, 1): -1}, stretched_lr(PartitionTuple.of(P(1)), 2).as_dict())

    def test_plain_product(self):
        self.assertEqual({P(2): 1, P(1, 1): 1}, stretched_lr(PartitionTuple.of(P(1), P(1)), 1).as_dict())
        self.assertEqual({P(3): 1, P(2, 1): 1}, stretched_lr(PartitionTuple.of(P(2), P(1)), 1).as_dict())

    def test_empty_entries_are_units(self):
        with_empty = stretched_lr(PartitionTuple.of(P(), P(2)), 1).as_dict()
        self.assertEqual({P(2): 1}, with_empty)

    def test_rejects_bad_r(self):
        with self.assertRaises(ValueError):
            stretched_lr(PartitionTuple.of(P(1)), 0)


class BasisChangeTester(unittest.TestCase):
    def test_powersum_schur_inverse(self):
        self.assertEqual({P(2): 1, P(1, 1): 1}, powersum_to_schur(P(1, 1)).nonzero())
        self.assertEqual({P(1, 1): Fraction(1, 2), P(2): Fraction(1, 2)}, schur_to_powersum(P(2)))


class PrincipalSpecializationTester(unittest.TestCase):
    def test_single_box(self):
        self.assertEqual(RationalFunction.bracket_ratio(bracket_laurent(NU, 1), T, 1), s_star(P(1)))

    def test_frobenius_matches_hook_content(self):
        for n in range(1, 5):
            for lam in partitions_of(n):
                self.assertEqual(s_star_hook(lam), s_star(lam), msg=lam.label())

    def test_q_deformed_schur(self):
        self.assertEqual({P(1): -bracket_laurent(T, 1)}, s_q_laurent(P(1), 1))
        self.assertEqual(-bracket_laurent(NU, 1), principal_specialize_sq(P(1), 1))
        minus_one = RationalFunction.coerce(-bracket_laurent(T, 1))
        self.assertEqual(minus_one, s_q_vector(P(1), 1).coefficients[P(1)])
        self.assertEqual({P(1): minus_one}, s_mu_q_powersum(P(1), 1))
        with self.assertRaises(ValueError):
            s_mu_q_powersum(P(1), 0)

    def test_single_point_alphabet(self):
        """On one point p_tau = 1, so S is the identity by orthogonality."""
        for lam in partitions_of(3):
            for mu in partitions_of(3):
                self.assertEqual(1 if lam == mu else 0, S_on_k_points(lam, mu, 1))

    def test_k_point_value(self):
        self.assertEqual(Fraction(5, 2), k_point_powersum_value(1, 2, Fraction(2)))
        self.assertEqual(Fraction(3), k_point_powersum_value(5, 3, Fraction(1)))


class MMatrixTester(unittest.TestCase):
    def test_phi(self):
        self.assertEqual(RationalFunction.one(), phi(P(1)))
        self.assertEqual(ExactLaurent({(Fraction(1, 2), 0): 1, (Fraction(-1, 2), 0): 1}), phi(P(2)))
        for tau in partitions_of(4):
            self.assertEqual(RationalFunction.one(), phi(tau) * inverse_phi(tau))

    def test_degree_one(self):
        self.assertEqual([[RationalFunction.one()]], m_matrix(1))

    def test_closed_form_inverse(self):
        for n in range(1, 4):
            product = matrix_product(m_matrix(n), m_matrix_inverse(n))
            size = len(product)
            for i in range(size):
                for j in range(size):
                    self.assertEqual(1 if i == j else 0, product[i][j])

    def test_elimination_agrees(self):
        self.assertTrue(verify_m_inverse(2))
        self.assertTrue(verify_m_inverse(3))

    def test_rejects_zero(self):
        with self.assertRaises(ValueError):
            m_matrix(0)


if __name__ == "__main__":
    unittest.main()
