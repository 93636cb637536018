import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from torus_homfly.errors import DenominatorZero, NotPalindromic, NotPolynomial
from torus_homfly.polyring import ExactLaurent, RationalFunction, bracket_laurent, certify_polynomial, zsquared_decompose
from torus_homfly.types import Variable

T = Variable.T
NU = Variable.NU
HALF = Fraction(1, 2)

half_exponents = st.integers(min_value=-6, max_value=6).map(lambda n: Fraction(n, 2))
laurents = st.dictionaries(st.tuples(half_exponents, half_exponents), st.integers(min_value=-4, max_value=4), max_size=5).map(ExactLaurent)
brackets = st.tuples(st.sampled_from([T, NU]), st.integers(min_value=1, max_value=4))


class ExactLaurentTester(unittest.TestCase):
    def setUp(self):
        self.one_t = bracket_laurent(T, 1)

    def test_bracket_identity(self):
        """[2] = [1](t^{1/2} + t^{-1/2})."""
        t_sum = ExactLaurent({(HALF, 0): 1, (-HALF, 0): 1})
        self.assertEqual(bracket_laurent(T, 2), self.one_t * t_sum)
        self.assertEqual(-bracket_laurent(T, 3), bracket_laurent(T, -3))
        self.assertTrue(bracket_laurent(NU, 0).is_zero())

    def test_zero_coefficients_dropped(self):
        p = ExactLaurent({(1, 0): 1}) + ExactLaurent({(1, 0): -1})
        self.assertTrue(p.is_zero())
        self.assertEqual(0, len(p))

    def test_adams_and_inversion(self):
        self.assertEqual(bracket_laurent(T, 2), self.one_t.adams(2))
        self.assertEqual(-self.one_t, self.one_t.invert_variable(T))
        self.assertEqual(self.one_t, self.one_t.invert_variable(NU))

    def test_divide_bracket(self):
        product = ExactLaurent({(1, HALF): 3, (0, 0): -1}) * bracket_laurent(T, 3)
        self.assertEqual(ExactLaurent({(1, HALF): 3, (0, 0): -1}), product.divide_bracket(T, 3))
        self.assertIsNone(ExactLaurent.one().divide_bracket(T, 1))

    def test_evaluate(self):
        self.assertEqual(Fraction(3, 2), self.one_t.evaluate(2))
        self.assertEqual(Fraction(0), self.one_t.evaluate(1))

    def test_zsquared_decompose(self):
        z2 = ExactLaurent({(1, 0): 1, (0, 0): -2, (-1, 0): 1})
        self.assertEqual([0, 1], zsquared_decompose(z2))
        self.assertEqual([3], zsquared_decompose(ExactLaurent.constant(3)))
        self.assertEqual([2, 0, 1], zsquared_decompose(z2 * z2 + ExactLaurent.constant(2)))
        with self.assertRaises(NotPalindromic):
            zsquared_decompose(ExactLaurent({(1, 0): 1}))
        with self.assertRaises(ValueError):
            zsquared_decompose(ExactLaurent({(0, 1): 1}))

    @given(laurents, laurents, laurents)
    @settings(max_examples=50, deadline=None)
    def test_ring_axioms(self, a, b, c):
        """Addition cancels and multiplication distributes."""
        self.assertEqual(a, (a + b) - b)
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a * b, b * a)

    @given(laurents)
    @settings(max_examples=50, deadline=None)
    def test_inversion_is_involution(self, a):
        self.assertEqual(a, a.invert_variable(T).invert_variable(T))
        self.assertTrue((a + a.invert_variable(NU)).is_palindromic(NU))

    @given(laurents, brackets)
    @settings(max_examples=50, deadline=None)
    def test_bracket_division_is_exact(self, a, bracket):
        variable, m = bracket
        self.assertEqual(a, (a * bracket_laurent(variable, m)).divide_bracket(variable, m))


class RationalFunctionTester(unittest.TestCase):
    def test_reduces_on_construction(self):
        """[2]/[1] cancels to the Laurent polynomial t^{1/2} + t^{-1/2}."""
        ratio = RationalFunction(bracket_laurent(T, 2), [(T, 1)])
        self.assertTrue(ratio.is_laurent())
        self.assertEqual(ExactLaurent({(HALF, 0): 1, (-HALF, 0): 1}), certify_polynomial(ratio))

    def test_not_polynomial(self):
        with self.assertRaises(NotPolynomial):
            certify_polynomial(RationalFunction.inverse_bracket(T, 2))

    def test_denominator_zero(self):
        with self.assertRaises(DenominatorZero):
            RationalFunction.inverse_bracket(T, 1).evaluate(1)
        with self.assertRaises(DenominatorZero):
            RationalFunction.bracket_ratio(1, T, 0)

    def test_equality_by_cross_multiplication(self):
        a = RationalFunction.bracket_ratio(bracket_laurent(NU, 1), T, 1)
        b = RationalFunction(bracket_laurent(NU, 1) * bracket_laurent(T, 2), [(T, 1), (T, 2)], reduce=False)
        self.assertEqual(a, b)
        self.assertNotEqual(a, RationalFunction.one())

    def test_invert_variable_flips_denominator(self):
        a = RationalFunction.inverse_bracket(T, 1)
        self.assertEqual(-a, a.invert_variable(T))
        self.assertEqual(a, a.invert_variable(NU))

    def test_adams(self):
        a = RationalFunction.bracket_ratio(bracket_laurent(NU, 1), T, 1)
        self.assertEqual(RationalFunction.bracket_ratio(bracket_laurent(NU, 2), T, 2), a.adams(2))

    def test_evaluate(self):
        a = RationalFunction.bracket_ratio(bracket_laurent(T, 2), T, 1)
        self.assertEqual(Fraction(5, 2), a.evaluate(2))

    @given(laurents, brackets)
    @settings(max_examples=50, deadline=None)
    def test_division_round_trip(self, a, bracket):
        variable, m = bracket
        quotient = RationalFunction.bracket_ratio(a, variable, m)
        self.assertEqual(a, certify_polynomial(quotient * bracket_laurent(variable, m)))

    @given(laurents, laurents, brackets)
    @settings(max_examples=50, deadline=None)
    def test_sum_over_common_denominator(self, a, b, bracket):
        variable, m = bracket
        total = RationalFunction.bracket_ratio(a, variable, m) + RationalFunction.bracket_ratio(b, variable, m)
        self.assertEqual(RationalFunction.bracket_ratio(a + b, variable, m), total)


if __name__ == "__main__":
    unittest.main()
