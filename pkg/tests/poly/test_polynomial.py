import unittest
from fractions import Fraction
from stokes import poly
from stokes.errors import EmptySupportError, InvalidCoefficientError, StokesError


class TestPolynomial(unittest.TestCase):

    def test_swap_01(self):
        p = poly.parse_polynomial('p^2+x^6')
        self.assertSetEqual({(2, 0), (0, 6)}, set(poly.swap_variables(p).support))

    def test_swap_02(self):
        for name in poly.preset_names():
            p = poly.preset_by_name(name)
            swapped = p.swap_variables()
            self.assertEqual(len(p), len(swapped))
            self.assertEqual(p, swapped.swap_variables())

    def test_swap_03(self):
        d4 = poly.preset_family(poly.DynkinType('D', 4))
        expected = poly.parse_polynomial('x^3+x*p^2+a1+a2*x+a3*x^2+a4*p')
        self.assertSetEqual(set(expected.support), set(poly.swap_variables(d4).support))

    def test_instantiate_01(self):
        p = poly.preset_family(poly.DynkinType('E', 8))
        values = p.instantiate(3)
        self.assertEqual(values, p.instantiate(3))
        self.assertSetEqual(set(p.support), set(values.keys()))
        for exponent, value in values.items():
            self.assertIsInstance(value, Fraction)
            self.assertGreater(value, 0)
        self.assertEqual(Fraction(1), values[(5, 0)])

    def test_instantiate_02(self):
        p = poly.parse_polynomial('a1*x - a1*p + p^2')
        values = p.instantiate(11)
        self.assertEqual(values[(1, 0)], -values[(0, 1)])

    def test_constructor_01(self):
        with self.assertRaises(InvalidCoefficientError):
            poly.LaurentPolynomial({(1, 0): 0})

        with self.assertRaises(EmptySupportError):
            poly.LaurentPolynomial({})

        with self.assertRaises(InvalidCoefficientError) as context:
            poly.Parameter('a1', Fraction(0))
        self.assertIsInstance(context.exception, StokesError)
        self.assertEqual('poly', context.exception.module)

        with self.assertRaises(InvalidCoefficientError):
            poly.milnor_basis(poly.parse_polynomial('x^3 + p^2 + a1*x'))


if __name__ == '__main__':
    unittest.main()
