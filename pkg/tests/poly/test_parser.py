import unittest
import random
from fractions import Fraction
from stokes import poly
from stokes.errors import PolynomialSyntaxError, EmptySupportError


class TestParser(unittest.TestCase):

    def test_parse_01(self):
        p = poly.parse_polynomial('p^2+x^6+a1+a2*x+a3*x^2+a4*x^3+a5*x^4')
        self.assertSetEqual({(0, 2), (6, 0), (0, 0), (1, 0), (2, 0), (3, 0), (4, 0)}, set(p.support))
        self.assertEqual(['a1', 'a2', 'a3', 'a4', 'a5'], p.parameters)

    def test_parse_02(self):
        p = poly.parse_polynomial('p^3+x^2*p+a1+a2*p+a3*p^2+a4*x')
        self.assertSetEqual({(0, 3), (2, 1), (0, 0), (0, 1), (0, 2), (1, 0)}, set(p.support))
        self.assertTrue(p.is_parameter((0, 1)))
        self.assertFalse(p.is_parameter((2, 1)))

    def test_parse_03(self):
        try:
            poly.parse_polynomial('x*p - x*p')
            self.fail('Cancelling terms should leave an empty support')
        except EmptySupportError:
            self.assertTrue(True)

    def test_parse_04(self):
        p = poly.parse_polynomial('2x^2 p + 1/2*x^2*p - 3 + x^-1 + p^(-2)')
        self.assertEqual(Fraction(5, 2), p.coefficient(2, 1))
        self.assertEqual(Fraction(-3), p.coefficient(0, 0))
        self.assertEqual(Fraction(1), p.coefficient(-1, 0))
        self.assertEqual(Fraction(1), p.coefficient(0, -2))
        self.assertEqual(Fraction(0), p.coefficient(5, 5))

    def test_parse_05(self):
        with self.assertRaises(PolynomialSyntaxError):
            poly.parse_polynomial('a1*a2*x')

        with self.assertRaises(PolynomialSyntaxError):
            poly.parse_polynomial('x^1/2')

        with self.assertRaises(PolynomialSyntaxError):
            poly.parse_polynomial('y^2+x')

        try:
            poly.parse_polynomial('x^2 + + p')
            self.fail('Double sign should not parse')
        except PolynomialSyntaxError as e:
            self.assertEqual(6, e.position)
            self.assertEqual('poly', e.module)

    def test_parse_06(self):
        p = poly.parse_polynomial('a1*x - 2*a1*x + p')
        self.assertEqual(poly.Parameter('a1', Fraction(-1)), p.coefficient(1, 0))

        with self.assertRaises(PolynomialSyntaxError):
            poly.parse_polynomial('a1*x + x + p')

    def test_render_01(self):
        p = poly.parse_polynomial('a1 + x^3 + p^2 - 3/2*x*p')
        self.assertEqual('p^2-3/2*x*p+x^3+a1', str(p))

    def test_render_02(self):
        rng = random.Random(7)
        for _ in range(100):
            terms = {}
            for _ in range(rng.randint(1, 6)):
                exponent = (rng.randint(-3, 5), rng.randint(-2, 4))
                if rng.random() < 0.3:
                    terms[exponent] = poly.Parameter('a{}'.format(rng.randint(1, 9)),
                                                     Fraction(rng.choice([-2, -1, 1, 3]), rng.randint(1, 3)))
                else:
                    terms[exponent] = Fraction(rng.choice([-5, -1, 1, 2, 7]), rng.randint(1, 4))
            p = poly.LaurentPolynomial(terms)
            self.assertEqual(p, poly.parse_polynomial(str(p)))

    def test_tokenize_01(self):
        tokens = poly.tokenize('x^-2 a12')
        self.assertEqual(['variable', 'caret', 'sign', 'rational', 'parameter', 'end'],
                         [t.kind for t in tokens])
        self.assertEqual(5, tokens[4].position)


if __name__ == '__main__':
    unittest.main()
