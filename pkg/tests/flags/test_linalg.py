import unittest
import sympy
from fractions import Fraction
from stokes import flags
from stokes.errors import FlagError


class TestSubspace(unittest.TestCase):

    def test_subspace_01(self):
        s = flags.Subspace([(1, 2, 3), (2, 4, 6), (0, 1, 0)], 3)
        t = flags.Subspace([(1, 3, 3), (0, 2, 0)], 3)
        self.assertEqual(2, s.dim)
        self.assertEqual(s, t)
        self.assertEqual(hash(s), hash(t))
        self.assertEqual(1, s.codimension)

    def test_subspace_02(self):
        xy = flags.span([(1, 0, 0), (0, 1, 0)])
        yz = flags.span([(0, 1, 0), (0, 0, 1)])
        self.assertEqual(flags.span([(0, 5, 0)]), xy & yz)
        self.assertEqual(flags.Subspace.full(3), xy + yz)
        self.assertTrue(xy.contains((3, -1, 0)))
        self.assertFalse(xy.contains(yz))
        self.assertEqual(0, (flags.span([(1, 0, 0)]) & flags.span([(0, 1, 0)])).dim)

    def test_subspace_03(self):
        line = flags.span([('1/2', 0, 1), (0, Fraction(1, 3), 1)])
        m = sympy.Matrix([[2, 0, 0], [0, 3, 0], [0, 0, 1]])
        self.assertEqual(flags.span([(1, 0, 1), (0, 1, 1)]), line.transform(m))

        with self.assertRaises(FlagError):
            flags.Subspace([(1, 0)], 3)
        with self.assertRaises(FlagError):
            flags.span([(1, 0)]) + flags.span([(1, 0, 0)])

    def test_rationals_01(self):
        self.assertEqual(sympy.Rational(-3, 4), flags.to_rational('-3/4'))
        self.assertEqual(Fraction(5, 2), flags.to_fraction(flags.to_rational(Fraction(5, 2))))
        self.assertEqual('7/1', flags.rational_string(flags.to_rational(7)))


if __name__ == '__main__':
    unittest.main()
