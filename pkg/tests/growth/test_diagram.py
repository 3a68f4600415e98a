import unittest
from fractions import Fraction
from stokes import growth, lattice, poly
from stokes.errors import GrowthDiagramError


def preset_diagram(name: str, seed: int = 0, swap: bool = False):
    p = poly.preset_by_name(name)
    if swap:
        p = poly.swap_variables(p)
    return growth.build_growth_diagram(lattice.newton_polygon(p), seed, p)


def phase_gap(p, q):
    gap = abs(p.phase - q.phase) % 1.0
    return min(gap, 1.0 - gap)


class TestGrowthDiagram(unittest.TestCase):

    def test_build_01(self):
        diagram = preset_diagram('E8')
        self.assertEqual(3, diagram.n)
        for q in diagram.points:
            self.assertEqual(Fraction(8, 3), q.speed)
        p0, p1, p2 = diagram.points
        for p, q in [(p0, p1), (p1, p2), (p0, p2)]:
            self.assertAlmostEqual(1 / 3, phase_gap(p, q), places=9)
            self.assertAlmostEqual(p.radius, q.radius, places=6)

    def test_build_02(self):
        diagram = preset_diagram('D4')
        self.assertEqual([0, 2, 2], sorted(diagram.speeds()))
        static = [q for q in diagram.points if q.speed == 0][0]
        self.assertEqual(min(q.radius for q in diagram.points), static.radius)
        self.assertAlmostEqual(0.5, static.phase, places=9)

    def test_build_03(self):
        diagram = preset_diagram('A4')
        self.assertEqual(2, diagram.n)
        p, q = diagram.points
        self.assertEqual(Fraction(7, 2), p.speed)
        self.assertAlmostEqual(0.5, phase_gap(p, q), places=9)

    def test_build_04(self):
        for n in range(2, 10):
            diagram = preset_diagram('A{}'.format(n))
            p, q = diagram.points
            self.assertAlmostEqual(0.5, phase_gap(p, q), places=9)
            self.assertEqual(Fraction(n + 3, 2), p.speed)

    def test_build_05(self):
        first = preset_diagram('E7', seed=4)
        second = preset_diagram('E7', seed=4)
        self.assertEqual(first.to_dict(), second.to_dict())
        self.assertNotEqual(first.start_angle, preset_diagram('E7', seed=5).start_angle)

    def test_build_06(self):
        p = poly.parse_polynomial('p^2+2*x*p+x^2+1')
        try:
            growth.build_growth_diagram(lattice.newton_polygon(p), 0, p)
            self.fail('A double root of an edge polynomial gives coincident points')
        except GrowthDiagramError as e:
            self.assertEqual('growth', e.module)

        with self.assertRaises(GrowthDiagramError):
            growth.GrowthDiagram([])

    def test_build_07(self):
        polygon = lattice.newton_polygon(poly.preset_by_name('D4'))
        diagram = growth.build_growth_diagram(polygon, 2)
        self.assertEqual([0, 2, 2], sorted(diagram.speeds()))

    def test_edge_polynomial_01(self):
        p = poly.preset_by_name('D4')
        polygon = lattice.newton_polygon(p)
        values = p.instantiate(0)
        upper = [e for e in polygon.edges if e.direction == (-1, 1)][0]
        self.assertEqual([1, 0, 1], growth.edge_polynomial(upper, values))
        roots = growth.edge_roots(growth.edge_polynomial(upper, values))
        self.assertAlmostEqual(0.0, abs(roots[0] + roots[1]), places=9)

    def test_crossing_count_01(self):
        self.assertEqual(16, preset_diagram('E8').crossing_count())
        self.assertEqual(12, preset_diagram('D4').crossing_count())
        self.assertEqual(15, preset_diagram('E7').crossing_count())
        for n in range(2, 10):
            self.assertEqual(n + 3, preset_diagram('A{}'.format(n)).crossing_count())

    def test_crossing_count_02(self):
        # upward sides (-2, 3) and (-3, 4): speeds 5/3 and 7/4; the
        # faster side has a tiny edge root
        values = {(0, 0): Fraction(1), (5, 0): Fraction(1), (3, 3): Fraction(1), (0, 7): Fraction(10 ** 8)}
        polygon = lattice.newton_polygon(list(values))
        diagram = growth.build_growth_diagram(polygon, 0, values)
        self.assertEqual(7, diagram.n)
        for p in diagram.points:
            for q in diagram.points:
                if p.speed > q.speed:
                    self.assertGreaterEqual(p.radius, 2 * q.radius)
        self.assertEqual(73, diagram.crossing_count())

        word = growth.extract_stokes_word(diagram, 1024, check_stability=False)
        self.assertEqual(73, len(word.letters))

    def test_dominant_radius_01(self):
        self.assertEqual(100.0, growth.dominant_radius([(1.0, Fraction(2)), (5.0, Fraction(0))], 100.0))
        self.assertEqual(100.0, growth.dominant_radius([(1.0, Fraction(1)), (1e6, Fraction(1))], 100.0))
        self.assertAlmostEqual(40.0, growth.dominant_radius([(1.0, Fraction(1)), (20.0, Fraction(0))], 10.0))

    def test_to_dict_01(self):
        d = preset_diagram('E8').to_dict()
        self.assertEqual(3, d['n'])
        self.assertEqual('8/3', d['points'][0]['speed'])


if __name__ == '__main__':
    unittest.main()
