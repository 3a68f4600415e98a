import unittest
import random
from stokes import lattice, poly
from stokes.errors import DegenerateHullError


def preset_polygon(name: str, swap: bool = False):
    p = poly.preset_by_name(name)
    if swap:
        p = poly.swap_variables(p)
    return lattice.newton_polygon(p)


def upward_vectors(polygon):
    return sorted(tuple(s.vector) for s in lattice.upward_sides(polygon))


class TestNewtonPolygon(unittest.TestCase):

    def test_newton_polygon_01(self):
        self.assertEqual([(0, 0), (6, 0), (0, 2)], [tuple(v) for v in preset_polygon('A5').vertices])
        self.assertEqual([(0, 0), (1, 0), (2, 1), (0, 3)], [tuple(v) for v in preset_polygon('D4').vertices])

    def test_newton_polygon_02(self):
        try:
            lattice.newton_polygon(poly.parse_polynomial('x*p'))
            self.fail('A point has no Newton polygon with area')
        except DegenerateHullError as e:
            self.assertEqual('lattice', e.module)

        segment = lattice.newton_polygon(poly.parse_polynomial('1+x*p+x^2*p^2'), allow_degenerate=True)
        self.assertTrue(segment.degenerate)
        self.assertEqual(2, len(segment.vertices))
        with self.assertRaises(DegenerateHullError):
            lattice.genus(segment)

    def test_boundary_sides_01(self):
        self.assertEqual([(-5, 3)], upward_vectors(preset_polygon('E8')))
        self.assertEqual([(-1, 1), (-1, 1), (1, 1)], upward_vectors(preset_polygon('D4')))
        self.assertEqual([(-3, 1), (-3, 1)], upward_vectors(preset_polygon('A5')))
        self.assertEqual([(-5, 2)], upward_vectors(preset_polygon('A4')))

    def test_boundary_sides_02(self):
        sides = lattice.boundary_sides(preset_polygon('D4'))
        self.assertEqual((0, 0), tuple(sides[0].start))
        self.assertEqual(list(range(len(sides))), [s.index for s in sides])
        for s, t in zip(sides, sides[1:] + sides[:1]):
            self.assertEqual(s.end, t.start)

    def test_boundary_sides_03(self):
        rng = random.Random(1)
        checked = 0
        while checked < 100:
            support = {(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(rng.randint(3, 9))}
            polygon = lattice.newton_polygon(support, allow_degenerate=True)
            if polygon.degenerate:
                continue
            sides = lattice.boundary_sides(polygon)
            self.assertEqual((0, 0), (sum(s.vector.a for s in sides), sum(s.vector.b for s in sides)))
            for v in polygon.vertices:
                self.assertIn(v, polygon.support)
            for q in support:
                self.assertTrue(polygon.contains(q))
            checked += 1

    def test_boundary_sides_04(self):
        for name in ['A3', 'A4', 'D4', 'D5', 'E6', 'E7', 'E8']:
            polygon = preset_polygon(name)
            swapped = preset_polygon(name, swap=True)
            vectors = [tuple(s.vector) for s in lattice.boundary_sides(polygon)]
            expected = sorted((-b, -a) for a, b in vectors)
            self.assertEqual(expected, sorted(tuple(s.vector) for s in lattice.boundary_sides(swapped)))

    def test_boundary_sides_05(self):
        side = lattice.Side(0, lattice.LatticePoint(0, 0), lattice.LatticePoint(1, 1))
        self.assertEqual((1, 1), tuple(side.vector))
        with self.assertRaises(DegenerateHullError) as context:
            lattice.Side(0, lattice.LatticePoint(0, 0), lattice.LatticePoint(2, 2))
        self.assertEqual('lattice', context.exception.module)

    def test_genus_01(self):
        self.assertEqual(4, lattice.genus(preset_polygon('E8')))
        self.assertEqual(1, lattice.genus(preset_polygon('D4')))
        self.assertEqual(0, lattice.genus(lattice.newton_polygon([(0, 0), (1, 0), (0, 1)])))

    def test_genus_02(self):
        rng = random.Random(5)
        for _ in range(100):
            support = [(rng.randint(0, 7), rng.randint(0, 7)) for _ in range(6)]
            polygon = lattice.newton_polygon(support, allow_degenerate=True)
            if polygon.degenerate:
                continue
            shift = (rng.randint(-9, 9), rng.randint(-9, 9))
            moved = lattice.newton_polygon([(a + shift[0], b + shift[1]) for a, b in support])
            self.assertEqual(lattice.genus(polygon), lattice.genus(moved))
            self.assertEqual(len(lattice.interior_points(polygon)), lattice.genus(polygon))
            self.assertEqual([tuple(s.vector) for s in lattice.boundary_sides(polygon)],
                             [tuple(s.vector) for s in lattice.boundary_sides(moved)])

    def test_compactification_01(self):
        self.assertEqual(3, lattice.points_at_infinity(preset_polygon('D4')))
        self.assertEqual(2, lattice.points_at_infinity(preset_polygon('A5')))
        self.assertEqual(1, lattice.points_at_infinity(preset_polygon('E8')))

        points = lattice.classify_compactification(preset_polygon('E8'))
        bottom = [c for c in points if tuple(c.side.vector) == (1, 0)]
        self.assertEqual(5, len(bottom))
        for c in bottom:
            self.assertEqual(lattice.Location.AFFINE_PLANE, c.location)
        for c in points:
            self.assertEqual(c.at_infinity, c.x_order < 0 or c.p_order < 0)

    def test_homology_rank_01(self):
        self.assertEqual(5, lattice.homology_rank(preset_polygon('A5')))
        self.assertEqual(4, lattice.homology_rank(preset_polygon('D4')))
        self.assertEqual(8, lattice.homology_rank(preset_polygon('E8')))
        for n in range(2, 10):
            polygon = preset_polygon('A{}'.format(n))
            self.assertEqual(n, lattice.homology_rank(polygon))
            self.assertEqual(2 if n % 2 == 1 else 1, len(lattice.upward_sides(polygon)))

    def test_homology_rank_02(self):
        for name in ['E6', 'E7']:
            self.assertEqual(int(name[1]), lattice.homology_rank(preset_polygon(name)))

        # x*p^2+x^(n+1) has Milnor number n+2
        for n in (5, 6, 7):
            self.assertEqual(n + 2, lattice.homology_rank(preset_polygon('D{}'.format(n))))

    def test_operator_profile_01(self):
        for n in range(1, 8):
            self.assertEqual((2, True), tuple(lattice.operator_profile(poly.preset_by_name('A{}'.format(n)))))
        d4 = poly.swap_variables(poly.preset_by_name('D4'))
        self.assertEqual((2, False), tuple(lattice.operator_profile(d4)))
        self.assertEqual((3, True), tuple(lattice.operator_profile(poly.preset_by_name('E8'))))

        with self.assertRaises(DegenerateHullError):
            lattice.operator_profile(poly.parse_polynomial('x^2+1'))

    def test_operator_profile_02(self):
        for name in ['A2', 'A3', 'A6', 'D4', 'E6', 'E8']:
            p = poly.preset_by_name(name)
            order = lattice.operator_profile(p).order
            weighted = sum(s.vector.b for s in lattice.upward_sides(lattice.newton_polygon(p)))
            self.assertEqual(order, weighted)

    def test_to_dict_01(self):
        d = preset_polygon('E8').to_dict()
        self.assertEqual([[0, 0], [5, 0], [0, 3]], d['vertices'])
        self.assertEqual(9, len(d['sides']))
        self.assertEqual(1, sum(1 for s in d['sides'] if s['at_infinity']))
        self.assertEqual({'vec': [-5, 3], 'at_infinity': True}, d['sides'][5])


if __name__ == '__main__':
    unittest.main()
