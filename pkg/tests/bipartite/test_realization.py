import random
import unittest
from stokes import bipartite
from stokes.bipartite import BipartiteGraph
from stokes.errors import ConfigurationError
from stokes.flags import CircuitClass, PointConfiguration
from stokes.poly import DynkinType


def dynkin_graph(family: str, n: int) -> BipartiteGraph:
    return bipartite.dynkin_to_bipartite(DynkinType(family, n))


def redundant_graph() -> BipartiteGraph:
    # p, q and r all force u = v
    edges = [(w, b) for w in ['u', 'v'] for b in ['p', 'q', 'r']]
    edges += [(w, 's') for w in ['v', 'x', 'y', 'z']]
    return BipartiteGraph(['u', 'v', 'x', 'y', 'z'], ['p', 'q', 'r', 's'], edges)


class TestRealization(unittest.TestCase):

    def test_configuration_01(self):
        config = bipartite.configuration_from_connection(
            bipartite.random_connection(dynkin_graph('A', 5), 0))
        self.assertEqual(8, len(config))
        self.assertEqual(1, config.dimension)

    def test_configuration_02(self):
        config = bipartite.configuration_from_connection(
            bipartite.random_connection(dynkin_graph('D', 4), 0))
        self.assertEqual(2, config.dimension)
        groups = config.collinear_groups()
        self.assertEqual([4, 4, 4], [len(g) for g in groups])
        corners = [set(g) & set(h) for g in groups for h in groups if g < h]
        self.assertTrue(all(len(c) == 1 for c in corners))

    def test_configuration_03(self):
        g = dynkin_graph('E', 8)
        config = bipartite.configuration_from_connection(bipartite.random_connection(g, 1))
        self.assertEqual(13, len(config))
        self.assertEqual(2, config.dimension)
        groups = config.collinear_groups()
        self.assertEqual([4, 5, 7], [len(group) for group in groups])
        shared = set()
        for i, first in enumerate(groups):
            for second in groups[i + 1:]:
                common = set(first) & set(second)
                self.assertEqual(1, len(common))
                shared |= common
        self.assertEqual(3, len(shared))

    def test_configuration_04(self):
        for family, n in [('A', 3), ('D', 4), ('E', 6), ('E', 8)]:
            g = dynkin_graph(family, n)
            for seed in range(25):
                config = bipartite.configuration_from_connection(bipartite.random_connection(g, seed))
                self.assertEqual(len(g.white) - len(g.black) - 1, config.dimension)
                for b in g.black:
                    self.assertEqual(CircuitClass.CIRCUIT, config.circuit_of(g.neighbors(b)))

    def test_configuration_05(self):
        conn = bipartite.random_connection(redundant_graph(), 0)
        try:
            bipartite.configuration_from_connection(conn)
            self.fail('Rank deficient connection accepted')
        except ValueError:
            pass

    def test_connection_from_configuration_01(self):
        pool = [dynkin_graph(family, n) for family, n in [('A', 3), ('A', 5), ('D', 4), ('D', 5), ('E', 7)]]
        for case in range(100):
            rng = random.Random(case)
            g = rng.choice(pool)
            conn = bipartite.random_connection(g, rng.randrange(10 ** 6))
            config = bipartite.configuration_from_connection(conn)
            rebuilt = bipartite.connection_from_configuration(g, config)
            self.assertEqual(bipartite.face_monodromies(conn), bipartite.face_monodromies(rebuilt))
            again = bipartite.configuration_from_connection(rebuilt)
            self.assertTrue(config.is_projectively_equivalent(again))

    def test_connection_from_configuration_02(self):
        star = BipartiteGraph(['u', 'v', 'w'], ['b'], [('u', 'b'), ('v', 'b'), ('w', 'b')])
        config = PointConfiguration({'u': (1, 0), 'v': (0, 1), 'w': (1, 1)})
        conn = bipartite.connection_from_configuration(star, config)
        self.assertEqual(-1, conn.entry('u', 'b') / conn.entry('w', 'b'))
        self.assertEqual(-1, conn.entry('v', 'b') / conn.entry('w', 'b'))

        free = PointConfiguration({'u': (1, 0, 0), 'v': (0, 1, 0), 'w': (0, 0, 1)})
        with self.assertRaises(ConfigurationError):
            bipartite.connection_from_configuration(star, free)

        partial = PointConfiguration({'u': (1, 0), 'v': (2, 0), 'w': (0, 1)})
        with self.assertRaises(ConfigurationError):
            bipartite.connection_from_configuration(star, partial)

    def test_configuration_dimension_01(self):
        for n in range(2, 9):
            self.assertEqual(1, bipartite.configuration_dimension(dynkin_graph('A', n)))
        for family, n in [('E', 6), ('E', 7), ('E', 8), ('D', 4), ('D', 5), ('D', 6), ('D', 7)]:
            self.assertEqual(2, bipartite.configuration_dimension(dynkin_graph(family, n)))

    def test_configuration_dimension_02(self):
        g = dynkin_graph('E', 6)
        dims = {bipartite.configuration_dimension(g, trials=1, seed=seed) for seed in range(10)}
        self.assertEqual({2}, dims)
        self.assertEqual(1, bipartite.configuration_dimension(redundant_graph()))
        with self.assertRaises(ConfigurationError):
            bipartite.configuration_dimension(g, trials=0)

    def test_is_minimal_01(self):
        for family, n in [('A', 2), ('A', 3), ('A', 4), ('A', 5), ('A', 6), ('D', 4), ('E', 6)]:
            self.assertTrue(bipartite.is_minimal(dynkin_graph(family, n)))

    def test_is_minimal_02(self):
        self.assertFalse(bipartite.is_minimal(redundant_graph()))

        star = BipartiteGraph(['u', 'v', 'w'], ['b'], [('u', 'b'), ('v', 'b'), ('w', 'b')])
        self.assertTrue(bipartite.is_minimal(star))

        g = dynkin_graph('A', 2)
        b = next(x for x in g.black if any(g.degree(w) == 1 for w in g.neighbors(x)))
        doubled = g.add_black('twin', list(g.neighbors(b)))
        self.assertEqual(0, bipartite.configuration_dimension(doubled))
        self.assertTrue(bipartite.is_minimal(doubled))


if __name__ == '__main__':
    unittest.main()
