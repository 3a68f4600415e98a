import unittest
import random
import sympy
from stokes import bipartite
from stokes.bipartite import GraphConnection
from stokes.errors import GraphError
from stokes.poly import DynkinType


def graphs():
    return [bipartite.dynkin_to_bipartite(DynkinType(family, n))
            for family, n in [('A', 1), ('A', 4), ('D', 4), ('D', 5), ('E', 6), ('E', 8)]]


class TestConnection(unittest.TestCase):

    def test_connection_01(self):
        g = bipartite.dynkin_to_bipartite(DynkinType('A', 2))
        entries = {e: 1 for e in g.edges}
        conn = GraphConnection(g, entries)
        self.assertEqual(sympy.Integer(1), conn.entry(*g.edges[0]))
        self.assertEqual((5, 3), conn.matrix().shape)
        self.assertEqual(len(g.edges), sum(1 for x in conn.matrix() if x != 0))

        missing = dict(entries)
        del missing[g.edges[0]]
        with self.assertRaises(GraphError):
            GraphConnection(g, missing)

        zero = dict(entries)
        zero[g.edges[0]] = 0
        with self.assertRaises(GraphError):
            GraphConnection(g, zero)

        with self.assertRaises(GraphError):
            conn.entry('w1', 'w2')

    def test_random_connection_01(self):
        g = bipartite.dynkin_to_bipartite(DynkinType('E', 8))
        first = bipartite.random_connection(g, 4)
        self.assertEqual(first, bipartite.random_connection(g, 4))
        self.assertNotEqual(first, bipartite.random_connection(g, 5))
        self.assertEqual(set(g.edges), set(first.entries))
        self.assertTrue(all(v != 0 for v in first.entries.values()))

    def test_to_dict_01(self):
        conn = bipartite.random_connection(bipartite.dynkin_to_bipartite(DynkinType('D', 4)), 2)
        data = conn.to_dict()
        self.assertEqual(len(conn.graph.edges), len(data['entries']))
        self.assertEqual(conn, GraphConnection.from_dict(data))

    def test_face_monodromies_01(self):
        for g in graphs():
            ones = GraphConnection(g, {e: 1 for e in g.edges})
            self.assertTrue(all(v == 1 for v in bipartite.face_monodromies(ones).values()))

    def test_face_monodromies_02(self):
        pool = graphs()
        for case in range(100):
            rng = random.Random(case)
            g = rng.choice(pool)
            conn = bipartite.random_connection(g, rng.randrange(10 ** 6))
            values = bipartite.face_monodromies(conn)
            self.assertEqual(set(g.faces), set(values))
            product = sympy.Integer(1)
            for v in values.values():
                product *= v
            self.assertEqual(1, product)

            factor = sympy.Rational(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 30))
            moved = bipartite.gauge_transform(conn, rng.choice(g.vertices), factor)
            self.assertEqual(values, bipartite.face_monodromies(moved))

    def test_face_monodromies_03(self):
        # the two faces of a 4-cycle
        g = bipartite.BipartiteGraph(['u', 'v'], ['p', 'q'], [('u', 'p'), ('u', 'q'), ('v', 'p'), ('v', 'q')])
        conn = GraphConnection(g, {('u', 'p'): 2, ('v', 'p'): 3, ('v', 'q'): 5, ('u', 'q'): 7})
        values = sorted(bipartite.face_monodromies(conn).values())
        self.assertEqual([sympy.Rational(10, 21), sympy.Rational(21, 10)], values)

    def test_gauge_01(self):
        rng = random.Random(3)
        g = bipartite.dynkin_to_bipartite(DynkinType('E', 7))
        conn = bipartite.random_connection(g, 0)
        expected = bipartite.face_monodromies(conn)
        for _ in range(100):
            vertex = rng.choice(g.vertices)
            factor = sympy.Rational(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 20))
            conn = bipartite.gauge_transform(conn, vertex, factor)
            self.assertEqual(expected, bipartite.face_monodromies(conn))

        with self.assertRaises(GraphError):
            bipartite.gauge_transform(conn, g.white[0], 0)
        with self.assertRaises(GraphError):
            bipartite.gauge_transform(conn, 'nowhere', 2)

    def test_connection_from_monodromies_01(self):
        pool = graphs()
        for case in range(100):
            rng = random.Random(case)
            g = rng.choice(pool)
            conn = bipartite.random_connection(g, rng.randrange(10 ** 6))
            values = bipartite.face_monodromies(conn)
            rebuilt = bipartite.connection_from_monodromies(g, values)
            self.assertEqual(values, bipartite.face_monodromies(rebuilt))
            ones = sum(1 for v in rebuilt.entries.values() if v == 1)
            self.assertGreaterEqual(ones, len(g.vertices) - 1)

    def test_connection_from_monodromies_02(self):
        g = bipartite.dynkin_to_bipartite(DynkinType('D', 4))
        values = bipartite.face_monodromies(bipartite.random_connection(g, 1))
        face = g.faces[0]
        values[face] = values[face] * 2
        with self.assertRaises(GraphError):
            bipartite.connection_from_monodromies(g, values)

        del values[face]
        with self.assertRaises(GraphError):
            bipartite.connection_from_monodromies(g, values)


if __name__ == '__main__':
    unittest.main()
