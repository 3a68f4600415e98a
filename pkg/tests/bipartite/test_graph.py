import unittest
import networkx as nx
from stokes import bipartite
from stokes.bipartite import BipartiteGraph
from stokes.errors import GraphError
from stokes.poly import DynkinType


def star(leaves: int = 3) -> BipartiteGraph:
    white = ['w{}'.format(k) for k in range(1, leaves + 1)]
    return BipartiteGraph(white, ['b'], [(w, 'b') for w in white])


def k23() -> BipartiteGraph:
    return BipartiteGraph(['u', 'v'], ['p', 'q', 'r'],
                          [(w, b) for w in ['u', 'v'] for b in ['p', 'q', 'r']])


class TestBipartiteGraph(unittest.TestCase):

    def test_graph_01(self):
        g = k23()
        self.assertEqual(['u', 'v'], g.white)
        self.assertEqual(['p', 'q', 'r'], g.black)
        self.assertEqual(6, len(g.edges))
        self.assertEqual(3, g.degree('u'))
        self.assertEqual(2, g.degree('p'))
        self.assertEqual({'p', 'q', 'r'}, set(g.neighbors('u')))
        self.assertTrue(g.is_white('u'))
        self.assertEqual('black', g.color('q'))
        self.assertEqual(('u', 'p'), g.edge('p', 'u'))

    def test_graph_02(self):
        with self.assertRaises(GraphError):
            BipartiteGraph(['u'], ['b'], [('u', 'b'), ('u', 'b')])
        with self.assertRaises(GraphError):
            BipartiteGraph(['u', 'v'], ['b'], [('u', 'v')])
        with self.assertRaises(GraphError):
            BipartiteGraph(['u', 'v'], ['b', 'c'], [('u', 'b'), ('v', 'c')])
        with self.assertRaises(GraphError):
            BipartiteGraph(['u'], ['u'], [])

        white, black = ['u', 'v', 'w'], ['a', 'b', 'c']
        with self.assertRaises(GraphError):
            BipartiteGraph(white, black, [(w, b) for w in white for b in black])

    def test_faces_01(self):
        g = k23()
        self.assertEqual(3, len(g.faces))
        self.assertEqual([4, 4, 4], [len(f) for f in g.faces])
        self.assertEqual(2, len(g.vertices) - len(g.edges) + len(g.faces))

        s = star()
        self.assertEqual(1, len(s.faces))
        self.assertEqual(6, len(s.faces[0]))

        single = BipartiteGraph(['u'], [], [])
        self.assertEqual([('u',)], single.faces)

    def test_faces_02(self):
        rotations = {'u': ['p', 'q', 'r'], 'v': ['p', 'q', 'r'],
                     'p': ['u', 'v'], 'q': ['u', 'v'], 'r': ['u', 'v']}
        try:
            BipartiteGraph(['u', 'v'], ['p', 'q', 'r'],
                           [(w, b) for w in ['u', 'v'] for b in ['p', 'q', 'r']], rotations)
            self.fail('Torus embedding accepted')
        except GraphError:
            pass

        rotations['v'] = ['r', 'q', 'p']
        g = BipartiteGraph(['u', 'v'], ['p', 'q', 'r'],
                           [(w, b) for w in ['u', 'v'] for b in ['p', 'q', 'r']], rotations)
        self.assertEqual(3, len(g.faces))
        self.assertEqual(('r', 'q', 'p'), g.neighbors('v'))

    def test_faces_03(self):
        # every dart lies on exactly one face
        g = bipartite.dynkin_to_bipartite(DynkinType('E', 7))
        darts = []
        for face in g.faces:
            darts.extend((face[k], face[(k + 1) % len(face)]) for k in range(len(face)))
        self.assertEqual(2 * len(g.edges), len(darts))
        self.assertEqual(len(darts), len(set(darts)))

    def test_remove_black_01(self):
        g = k23().remove_black('p')
        self.assertEqual(['q', 'r'], g.black)
        self.assertEqual(4, len(g.edges))
        self.assertEqual(2, len(g.faces))

        with self.assertRaises(GraphError):
            star().remove_black('b')
        with self.assertRaises(GraphError):
            k23().remove_black('u')

    def test_add_black_01(self):
        g = star().add_black('c', ['w1', 'w2'])
        self.assertEqual(['b', 'c'], g.black)
        self.assertEqual(2, g.degree('w1'))
        self.assertEqual(2, len(g.faces))

        with self.assertRaises(GraphError):
            star().add_black('b', ['w1'])
        with self.assertRaises(GraphError):
            star().add_black('c', [])

    def test_to_dict_01(self):
        g = bipartite.dynkin_to_bipartite(DynkinType('D', 4))
        data = g.to_dict()
        self.assertEqual(['white', 'black', 'edges', 'rotations'], list(data.keys()))
        h = BipartiteGraph.from_dict(data)
        self.assertEqual(g, h)
        self.assertEqual(g.rotations, h.rotations)
        self.assertEqual(g.faces, h.faces)

        with self.assertRaises(GraphError):
            BipartiteGraph.from_dict({'white': ['u']})

    def test_networkx_01(self):
        g = k23()
        nxg = g.to_networkx()
        self.assertEqual(5, nxg.number_of_nodes())
        self.assertEqual('white', nxg.nodes['u']['color'])
        self.assertEqual('black', nxg.nodes['p']['color'])
        self.assertTrue(nx.check_planarity(nxg)[0])

        relabelled = BipartiteGraph(['x', 'y'], ['1', '2', '3'],
                                    [(w, b) for w in ['x', 'y'] for b in ['1', '2', '3']])
        self.assertTrue(g.is_isomorphic(relabelled))
        swapped = BipartiteGraph(['1', '2', '3'], ['x', 'y'],
                                 [(w, b) for w in ['1', '2', '3'] for b in ['x', 'y']])
        self.assertFalse(g.is_isomorphic(swapped))

    def test_graphviz_01(self):
        source = k23().create_graphviz_object().source
        self.assertIn('graph bipartite', source)
        self.assertIn('fillcolor=black', source)
        self.assertIn('u -- p', source)


if __name__ == '__main__':
    unittest.main()
