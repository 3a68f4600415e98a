"""
Planar bipartite graphs given by a rotation system.
"""

import tempfile
from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple

import graphviz
import networkx as nx

from stokes.errors import GraphError

Edge = Tuple[str, str]

Face = Tuple[str, ...]

WHITE = 'white'
BLACK = 'black'


class BipartiteGraph:
    """
    A connected bipartite graph with labelled white and black
    vertices, at most one edge per pair, embedded in the sphere.

    The embedding is a rotation system: for every vertex the
    counterclockwise cyclic order of its neighbours. Faces are
    traced with the face on the left, so the face following the
    dart ``u -> v`` continues with ``v -> w`` where ``w`` is the
    neighbour preceding ``u`` around ``v``.
    """

    def __init__(self, white: Sequence[str], black: Sequence[str], edges: Iterable[Edge],
                 rotations: Mapping[str, Sequence[str]] = None):
        """
        :param white: labels of the white vertices
        :type white: Sequence[str]
        :param black: labels of the black vertices
        :type black: Sequence[str]
        :param edges: pairs ``(w, b)`` of a white and a black label
        :type edges: Iterable[Edge]
        :param rotations: counterclockwise neighbour order at every
                          vertex; a planar embedding is computed
                          when omitted
        :type rotations: Mapping[str, Sequence[str]]
        """
        self.__white = list(white)
        self.__black = list(black)
        if len(set(self.__white)) != len(self.__white) or len(set(self.__black)) != len(self.__black):
            raise GraphError('Vertex labels must be unique')
        if set(self.__white) & set(self.__black):
            raise GraphError('Labels {} are both white and black'
                             .format(sorted(set(self.__white) & set(self.__black))))
        if len(self.__white) + len(self.__black) == 0:
            raise GraphError('A graph needs at least one vertex')

        whites, blacks = set(self.__white), set(self.__black)
        self.__edges = []  # type: List[Edge]
        self.__neighbors = {v: set() for v in self.__white + self.__black}  # type: Dict[str, Set[str]]
        for w, b in edges:
            if w not in whites or b not in blacks:
                raise GraphError('Edge ({}, {}) does not join a white to a black vertex'.format(w, b))
            if b in self.__neighbors[w]:
                raise GraphError('Vertices {} and {} are joined twice'.format(w, b))
            self.__neighbors[w].add(b)
            self.__neighbors[b].add(w)
            self.__edges.append((w, b))
        self.__edges.sort()

        if not nx.is_connected(self._skeleton()):
            raise GraphError('Graph is not connected')

        if rotations is None:
            rotations = self._planar_rotations()
        self.__rotations = self._check_rotations(rotations)
        self.__faces = self._trace_faces()

        euler = len(self.__neighbors) - len(self.__edges) + len(self.__faces)
        if euler != 2:
            raise GraphError('Rotation system has Euler characteristic {}, not a planar embedding'
                             .format(euler))

    def _skeleton(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.__neighbors)
        g.add_edges_from(self.__edges)
        return g

    def _planar_rotations(self) -> Dict[str, List[str]]:
        planar, embedding = nx.check_planarity(self._skeleton())
        if not planar:
            raise GraphError('Graph is not planar')
        return {v: list(reversed(list(embedding.neighbors_cw_order(v)))) for v in self.__neighbors}

    def _check_rotations(self, rotations: Mapping[str, Sequence[str]]) -> Dict[str, Tuple[str, ...]]:
        checked = {}
        for v, neighbors in self.__neighbors.items():
            order = tuple(rotations.get(v, ()))
            if len(order) != len(neighbors) or set(order) != neighbors:
                raise GraphError('Rotation {} at {} does not list its neighbours {}'
                                 .format(list(order), v, sorted(neighbors)))
            checked[v] = order
        return checked

    def _predecessor(self, v: str, u: str) -> str:
        order = self.__rotations[v]
        return order[order.index(u) - 1]

    def _trace_faces(self) -> List[Face]:
        darts = sorted((u, v) for u in self.__neighbors for v in self.__neighbors[u])
        seen = set()
        faces = []
        for dart in darts:
            if dart in seen:
                continue
            face = []
            u, v = dart
            while (u, v) not in seen:
                seen.add((u, v))
                face.append(u)
                u, v = v, self._predecessor(v, u)
            faces.append(tuple(face))
        if len(self.__edges) == 0:
            faces.append(tuple(self.__neighbors))
        return faces

    @property
    def white(self) -> List[str]:
        return list(self.__white)

    @property
    def black(self) -> List[str]:
        return list(self.__black)

    @property
    def vertices(self) -> List[str]:
        return self.__white + self.__black

    @property
    def edges(self) -> List[Edge]:
        return list(self.__edges)

    @property
    def rotations(self) -> Dict[str, Tuple[str, ...]]:
        return dict(self.__rotations)

    @property
    def faces(self) -> List[Face]:
        """
        Faces as cyclic vertex sequences, each starting with its
        smallest dart. A vertex of degree one appears twice in the
        face surrounding its edge.
        """
        return list(self.__faces)

    def is_white(self, v: str) -> bool:
        if v not in self.__neighbors:
            raise GraphError('Unknown vertex {!r}'.format(v))
        return v in set(self.__white)

    def color(self, v: str) -> str:
        return WHITE if self.is_white(v) else BLACK

    def neighbors(self, v: str) -> Tuple[str, ...]:
        """
        Neighbours of ``v`` in counterclockwise order.
        """
        if v not in self.__rotations:
            raise GraphError('Unknown vertex {!r}'.format(v))
        return self.__rotations[v]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def edge(self, u: str, v: str) -> Edge:
        """
        The edge joining ``u`` and ``v`` as a ``(white, black)`` pair.
        """
        w, b = (u, v) if self.is_white(u) else (v, u)
        if b not in self.__neighbors[w]:
            raise GraphError('{} and {} are not adjacent'.format(u, v))
        return w, b

    def remove_black(self, b: str) -> 'BipartiteGraph':
        """
        The graph without the black vertex ``b``. White vertices left
        isolated are removed as well.

        :raises GraphError: if the rest is disconnected
        """
        if b not in self.__black:
            raise GraphError('{!r} is not a black vertex'.format(b))
        isolated = {w for w in self.__neighbors[b] if len(self.__neighbors[w]) == 1}
        white = [w for w in self.__white if w not in isolated]
        black = [x for x in self.__black if x != b]
        edges = [(w, x) for w, x in self.__edges if x != b]
        rotations = {v: [u for u in order if u != b]
                     for v, order in self.__rotations.items() if v != b and v not in isolated}
        return BipartiteGraph(white, black, edges, rotations)

    def add_black(self, b: str, neighbors: Sequence[str]) -> 'BipartiteGraph':
        """
        The graph with a new black vertex joined to ``neighbors``; the
        embedding is recomputed.
        """
        if b in self.__neighbors:
            raise GraphError('Vertex {!r} already exists'.format(b))
        if len(neighbors) == 0:
            raise GraphError('A new black vertex needs at least one neighbour')
        return BipartiteGraph(self.__white, self.__black + [b], self.__edges + [(w, b) for w in neighbors])

    def to_dict(self) -> dict:
        return {'white': list(self.__white), 'black': list(self.__black),
                'edges': [list(e) for e in self.__edges],
                'rotations': {v: list(order) for v, order in sorted(self.__rotations.items())}}

    @classmethod
    def from_dict(cls, data: dict) -> 'BipartiteGraph':
        try:
            return cls(data['white'], data['black'], [tuple(e) for e in data['edges']],
                       data.get('rotations'))
        except (KeyError, TypeError) as e:
            raise GraphError('Malformed graph document: {}'.format(e))

    def to_networkx(self) -> nx.Graph:
        """
        The underlying graph, every node carrying its ``color``.
        """
        g = self._skeleton()
        nx.set_node_attributes(g, {v: self.color(v) for v in self.vertices}, 'color')
        return g

    def is_isomorphic(self, other: 'BipartiteGraph') -> bool:
        """
        Colour preserving isomorphism of the underlying graphs.
        """
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx(),
                                node_match=lambda x, y: x['color'] == y['color'])

    def create_graphviz_object(self) -> graphviz.Graph:
        """
        Creates a Graphviz object with white vertices drawn as
        hollow circles and black vertices filled.
        """
        graph = graphviz.Graph('bipartite')
        graph.graph_attr['layout'] = 'neato'
        graph.node_attr.update(shape='circle', width='0.25', fixedsize='true', fontsize='8')

        for w in self.__white:
            graph.node(w, style='solid', fillcolor='white')
        for b in self.__black:
            graph.node(b, style='filled', fillcolor='black', fontcolor='white')
        for w, b in self.__edges:
            graph.edge(w, b)

        return graph

    def show(self):
        """
        Draws the graph with graphviz and opens it in a viewer.
        """
        self.create_graphviz_object().view(tempfile.mkstemp('gv')[1], cleanup=True)

    def __eq__(self, other):
        return isinstance(other, BipartiteGraph) and \
            set(self.__white) == set(other.white) and \
            set(self.__black) == set(other.black) and \
            self.__edges == other.edges

    def __hash__(self):
        return hash(tuple(self.__edges))

    def __repr__(self):
        return 'BipartiteGraph(white={}, black={}, edges={})'.format(
            len(self.__white), len(self.__black), len(self.__edges))
