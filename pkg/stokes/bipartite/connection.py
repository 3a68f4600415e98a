"""
Graph connections: nonzero rational numbers on the edges of a
bipartite graph, considered up to rescaling at the vertices.
"""

import random
from typing import Dict, Mapping

import networkx as nx
import sympy

from stokes import settings
from stokes.bipartite.graph import BipartiteGraph, Edge, Face
from stokes.errors import GraphError
from stokes.flags.linalg import Scalar, random_rational, rational_string, to_rational


class GraphConnection:
    """
    A connection on ``graph``, given by the matrix ``M`` with rows
    indexed by the white and columns by the black vertices and the
    entry ``M[w, b]`` on every edge ``(w, b)``.
    """

    def __init__(self, graph: BipartiteGraph, entries: Mapping[Edge, Scalar]):
        """
        :param graph: the underlying graph
        :type graph: BipartiteGraph
        :param entries: a nonzero number for every edge
        :type entries: Mapping[Edge, Scalar]
        """
        if set(entries) != set(graph.edges):
            missing = sorted(set(graph.edges) - set(entries))
            extra = sorted(set(entries) - set(graph.edges))
            raise GraphError('Connection entries do not match the edges, missing {}, extra {}'
                             .format(missing, extra))
        values = {e: to_rational(v) for e, v in entries.items()}
        for e, v in values.items():
            if v == 0:
                raise GraphError('Entry on edge {} is zero'.format(e))

        self.__graph = graph
        self.__entries = values

    @property
    def graph(self) -> BipartiteGraph:
        return self.__graph

    @property
    def entries(self) -> Dict[Edge, sympy.Rational]:
        return dict(self.__entries)

    def entry(self, w: str, b: str) -> sympy.Rational:
        try:
            return self.__entries[(w, b)]
        except KeyError:
            raise GraphError('({}, {}) is not an edge'.format(w, b))

    def matrix(self) -> sympy.Matrix:
        """
        ``M`` with rows in the order of ``graph.white`` and columns in
        the order of ``graph.black``, zero off the edges.
        """
        rows = {w: i for i, w in enumerate(self.__graph.white)}
        cols = {b: j for j, b in enumerate(self.__graph.black)}
        m = sympy.zeros(len(rows), len(cols))
        for (w, b), v in self.__entries.items():
            m[rows[w], cols[b]] = v
        return m

    def to_dict(self) -> dict:
        return {'graph': self.__graph.to_dict(),
                'entries': [[w, b, rational_string(v)] for (w, b), v in sorted(self.__entries.items())]}

    @classmethod
    def from_dict(cls, data: dict) -> 'GraphConnection':
        graph = BipartiteGraph.from_dict(data['graph'])
        return cls(graph, {(w, b): to_rational(v) for w, b, v in data['entries']})

    def __eq__(self, other):
        return isinstance(other, GraphConnection) and self.__graph == other.graph and \
            self.__entries == other.entries

    def __repr__(self):
        return 'GraphConnection({!r})'.format(self.__graph)


def random_connection(graph: BipartiteGraph, seed: int = settings.DEFAULT_SEED) -> GraphConnection:
    """
    Generic nonzero rationals on every edge, drawn in edge order from
    ``random.Random(seed)``.
    """
    rng = random.Random(seed)
    return GraphConnection(graph, {e: random_rational(rng) for e in graph.edges})


def face_monodromy(conn: GraphConnection, face: Face) -> sympy.Rational:
    """
    Product along the face of the entries of edges passed from white
    to black and the inverses of those passed from black to white.
    """
    graph = conn.graph
    value = sympy.Integer(1)
    for k, u in enumerate(face):
        v = face[(k + 1) % len(face)]
        if u == v:
            continue
        if graph.is_white(u):
            value *= conn.entry(u, v)
        else:
            value /= conn.entry(v, u)
    return value


def face_monodromies(conn: GraphConnection) -> Dict[Face, sympy.Rational]:
    """
    Monodromy around every face of the embedded graph. They multiply
    to one and do not change under :func:`gauge_transform`.
    """
    return {face: face_monodromy(conn, face) for face in conn.graph.faces}


def gauge_transform(conn: GraphConnection, vertex: str, factor: Scalar) -> GraphConnection:
    """
    Rescales all entries at ``vertex`` by ``factor``.
    """
    factor = to_rational(factor)
    if factor == 0:
        raise GraphError('Gauge factor must be nonzero')
    graph = conn.graph
    if vertex not in graph.vertices:
        raise GraphError('Unknown vertex {!r}'.format(vertex))
    entries = conn.entries
    for v in graph.neighbors(vertex):
        e = graph.edge(vertex, v)
        entries[e] = entries[e] * factor
    return GraphConnection(graph, entries)


def _face_darts(face: Face):
    for k, u in enumerate(face):
        yield u, face[(k + 1) % len(face)]


def connection_from_monodromies(graph: BipartiteGraph,
                                monodromies: Mapping[Face, Scalar]) -> GraphConnection:
    """
    The connection with the given face monodromies whose entries are
    1 on a breadth first spanning tree. The remaining edges are
    solved one at a time from faces with a single unknown edge.

    :raises GraphError: if a face is missing or the monodromies do
                        not multiply to one
    """
    faces = graph.faces
    if set(monodromies) != set(faces):
        raise GraphError('Monodromies must be given for exactly the faces of the graph')
    values = {f: to_rational(v) for f, v in monodromies.items()}

    root = min(graph.vertices)
    entries = {graph.edge(u, v): sympy.Integer(1) for u, v in nx.bfs_edges(graph.to_networkx(), root)}
    unknown = set(graph.edges) - set(entries)

    while unknown:
        progress = False
        for face in faces:
            darts = [(u, v) for u, v in _face_darts(face) if graph.edge(u, v) in unknown]
            if len({graph.edge(u, v) for u, v in darts}) != 1 or len(darts) != 1:
                continue
            u, v = darts[0]
            known = sympy.Integer(1)
            for x, y in _face_darts(face):
                if (x, y) == (u, v):
                    continue
                if graph.is_white(x):
                    known *= entries[(x, y)]
                else:
                    known /= entries[(y, x)]
            ratio = values[face] / known
            e = graph.edge(u, v)
            entries[e] = ratio if graph.is_white(u) else 1 / ratio
            unknown.discard(e)
            progress = True
        if not progress:
            raise GraphError('Could not solve the remaining edges {}'.format(sorted(unknown)))

    conn = GraphConnection(graph, entries)
    for face, value in face_monodromies(conn).items():
        if value != values[face]:
            raise GraphError('Monodromies are inconsistent: face {} gets {} instead of {}'
                             .format(face, value, values[face]))
    return conn
