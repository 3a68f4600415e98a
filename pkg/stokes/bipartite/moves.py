"""
The four local moves on planar bipartite graphs.

1  contracts a 2-valent black vertex, identifying the two points of
   its white neighbours.
1' contracts a 2-valent white vertex, joining the circuits of its
   two black neighbours.
2  rotates a square face whose white corners are 3-valent.
2' rotates a square face whose black corners are 3-valent.

A contraction may create two edges between the same pair of
vertices; they bound a digon face and are merged into one.
"""

import abc
from typing import Dict, List, Sequence, Tuple, Union

from stokes.bipartite.connection import GraphConnection
from stokes.bipartite.graph import BipartiteGraph, Edge
from stokes.bipartite.realization import configuration_from_connection, connection_from_configuration
from stokes.errors import GraphError, MovePatternError
from stokes.flags.configuration import move2_points
from stokes.logger import Logger

Location = Union[str, Tuple[str, str]]


def _after(order: Sequence[str], v: str) -> List[str]:
    i = list(order).index(v)
    return list(order[i + 1:]) + list(order[:i])


def _edge(graph: BipartiteGraph, u: str, v: str) -> Edge:
    return (u, v) if graph.is_white(u) else (v, u)


def _rebuild(graph: BipartiteGraph, white: List[str], black: List[str], edges,
             rotations: Dict[str, List[str]]) -> BipartiteGraph:
    try:
        return BipartiteGraph(white, black, sorted(set(edges)), rotations)
    except GraphError as e:
        raise MovePatternError('Move does not give an embedded graph: {}'.format(e))


class GraphMove(abc.ABC):
    """
    A local rewrite of a bipartite graph at a location.
    """

    name = ''

    @abc.abstractmethod
    def check(self, graph: BipartiteGraph, location: Location):
        """
        :raises MovePatternError: if the graph does not have the
                                  pattern of the move at ``location``
        """
        pass

    @abc.abstractmethod
    def apply(self, graph: BipartiteGraph, location: Location) -> BipartiteGraph:
        """
        The rewritten graph. Labels of surviving vertices are kept.
        """
        pass

    @abc.abstractmethod
    def candidates(self, graph: BipartiteGraph) -> List[Location]:
        pass

    def matches(self, graph: BipartiteGraph, location: Location) -> bool:
        try:
            self.check(graph, location)
            return True
        except MovePatternError:
            return False

    def locations(self, graph: BipartiteGraph) -> List[Location]:
        """
        Every location where the move applies.
        """
        found = []
        for location in self.candidates(graph):
            try:
                self.apply(graph, location)
                found.append(location)
            except MovePatternError:
                continue
        return found


class Contraction(GraphMove):
    """
    Moves 1 and 1': removes a 2-valent vertex of colour ``white``
    (or black) and identifies its two neighbours into the first one.
    """

    def __init__(self, white: bool):
        self._white = white
        self.name = "1'" if white else '1'

    def check(self, graph: BipartiteGraph, location: Location):
        if not isinstance(location, str) or location not in graph.vertices:
            raise MovePatternError('Move {} needs a vertex, got {!r}'.format(self.name, location))
        if graph.is_white(location) != self._white:
            raise MovePatternError('Move {} needs a {} vertex, {} is {}'
                                   .format(self.name, 'white' if self._white else 'black',
                                           location, graph.color(location)))
        if graph.degree(location) != 2:
            raise MovePatternError('Move {} needs a 2-valent vertex, {} has degree {}'
                                   .format(self.name, location, graph.degree(location)))

    def candidates(self, graph: BipartiteGraph) -> List[Location]:
        return [v for v in (graph.white if self._white else graph.black) if graph.degree(v) == 2]

    def apply(self, graph: BipartiteGraph, location: Location) -> BipartiteGraph:
        self.check(graph, location)
        rotations = graph.rotations
        keep, gone = rotations[location]

        merged = []
        for v in _after(rotations[keep], location) + _after(rotations[gone], location):
            if v not in merged:
                merged.append(v)
        shared = set(rotations[keep]) & set(rotations[gone])

        new_rotations = {}
        for v, order in rotations.items():
            if v in (location, gone):
                continue
            if v == keep:
                new_rotations[v] = merged
            elif v in shared:
                new_rotations[v] = [u for u in order if u != gone]
            else:
                new_rotations[v] = [keep if u == gone else u for u in order]

        edges = []
        for w, b in graph.edges:
            if location in (w, b):
                continue
            edges.append((keep if w == gone else w, keep if b == gone else b))

        white = [w for w in graph.white if w not in (location, gone)]
        black = [b for b in graph.black if b not in (location, gone)]
        return _rebuild(graph, white, black, edges, new_rotations)


class SquareMove(GraphMove):
    """
    Moves 2 and 2': for a square face ``x, b, y, d`` (counterclockwise)
    with 3-valent corners ``x, y`` whose third neighbours are ``a``
    and ``c``, the edges ``x b`` and ``y d`` are replaced by ``x c``
    and ``y a``. The new square face is ``x, a, y, c``.
    """

    def __init__(self, white: bool):
        self._white = white
        self.name = '2' if white else "2'"

    def pattern(self, graph: BipartiteGraph, location: Location) -> Tuple[str, str, str, str, str, str]:
        """
        :return: ``x, y, a, b, c, d`` of the square at ``location``
        """
        if not isinstance(location, (tuple, list)) or len(location) != 2:
            raise MovePatternError('Move {} needs a pair of corners, got {!r}'.format(self.name, location))
        x, y = location
        for v in (x, y):
            if v not in graph.vertices:
                raise MovePatternError('Unknown vertex {!r}'.format(v))
            if graph.is_white(v) != self._white:
                raise MovePatternError('Move {} needs {} corners, {} is {}'
                                       .format(self.name, 'white' if self._white else 'black',
                                               v, graph.color(v)))
            if graph.degree(v) != 3:
                raise MovePatternError('Corner {} has degree {}, not 3'.format(v, graph.degree(v)))

        for face in graph.faces:
            if len(face) != 4 or len(set(face)) != 4 or x not in face:
                continue
            i = face.index(x)
            square = face[i:] + face[:i]
            if square[2] != y:
                continue
            b, d = square[1], square[3]
            a = _after(graph.neighbors(x), d)[0]
            c = _after(graph.neighbors(y), b)[0]
            if a == c:
                raise MovePatternError('Corners {} and {} share their third neighbour {}'.format(x, y, a))
            return x, y, a, b, c, d

        raise MovePatternError('{} and {} are not opposite corners of a square face'.format(x, y))

    def check(self, graph: BipartiteGraph, location: Location):
        self.pattern(graph, location)

    def candidates(self, graph: BipartiteGraph) -> List[Location]:
        pairs = []
        for face in graph.faces:
            if len(face) == 4 and len(set(face)) == 4:
                corners = [v for v in face if graph.is_white(v) == self._white]
                pairs.append((corners[0], corners[1]))
        return pairs

    def apply(self, graph: BipartiteGraph, location: Location) -> BipartiteGraph:
        x, y, a, b, c, d = self.pattern(graph, location)
        rotations = {v: list(order) for v, order in graph.rotations.items()}

        rotations[x] = [d, a, c]
        rotations[y] = [c, a, b]
        rotations[a].insert(rotations[a].index(x), y)
        rotations[c].insert(rotations[c].index(y), x)
        rotations[d].remove(y)
        rotations[b].remove(x)

        removed = {_edge(graph, x, b), _edge(graph, y, d)}
        edges = [e for e in graph.edges if e not in removed] + [_edge(graph, x, c), _edge(graph, y, a)]
        return _rebuild(graph, graph.white, graph.black, edges, rotations)


MOVES = {
    '1': Contraction(white=False),
    "1'": Contraction(white=True),
    '2': SquareMove(white=True),
    "2'": SquareMove(white=False),
}


def get_move(move_id: str) -> GraphMove:
    if move_id not in MOVES:
        raise MovePatternError('Move \'{}\' unknown, the following moves are available:\n{}'
                               .format(move_id, '\n'.join(MOVES.keys())))
    return MOVES[move_id]


def apply_move(graph: BipartiteGraph, move_id: str, location: Location) -> BipartiteGraph:
    """
    :param graph: the graph to rewrite
    :type graph: BipartiteGraph
    :param move_id: one of ``1``, ``1'``, ``2``, ``2'``
    :type move_id: str
    :param location: the 2-valent vertex for moves 1 and 1', the pair
                     of opposite 3-valent corners of the square face
                     for moves 2 and 2'
    :type location: Location
    :return: the rewritten graph
    :rtype: BipartiteGraph
    :raises MovePatternError: if the graph does not match the move
                              at ``location``
    """
    result = get_move(move_id).apply(graph, location)
    Logger('bipartite').get_logger().info('Move {} at {} takes {!r} to {!r}'
                                          .format(move_id, location, graph, result))
    return result


def transport_connection(conn: GraphConnection, location: Location) -> GraphConnection:
    """
    Carries a connection across move 2: the points ``x, y`` of the
    square are moved along their line as in
    :func:`stokes.flags.configuration.move2_points` and the connection
    is read off the moved configuration on the new graph.
    """
    graph = conn.graph
    move = MOVES['2']
    x, y, a, b, c, d = move.pattern(graph, location)
    config = configuration_from_connection(conn)
    circuits = [set(graph.neighbors(v)) for v in (a, b, c, d)]
    moved = move2_points(config, circuits[0], circuits[1], circuits[2], circuits[3], x, y)
    return connection_from_configuration(move.apply(graph, location), moved)
