"""
Configurations of points realizing a bipartite graph. A connection
``M`` maps ``Q^B`` to ``Q^W`` and the white basis vectors give the
points in the projectivized cokernel; conversely the linear
relation among the neighbours of each black vertex gives the
entries of a connection.
"""

from typing import List

import sympy

from stokes import settings
from stokes.bipartite.connection import GraphConnection, random_connection
from stokes.bipartite.graph import BipartiteGraph
from stokes.errors import ConfigurationError, GraphError
from stokes.flags.configuration import PointConfiguration
from stokes.logger import Logger


def configuration_from_connection(conn: GraphConnection) -> PointConfiguration:
    """
    The points of the white vertices in ``Q^W / Im M``, written in
    the coordinates given by a basis of the left kernel of ``M``.

    :param conn: a connection whose matrix has full column rank
    :type conn: GraphConnection
    :return: a configuration of dimension ``|W| - rank(M) - 1``
    :rtype: PointConfiguration
    :raises GraphError: if ``M`` is rank deficient
    """
    graph = conn.graph
    m = conn.matrix()
    rank = m.rank()
    if rank != len(graph.black):
        raise GraphError('Connection matrix has rank {} < {}, the connection is not generic'
                         .format(rank, len(graph.black)))
    if rank == len(graph.white):
        raise GraphError('Cokernel of the connection matrix is zero')

    cokernel = sympy.Matrix.vstack(*[v.T for v in m.T.nullspace()])
    return PointConfiguration({w: tuple(cokernel[:, i]) for i, w in enumerate(graph.white)})


def connection_from_configuration(graph: BipartiteGraph, config: PointConfiguration) -> GraphConnection:
    """
    The connection whose entries at a black vertex are the
    coefficients of the unique linear relation among the points of
    its white neighbours.

    :raises ConfigurationError: if a neighbourhood is not a circuit
                                or its relation has a zero coefficient
    """
    entries = {}
    for b in graph.black:
        neighbors = list(graph.neighbors(b))
        columns = sympy.Matrix([list(config.point(w)) for w in neighbors]).T
        relations = columns.nullspace()
        if len(relations) != 1:
            raise ConfigurationError('Neighbours {} of {} do not form a circuit'.format(neighbors, b))
        relation = relations[0]
        for w, c in zip(neighbors, relation):
            if c == 0:
                raise ConfigurationError('Point {} does not take part in the relation at {}'.format(w, b))
            entries[(w, b)] = c
    return GraphConnection(graph, entries)


def _generic_matrices(graph: BipartiteGraph, trials: int, seed: int) -> List[sympy.Matrix]:
    return [random_connection(graph, seed + k).matrix() for k in range(trials)]


def configuration_dimension(graph: BipartiteGraph, trials: int = settings.DEFAULT_TRIALS,
                            seed: int = settings.DEFAULT_SEED) -> int:
    """
    ``|W| - rank(M) - 1`` for the largest rank of ``M`` over
    ``trials`` seeded generic connections.
    """
    if trials < 1:
        raise ConfigurationError('At least one trial is needed, got {}'.format(trials))
    logger = Logger('bipartite').get_logger()
    ranks = [m.rank() for m in _generic_matrices(graph, trials, seed)]
    logger.debug('Generic ranks of {!r}: {}'.format(graph, ranks))
    return len(graph.white) - max(ranks) - 1


def is_minimal(graph: BipartiteGraph, trials: int = settings.DEFAULT_TRIALS,
               seed: int = settings.DEFAULT_SEED) -> bool:
    """
    Whether dropping any black vertex increases the dimension, that
    is whether every column of a generic ``M`` raises its rank.
    """
    matrices = _generic_matrices(graph, trials, seed)
    rank = max(m.rank() for m in matrices)
    for j, b in enumerate(graph.black):
        reduced = max(m[:, [k for k in range(m.cols) if k != j]].rank() for m in matrices)
        if reduced == rank:
            Logger('bipartite').get_logger().info('Black vertex {} of {!r} is redundant'.format(b, graph))
            return False
    return True
