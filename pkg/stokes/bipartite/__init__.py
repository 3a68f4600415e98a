from stokes.bipartite.graph import BipartiteGraph, Edge, Face, WHITE, BLACK
from stokes.bipartite.dynkin import dynkin_tree, dynkin_to_bipartite
from stokes.bipartite.connection import GraphConnection, random_connection, face_monodromy, \
    face_monodromies, gauge_transform, connection_from_monodromies
from stokes.bipartite.realization import configuration_from_connection, connection_from_configuration, \
    configuration_dimension, is_minimal
from stokes.bipartite.moves import GraphMove, Contraction, SquareMove, MOVES, get_move, apply_move, \
    transport_connection
