from stokes.flags.linalg import RationalMatrix, Subspace, span, rank, vector, matrix, to_rational, \
    to_fraction, rational_string, random_rational, random_vector
from stokes.flags.flag import Flag, FlagWord, relative_position, inverse, commuting_generators, \
    flags_from_points, points_from_flags, word_from_flag_sequence
from stokes.flags.configuration import CircuitClass, PointConfiguration, circuit_classify, \
    random_configuration, move2_circuits, move2_points
