"""
Labelled configurations of points in a projective space, circuits
and the point-level form of the square move.
"""

import random
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple

import sympy

from stokes import settings
from stokes.errors import ConfigurationError, FlagError
from stokes.flags.linalg import Scalar, Subspace, Vector, vector, rank, rational_string, \
    random_vector, to_rational


class CircuitClass(Enum):
    FREE = 'Free'
    CIRCUIT = 'Circuit'
    DEGENERATE = 'Degenerate'


def circuit_classify(points: Sequence[Sequence[Scalar]]) -> CircuitClass:
    """
    ``k`` points are free when they span a ``P^(k-1)``, a circuit
    when they span a ``P^(k-2)`` and degenerate otherwise.

    >>> circuit_classify([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    <CircuitClass.CIRCUIT: 'Circuit'>
    """
    if len(points) == 0:
        raise FlagError('Can not classify an empty set of points')
    ambient = len(points[0])
    if any(len(p) != ambient for p in points):
        raise FlagError('Points do not share an ambient space')

    k = len(points)
    r = rank(points)
    if r == k:
        return CircuitClass.FREE
    if r == k - 1:
        return CircuitClass.CIRCUIT
    return CircuitClass.DEGENERATE


class PointConfiguration:
    """
    Labelled points of ``P^d`` given by representative vectors of
    ``Q^(d+1)``. The points span the whole space.
    """

    def __init__(self, points: Mapping[str, Sequence[Scalar]], check_span: bool = True):
        """
        :param points: label to homogeneous coordinates
        :type points: Mapping[str, Sequence[Scalar]]
        :param check_span: refuse points that lie in a proper
                           subspace
        :type check_span: bool
        """
        if len(points) == 0:
            raise ConfigurationError('A configuration needs at least one point')
        self.__points = {}  # type: Dict[str, Vector]
        ambient = None
        for label, coordinates in points.items():
            v = vector(coordinates)
            if ambient is None:
                ambient = len(v)
            if len(v) != ambient:
                raise ConfigurationError('Point {} does not live in dimension {}'.format(label, ambient))
            if all(x == 0 for x in v):
                raise ConfigurationError('Point {} is the zero vector'.format(label))
            self.__points[label] = v
        self.__ambient = ambient

        if check_span and rank(list(self.__points.values())) != ambient:
            raise ConfigurationError('Points lie in a proper subspace of P^{}'.format(ambient - 1))

    @property
    def labels(self) -> List[str]:
        return list(self.__points.keys())

    @property
    def ambient(self) -> int:
        return self.__ambient

    @property
    def dimension(self) -> int:
        return self.__ambient - 1

    def point(self, label: str) -> Vector:
        try:
            return self.__points[label]
        except KeyError:
            raise ConfigurationError('Unknown point {!r}'.format(label))

    def vectors(self, labels: Iterable[str]) -> List[Vector]:
        return [self.point(label) for label in labels]

    def span(self, labels: Iterable[str]) -> Subspace:
        return Subspace(self.vectors(labels), self.__ambient)

    def circuit_of(self, labels: Iterable[str]) -> CircuitClass:
        return circuit_classify(self.vectors(labels))

    def replace(self, new_points: Mapping[str, Sequence[Scalar]]) -> 'PointConfiguration':
        points = dict(self.__points)
        points.update({k: vector(v) for k, v in new_points.items()})
        return PointConfiguration(points)

    def transform(self, m: sympy.Matrix) -> 'PointConfiguration':
        return PointConfiguration({label: tuple(m * sympy.Matrix(v)) for label, v in self.__points.items()})

    def collinear_groups(self) -> List[List[str]]:
        """
        Maximal sets of at least three distinct points on a common
        line, for configurations of dimension at least two.
        """
        if self.dimension < 2:
            return []
        lines = {}
        for x, y in combinations(self.labels, 2):
            line = self.span([x, y])
            if line.dim != 2 or line in lines:
                continue
            lines[line] = [label for label in self.labels if line.contains(self.point(label))]
        groups = {tuple(sorted(g)) for g in lines.values() if len(g) >= 3}
        return sorted((list(g) for g in groups), key=lambda g: (len(g), g))

    def _frame(self) -> List[str]:
        # d + 2 points, any d + 1 of which are independent
        labels = self.labels
        n = self.__ambient
        for base in combinations(labels, n):
            basis = sympy.Matrix([list(v) for v in self.vectors(base)]).T
            if basis.rank() != n:
                continue
            for extra in labels:
                if extra in base:
                    continue
                coefficients = basis.LUsolve(sympy.Matrix(self.point(extra)))
                if all(c != 0 for c in coefficients):
                    return list(base) + [extra]
        raise ConfigurationError('Configuration has no projective frame')

    def projective_map_to(self, other: 'PointConfiguration') -> sympy.Matrix:
        """
        The projective transformation taking every point of this
        configuration to the point of ``other`` with the same label.

        :raises ConfigurationError: if there is none
        """
        if set(self.labels) != set(other.labels) or self.__ambient != other.ambient:
            raise ConfigurationError('Configurations have different labels or dimensions')

        frame = self._frame()
        base, extra = frame[:-1], frame[-1]
        p = sympy.Matrix([list(v) for v in self.vectors(base)]).T
        q = sympy.Matrix([list(v) for v in other.vectors(base)]).T
        if q.rank() != self.__ambient:
            raise ConfigurationError('Target points {} are dependent'.format(base))
        lam = p.LUsolve(sympy.Matrix(self.point(extra)))
        mu = q.LUsolve(sympy.Matrix(other.point(extra)))
        if any(c == 0 for c in mu):
            raise ConfigurationError('Target frame is degenerate')
        t = q * sympy.diag(*[mu[i] / lam[i] for i in range(self.__ambient)]) * p.inv()

        for label in self.labels:
            image = t * sympy.Matrix(self.point(label))
            target = sympy.Matrix(other.point(label))
            if image.row_join(target).rank() != 1:
                raise ConfigurationError('Point {} is not mapped onto its counterpart'.format(label))
        return t

    def is_projectively_equivalent(self, other: 'PointConfiguration') -> bool:
        try:
            self.projective_map_to(other)
            return True
        except ConfigurationError:
            return False

    def to_dict(self) -> dict:
        return {'dimension': self.dimension,
                'points': {label: [rational_string(x) for x in v] for label, v in self.__points.items()}}

    @classmethod
    def from_dict(cls, data: dict) -> 'PointConfiguration':
        return cls({label: [to_rational(x) for x in v] for label, v in data['points'].items()})

    def __len__(self):
        return len(self.__points)

    def __contains__(self, label):
        return label in self.__points

    def __eq__(self, other):
        return isinstance(other, PointConfiguration) and self.__points == dict(
            (label, other.point(label)) for label in other.labels)

    def __repr__(self):
        return 'PointConfiguration(dimension={}, labels={})'.format(self.dimension, self.labels)


def random_configuration(labels: Sequence[str], dimension: int,
                         seed: int = settings.DEFAULT_SEED) -> PointConfiguration:
    """
    Generic points with small random rational coordinates.
    """
    rng = random.Random(seed)
    for _ in range(settings.RETRY_SEEDS):
        points = {label: random_vector(rng, dimension + 1) for label in labels}
        try:
            return PointConfiguration(points)
        except ConfigurationError:
            continue
    raise ConfigurationError('Could not draw a generic configuration from seed {}'.format(seed))


def move2_circuits(a: Set[str], b: Set[str], c: Set[str], d: Set[str],
                   x: str, y: str) -> Tuple[Set[str], Set[str], Set[str], Set[str]]:
    """
    Label sets of the circuits after the square move, in which
    ``x`` and ``y`` name the moved points.
    """
    return set(a) | {y}, set(b) - {x}, set(c) | {x}, set(d) - {y}


def move2_points(config: PointConfiguration, a: Set[str], b: Set[str], c: Set[str], d: Set[str],
                 x: str, y: str) -> PointConfiguration:
    """
    Square move on points. ``x`` lies on the circuits ``a, b, d``
    and ``y`` on ``b, c, d``; both are moved along the line ``xy``:

        x' = <d - {x, y}> & xy,    y' = <b - {x, y}> & xy

    :return: the configuration with ``x, y`` replaced by
             ``x', y'``; the sets of :func:`move2_circuits` are
             circuits in it
    :rtype: PointConfiguration
    """
    if x == y:
        raise ConfigurationError('The moved points must be distinct')
    if not (x in a and x in b and x in d):
        raise ConfigurationError('{} must lie on circuits a, b and d'.format(x))
    if not (y in b and y in c and y in d):
        raise ConfigurationError('{} must lie on circuits b, c and d'.format(y))

    line = config.span([x, y])
    if line.dim != 2:
        raise ConfigurationError('Points {} and {} coincide'.format(x, y))

    new_x = config.span(set(d) - {x, y}) & line
    new_y = config.span(set(b) - {x, y}) & line
    if new_x.dim != 1 or new_y.dim != 1:
        raise ConfigurationError('Line {}{} does not meet the circuits in single points'.format(x, y))

    return config.replace({x: new_x.vectors()[0], y: new_y.vectors()[0]})
