"""
Growth diagrams: the points ``A_s (R e^{i alpha})^{(b_s - a_s) / b_s}``
attached to the upward sides of a Newton polygon.
"""

import cmath
import math
import random
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Tuple, Union

import numpy as np

from stokes import settings
from stokes.errors import GrowthDiagramError
from stokes.lattice.polygon import NewtonPolygon, HullEdge, boundary_sides
from stokes.poly.polynomial import LaurentPolynomial


class GrowthPoint:
    """
    A point turning around the origin. Its position at the sweep
    parameter ``t`` (one revolution of ``x`` per unit of ``t``) is
    ``radius * exp(2 pi i (speed * t + phase))``.
    """

    def __init__(self, radius: float, phase: float, speed: Fraction, side_id: int,
                 constant: complex = None):
        """
        :param radius: modulus of the point, positive
        :type radius: float
        :param phase: argument as a fraction of a turn, in [0, 1)
        :type phase: float
        :param speed: angular speed ``(b_s - a_s) / b_s``
        :type speed: Fraction
        :param side_id: index of the boundary side the point is
                        attached to
        :type side_id: int
        :param constant: the growth constant ``A_s``
        :type constant: complex
        """
        if not radius > 0:
            raise GrowthDiagramError('Growth point radius must be positive, got {}'.format(radius))
        self.__radius = float(radius)
        self.__phase = float(phase) % 1.0
        self.__speed = Fraction(speed)
        self.__side_id = side_id
        self.__constant = constant

    @property
    def radius(self) -> float:
        return self.__radius

    @property
    def phase(self) -> float:
        return self.__phase

    @property
    def speed(self) -> Fraction:
        return self.__speed

    @property
    def side_id(self) -> int:
        return self.__side_id

    @property
    def constant(self) -> complex:
        return self.__constant

    def position(self, t: float) -> complex:
        return self.__radius * cmath.exp(2j * math.pi * (float(self.__speed) * t + self.__phase))

    def to_dict(self) -> dict:
        return {'radius': self.__radius, 'phase': self.__phase,
                'speed': str(self.__speed), 'side': self.__side_id}

    def __repr__(self):
        return 'GrowthPoint(radius={:.6g}, phase={:.6f}, speed={})'.format(
            self.__radius, self.__phase, self.__speed)


class GrowthDiagram:

    def __init__(self, points: List[GrowthPoint], seed: int = None, start_angle: float = 0.0):
        if len(points) == 0:
            raise GrowthDiagramError('A growth diagram needs at least one point')
        self.__points = tuple(points)
        self.__seed = seed
        self.__start_angle = start_angle

    @property
    def points(self) -> Tuple[GrowthPoint, ...]:
        return self.__points

    @property
    def n(self) -> int:
        return len(self.__points)

    @property
    def seed(self) -> int:
        return self.__seed

    @property
    def start_angle(self) -> float:
        return self.__start_angle

    def speeds(self) -> List[Fraction]:
        return [q.speed for q in self.__points]

    def radii(self) -> np.ndarray:
        return np.array([q.radius for q in self.__points])

    def phases(self) -> np.ndarray:
        return np.array([q.phase for q in self.__points])

    def projections(self, times: np.ndarray) -> np.ndarray:
        """
        Real parts of all points at the given times, one row per
        time.
        """
        times = np.atleast_1d(np.asarray(times, dtype=float))
        speeds = np.array([float(s) for s in self.speeds()])
        angles = 2 * np.pi * (np.outer(times, speeds) + self.phases())
        return self.radii() * np.cos(angles)

    def crossing_count(self) -> Fraction:
        """
        Number of adjacent swaps of the real projections in one
        period, counted pair by pair. Two points of equal speed
        ``w`` cross ``2|w|`` times; otherwise the faster point
        dominates and its speed decides.
        """
        total = Fraction(0)
        for p, q in combinations(self.__points, 2):
            total += 2 * abs(max(p.speed, q.speed))
        return total

    def to_dict(self) -> dict:
        return {'points': [q.to_dict() for q in self.__points], 'n': self.n}

    def __len__(self):
        return len(self.__points)

    def __repr__(self):
        return 'GrowthDiagram({})'.format(list(self.__points))


Coefficients = Union[None, LaurentPolynomial, Mapping[Tuple[int, int], Fraction]]


def _numeric_coefficients(polygon: NewtonPolygon, coefficients: Coefficients,
                          seed: int) -> Dict[Tuple[int, int], Fraction]:
    if coefficients is None:
        rng = random.Random(seed)
        bound = settings.PARAMETER_BOUND
        return {tuple(q): Fraction(rng.randint(1, bound), rng.randint(1, bound))
                for q in sorted(polygon.support)}
    if isinstance(coefficients, LaurentPolynomial):
        return coefficients.instantiate(seed)
    return {tuple(k): Fraction(v) for k, v in coefficients.items()}


def edge_polynomial(edge: HullEdge, values: Mapping[Tuple[int, int], Fraction]) -> List[Fraction]:
    """
    Coefficients ``c_0 .. c_g`` of the terms sitting on a hull edge,
    ``c_k`` belonging to ``start + k * direction``.
    """
    return [Fraction(values.get(tuple(edge.start + (k * edge.direction.a, k * edge.direction.b)), 0))
            for k in range(edge.length + 1)]


def edge_roots(coefficients: List[Fraction]) -> List[complex]:
    """
    Roots of ``sum c_k z^k``, ordered by argument then modulus.
    Repeated roots mean coincident growth points and are refused.
    """
    roots = np.roots([float(c) for c in reversed(coefficients)])
    roots = sorted((complex(z) for z in roots), key=lambda z: (round(cmath.phase(z), 12), abs(z)))
    scale = max(abs(z) for z in roots)
    for z, w in combinations(roots, 2):
        if abs(z - w) < 1e-9 * scale:
            raise GrowthDiagramError('Edge polynomial {} has a repeated root'
                                     .format([str(c) for c in coefficients]))
    return roots


def build_growth_diagram(polygon: NewtonPolygon, seed: int = settings.DEFAULT_SEED,
                         coefficients: Coefficients = None,
                         radius: float = settings.GROWTH_RADIUS) -> GrowthDiagram:
    """
    Growth diagram of the upward sides of ``polygon``.

    Each upward edge of lattice length ``g`` and primitive direction
    ``(a, b)`` has an edge polynomial of degree ``g``; each of its
    roots ``z`` is attached to one unit side and gives the ``b``
    points ``A`` with ``A^b = z``, turning at speed ``(b - a) / b``
    and drawn at ``A R^speed``. The whole picture is turned to a
    generic start angle drawn from ``seed``.

    :param polygon: a non-degenerate Newton polygon
    :type polygon: NewtonPolygon
    :param seed: seed of the start angle and of the generic
                 coefficient values
    :type seed: int
    :param coefficients: the polynomial the polygon comes from, or
                         numeric coefficients per exponent; when
                         omitted every support point gets a generic
                         positive value
    :type coefficients: Union[None, LaurentPolynomial, Mapping]
    :param radius: the large modulus ``R`` of ``x``; it is raised
                   further when needed so that faster points lie
                   outside slower ones, see :func:`dominant_radius`
    :type radius: float
    :return: the growth diagram
    :rtype: GrowthDiagram
    """
    values = _numeric_coefficients(polygon, coefficients, seed)
    sides = boundary_sides(polygon)
    start_angle = random.Random(seed).random()

    points = []
    first_side = 0
    for edge in polygon.edges:
        edge_sides = sides[first_side:first_side + edge.length]
        first_side += edge.length
        a, b = edge.direction
        if b <= 0:
            continue

        speed = Fraction(b - a, b)
        roots = edge_roots(edge_polynomial(edge, values))
        for side, z in zip(edge_sides, roots):
            modulus = abs(z) ** (1.0 / b)
            for j in range(b):
                turn = (cmath.phase(z) + 2 * math.pi * j) / (2 * math.pi * b)
                points.append((modulus, turn, speed, side.index, modulus * cmath.exp(2j * math.pi * turn)))

    if len(points) == 0:
        raise GrowthDiagramError('Newton polygon {} has no upward sides'.format(polygon))

    radius = dominant_radius([(m, s) for m, _, s, _, _ in points], radius)
    growth = []
    for modulus, turn, speed, side_id, constant in points:
        try:
            r = modulus * radius ** float(speed)
        except OverflowError:
            r = math.inf
        if not math.isfinite(r):
            raise GrowthDiagramError('Growth point of speed {} overflows at R = {:g}'.format(speed, radius))
        growth.append(GrowthPoint(r, turn + float(speed) * start_angle, speed, side_id, constant))

    return GrowthDiagram(growth, seed, start_angle)


def dominant_radius(points: List[Tuple[float, Fraction]], radius: float = settings.GROWTH_RADIUS,
                    margin: float = settings.DOMINANCE_MARGIN) -> float:
    """
    The smallest ``R >= radius`` at which every faster point lies
    at least ``margin`` times further out than every slower one.

    :param points: modulus and speed of every growth point
    :type points: List[Tuple[float, Fraction]]
    """
    for (m, s), (n, t) in combinations(points, 2):
        if s == t:
            continue
        if s < t:
            m, s, n, t = n, t, m, s
        # m R^s >= margin n R^t
        try:
            needed = (margin * n / m) ** (1.0 / float(s - t))
        except OverflowError:
            raise GrowthDiagramError('Speeds {} and {} are too close to separate the growth points'
                                     .format(s, t))
        radius = max(radius, needed)
    return radius
