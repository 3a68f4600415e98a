"""
Newton polygon of a Laurent polynomial in ``x`` and ``p``: the
convex hull of its support, the unit sides of its boundary and
the invariants of the curve read off from them.
"""

from enum import Enum
from math import gcd
from typing import Iterable, List, NamedTuple, Tuple, Union

from stokes.errors import DegenerateHullError
from stokes.poly.polynomial import LaurentPolynomial


class LatticePoint(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return LatticePoint(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return LatticePoint(self.a - other[0], self.b - other[1])


class HullEdge(NamedTuple):
    """
    An edge of the hull between two consecutive vertices.
    ``direction`` is primitive and ``length`` is the number of
    unit sides the edge is made of.
    """
    start: LatticePoint
    end: LatticePoint
    direction: LatticePoint
    length: int


class Side:
    """
    A unit lattice step along the boundary, oriented
    counterclockwise. ``index`` is the position of the side in the
    boundary traversal.
    """

    def __init__(self, index: int, start: LatticePoint, end: LatticePoint):
        vector = end - start
        if gcd(abs(vector.a), abs(vector.b)) != 1:
            raise DegenerateHullError('Side {} -> {} is not primitive'.format(start, end))
        self.__index = index
        self.__start = start
        self.__end = end
        self.__vector = vector

    @property
    def index(self) -> int:
        return self.__index

    @property
    def start(self) -> LatticePoint:
        return self.__start

    @property
    def end(self) -> LatticePoint:
        return self.__end

    @property
    def vector(self) -> LatticePoint:
        return self.__vector

    def is_upward(self) -> bool:
        return self.__vector.b > 0

    def __eq__(self, other):
        return isinstance(other, Side) and \
            (self.__index, self.__start, self.__end) == (other.index, other.start, other.end)

    def __hash__(self):
        return hash((self.__index, self.__start, self.__end))

    def __repr__(self):
        return 'Side({}, {} -> {})'.format(self.__index, tuple(self.__start), tuple(self.__end))


class Location(Enum):
    AFFINE_PLANE = 'AffinePlane'
    AT_INFINITY = 'AtInfinity'


class CompactificationPoint(NamedTuple):
    """
    The point added to the curve for one side. At it ``x`` has a
    zero of order ``x_order`` and ``p`` one of order ``p_order``;
    a negative order is a pole.
    """
    side: Side
    x_order: int
    p_order: int
    location: Location

    @property
    def at_infinity(self) -> bool:
        return self.location is Location.AT_INFINITY


class OperatorProfile(NamedTuple):
    order: int
    trivial_local_system: bool


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Tuple[int, int]]) -> List[LatticePoint]:
    """
    Monotone chain hull. Vertices are returned counterclockwise
    starting from the lexicographically smallest point; points in
    the interior of edges are dropped.

    >>> convex_hull([(0, 0), (2, 0), (1, 0), (0, 2), (1, 1)])
    [LatticePoint(a=0, b=0), LatticePoint(a=2, b=0), LatticePoint(a=0, b=2)]
    """
    pts = sorted(set(LatticePoint(*p) for p in points))
    if len(pts) <= 2:
        return pts

    lower = []
    for q in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)

    upper = []
    for q in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)

    return lower[:-1] + upper[:-1]


class NewtonPolygon:
    """
    Convex lattice polygon of a support. A support whose hull is a
    point or a segment gives a polygon flagged ``degenerate``; the
    operations that need area refuse it.
    """

    def __init__(self, support: Iterable[Tuple[int, int]]):
        self.__support = frozenset(LatticePoint(*p) for p in support)
        if len(self.__support) == 0:
            raise DegenerateHullError('Newton polygon of an empty support')
        self.__vertices = tuple(convex_hull(self.__support))
        self.__degenerate = len(self.__vertices) < 3

    @property
    def vertices(self) -> Tuple[LatticePoint, ...]:
        return self.__vertices

    @property
    def support(self) -> frozenset:
        return self.__support

    @property
    def degenerate(self) -> bool:
        return self.__degenerate

    @property
    def edges(self) -> List[HullEdge]:
        self.require_area()
        edges = []
        n = len(self.__vertices)
        for i, start in enumerate(self.__vertices):
            end = self.__vertices[(i + 1) % n]
            d = end - start
            g = gcd(abs(d.a), abs(d.b))
            edges.append(HullEdge(start, end, LatticePoint(d.a // g, d.b // g), g))
        return edges

    def twice_area(self) -> int:
        self.require_area()
        n = len(self.__vertices)
        return sum(self.__vertices[i].a * self.__vertices[(i + 1) % n].b -
                   self.__vertices[(i + 1) % n].a * self.__vertices[i].b
                   for i in range(n))

    def contains(self, point: Tuple[int, int], strict: bool = False) -> bool:
        self.require_area()
        n = len(self.__vertices)
        for i in range(n):
            c = _cross(self.__vertices[i], self.__vertices[(i + 1) % n], point)
            if c < 0 or (strict and c == 0):
                return False
        return True

    def require_area(self):
        if self.__degenerate:
            raise DegenerateHullError('Newton polygon with vertices {} has no interior'
                                      .format([tuple(v) for v in self.__vertices]))

    def to_dict(self) -> dict:
        """
        JSON form: ``{vertices: [[a, b], ...], sides: [{vec: [a, b],
        at_infinity: bool}, ...]}``.
        """
        points = classify_compactification(self)
        return {
            'vertices': [[v.a, v.b] for v in self.__vertices],
            'sides': [{'vec': [c.side.vector.a, c.side.vector.b],
                       'at_infinity': c.at_infinity} for c in points]
        }

    def __eq__(self, other):
        return isinstance(other, NewtonPolygon) and self.__support == other.support

    def __hash__(self):
        return hash(self.__support)

    def __repr__(self):
        return 'NewtonPolygon({})'.format([tuple(v) for v in self.__vertices])


def newton_polygon(poly: Union[LaurentPolynomial, Iterable[Tuple[int, int]]],
                   allow_degenerate: bool = False) -> NewtonPolygon:
    """
    :param poly: a polynomial, or its support
    :type poly: Union[LaurentPolynomial, Iterable[Tuple[int, int]]]
    :param allow_degenerate: return a polygon flagged degenerate
                             instead of raising when the hull is a
                             point or a segment
    :type allow_degenerate: bool
    :return: the Newton polygon
    :rtype: NewtonPolygon
    """
    support = poly.support if isinstance(poly, LaurentPolynomial) else poly
    polygon = NewtonPolygon(support)
    if polygon.degenerate and not allow_degenerate:
        polygon.require_area()
    return polygon


def boundary_sides(polygon: NewtonPolygon) -> List[Side]:
    """
    Unit sides of the boundary, counterclockwise from the
    lexicographically smallest vertex. An edge of lattice length
    ``g`` gives ``g`` equal sides.
    """
    sides = []
    for edge in polygon.edges:
        start = edge.start
        for _ in range(edge.length):
            end = start + edge.direction
            sides.append(Side(len(sides), start, end))
            start = end
    return sides


def upward_sides(polygon: NewtonPolygon) -> List[Side]:
    return [s for s in boundary_sides(polygon) if s.is_upward()]


def interior_points(polygon: NewtonPolygon) -> List[LatticePoint]:
    polygon.require_area()
    a_min = min(v.a for v in polygon.vertices)
    a_max = max(v.a for v in polygon.vertices)
    b_min = min(v.b for v in polygon.vertices)
    b_max = max(v.b for v in polygon.vertices)
    return [LatticePoint(a, b)
            for b in range(b_min + 1, b_max)
            for a in range(a_min + 1, a_max)
            if polygon.contains((a, b), strict=True)]


def genus(polygon: NewtonPolygon) -> int:
    """
    Number of lattice points strictly inside the polygon, from
    Pick's formula ``2A = 2I + B - 2``.
    """
    boundary = sum(edge.length for edge in polygon.edges)
    return (polygon.twice_area() - boundary + 2) // 2


def classify_compactification(polygon: NewtonPolygon) -> List[CompactificationPoint]:
    """
    One compactification point per side; it lies at infinity when
    ``x`` or ``p`` has a pole there.
    """
    points = []
    for side in boundary_sides(polygon):
        x_order, p_order = -side.vector.b, side.vector.a
        location = Location.AT_INFINITY if x_order < 0 or p_order < 0 else Location.AFFINE_PLANE
        points.append(CompactificationPoint(side, x_order, p_order, location))
    return points


def points_at_infinity(polygon: NewtonPolygon) -> int:
    return sum(1 for c in classify_compactification(polygon) if c.at_infinity)


def homology_rank(polygon: NewtonPolygon) -> int:
    """
    First Betti number of the affine curve: ``2g + k - 1`` for a
    genus ``g`` curve with ``k`` punctures.
    """
    return 2 * genus(polygon) + points_at_infinity(polygon) - 1


def operator_profile(poly: LaurentPolynomial) -> OperatorProfile:
    """
    Order of the differential operator with symbol ``poly`` and
    whether its local system is trivial, i.e. whether the top
    coefficient is a constant.

    >>> from stokes.poly.parser import parse_polynomial
    >>> operator_profile(parse_polynomial('x^3+x*p^2+a1'))
    OperatorProfile(order=2, trivial_local_system=False)
    """
    order = poly.degree_in_p()
    if order < 1:
        raise DegenerateHullError('Polynomial {} does not depend on p'.format(poly))
    top = {(a, b) for a, b in poly.support if b == order}
    return OperatorProfile(order, top == {(0, order)})
