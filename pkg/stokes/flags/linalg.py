"""
Exact linear algebra over the rationals on top of sympy matrices.
Subspaces are kept as the nonzero rows of their reduced row
echelon form, so equal subspaces have equal representations.
"""

import random
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from stokes import settings
from stokes.errors import FlagError

Scalar = Union[int, Fraction, str, sympy.Rational]

Vector = Tuple[sympy.Rational, ...]

RationalMatrix = sympy.Matrix


def to_rational(value: Scalar) -> sympy.Rational:
    """
    >>> to_rational('3/4')
    3/4
    """
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    rational = sympy.Rational(value)
    if not rational.is_Rational:
        raise FlagError('{!r} is not a rational number'.format(value))
    return rational


def to_fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def rational_string(value: sympy.Rational) -> str:
    """
    ``"num/den"`` form used in JSON documents.

    >>> rational_string(sympy.Rational(-2, 1))
    '-2/1'
    """
    return '{}/{}'.format(value.p, value.q)


def vector(values: Iterable[Scalar]) -> Vector:
    return tuple(to_rational(v) for v in values)


def matrix(rows: Iterable[Iterable[Scalar]], cols: int = None) -> RationalMatrix:
    rows = [vector(r) for r in rows]
    if len(rows) == 0:
        return sympy.zeros(0, cols or 0)
    return sympy.Matrix(rows)


def random_rational(rng: random.Random, bound: int = settings.ENTRY_BOUND,
                    nonzero: bool = True) -> sympy.Rational:
    while True:
        value = sympy.Rational(rng.randint(-bound, bound), rng.randint(1, bound))
        if value != 0 or not nonzero:
            return value


def random_vector(rng: random.Random, ambient: int, bound: int = 9) -> Vector:
    return tuple(random_rational(rng, bound, nonzero=False) for _ in range(ambient))


class Subspace:
    """
    A linear subspace of ``Q^ambient``, i.e. a projective subspace
    of ``P^(ambient - 1)``.
    """

    def __init__(self, vectors: Iterable[Sequence[Scalar]], ambient: int):
        """
        :param vectors: spanning vectors, not necessarily independent
        :type vectors: Iterable[Sequence[Scalar]]
        :param ambient: dimension of the ambient vector space
        :type ambient: int
        """
        rows = [vector(v) for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise FlagError('Vector {} does not live in dimension {}'.format(row, ambient))

        self.__ambient = ambient
        if len(rows) == 0:
            self.__basis = sympy.ImmutableMatrix.zeros(0, ambient)
        else:
            reduced, pivots = sympy.Matrix(rows).rref()
            self.__basis = sympy.ImmutableMatrix(reduced[:len(pivots), :])

    @classmethod
    def zero(cls, ambient: int) -> 'Subspace':
        return cls([], ambient)

    @classmethod
    def full(cls, ambient: int) -> 'Subspace':
        return cls(sympy.eye(ambient).tolist(), ambient)

    @property
    def ambient(self) -> int:
        return self.__ambient

    @property
    def dim(self) -> int:
        return self.__basis.rows

    @property
    def codimension(self) -> int:
        return self.__ambient - self.dim

    @property
    def basis(self) -> sympy.ImmutableMatrix:
        return self.__basis

    def vectors(self) -> List[Vector]:
        return [tuple(self.__basis.row(i)) for i in range(self.dim)]

    def _check(self, other: 'Subspace'):
        if self.__ambient != other.ambient:
            raise FlagError('Ambient dimensions {} and {} differ'.format(self.__ambient, other.ambient))

    def __add__(self, other: 'Subspace') -> 'Subspace':
        self._check(other)
        return Subspace(self.vectors() + other.vectors(), self.__ambient)

    def __and__(self, other: 'Subspace') -> 'Subspace':
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.__ambient)
        # x A = y B  <=>  (x, y) [A; -B] = 0
        stacked = self.__basis.col_join(-other.basis)
        relations = stacked.T.nullspace()
        vectors = [tuple((r[:self.dim, :].T * self.__basis)) for r in relations]
        return Subspace(vectors, self.__ambient)

    def contains(self, other: Union['Subspace', Sequence[Scalar]]) -> bool:
        if not isinstance(other, Subspace):
            other = Subspace([other], self.__ambient)
        self._check(other)
        return (self + other).dim == self.dim

    def transform(self, m: RationalMatrix) -> 'Subspace':
        """
        Image under the linear map ``v -> m v``.
        """
        return Subspace([tuple(m * sympy.Matrix(v)) for v in self.vectors()], self.__ambient)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.__ambient == other.ambient and \
            self.__basis == other.basis

    def __hash__(self):
        return hash((self.__ambient, self.__basis))

    def __repr__(self):
        return 'Subspace(dim={}, ambient={}, basis={})'.format(
            self.dim, self.__ambient, [[str(x) for x in v] for v in self.vectors()])


def span(vectors: Sequence[Sequence[Scalar]], ambient: int = None) -> Subspace:
    if ambient is None:
        if len(vectors) == 0:
            raise FlagError('Can not infer the ambient dimension of an empty span')
        ambient = len(vectors[0])
    return Subspace(vectors, ambient)


def rank(vectors: Sequence[Sequence[Scalar]]) -> int:
    if len(vectors) == 0:
        return 0
    return matrix(vectors).rank()
