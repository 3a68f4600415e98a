"""
Dynkin types and the versal families attached to them.
"""

import re
from typing import List, Tuple

import sympy

from stokes import settings
from stokes.errors import InvalidCoefficientError, UnsupportedTypeError
from stokes.poly.parser import parse_polynomial
from stokes.poly.polynomial import LaurentPolynomial, Parameter


class DynkinType:
    """
    A simply laced Dynkin type: ``A_n`` (n >= 1), ``D_n`` (n >= 4)
    or ``E_n`` (n in 6, 7, 8).
    """

    def __init__(self, family: str, rank: int):
        """
        :param family: one of ``A``, ``D``, ``E``
        :type family: str
        :param rank: number of nodes of the diagram
        :type rank: int
        """
        family = family.upper()
        if family not in ('A', 'D', 'E'):
            raise UnsupportedTypeError('Unknown Dynkin family \'{}\''.format(family))
        if not isinstance(rank, int) or rank < 1:
            raise UnsupportedTypeError('Rank must be a positive integer, got {}'.format(rank))
        if family == 'D' and rank < 4:
            raise UnsupportedTypeError('D_n needs n >= 4, got {}'.format(rank))
        if family == 'E' and rank not in (6, 7, 8):
            raise UnsupportedTypeError('E_n needs n in 6, 7, 8, got {}'.format(rank))

        self.__family = family
        self.__rank = rank

    @property
    def family(self) -> str:
        return self.__family

    @property
    def rank(self) -> int:
        return self.__rank

    def arms(self) -> Tuple[int, ...]:
        """
        Lengths of the chains hanging off the branch node, or
        ``(rank,)`` for the unbranched ``A_n``.
        """
        if self.__family == 'A':
            return (self.__rank,)
        if self.__family == 'D':
            return 1, 1, self.__rank - 3
        return 1, 2, self.__rank - 4

    def __eq__(self, other):
        return isinstance(other, DynkinType) and \
            (self.__family, self.__rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.__family, self.__rank))

    def __repr__(self):
        return 'DynkinType({!r}, {})'.format(self.__family, self.__rank)

    def __str__(self):
        return '{}{}'.format(self.__family, self.__rank)


_TYPE_PATTERN = re.compile(r'^\s*([ADEade])_?(\d+)\s*$')

_PRESET_PATTERN = re.compile(r'^\s*([ADE])_?(\d+)\s*$')


def is_preset_name(text: str) -> bool:
    """
    Whether ``text`` reads as a Dynkin type such as ``E8`` or ``D_5``,
    valid or not. The family letter must be uppercase: ``a1`` and
    ``e6`` are polynomial text.
    """
    return _PRESET_PATTERN.match(text) is not None


def parse_dynkin_type(text: str) -> DynkinType:
    """
    >>> parse_dynkin_type('E8')
    DynkinType('E', 8)
    """
    match = _TYPE_PATTERN.match(text)
    if match is None:
        raise UnsupportedTypeError('Can not read a Dynkin type from \'{}\''.format(text))
    return DynkinType(match.group(1), int(match.group(2)))


# Deformation monomials (a, b) of x^a p^b, in the order the
# Milnor-algebra oracle selects them. Frozen so that presets do not
# depend on a computer algebra run.
E6_MONOMIALS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1)]

E7_MONOMIALS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (1, 2)]


def dn_monomials(n: int) -> List[Tuple[int, int]]:
    """
    Milnor basis of ``x p^2 + x^(n+1)``: it has ``n + 2`` elements.
    """
    monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)]
    monomials.extend((k, 0) for k in range(3, n))
    return monomials


def _with_parameters(principal: str, monomials: List[Tuple[int, int]]) -> LaurentPolynomial:
    terms = dict(parse_polynomial(principal).terms)
    for i, exponent in enumerate(monomials):
        terms[exponent] = Parameter('a{}'.format(i + 1))
    return LaurentPolynomial(terms)


def principal_part(dynkin: DynkinType) -> LaurentPolynomial:
    """
    :return: the singularity of the type, without deformation terms
    :rtype: LaurentPolynomial
    """
    n = dynkin.rank
    if dynkin.family == 'A':
        return parse_polynomial('p^2+x^{}'.format(n + 1))
    if dynkin.family == 'D':
        if n == 4:
            return parse_polynomial('p^3+x^2*p')
        return parse_polynomial('x*p^2+x^{}'.format(n + 1))
    return parse_polynomial({6: 'p^3+x^4', 7: 'p^3+x^3*p', 8: 'x^5+p^3'}[n])


def preset_family(dynkin: DynkinType) -> LaurentPolynomial:
    """
    The versal family of the singularity of the given type.

    >>> sorted(preset_family(DynkinType('A', 2)).support)
    [(0, 0), (0, 2), (1, 0), (3, 0)]

    :param dynkin: the Dynkin type
    :type dynkin: DynkinType
    :return: principal part plus one parameter per
             deformation monomial
    :rtype: LaurentPolynomial
    """
    if not isinstance(dynkin, DynkinType):
        raise UnsupportedTypeError('Unsupported type {!r}'.format(dynkin))

    n = dynkin.rank
    if dynkin.family == 'A':
        return _with_parameters('p^2+x^{}'.format(n + 1), [(k, 0) for k in range(n)])

    if dynkin.family == 'D':
        if n == 4:
            return parse_polynomial('p^3+x^2*p+a1+a2*p+a3*p^2+a4*x')
        return _with_parameters('x*p^2+x^{}'.format(n + 1), dn_monomials(n))

    if n == 6:
        return _with_parameters('p^3+x^4', E6_MONOMIALS)
    if n == 7:
        return _with_parameters('p^3+x^3*p', E7_MONOMIALS)
    return parse_polynomial('x^5+p^3+a1+a2*x+a3*x^2+a4*x^3+a5*p+a6*x*p+a7*x^2*p+a8*x^3*p')


def preset_names() -> List[str]:
    """
    Names accepted by :func:`preset_by_name` for the small ranks
    used on the command line.
    """
    names = ['A{}'.format(n) for n in range(1, 10)]
    names += ['D{}'.format(n) for n in range(4, 10)]
    names += ['E6', 'E7', 'E8']
    return names


def preset_by_name(name: str) -> LaurentPolynomial:
    return preset_family(parse_dynkin_type(name))


def _monomial_order(max_degree: int) -> List[Tuple[int, int]]:
    # ascending: total degree, then degree in p
    return [(d - b, b) for d in range(max_degree + 1) for b in range(d + 1)]


def milnor_basis(principal: LaurentPolynomial,
                 max_degree: int = settings.MILNOR_MAX_DEGREE) -> List[Tuple[int, int]]:
    """
    Monomial basis of the Milnor algebra of ``principal`` at the
    origin, computed modulo monomials of degree above
    ``max_degree``. Among all monomial bases it returns the one
    that is smallest for the order (total degree, degree in p):
    the monomials that are not leading terms of the truncated
    Jacobian ideal.

    :param principal: polynomial with rational coefficients and
                      nonnegative exponents
    :type principal: LaurentPolynomial
    :param max_degree: truncation degree
    :type max_degree: int
    :return: exponent pairs of the basis, ascending
    :rtype: List[Tuple[int, int]]
    """
    x, p = sympy.symbols('x p')
    expr = 0
    for (a, b), c in principal.terms.items():
        if isinstance(c, Parameter) or a < 0 or b < 0:
            raise InvalidCoefficientError('Milnor basis needs a polynomial with rational coefficients')
        expr += sympy.Rational(c.numerator, c.denominator) * x ** a * p ** b

    order = _monomial_order(max_degree)
    column = {m: i for i, m in enumerate(reversed(order))}

    rows = []
    for partial in (sympy.diff(expr, x), sympy.diff(expr, p)):
        partial = sympy.Poly(partial, x, p)
        for a, b in order:
            row = [0] * len(order)
            for (pa, pb), c in partial.terms():
                exponent = (pa + a, pb + b)
                if sum(exponent) <= max_degree:
                    row[column[exponent]] += c
            if any(row):
                rows.append(row)

    _, pivots = sympy.Matrix(rows).rref()
    leading = {len(order) - 1 - i for i in pivots}
    return [m for i, m in enumerate(order) if i not in leading]
