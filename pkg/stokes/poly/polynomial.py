import random
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Tuple, Union, FrozenSet, List

from stokes import settings
from stokes.errors import EmptySupportError, InvalidCoefficientError

Exponent = Tuple[int, int]


class Parameter:
    """
    A named deformation parameter, treated as a generic
    nonzero number. A parameter can carry a rational scale,
    so that ``-a2`` and ``3/2*a2`` are representable.
    """

    def __init__(self, name: str, scale: Fraction = Fraction(1)):
        """
        :param name: identifier such as ``a3``
        :type name: str
        :param scale: nonzero rational multiplier
        :type scale: Fraction
        """
        if scale == 0:
            raise InvalidCoefficientError('Parameter {} can not have a zero scale'.format(name))
        self.__name = name
        self.__scale = Fraction(scale)

    @property
    def name(self) -> str:
        return self.__name

    @property
    def scale(self) -> Fraction:
        return self.__scale

    def scaled(self, factor: Fraction) -> 'Parameter':
        return Parameter(self.__name, self.__scale * factor)

    def __eq__(self, other):
        return isinstance(other, Parameter) and \
            self.__name == other.name and self.__scale == other.scale

    def __hash__(self):
        return hash((self.__name, self.__scale))

    def __repr__(self):
        return 'Parameter({!r}, {!r})'.format(self.__name, self.__scale)

    def __str__(self):
        if self.__scale == 1:
            return self.__name
        if self.__scale == -1:
            return '-{}'.format(self.__name)
        return '{}*{}'.format(self.__scale, self.__name)


Coefficient = Union[Fraction, Parameter]


class LaurentPolynomial:
    """
    A bivariate Laurent polynomial in ``x`` and ``p``, stored as a
    map from exponent pairs ``(a, b)`` (the term ``x^a p^b``) to a
    coefficient that is either a nonzero rational or a
    :class:`Parameter`. Instances are immutable.
    """

    def __init__(self, terms: Mapping[Exponent, Coefficient]):
        """
        :param terms: exponent pair to nonzero coefficient
        :type terms: Mapping[Tuple[int, int], Coefficient]
        """
        clean = {}
        for (a, b), c in terms.items():
            if not isinstance(c, Parameter):
                c = Fraction(c)
                if c == 0:
                    raise InvalidCoefficientError('Coefficient of x^{} p^{} is zero'.format(a, b))
            clean[(int(a), int(b))] = c

        if len(clean) == 0:
            raise EmptySupportError('Polynomial has an empty support')

        self.__terms = MappingProxyType(clean)

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return self.__terms

    @property
    def support(self) -> FrozenSet[Exponent]:
        return frozenset(self.__terms.keys())

    @property
    def parameters(self) -> List[str]:
        names = {c.name for c in self.__terms.values() if isinstance(c, Parameter)}
        return sorted(names, key=_parameter_key)

    def coefficient(self, a: int, b: int):
        """
        :return: the coefficient of ``x^a p^b``, or ``0``
                 if the monomial is not in the support.
        """
        return self.__terms.get((a, b), Fraction(0))

    def is_parameter(self, exponent: Exponent) -> bool:
        return isinstance(self.__terms.get(exponent), Parameter)

    def instantiate(self, seed: int) -> Dict[Exponent, Fraction]:
        """
        Replaces every parameter by a generic positive rational
        drawn from a generator seeded with ``seed``. The same
        parameter name always receives the same value.

        :param seed: seed of the random generator
        :type seed: int
        :return: exponent pair to rational value
        :rtype: Dict[Tuple[int, int], Fraction]
        """
        rng = random.Random(seed)
        bound = settings.PARAMETER_BOUND
        values = {}
        for name in self.parameters:
            values[name] = Fraction(rng.randint(1, bound), rng.randint(1, bound))

        numeric = {}
        for exponent, c in self.__terms.items():
            if isinstance(c, Parameter):
                numeric[exponent] = c.scale * values[c.name]
            else:
                numeric[exponent] = c
        return numeric

    def swap_variables(self) -> 'LaurentPolynomial':
        return swap_variables(self)

    def degree_in_p(self) -> int:
        return max(b for _, b in self.__terms)

    def __len__(self):
        return len(self.__terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return False
        return dict(self.__terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.__terms.items()))

    def __repr__(self):
        return 'LaurentPolynomial({!r})'.format(str(self))

    def __str__(self):
        return render_polynomial(self)


def swap_variables(poly: LaurentPolynomial) -> LaurentPolynomial:
    """
    Interchanges ``x`` and ``p``: the support is transposed,
    ``(a, b) -> (b, a)``, and coefficients are kept.

    >>> from stokes.poly.parser import parse_polynomial
    >>> print(swap_variables(parse_polynomial('p^2+x^6')))
    p^6+x^2
    """
    return LaurentPolynomial({(b, a): c for (a, b), c in poly.terms.items()})


def _parameter_key(name: str):
    digits = name.lstrip('abcdefghijklmnopqrstuvwxyz')
    return (name[:len(name) - len(digits)], int(digits) if digits else 0)


def _monomial(a: int, b: int) -> str:
    factors = []
    for var, k in (('x', a), ('p', b)):
        if k == 1:
            factors.append(var)
        elif k != 0:
            factors.append('{}^{}'.format(var, k))
    return '*'.join(factors)


def _render_term(a: int, b: int, c: Coefficient) -> Tuple[bool, str]:
    monomial = _monomial(a, b)
    if isinstance(c, Parameter):
        negative = c.scale < 0
        magnitude = abs(c.scale)
        head = c.name if magnitude == 1 else '{}*{}'.format(magnitude, c.name)
    else:
        negative = c < 0
        magnitude = abs(c)
        if magnitude == 1 and monomial:
            head = ''
        else:
            head = str(magnitude)

    body = '*'.join(part for part in (head, monomial) if part)
    return negative, body


def render_polynomial(poly: LaurentPolynomial) -> str:
    """
    Canonical text form: terms sorted by ``(b, a)`` descending,
    unit coefficients omitted, parameters written as ``aK``.

    :param poly: polynomial to render
    :type poly: LaurentPolynomial
    :return: text accepted by :func:`parse_polynomial`
    :rtype: str
    """
    ordered = sorted(poly.terms.items(), key=lambda t: (t[0][1], t[0][0]), reverse=True)
    out = []
    for i, ((a, b), c) in enumerate(ordered):
        negative, body = _render_term(a, b, c)
        if i == 0:
            out.append('-' + body if negative else body)
        else:
            out.append(('-' if negative else '+') + body)
    return ''.join(out)
