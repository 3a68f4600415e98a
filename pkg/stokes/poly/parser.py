"""
Parser for the text form of singularity symbols.

Grammar::

    polynomial := sign? term (sign term)*
    term       := factor (('*')? factor)*
    factor     := rational | parameter | ('x' | 'p') ('^' exponent)?
    rational   := digits ('/' digits)?
    parameter  := 'a' digits
    exponent   := '-'? digits | '(' '-'? digits ')'

Like terms are combined and terms that cancel are dropped.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple

from stokes.errors import PolynomialSyntaxError, EmptySupportError
from stokes.poly.polynomial import LaurentPolynomial, Parameter


class Token(NamedTuple):
    kind: str
    text: str
    position: int


_TOKEN_PATTERN = re.compile(r'''
    (?P<space>\s+)
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<parameter>a\d+)
  | (?P<variable>[xp])
  | (?P<caret>\^)
  | (?P<star>\*)
  | (?P<sign>[+-])
  | (?P<lparen>\()
  | (?P<rparen>\))
''', re.VERBOSE)


def tokenize(text: str) -> List[Token]:
    """
    Splits the input into tokens, dropping whitespace.

    >>> [t.kind for t in tokenize('2*x^3 - a1')]
    ['rational', 'star', 'variable', 'caret', 'rational', 'sign', 'parameter', 'end']
    """
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise PolynomialSyntaxError('Unexpected character {!r}'.format(text[pos]), pos)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token('end', '', pos))
    return tokens


class _Term:

    def __init__(self, position: int):
        self.position = position
        self.scale = Fraction(1)
        self.parameter = None
        self.a = 0
        self.b = 0

    def coefficient(self):
        if self.parameter is None:
            return self.scale
        return Parameter(self.parameter, self.scale)


class _Parser:

    def __init__(self, text: str):
        self._tokens = tokenize(text)
        self._index = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, kind: str) -> Token:
        if self._current.kind != kind:
            raise PolynomialSyntaxError('Expected {} but found {!r}'
                                        .format(kind, self._current.text or 'end of input'),
                                        self._current.position)
        return self._advance()

    def parse(self) -> List[_Term]:
        terms = []
        sign = Fraction(1)
        if self._current.kind == 'sign':
            sign = Fraction(-1) if self._advance().text == '-' else Fraction(1)

        while True:
            term = self._term()
            term.scale *= sign
            terms.append(term)
            if self._current.kind == 'end':
                return terms
            token = self._expect('sign')
            sign = Fraction(-1) if token.text == '-' else Fraction(1)

    def _term(self) -> _Term:
        term = _Term(self._current.position)
        self._factor(term)
        while True:
            if self._current.kind == 'star':
                self._advance()
                self._factor(term)
            elif self._current.kind in ('rational', 'parameter', 'variable'):
                self._factor(term)
            else:
                return term

    def _factor(self, term: _Term):
        token = self._current
        if token.kind == 'rational':
            self._advance()
            value = Fraction(token.text)
            if value == 0:
                term.scale = Fraction(0)
            else:
                term.scale *= value
        elif token.kind == 'parameter':
            self._advance()
            if term.parameter is not None and term.parameter != token.text:
                raise PolynomialSyntaxError('Term mixes parameters {} and {}'
                                            .format(term.parameter, token.text),
                                            token.position)
            if term.parameter == token.text:
                raise PolynomialSyntaxError('Parameter {} repeated in one term'
                                            .format(token.text), token.position)
            term.parameter = token.text
        elif token.kind == 'variable':
            self._advance()
            exponent = self._exponent() if self._current.kind == 'caret' else 1
            if token.text == 'x':
                term.a += exponent
            else:
                term.b += exponent
        else:
            raise PolynomialSyntaxError('Expected a coefficient, parameter or variable '
                                        'but found {!r}'.format(token.text or 'end of input'),
                                        token.position)

    def _exponent(self) -> int:
        self._expect('caret')
        parenthesised = self._current.kind == 'lparen'
        if parenthesised:
            self._advance()
        negative = False
        if self._current.kind == 'sign' and self._current.text == '-':
            self._advance()
            negative = True
        token = self._expect('rational')
        if '/' in token.text:
            raise PolynomialSyntaxError('Exponents must be integers', token.position)
        if parenthesised:
            self._expect('rparen')
        return -int(token.text) if negative else int(token.text)


def _combine(current, term: _Term):
    """
    Adds the coefficient of ``term`` to ``current``; returns
    ``None`` when they cancel.
    """
    incoming = term.coefficient()
    if current is None:
        return incoming
    if isinstance(current, Parameter) or isinstance(incoming, Parameter):
        if isinstance(current, Parameter) and isinstance(incoming, Parameter) \
                and current.name == incoming.name:
            scale = current.scale + incoming.scale
            return None if scale == 0 else Parameter(current.name, scale)
        raise PolynomialSyntaxError('Can not combine {} with {} on x^{} p^{}'
                                    .format(current, incoming, term.a, term.b),
                                    term.position)
    total = current + incoming
    return None if total == 0 else total


def parse_polynomial(text: str) -> LaurentPolynomial:
    """
    Parses a singularity symbol such as ``p^3+x^2*p+a1+a2*p``.

    >>> sorted(parse_polynomial('p^2+x^3+a1+a2*x').support)
    [(0, 0), (0, 2), (1, 0), (3, 0)]

    :param text: polynomial in the grammar of this module
    :type text: str
    :return: the polynomial with like terms combined
    :rtype: LaurentPolynomial
    """
    terms = _Parser(text).parse()

    combined = {}
    order = []
    for term in terms:
        if term.scale == 0:
            continue
        key = (term.a, term.b)
        if key not in combined:
            order.append(key)
        combined[key] = _combine(combined.get(key), term)

    result = {key: combined[key] for key in order if combined[key] is not None}
    if len(result) == 0:
        raise EmptySupportError('Polynomial {!r} has an empty support'.format(text))
    return LaurentPolynomial(result)
