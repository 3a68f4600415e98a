"""
Periodic words in the generators ``s_1 .. s_{n-1}``, read up to
rotation, with a text form such as ``(s2 s1^2)^4``.
"""

import re
from itertools import groupby
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from stokes.errors import WordError


def minimal_rotation(letters: Sequence[int]) -> Tuple[int, ...]:
    """
    >>> minimal_rotation([2, 1, 1])
    (1, 1, 2)
    """
    letters = tuple(letters)
    if len(letters) == 0:
        return letters
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


class CyclicWord:
    """
    A cyclic word ``[w]`` in the generators of the symmetric (or
    braid) group on ``rank`` letters. Two words are equal when
    their minimal rotations agree. The empty word is allowed: it
    is what a sweep without crossings produces.
    """

    def __init__(self, letters: Sequence[int], rank: int = None):
        """
        :param letters: generator indices, each in ``1 .. rank - 1``
        :type letters: Sequence[int]
        :param rank: dimension of the ambient flags; defaults to
                     one more than the largest letter
        :type rank: int
        """
        letters = tuple(int(i) for i in letters)
        if rank is None:
            rank = max(letters, default=1) + 1
        if rank < 2:
            raise WordError('Rank must be at least 2, got {}'.format(rank))
        for i in letters:
            if not 1 <= i < rank:
                raise WordError('Generator s{} is out of range for rank {}'.format(i, rank))

        self.__letters = letters
        self.__rank = rank
        self.__canonical = None

    @property
    def letters(self) -> Tuple[int, ...]:
        return self.__letters

    @property
    def rank(self) -> int:
        return self.__rank

    @property
    def length(self) -> int:
        return len(self.__letters)

    def canonical_letters(self) -> Tuple[int, ...]:
        if self.__canonical is None:
            self.__canonical = minimal_rotation(self.__letters)
        return self.__canonical

    def canonical(self) -> 'CyclicWord':
        return CyclicWord(self.canonical_letters(), self.__rank)

    def rotate(self, k: int) -> 'CyclicWord':
        if len(self.__letters) == 0:
            return self
        k %= len(self.__letters)
        return CyclicWord(self.__letters[k:] + self.__letters[:k], self.__rank)

    def dual(self) -> 'CyclicWord':
        """
        The word of the reflected picture, ``s_i -> s_{n-i}``.
        """
        return CyclicWord([self.__rank - i for i in self.__letters], self.__rank)

    def is_empty(self) -> bool:
        return len(self.__letters) == 0

    def __len__(self):
        return len(self.__letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.__letters)

    def __add__(self, other: 'CyclicWord') -> 'CyclicWord':
        if self.__rank != other.rank:
            raise WordError('Can not concatenate words of rank {} and {}'
                            .format(self.__rank, other.rank))
        return CyclicWord(self.__letters + other.letters, self.__rank)

    def __mul__(self, power: int) -> 'CyclicWord':
        return CyclicWord(self.__letters * power, self.__rank)

    def __eq__(self, other):
        return isinstance(other, CyclicWord) and self.__rank == other.rank and \
            self.canonical_letters() == other.canonical_letters()

    def __hash__(self):
        return hash((self.__rank, self.canonical_letters()))

    def __repr__(self):
        return 'CyclicWord([{}], rank={})'.format(render_word(self), self.__rank)

    def __str__(self):
        return '[{}]'.format(render_word(self))


def canonicalize(word: CyclicWord) -> CyclicWord:
    return word.canonical()


def abelianization(word: CyclicWord) -> Tuple[int, ...]:
    """
    Number of occurrences of each generator ``s_1 .. s_{n-1}``.

    >>> abelianization(CyclicWord([2, 1, 1] * 4))
    (8, 4)
    """
    return tuple(word.letters.count(i) for i in range(1, word.rank))


def _period(letters: Tuple[int, ...]) -> int:
    n = len(letters)
    for p in range(1, n + 1):
        if n % p == 0 and letters[p:] + letters[:p] == letters:
            return p
    return n


def _render_block(letters: Sequence[int]) -> str:
    parts = []
    for letter, run in groupby(letters):
        k = len(list(run))
        parts.append('s{}'.format(letter) if k == 1 else 's{}^{}'.format(letter, k))
    return ' '.join(parts)


def render_word(word: CyclicWord) -> str:
    """
    Text form of one period of the word, written as a power of its
    shortest block.

    >>> render_word(CyclicWord([2, 1, 1] * 4))
    '(s2 s1^2)^4'
    """
    letters = word.letters
    if len(letters) == 0:
        return ''
    p = _period(letters)
    block = _render_block(letters[:p])
    reps = len(letters) // p
    if reps == 1:
        return block
    if p == 1:
        return 's{}^{}'.format(letters[0], reps)
    return '({})^{}'.format(block, reps)


class _WordToken(NamedTuple):
    kind: str
    text: str
    position: int


_WORD_PATTERN = re.compile(r'(?P<space>[\s*]+)|(?P<generator>s_?\d+)|(?P<caret>\^)|'
                           r'(?P<number>\d+)|(?P<lparen>\()|(?P<rparen>\))')


def _tokenize_word(text: str) -> List[_WordToken]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _WORD_PATTERN.match(text, pos)
        if match is None:
            raise WordError('Unexpected character {!r} at position {}'.format(text[pos], pos))
        if match.lastgroup != 'space':
            tokens.append(_WordToken(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(_WordToken('end', '', pos))
    return tokens


class _WordParser:

    def __init__(self, text: str):
        self._tokens = _tokenize_word(text)
        self._index = 0

    def _peek(self) -> _WordToken:
        return self._tokens[self._index]

    def _take(self, kind: str) -> _WordToken:
        token = self._peek()
        if token.kind != kind:
            raise WordError('Expected {} at position {} but found {!r}'
                            .format(kind, token.position, token.text or 'end of input'))
        self._index += 1
        return token

    def parse(self) -> List[int]:
        letters = self._sequence()
        self._take('end')
        return letters

    def _sequence(self) -> List[int]:
        letters = []
        while self._peek().kind in ('generator', 'lparen'):
            letters.extend(self._atom())
        return letters

    def _atom(self) -> List[int]:
        if self._peek().kind == 'lparen':
            self._take('lparen')
            block = self._sequence()
            self._take('rparen')
        else:
            block = [int(self._take('generator').text.lstrip('s_'))]
        if self._peek().kind == 'caret':
            self._take('caret')
            block = block * int(self._take('number').text)
        return block


def parse_word(text: str, rank: int = None) -> CyclicWord:
    """
    Reads words such as ``(s2 s1^2)^4`` or ``s1 s3 s2``. Brackets
    around the whole word are optional.

    :param text: the word
    :type text: str
    :param rank: ambient rank, inferred from the letters if omitted
    :type rank: int
    :return: the cyclic word
    :rtype: CyclicWord
    """
    text = text.strip()
    if text.startswith('[') and text.endswith(']'):
        text = text[1:-1]
    return CyclicWord(_WordParser(text).parse(), rank)
