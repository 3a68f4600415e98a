"""
Equivalence of cyclic words under the braid relations

    s_i s_{i+1} s_i  <->  s_{i+1} s_i s_{i+1}
    s_i s_j          <->  s_j s_i              (|i - j| >= 2)

and rotation, decided by a breadth first search over minimal
rotations.
"""

from collections import deque
from enum import Enum
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from sympy.combinatorics import Permutation

from stokes import settings
from stokes.errors import RankMismatchError, WordError
from stokes.logger import Logger
from stokes.words.cyclic_word import CyclicWord, minimal_rotation


def permutation_image(word: CyclicWord) -> Permutation:
    """
    Image of the word in the symmetric group, ``s_i`` acting as
    the transposition of ``i - 1`` and ``i``.
    """
    perm = Permutation(list(range(word.rank)))
    for i in word.letters:
        perm = perm * Permutation(i - 1, i, size=word.rank)
    return perm


def cycle_type(word: CyclicWord) -> Tuple[int, ...]:
    """
    Cycle lengths of the permutation image, decreasing. Rotation
    conjugates the image and braid moves do not change it, so this
    is an invariant of the cyclic braid class.

    >>> cycle_type(CyclicWord([1, 2]))
    (3,)
    """
    structure = permutation_image(word).cycle_structure
    return tuple(sorted((length for length, count in structure.items() for _ in range(count)),
                        reverse=True))


class BraidMove(NamedTuple):
    """
    One rewriting step. ``position`` indexes the minimal rotation
    of the word the move is applied to; windows wrap around.
    """
    kind: str
    position: int
    before: Tuple[int, ...]
    after: Tuple[int, ...]
    result: Tuple[int, ...]


class Verdict(Enum):
    YES = 'Yes'
    NO = 'No'
    UNKNOWN = 'Unknown'


class EquivalenceResult(NamedTuple):
    verdict: Verdict
    path: List[BraidMove]
    witness: str
    explored: int

    def to_dict(self) -> dict:
        return {
            'verdict': self.verdict.value,
            'witness': self.witness,
            'explored': self.explored,
            'path': [{'move': m.kind, 'position': m.position,
                      'before': list(m.before), 'after': list(m.after)} for m in self.path]
        }


def _replace(letters: Tuple[int, ...], position: int, window: Tuple[int, ...]) -> Tuple[int, ...]:
    out = list(letters)
    for k, letter in enumerate(window):
        out[(position + k) % len(letters)] = letter
    return tuple(out)


def neighbours(letters: Tuple[int, ...]) -> List[BraidMove]:
    """
    All words one move away from ``letters``, in canonical form.
    """
    n = len(letters)
    moves = []
    if n >= 2:
        for i in range(n if n > 2 else 1):
            x, y = letters[i], letters[(i + 1) % n]
            if abs(x - y) >= 2:
                result = minimal_rotation(_replace(letters, i, (y, x)))
                moves.append(BraidMove('commute', i, (x, y), (y, x), result))
    if n >= 3:
        for i in range(n):
            x, y, z = letters[i], letters[(i + 1) % n], letters[(i + 2) % n]
            if x == z and abs(x - y) == 1:
                result = minimal_rotation(_replace(letters, i, (y, x, y)))
                moves.append(BraidMove('braid', i, (x, y, z), (y, x, y), result))
    return moves


class BraidSearch:
    """
    Breadth first exploration of the cyclic braid class of a word.
    States are minimal rotations; every state remembers the move
    it was reached by, so paths can be read back.
    """

    def __init__(self, word: CyclicWord, node_limit: int = settings.DEFAULT_NODE_LIMIT):
        if node_limit < 1:
            raise WordError('node_limit must be positive, got {}'.format(node_limit))
        self._word = word
        self._node_limit = node_limit
        self._start = word.canonical_letters()
        self._parents = {self._start: None}  # type: Dict[Tuple[int, ...], Optional[Tuple]]
        self._complete = False
        self._logger = Logger('words').get_logger()

    @property
    def explored(self) -> int:
        return len(self._parents)

    @property
    def complete(self) -> bool:
        return self._complete

    def run(self, target: Tuple[int, ...] = None) -> bool:
        """
        Explores until ``target`` is met, the class is exhausted or
        the node limit is reached.

        :return: whether ``target`` was reached
        :rtype: bool
        """
        if target is not None and target == self._start:
            return True

        queue = deque([self._start])
        while queue:
            state = queue.popleft()
            for move in neighbours(state):
                if move.result in self._parents:
                    continue
                self._parents[move.result] = (state, move)
                if move.result == target:
                    return True
                if len(self._parents) >= self._node_limit:
                    self._logger.info('Braid search from {} stopped at {} states'
                                      .format(self._word, len(self._parents)))
                    return False
                queue.append(move.result)

        self._complete = True
        self._logger.info('Braid class of {} has {} states'.format(self._word, len(self._parents)))
        return False

    def path_to(self, target: Tuple[int, ...]) -> List[BraidMove]:
        path = []
        state = target
        while self._parents[state] is not None:
            state, move = self._parents[state]
            path.append(move)
        path.reverse()
        return path

    def closure(self) -> FrozenSet[Tuple[int, ...]]:
        if not self._complete:
            self.run()
        if not self._complete:
            raise WordError('Braid class of {} exceeds {} states'.format(self._word, self._node_limit))
        return frozenset(self._parents)


def braid_closure(word: CyclicWord, node_limit: int = settings.DEFAULT_NODE_LIMIT) -> FrozenSet[Tuple[int, ...]]:
    """
    Minimal rotations of every word reachable from ``word``.
    """
    return BraidSearch(word, node_limit).closure()


def braid_equivalent(w1: CyclicWord, w2: CyclicWord,
                     node_limit: int = settings.DEFAULT_NODE_LIMIT) -> EquivalenceResult:
    """
    Decides whether two cyclic words are related by braid moves and
    rotation.

    A ``No`` is certain: it comes from a differing length, a
    differing cycle type of the permutation images, or a closure
    that was enumerated completely. ``Unknown`` means the node
    limit was hit first.

    :param w1: first word
    :type w1: CyclicWord
    :param w2: second word
    :type w2: CyclicWord
    :param node_limit: maximal number of states to visit
    :type node_limit: int
    :return: the verdict with a move sequence from ``w1`` to
             ``w2`` when it is ``Yes``
    :rtype: EquivalenceResult
    """
    if w1.rank != w2.rank:
        raise RankMismatchError('Words have ranks {} and {}'.format(w1.rank, w2.rank))

    if w1.length != w2.length:
        return EquivalenceResult(Verdict.NO, [], 'lengths {} != {}'.format(w1.length, w2.length), 0)

    c1, c2 = cycle_type(w1), cycle_type(w2)
    if c1 != c2:
        return EquivalenceResult(Verdict.NO, [], 'cycle types {} != {}'.format(c1, c2), 0)

    target = w2.canonical_letters()
    search = BraidSearch(w1, node_limit)
    if search.run(target):
        return EquivalenceResult(Verdict.YES, search.path_to(target), '', search.explored)
    if search.complete:
        return EquivalenceResult(Verdict.NO, [],
                                 'closure of {} states exhausted'.format(search.explored),
                                 search.explored)
    return EquivalenceResult(Verdict.UNKNOWN, [], 'node limit {} reached'.format(node_limit),
                             search.explored)
