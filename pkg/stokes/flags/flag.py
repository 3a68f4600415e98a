"""
Complete flags, their relative position and the periodic flag
sequences built from cyclic sequences of points.
"""

from typing import List, NamedTuple, Optional, Sequence, Tuple

import sympy

from stokes.errors import FlagError
from stokes.flags.linalg import Subspace, Scalar, RationalMatrix, vector, span
from stokes.words.cyclic_word import CyclicWord

Permutation = Tuple[int, ...]


class Flag:
    """
    A complete flag ``F_1 < F_2 < ... < F_{n-1}`` in ``Q^n``.
    """

    def __init__(self, subspaces: Sequence[Subspace]):
        if len(subspaces) == 0:
            raise FlagError('A flag needs at least one subspace')
        n = subspaces[0].ambient
        if len(subspaces) != n - 1:
            raise FlagError('A complete flag in dimension {} has {} subspaces, got {}'
                            .format(n, n - 1, len(subspaces)))
        for i, s in enumerate(subspaces, start=1):
            if s.ambient != n or s.dim != i:
                raise FlagError('Subspace {} of the flag has dimension {} in ambient {}'
                                .format(i, s.dim, s.ambient))
            if i > 1 and not s.contains(subspaces[i - 2]):
                raise FlagError('Subspace {} does not contain subspace {}'.format(i, i - 1))

        self.__subspaces = tuple(subspaces)
        self.__ambient = n

    @classmethod
    def from_basis(cls, vectors: Sequence[Sequence[Scalar]]) -> 'Flag':
        """
        The flag of spans of the first ``1, 2, ..., n - 1`` vectors.
        """
        n = len(vectors)
        return cls([span(vectors[:i], n) for i in range(1, n)])

    @property
    def ambient(self) -> int:
        return self.__ambient

    @property
    def subspaces(self) -> Tuple[Subspace, ...]:
        return self.__subspaces

    def subspace(self, i: int) -> Subspace:
        """
        ``F_i`` for ``0 <= i <= n``, with ``F_0 = 0`` and
        ``F_n`` the whole space.
        """
        if i == 0:
            return Subspace.zero(self.__ambient)
        if i == self.__ambient:
            return Subspace.full(self.__ambient)
        return self.__subspaces[i - 1]

    def transform(self, m: RationalMatrix) -> 'Flag':
        return Flag([s.transform(m) for s in self.__subspaces])

    def __len__(self):
        return len(self.__subspaces)

    def __eq__(self, other):
        return isinstance(other, Flag) and self.__subspaces == other.subspaces

    def __hash__(self):
        return hash(self.__subspaces)

    def __repr__(self):
        return 'Flag(ambient={}, dims={})'.format(self.__ambient, [s.dim for s in self.__subspaces])


def relative_position(f: Flag, g: Flag) -> Permutation:
    """
    The permutation ``w`` (one-line notation, values ``1 .. n``)
    with ``#{k <= i : w(k) <= j} = dim(F_i & G_j)``.

    >>> e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    >>> relative_position(Flag.from_basis(e), Flag.from_basis(e[::-1]))
    (3, 2, 1)
    """
    if f.ambient != g.ambient:
        raise FlagError('Flags live in dimensions {} and {}'.format(f.ambient, g.ambient))
    n = f.ambient
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            fi, gj = f.subspace(i), g.subspace(j)
            table[i][j] = i + j - (fi + gj).dim

    w = [0] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if table[i][j] - table[i - 1][j] - table[i][j - 1] + table[i - 1][j - 1] == 1:
                w[i - 1] = j
    return tuple(w)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, j in enumerate(w, start=1):
        out[j - 1] = i
    return tuple(out)


def commuting_generators(w: Permutation) -> Optional[List[int]]:
    """
    The indices ``i`` with ``w = prod s_i`` for pairwise commuting
    simple transpositions, increasing; ``None`` if ``w`` is not
    such a product.

    >>> commuting_generators((2, 1, 4, 3))
    [1, 3]
    """
    generators = []
    i = 1
    n = len(w)
    while i <= n:
        if w[i - 1] == i:
            i += 1
        elif i < n and w[i - 1] == i + 1 and w[i] == i:
            generators.append(i)
            i += 2
        else:
            return None
    return generators


def _point(points: List, index: int, monodromy: Optional[RationalMatrix]):
    m = len(points)
    shift, k = divmod(index, m)
    p = sympy.Matrix(points[k])
    if shift != 0:
        if monodromy is None:
            return tuple(p)
        p = (monodromy ** shift) * p
    return tuple(p)


def _window(points, first: int, size: int, monodromy) -> Subspace:
    vectors = [_point(points, first + k, monodromy) for k in range(size)]
    s = span(vectors)
    if s.dim != size:
        raise FlagError('Points {}..{} are not in general position'.format(first, first + size - 1))
    return s


def flags_from_points(points: Sequence[Sequence[Scalar]],
                      monodromy: RationalMatrix = None) -> List[Flag]:
    """
    The ``2m`` flags of a cyclic sequence of ``m`` points of
    ``P^(n-1)``. ``F_{2i+1}`` is spanned by windows growing
    around ``p_i`` towards ``p_{i+1}`` first, ``F_{2i}`` by windows
    growing towards ``p_{i-1}`` first:

        F_{2i+1} = p_i < p_i+p_{i+1} < p_{i-1}+p_i+p_{i+1} < ...
        F_{2i}   = p_i < p_{i-1}+p_i < p_{i-1}+p_i+p_{i+1} < ...

    so that consecutive flags differ alternately in the even and in
    the odd dimensional subspaces.

    :param points: ``m >= n`` vectors of ``Q^n``
    :type points: Sequence[Sequence[Scalar]]
    :param monodromy: matrix ``M`` with ``p_{i+m} = M p_i``; indices
                      wrap around plainly when omitted
    :type monodromy: RationalMatrix
    :return: ``F_0 .. F_{2m-1}``
    :rtype: List[Flag]
    """
    points = [vector(p) for p in points]
    if len(points) == 0:
        raise FlagError('No points given')
    n = len(points[0])
    if len(points) < n:
        raise FlagError('Need at least {} points in dimension {}, got {}'.format(n, n, len(points)))

    flags = []
    for i in range(len(points)):
        even, odd = [], []
        for d in range(1, n):
            l = d // 2
            if d % 2 == 1:
                window = _window(points, i - l, d, monodromy)
                even.append(window)
                odd.append(window)
            else:
                even.append(_window(points, i - l, d, monodromy))
                odd.append(_window(points, i - l + 1, d, monodromy))
        flags.append(Flag(even))
        flags.append(Flag(odd))
    return flags


def points_from_flags(flags: Sequence[Flag]) -> List[Tuple]:
    """
    The point sequence of :func:`flags_from_points`: the lines of
    the odd flags, up to scaling.
    """
    return [flags[k].subspace(1).vectors()[0] for k in range(1, len(flags), 2)]


class FlagWord(NamedTuple):
    word: CyclicWord
    degenerate: bool


def word_from_flag_sequence(flags: Sequence[Flag], monodromy: RationalMatrix = None) -> FlagWord:
    """
    Reads the cyclic word of a periodic flag sequence: each step is
    expanded into its commuting generators in index order. The step
    closing the period compares the last flag with the image of
    the first one under ``monodromy``.

    A sequence whose steps are all trivial gives the empty word,
    flagged ``degenerate``.
    """
    if len(flags) == 0:
        raise FlagError('Empty flag sequence')
    n = flags[0].ambient
    closing = flags[0] if monodromy is None else flags[0].transform(monodromy)

    letters = []
    for k, f in enumerate(flags):
        g = flags[k + 1] if k + 1 < len(flags) else closing
        w = relative_position(f, g)
        generators = commuting_generators(w)
        if generators is None:
            raise FlagError('Flags {} and {} are in position {}, which is not a product of '
                            'commuting generators'.format(k, (k + 1) % len(flags), w))
        letters.extend(generators)

    return FlagWord(CyclicWord(letters, max(n, 2)), len(letters) == 0)
