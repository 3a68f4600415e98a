"""
Words of the configuration spaces that show up as Stokes data:
polygons with marked points on their sides and rotating regular
polygons.
"""

from typing import Sequence

from stokes.errors import WordError
from stokes.words.cyclic_word import CyclicWord


def polygon_config_word(marked: Sequence[int]) -> CyclicWord:
    """
    Word of the configurations of a polygon with ``marked[i]``
    points on its ``i``-th side: one block ``s2 s1^(k+1)`` per side.

    >>> print(polygon_config_word([2, 2, 2]))
    [(s2 s1^3)^3]

    :param marked: number of marked points on each side
    :type marked: Sequence[int]
    :return: a word of rank 3
    :rtype: CyclicWord
    """
    if len(marked) < 3:
        raise WordError('A polygon needs at least 3 sides, got {}'.format(len(marked)))
    letters = []
    for k in marked:
        if k < 1:
            raise WordError('Every side carries at least one marked point, got {}'.format(k))
        letters.append(2)
        letters.extend([1] * (k + 1))
    return CyclicWord(letters, 3)


def ngon_rotation_word(n_points: int, m: int) -> CyclicWord:
    """
    Word of a regular ``n_points``-gon turning by ``m / n_points``
    of a revolution per period: ``m`` repetitions of the odd
    generators followed by the even ones.

    >>> print(ngon_rotation_word(5, 8))
    [(s1 s3 s2 s4)^8]
    """
    if n_points < 2 or m < 1:
        raise WordError('Need n_points >= 2 and m >= 1, got {} and {}'.format(n_points, m))
    odd = list(range(1, n_points, 2))
    even = list(range(2, n_points, 2))
    return CyclicWord((odd + even) * m, n_points)
