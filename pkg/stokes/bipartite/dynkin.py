"""
The planar bipartite graph surrounding a Dynkin diagram.

Every node of valency ``k`` is surrounded by a ``2k``-gon (a square
for nodes of valency at most two) whose every second side crosses
one edge of the diagram. Polygons of adjacent nodes share the side
crossing their common edge, corners are coloured alternately and
every black corner left with two edges gets a pendant white vertex.
"""

from collections import deque
from typing import Dict, List, Tuple

from networkx.utils import UnionFind

from stokes.bipartite.graph import BipartiteGraph
from stokes.poly.presets import DynkinType

Corner = Tuple[int, int]


def dynkin_tree(dynkin: DynkinType) -> List[List[int]]:
    """
    The diagram as a planar tree: node ``v`` lists its neighbours in
    counterclockwise order. ``A_n`` is a path, ``D_n`` and ``E_n``
    have branch node 0 with three arms of the lengths given by
    :meth:`DynkinType.arms`.

    >>> dynkin_tree(DynkinType('A', 3))
    [[1], [0, 2], [1]]
    """
    if dynkin.family == 'A':
        n = dynkin.rank
        return [[u for u in (v - 1, v + 1) if 0 <= u < n] for v in range(n)]

    adjacency = [[]]  # type: List[List[int]]
    for length in dynkin.arms():
        previous = 0
        for _ in range(length):
            adjacency.append([previous])
            adjacency[previous].append(len(adjacency) - 1)
            previous = len(adjacency) - 1
    return adjacency


def _parities(tree: List[List[int]]) -> List[int]:
    parity = [0] * len(tree)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in tree[v]:
            if u not in seen:
                seen.add(u)
                parity[u] = 1 - parity[v]
                queue.append(u)
    return parity


def dynkin_to_bipartite(dynkin: DynkinType) -> BipartiteGraph:
    """
    :param dynkin: a simply laced Dynkin type
    :type dynkin: DynkinType
    :return: the bipartite graph with white labels ``w1, w2, ...``
             (pendants last) and black labels ``b1, b2, ...``; its
             bounded faces are the polygons around the nodes
    :rtype: BipartiteGraph
    """
    tree = dynkin_tree(dynkin)
    parity = _parities(tree)
    sides = [max(len(neighbors), 2) * 2 for neighbors in tree]

    corners = UnionFind((v, j) for v, size in enumerate(sides) for j in range(size))
    for v, neighbors in enumerate(tree):
        for i, u in enumerate(neighbors):
            j = tree[u].index(v)
            corners.union((v, 2 * i), (u, 2 * j + 1))
            corners.union((v, 2 * i + 1), (u, 2 * j))

    labels = {}  # type: Dict[Corner, str]
    white, black = [], []
    for v, size in enumerate(sides):
        for j in range(size):
            root = corners[(v, j)]
            if root in labels:
                continue
            if (j + parity[v]) % 2 == 0:
                white.append('w{}'.format(len(white) + 1))
                labels[root] = white[-1]
            else:
                black.append('b{}'.format(len(black) + 1))
                labels[root] = black[-1]

    def label(v: int, j: int) -> str:
        return labels[corners[(v, j % sides[v])]]

    # the polygon of v sits counterclockwise from the next corner
    # to the previous one around each of its corners
    whites = set(white)
    wedges = {}  # type: Dict[str, Dict[str, str]]
    edges = set()
    for v, size in enumerate(sides):
        for j in range(size):
            x = label(v, j)
            wedges.setdefault(x, {})[label(v, j + 1)] = label(v, j - 1)
            y = label(v, j + 1)
            edges.add((x, y) if x in whites else (y, x))

    rotations = {}
    for x, successor in wedges.items():
        start = next(a for a in successor if a not in successor.values())
        order = [start]
        while order[-1] in successor:
            order.append(successor[order[-1]])
        rotations[x] = order

    for b in list(black):
        if len(rotations[b]) == 2:
            pendant = 'w{}'.format(len(white) + 1)
            white.append(pendant)
            rotations[b].append(pendant)
            rotations[pendant] = [b]
            edges.add((pendant, b))

    return BipartiteGraph(white, black, sorted(edges), rotations)
