"""
Extraction of the Stokes word of a growth diagram: the points are
projected to the real axis while ``x`` makes one revolution, and
every swap of two neighbouring projections emits a generator.
"""

from typing import List, NamedTuple, Tuple, Union

import numpy as np

from stokes import settings
from stokes.errors import DegenerateSweepError, GrowthDiagramError, InsufficientResolutionError, \
    ResolutionInstabilityError
from stokes.growth.diagram import GrowthDiagram, build_growth_diagram, Coefficients
from stokes.lattice.polygon import NewtonPolygon, newton_polygon, upward_sides
from stokes.logger import Logger
from stokes.poly.polynomial import LaurentPolynomial
from stokes.words.cyclic_word import CyclicWord


class SweepEvent(NamedTuple):
    time: float
    position: int

    @property
    def generator(self) -> int:
        return self.position + 1


class StokesWord(NamedTuple):
    """
    Result of a sweep. ``letters`` is the word in the order it was
    read starting from ``t = 0``; ``word`` is its canonical form.
    """
    word: CyclicWord
    dual: CyclicWord
    letters: Tuple[int, ...]
    events: Tuple[SweepEvent, ...]
    resolution: int

    def to_dict(self) -> dict:
        return {'word': list(self.word.letters), 'dual': list(self.dual.canonical_letters()),
                'text': str(self.word), 'dual_text': str(self.dual.canonical()),
                'resolution': self.resolution}


def _adjacent_swaps(before: np.ndarray, after: np.ndarray) -> Union[List[int], None]:
    """
    Positions ``i`` such that ``after`` is ``before`` with the
    entries at ``i, i + 1`` exchanged, for pairwise disjoint swaps;
    ``None`` if ``after`` is not of that form.
    """
    changed = np.nonzero(before != after)[0]
    swaps = []
    k = 0
    while k < len(changed):
        i = changed[k]
        if k + 1 >= len(changed) or changed[k + 1] != i + 1:
            return None
        if before[i] != after[i + 1] or before[i + 1] != after[i]:
            return None
        swaps.append(int(i))
        k += 2
    return swaps


class RotationSweep:
    """
    Samples the real projections on a uniform grid of
    ``resolution`` steps over one period and refines every change
    of order by bisection until it is a single adjacent swap.
    """

    def __init__(self, diagram: GrowthDiagram, resolution: int = settings.DEFAULT_RESOLUTION):
        """
        :param diagram: the growth diagram to sweep
        :type diagram: GrowthDiagram
        :param resolution: number of grid steps per period
        :type resolution: int
        """
        bound = max(4, 4 * int(diagram.crossing_count()))
        if resolution < bound:
            raise InsufficientResolutionError('Resolution {} is below {}, four steps per crossing'
                                              .format(resolution, bound))
        self._diagram = diagram
        self._resolution = resolution
        self._logger = Logger('growth').get_logger()

    def _order(self, t: float) -> np.ndarray:
        return np.argsort(self._diagram.projections(t)[0], kind='stable')

    def _crossing_time(self, t0: float, t1: float, j: int, k: int) -> float:
        # x_j < x_k at t0 and x_j > x_k at t1
        while t1 - t0 > settings.TIME_TOLERANCE:
            mid = (t0 + t1) / 2
            x = self._diagram.projections(mid)[0]
            if x[j] < x[k]:
                t0 = mid
            else:
                t1 = mid
        return (t0 + t1) / 2

    def _refine(self, t0: float, t1: float, before: np.ndarray, after: np.ndarray) -> List[SweepEvent]:
        if np.array_equal(before, after):
            return []

        swaps = _adjacent_swaps(before, after)
        if swaps is not None and len(swaps) == 1:
            i = swaps[0]
            t = self._crossing_time(t0, t1, before[i], before[i + 1])
            return [SweepEvent(t, i)]

        if t1 - t0 < settings.TIME_TOLERANCE:
            if swaps is None:
                raise DegenerateSweepError('Projections {} -> {} do not swap independently near t={:.12f}'
                                           .format(before.tolist(), after.tolist(), t0))
            self._logger.debug('Simultaneous swaps {} at t={:.12f}'.format(swaps, t0))
            return [SweepEvent(t0, i) for i in swaps]

        mid = (t0 + t1) / 2
        middle = self._order(mid)
        return self._refine(t0, mid, before, middle) + self._refine(mid, t1, middle, after)

    def _cluster(self, events: List[SweepEvent]) -> List[SweepEvent]:
        """
        Events closer than the cluster tolerance are one simultaneous
        event; their swaps must commute and are put in index order.
        """
        out = []
        group = []
        for event in events:
            if group and event.time - group[-1].time > settings.CLUSTER_TOLERANCE:
                out.extend(self._close_group(group))
                group = []
            group.append(event)
        out.extend(self._close_group(group))
        return out

    def _close_group(self, group: List[SweepEvent]) -> List[SweepEvent]:
        positions = sorted(e.position for e in group)
        for i, j in zip(positions, positions[1:]):
            if j - i < 2:
                raise DegenerateSweepError('Non commuting swaps {} at t={:.12f}'
                                           .format(positions, group[0].time))
        return sorted(group, key=lambda e: e.position)

    def events(self) -> List[SweepEvent]:
        times = np.linspace(0.0, 1.0, self._resolution + 1)
        orders = np.argsort(self._diagram.projections(times), axis=1, kind='stable')

        events = []
        for k in range(self._resolution):
            if not np.array_equal(orders[k], orders[k + 1]):
                events.extend(self._refine(times[k], times[k + 1], orders[k], orders[k + 1]))
        return self._cluster(events)

    def run(self) -> StokesWord:
        events = self.events()
        letters = tuple(e.generator for e in events)
        rank = max(self._diagram.n, 2)
        word = CyclicWord(letters, rank)

        expected = self._diagram.crossing_count()
        if expected != len(letters):
            raise DegenerateSweepError('Sweep found {} swaps but the diagram has {} crossings'
                                       .format(len(letters), expected))

        self._logger.info('Sweep at resolution {} read {} from {} points'
                          .format(self._resolution, word.canonical(), self._diagram.n))
        return StokesWord(word.canonical(), word.dual().canonical(), letters, tuple(events),
                          self._resolution)


def extract_stokes_word(diagram: GrowthDiagram, resolution: int = settings.DEFAULT_RESOLUTION,
                        check_stability: bool = True) -> StokesWord:
    """
    Stokes word of one period of the growth diagram. Projections
    are ordered ascending and a swap at positions ``i, i + 1``
    (counted from 1) emits ``s_i``.

    :param diagram: the growth diagram
    :type diagram: GrowthDiagram
    :param resolution: number of grid steps per period
    :type resolution: int
    :param check_stability: also sweep at twice the resolution and
                            require the same word
    :type check_stability: bool
    :return: canonical word, its dual and the events
    :rtype: StokesWord
    """
    result = RotationSweep(diagram, resolution).run()
    if check_stability:
        finer = RotationSweep(diagram, 2 * resolution).run()
        if finer.word != result.word:
            raise ResolutionInstabilityError('Word {} at resolution {} becomes {} at {}'
                                             .format(result.word, resolution, finer.word,
                                                     2 * resolution))
    return result


def sweep_with_retry(source: Union[LaurentPolynomial, NewtonPolygon],
                     seed: int = settings.DEFAULT_SEED,
                     resolution: int = settings.DEFAULT_RESOLUTION,
                     retries: int = settings.RETRY_SEEDS) -> Tuple[GrowthDiagram, StokesWord]:
    """
    Builds the growth diagram and sweeps it, moving on to the next
    seed when the diagram turns out not to be generic.

    :return: the diagram that was swept and its word
    :rtype: Tuple[GrowthDiagram, StokesWord]
    """
    coefficients = source if isinstance(source, LaurentPolynomial) else None  # type: Coefficients
    polygon = newton_polygon(source) if isinstance(source, LaurentPolynomial) else source
    if len(upward_sides(polygon)) == 0:
        raise GrowthDiagramError('Newton polygon {} has no upward sides'.format(polygon))

    logger = Logger('growth').get_logger()
    error = None
    for attempt in range(retries):
        current = seed + attempt
        try:
            diagram = build_growth_diagram(polygon, current, coefficients)
            return diagram, extract_stokes_word(diagram, resolution)
        except (GrowthDiagramError, DegenerateSweepError) as e:
            logger.info('Seed {} is not generic: {}'.format(current, e))
            error = e
    raise error
