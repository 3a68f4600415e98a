import json
from fractions import Fraction
from typing import Dict, List, NamedTuple

from stokes import settings
from stokes.errors import PipelineError
from stokes.growth import GrowthDiagram, StokesWord, sweep_with_retry
from stokes.lattice import NewtonPolygon, newton_polygon, genus, points_at_infinity, homology_rank, \
    operator_profile, upward_sides
from stokes.logger import Logger
from stokes.poly import LaurentPolynomial, Parameter, parse_polynomial, preset_by_name, is_preset_name, \
    render_polynomial


class AnalysisReport(NamedTuple):
    """
    Everything the analysis of one polynomial produces. The homology
    rank is ``2 genus + points at infinity - 1`` and the word has as
    many letters as the diagram has crossings.
    """
    source: str
    polynomial: str
    swapped: bool
    polygon: NewtonPolygon
    genus: int
    points_at_infinity: int
    homology_rank: int
    order: int
    trivial_local_system: bool
    upward_sides: int
    diagram: GrowthDiagram
    stokes: StokesWord
    parameters: Dict[str, Fraction]
    seed: int
    resolution: int

    @property
    def speeds(self) -> List[Fraction]:
        return self.diagram.speeds()

    def to_dict(self) -> dict:
        return {
            'input': self.source,
            'polynomial': self.polynomial,
            'swapped': self.swapped,
            'polygon': self.polygon.to_dict(),
            'genus': self.genus,
            'points_at_infinity': self.points_at_infinity,
            'homology_rank': self.homology_rank,
            'operator': {'order': self.order, 'trivial_local_system': self.trivial_local_system},
            'upward_sides': self.upward_sides,
            'speeds': [str(s) for s in self.speeds],
            'growth': self.diagram.to_dict(),
            'crossings': int(self.diagram.crossing_count()),
            'word': self.stokes.to_dict(),
            'parameters': {name: str(value) for name, value in self.parameters.items()},
            'seed': self.seed,
            'resolution': self.resolution,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


class Analyzer:
    """
    Runs the chain polynomial -> Newton polygon -> growth diagram ->
    Stokes word on a polynomial given as text or by the name of a
    Dynkin type, whose versal family is used.
    """

    def __init__(self, source: str,
                 seed: int = settings.DEFAULT_SEED,
                 resolution: int = settings.DEFAULT_RESOLUTION,
                 swap: bool = False,
                 preset: bool = None):
        """
        :param source: a polynomial in ``x`` and ``p`` or a preset
                       name such as ``E8``
        :type source: str
        :param seed: seed of the generic choices
        :type seed: int
        :param resolution: grid steps of the rotation sweep
        :type resolution: int
        :param swap: exchange ``x`` and ``p`` before the analysis
        :type swap: bool
        :param preset: read ``source`` as a Dynkin type (True) or as a
                       polynomial (False); by default a name with an
                       uppercase family letter is a preset
        :type preset: bool
        """
        if not isinstance(source, str) or len(source.strip()) == 0:
            raise PipelineError('Nothing to analyze')
        if seed < 0:
            raise PipelineError('Seed must be nonnegative, got {}'.format(seed))
        if resolution < 4:
            raise PipelineError('Resolution must be at least 4, got {}'.format(resolution))

        self._source = source.strip()
        self._seed = seed
        self._resolution = resolution
        self._swap = swap
        self._logger = Logger('pipeline').get_logger()

        self._readers = {
            'preset'    : lambda: preset_by_name(self._source),
            'polynomial': lambda: parse_polynomial(self._source)
        }
        if preset is None:
            preset = is_preset_name(self._source)
        self._kind = 'preset' if preset else 'polynomial'

    def polynomial(self) -> LaurentPolynomial:
        poly = self._readers[self._kind]()
        return poly.swap_variables() if self._swap else poly

    def analyze(self) -> AnalysisReport:
        poly = self.polynomial()
        self._logger.info('Analyzing {} {} (swap={})'.format(self._kind, self._source, self._swap))

        polygon = newton_polygon(poly)
        profile = operator_profile(poly)
        diagram, stokes = sweep_with_retry(poly, self._seed, self._resolution)
        if diagram.seed != self._seed:
            self._logger.info('Seed {} was not generic, used {}'.format(self._seed, diagram.seed))

        report = AnalysisReport(
            source=self._source,
            polynomial=render_polynomial(poly),
            swapped=self._swap,
            polygon=polygon,
            genus=genus(polygon),
            points_at_infinity=points_at_infinity(polygon),
            homology_rank=homology_rank(polygon),
            order=profile.order,
            trivial_local_system=profile.trivial_local_system,
            upward_sides=len(upward_sides(polygon)),
            diagram=diagram,
            stokes=stokes,
            parameters=parameter_values(poly, diagram.seed),
            seed=diagram.seed,
            resolution=self._resolution
        )
        self._logger.info('Word of {}: {}'.format(self._source, stokes.word))
        return report


def parameter_values(poly: LaurentPolynomial, seed: int) -> Dict[str, Fraction]:
    """
    The generic values given to the parameters of ``poly`` by
    :meth:`LaurentPolynomial.instantiate`.
    """
    numeric = poly.instantiate(seed)
    values = {}
    for exponent, c in poly.terms.items():
        if isinstance(c, Parameter):
            values[c.name] = numeric[exponent] / c.scale
    return values


def run_pipeline(source: str, seed: int = settings.DEFAULT_SEED,
                 resolution: int = settings.DEFAULT_RESOLUTION, swap: bool = False,
                 preset: bool = None) -> AnalysisReport:
    return Analyzer(source, seed, resolution, swap, preset).analyze()
