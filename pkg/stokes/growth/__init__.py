from stokes.growth.diagram import GrowthPoint, GrowthDiagram, build_growth_diagram, edge_polynomial, \
    edge_roots, dominant_radius
from stokes.growth.sweep import SweepEvent, StokesWord, RotationSweep, extract_stokes_word, \
    sweep_with_retry
from stokes.growth.render import render_polygon_svg, render_growth_svg
