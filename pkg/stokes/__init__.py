import os
ROOT_DIR = os.environ.get('STOKES_LOG_DIR',
                          os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'logs')))


from stokes.pipeline import Analyzer, AnalysisReport, run_pipeline
from stokes import errors
from stokes import poly
from stokes import lattice
from stokes import growth
from stokes import words
from stokes import flags
from stokes import bipartite
