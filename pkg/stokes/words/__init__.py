from stokes.words.cyclic_word import CyclicWord, minimal_rotation, canonicalize, abelianization, \
    render_word, parse_word
from stokes.words.braid import BraidMove, BraidSearch, Verdict, EquivalenceResult, permutation_image, \
    cycle_type, neighbours, braid_closure, braid_equivalent
from stokes.words.families import polygon_config_word, ngon_rotation_word
