from stokes.poly.polynomial import Parameter, LaurentPolynomial, swap_variables, render_polynomial
from stokes.poly.parser import Token, tokenize, parse_polynomial
from stokes.poly.presets import DynkinType, parse_dynkin_type, preset_family, preset_by_name, \
    preset_names, is_preset_name, principal_part, milnor_basis
