"""Artin-Mazur zeta functions of endomorphisms of the torus (F((1/t))/F[t])^d.

The package computes fixed-point counts N_k both by determinant and from
eigenvalue data, classifies the zeta function as algebraic (with an exact
closed form) or transcendental (natural boundary on |z| = 1/r(A)), and
ships exact Hankel/Kronecker/recurrence diagnostics for power series with
controlled denominators.
"""

from .errors import *  # noqa: F401,F403
from .funcfield import (AbsVal, BiPoly, PolyMatrix, TPoly, abs_value, bipoly_shift, charpoly,
                        fixed_point_count_snf, mat_det, mat_pow, smith_normal_form)
from .gfq import (FFElem, FFPoly, FieldDesc, ff_factor, is_irreducible, make_field,
                  order_of_root, poly_gcd, squarefree_part)
from .kernels import BACKEND
from .newton import (NewtonPolygon, ValuationSpectrum, newton_polygon, residual_polynomial,
                     root_valuations, unit_residue_valuations)
from .zeta import (Algebraic, ClosedForm, Nk, NkSequence, SpectralData, Transcendental,
                   ZetaSeries, classify, closed_form, closed_form_series,
                   dichotomy_coefficients, nk_formula, nk_oracle, nk_sequence,
                   spectral_data, zeta_series)

__version__ = "0.1.0"
