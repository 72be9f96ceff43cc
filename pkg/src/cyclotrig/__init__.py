"""Exact verification and discovery of trigonometric identities such as
``tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)`` using cyclotomic field arithmetic."""

from .exact import CycloElem, Rational, cyclotomic_polynomial, zeta
from .gauss import SurdTarget, gauss_closed_form, gauss_sum, quadratic_residues, sqrt_embed
from .trig import Kind, TrigTerm, canonicalize_term, cos_embed, i_sin_embed, i_tan_embed
from .verify import Identity, VerifyResult, resolve_sign, verify
from .reduction import cos_ap_sum, family_eleven, family_nine, square_reduce
from .discover import DiscoveryConfig, DiscoveryReport, discover, residue_construct
from .expr import lower, parse, parse_identity, render_identity

__version__ = "0.1.0"
