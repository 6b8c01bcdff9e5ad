"""Exact computations with Catalan elements in braided q-shuffle algebras."""

from .catalan import (
    Flank,
    NotCatalanError,
    catalan_coeff,
    catalan_coeff_via_form,
    catalan_element,
    catalan_flank,
    catalan_y,
    terwilliger_coeff,
    x_catalan,
    x_catalan_y,
)
from .freealg import FreeElement, GradedComponent, fe_bilinear_form, fe_concat_mul, fe_grade_project, fe_zeta
from .laurent import LaurentPoly, NonDivisibleError, lp_exact_div, q_brace, q_bracket
from .pbw import (
    RootKind,
    RootVectorSet,
    beck_from_damiani,
    damiani_from_beck,
    damiani_generators,
    damiani_imag_alt,
    partitions_weighted,
    shuffle_exp_truncated,
    theorem1_closed_form,
    theorem2_closed_form,
)
from .pretty import format_element
from .shuffle import ADMISSIBLE, SUPER, Braiding, BraidingTable, make_braiding, shuffle_elems, shuffle_power, shuffle_words
from .verify import IdentityCase, VerifyReport, run_identity, run_suite
from .words import WordCapError, enumerate_catalan, is_balanced, is_catalan, reverse_swap

__version__ = "0.1.0"
