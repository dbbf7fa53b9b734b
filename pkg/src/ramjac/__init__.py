"""Exact singular-locus computations along V(p) over ramified valuation rings."""

from .arith import (
    FpElement,
    LocalRational,
    LocalRationals,
    NumberField,
    NumberFieldElement,
    PrimeField,
    Rationals,
    residue_mod_p,
    vp,
)
from .calculus import d_dpi, delta_p, partials_mod_pi, reduce_mod_p, reduce_mod_pi
from .criterion import (
    LocusReport,
    OmegaFreeness,
    RingPresentation,
    cross_validate,
    default_height,
    hj_singular_locus,
    is_regular_at,
    kunz_pdegree,
    omega_free_rank_check,
    singular_locus_at_p,
    unramified_presentation,
)
from .corpus import standard_corpus
from .dvr import DVRElement, EisensteinDVR
from .errors import InputError, PreconditionError, RamjacError
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    ideal_dimension,
    ideal_height,
    ideal_member,
    normal_form,
    radical_equal,
    radical_member,
    spolynomial,
)
from .jacobian import (
    FittingCheck,
    PolyMatrix,
    classical_jacobian,
    determinant,
    fitting_ideal_check,
    hj_mixed_jacobian,
    minors_ideal,
    mixed_pi_jacobian,
)
from .oracle import (
    ScanEntry,
    cotangent_matrix_at_point,
    fp_matrix_rank,
    on_special_fiber,
    oracle_is_regular_at_point,
    scan_rational_points,
)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, PolynomialRing

__version__ = "0.1.0"

__all__ = [
    "DVRElement",
    "EisensteinDVR",
    "FittingCheck",
    "FpElement",
    "GREVLEX",
    "GroebnerBasis",
    "Ideal",
    "InputError",
    "LEX",
    "LocalRational",
    "LocalRationals",
    "LocusReport",
    "MonomialOrder",
    "NumberField",
    "NumberFieldElement",
    "OmegaFreeness",
    "PolyMatrix",
    "Polynomial",
    "PolynomialRing",
    "PreconditionError",
    "PrimeField",
    "RamjacError",
    "Rationals",
    "RingPresentation",
    "ScanEntry",
    "buchberger",
    "classical_jacobian",
    "cotangent_matrix_at_point",
    "cross_validate",
    "d_dpi",
    "default_height",
    "delta_p",
    "determinant",
    "fitting_ideal_check",
    "fp_matrix_rank",
    "hj_mixed_jacobian",
    "hj_singular_locus",
    "ideal_dimension",
    "ideal_height",
    "ideal_member",
    "is_regular_at",
    "kunz_pdegree",
    "minors_ideal",
    "mixed_pi_jacobian",
    "normal_form",
    "omega_free_rank_check",
    "on_special_fiber",
    "oracle_is_regular_at_point",
    "partials_mod_pi",
    "radical_equal",
    "radical_member",
    "reduce_mod_p",
    "reduce_mod_pi",
    "residue_mod_p",
    "scan_rational_points",
    "singular_locus_at_p",
    "spolynomial",
    "standard_corpus",
    "unramified_presentation",
    "vp",
]
