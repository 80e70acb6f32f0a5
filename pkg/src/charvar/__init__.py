"""charvar: presentations of SL2(C) character-variety coordinate rings.

From a finite presentation of a group, compute generators (trace
coordinates) and defining relations of the coordinate ring of its
SL2(C) character variety, with exact rational arithmetic, Groebner-basis
post-processing, and numerical verification.
"""

from .words import FreeWord, DegreeVector, parse_word, invert, free_reduce, concat, cyclic_min, degree
from .polynomials import (
    TraceVariable,
    Monomial,
    TracePolynomial,
    MonomialOrder,
    GREVLEX,
    LEX,
    tvar,
    primitive_part,
    evaluate,
    render,
)
from .traces import reduce_trace, MatrixExpr, trace_of_expr, expr_mul, traceless, s3
from .relations import (
    GroupPresentation,
    CharVarietyPresentation,
    generators,
    type1_relations,
    type2_relations,
    free_relations,
    cutout_relations,
    full_presentation,
    psl2_generators,
)
from .groebner import (
    PolynomialIdeal,
    GroebnerBasis,
    GroebnerBudgetError,
    buchberger,
    normal_form,
    radical_member,
    radical_equal,
)
from .numeric import (
    SL2Matrix,
    RepresentationPoint,
    random_sl2,
    random_point,
    eval_word,
    assignment_of,
    check_vanishing,
    jacobian_independence,
)
from .cli import parse_presentation, parse_snappy, export_ideal

__version__ = "0.1.0"
