"""Exact linear algebra on Hamel bases, algebraic duals and differential operators.

Everything is computed with exact scalars (rationals, Gaussian rationals,
prime fields) on finite-support vectors and truncated moment functionals.
"""

from .basis import (FreenessCertificate, complement, extend_to_basis, is_free,
                    rank, spans)
from .cardinals import (ALEPH0, C, Aleph, Cardinal, Finite, card_max, card_of_space,
                        card_pow, card_succ, dim_from_card, dim_of_dual,
                        example_table, parse_cardinal)
from .diffops import (DiffOp, RegularityReport, apply_poly, as_operator_on_polys,
                      dual_action, fundamental_solution, regularity_report,
                      transpose)
from .duals import (Functional, ParametricMomentFamily, box_family, delta,
                    derivative, double_dual_embed, embed_dual_via_complement,
                    eval_bracket, from_moments, indicator, inflect, poly_multiply,
                    restricted_dual_embed, schwartz_moments, translate, weak_limit)
from .errors import (DecompositionFailed, DegreeBoundViolated, Divergent,
                     HamelError, HorizonExceeded, InconsistentSystem, MixedFields,
                     NotFree, NotInjective, NotInSpan, NotSubspace,
                     OperatorSyntaxError, UnknownVariable)
from .finsupp import (FinSuppVec, basis_vector, coordinate_iso, expand, index_key,
                      inner_product, linear_combine, spectrum, zero_vector)
from .operators import (ColumnFiniteOperator, InjectivityCertificate, apply,
                        dual_apply, identity_operator, injectivity_probe, solve_dual)
from .parser import parse
from .pointdist import PointDistribution, convolve
from .poly import constant, monomial, poly_str, variable
from .scalars import GF, QI, Field, GaussianRational, I, Mod, Q, field_from_name

__version__ = "0.1.0"
