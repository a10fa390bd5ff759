"""Exact checkers for finite fuzzy ordered sets and fuzzy Riesz spaces.

Everything is computed over :class:`fractions.Fraction`; grades are
compared against 1/2 exactly.
"""

from .errors import (FuzzyRieszError, InfeasibleError, InputError, OracleDisagreement,
                     PreconditionError, UnboundedError)
from .foset import FuzzyOrderMatrix, FuzzySubset, bounds, sup_inf, up_down_set, validate_fuzzy_order
from .space import GradedSpace, Vec, check_archimedean, check_compatibility, lattice_ops, order_grade
from .convergence import GeomSequence, uniform_cauchy
from .ideals import (CoordinateIdeal, SubspaceSpec, band_projection, disjoint_complement,
                     ideal_generated_by, is_solid, stabilization_index, verify_principal_projection)
from .operators import (RationalOperator, classify_operator, hom_witness_w, hom_witness_z,
                        kernel_ideal, verify_hom_preserves_cauchy, verify_image_theorems)
from .quotient import (QClass, QuotientSpace, archimedean_battery, check_projection_hom,
                       check_quotient_lattice, grade_by_correction, project, quotient_grade)
from .seqmodel import SeqTerm, eventual_grade, in_principal_ideal, nonarchimedean_demo
from .lp import LinearFeasibilityProblem, lexmin
from .extension import (SublatticeSubspace, SubspaceOperator, factorize, null_ideal,
                        order_continuity_check, theta_extension)
from .mutation import mutate

__version__ = "0.1.0"
