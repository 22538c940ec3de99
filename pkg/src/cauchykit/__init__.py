"""Exact Cauchy matrices and Cauchy pairs."""
from .field import GF, QQ, parse_field
from .matrix import DenseMatrix, gaussian_inverse_oracle, gaussian_solve
from .lagrange import lagrange_interpolate, solve_unit_sum_system
from .cauchy import (CauchyData, NotCauchy, StructuredCauchy, alphas, build, canonical_data,
                     displacement_residual, entry, invert, perm_equivalent, recognize,
                     shift_data, solve)
from .pair import (CauchyPair, affine_transform, associated_matrix, classify, eigenvalue_data,
                   is_equivalent, is_isomorphic, pair_from_data, verify)
from .frames import BasisTag, Frame, form_evaluate, gram, standard_basis_for_index, transition

__version__ = "0.1.0"
