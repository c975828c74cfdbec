"""Exact computer algebra for Hopf quasigroups and multiplier Hopf coquasigroups."""

from .errors import (BadShape, InconsistentTau, NoIdentity, NoIntegral, NotAssociative,
                     NotDiscreteType, NotFaithful, NotIntegral, NotIP, NotLatinSquare,
                     OracleInconsistent, ParseError, QHopfError, SampleRequired)
from .hopf import (FinDimHopfQuasigroup, Functional, dual_to_mhc, group_algebra, integral_space,
                   verify_hopf_quasigroup)
from .linalg import FinSupp, Matrix, Tensor3, kernel_basis, rank, solve
from .mhc import (DiscreteMHC, FinDimMHC, Multiplier, cointegral, function_algebra, integrals,
                  local_unit, modular_data, verify_integral_identities, verify_mhc,
                  verify_modular_properties)
from .duality import DualFunctional, IntegralDual, gamma_hq, gamma_mhc, integral_dual, verify_dual
from .quasigroup import (FiniteLoop, OracleQuasigroup, chein_double, check_ip, cyclic_group,
                         from_cayley_table, integer_oracle, infinite_dihedral_oracle, load_table,
                         symmetric_group)

__version__ = "0.1.0"
