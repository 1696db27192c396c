"""Galois groups of monic integer polynomials of degree 3-5 from factorization types mod p."""
from .disc_bound import BoundReport, build_beta_matrix, charpoly, compute_bound_chain, verify_beta_root
from .estimators import FactorTypeVectorizer, GaloisGroupClassifier
from .exceptions import (
    GaltypesError,
    GroupError,
    ModulusMismatchError,
    NotPrimeError,
    NotSquarefreeError,
    PolyParseError,
    ReducibleError,
    UnsupportedDegreeError,
)
from .fp_poly import FactorType, ModPoly, distinct_degree_type, gcd_mod, is_squarefree_mod, reduce_mod_p
from .galois_id import DeterminationReport, Verdict, determine, frequency_report, observe, scan
from .parsing import format_poly, parse_poly
from .perm_groups import (
    Perm,
    PermGroup,
    all_subgroups,
    coset_orbit_decomposition,
    cycle_type_set,
    divisions,
    expected_type_densities,
    generate_group,
    symmetric_group,
    transitive_group,
    transitive_subgroups,
)
from .tables import DETERMINATION_TABLES
from .zz_poly import IntPoly, cauchy_root_bound, discriminant, is_irreducible, resultant

__version__ = "0.1.0"
