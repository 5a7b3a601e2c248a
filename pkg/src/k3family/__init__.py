"""Exact computer algebra for a weighted elliptic K3 family.

The library reconstructs the computational skeleton of the family

    f = z^2 + y^3 + g2(x,w;t) y + g3(x,w;t)   in  P(6,14,21,1) x (A^11 - 0),

including its discriminant k(t) (weighted degree 1092), the resultant r(t)
of g2 and g3 (degree 196), the factorization k = r^3 * Delta_T (degree 504),
Kodaira fiber classification, the non-RDP locus parametrization, and the
T_{2,3,7} lattice invariants.  Everything is exact: arbitrary-precision
integers, rationals, and 61-bit prime fields; no floating point.
"""

__version__ = "0.1.0"

from .domains import DEFAULT_PRIME, GF, QQ, ZZ, DomainError
from .poly import ContextError, MultiPoly, NotDivisibleError, PolyRing
from .rng import Stream
from .grading import WeightVector, is_homogeneous, numeric_degree_probe, weighted_degree
from .elimination import discriminant, resultant, sylvester, vanishing_order
from .family import (
    AMBIENT,
    PARAM_NAMES,
    PARAM_WEIGHTS,
    PARAMETER,
    FamilyPoint,
    build_family,
    build_h,
    compute_k,
    compute_r,
    delta_T_on_restriction,
    detect_nonrdp,
    nonrdp_param,
    random_point,
    slice_point,
    symbolic_point,
)
from .kodaira import OrderTriple, classify, scan_point
from .lattice import (
    DynkinDiagram,
    GramMatrix,
    e8_diagram,
    gram_from_diagram,
    lattice_invariants,
    t237_diagram,
)
from .checks import (
    CheckSpec,
    UnknownCheckError,
    VerificationReport,
    default_specs,
    degree_ledger,
    list_checks,
    run_checks,
)

__all__ = [
    "AMBIENT",
    "CheckSpec",
    "ContextError",
    "DEFAULT_PRIME",
    "DomainError",
    "DynkinDiagram",
    "FamilyPoint",
    "GF",
    "GramMatrix",
    "MultiPoly",
    "NotDivisibleError",
    "OrderTriple",
    "PARAMETER",
    "PARAM_NAMES",
    "PARAM_WEIGHTS",
    "PolyRing",
    "QQ",
    "Stream",
    "UnknownCheckError",
    "VerificationReport",
    "WeightVector",
    "ZZ",
    "__version__",
    "build_family",
    "build_h",
    "classify",
    "compute_k",
    "compute_r",
    "default_specs",
    "degree_ledger",
    "delta_T_on_restriction",
    "detect_nonrdp",
    "discriminant",
    "e8_diagram",
    "gram_from_diagram",
    "is_homogeneous",
    "lattice_invariants",
    "list_checks",
    "nonrdp_param",
    "numeric_degree_probe",
    "random_point",
    "resultant",
    "run_checks",
    "scan_point",
    "slice_point",
    "symbolic_point",
    "sylvester",
    "t237_diagram",
    "vanishing_order",
    "weighted_degree",
]
