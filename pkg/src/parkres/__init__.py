"""Exact combinatorics of preference-restricted parking functions.

A parking function sends n cars down a one-way street of n spots; this
package works with the restricted variant where every preference must lie
in a prescribed set of spots.  It provides the parking procedure itself,
brute-force enumeration oracles, exact closed-form counts and recurrences,
executable bijections (including a sign-reversing involution on 2-colored
lists), circular-street machinery, and a CLI that cross-checks every
formula against enumeration.

The counting hot loops run on compiled kernels when the extension built;
``parkres.BACKEND`` says which implementation this process is using.
"""

from ._backend import BACKEND
from .bijections import (
    FIXED_POINT,
    Color,
    ColoredPF,
    involution,
    is_u_parking,
    prime_to_restricted,
    restricted_to_prime,
    shift_restriction,
    to_u_parking,
    u_vector,
)
from .brute import (
    count_min_defect,
    count_nondecreasing_restricted,
    count_prime_restricted,
    count_restricted,
    enum_prime_restricted,
    enum_restricted,
    fiber_size_bruteforce,
    ones_distribution,
)
from .circular import (
    CircularState,
    Decomposition,
    RelationReport,
    circular_park,
    decompose,
    linearize,
    preferred_spots,
    verify_relation,
)
from .core import (
    EMPTY,
    ParkingResult,
    catalan_check,
    defect,
    is_parking_function,
    is_prime,
    nondecreasing,
    outcome_permutation,
    park,
)
from .formulas import (
    AbelCheck,
    abel_check,
    catalan_number,
    catalan_triangle,
    compositions,
    fiber_size_formula,
    max_run_length,
    mod_count,
    mod_count_k1,
    multinomial,
    ones_poly_alternating,
    ones_poly_subtractive,
    pf_total,
    ppf_total,
    prime_alternating,
    prime_subtractive,
    restricted_alternating,
    restricted_subtractive,
)
from .polynomial import ONE, X, IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EMPTY",
    "FIXED_POINT",
    "ONE",
    "X",
    "AbelCheck",
    "CircularState",
    "Color",
    "ColoredPF",
    "Decomposition",
    "IntPolynomial",
    "ParkingResult",
    "RelationReport",
    "abel_check",
    "catalan_check",
    "catalan_number",
    "catalan_triangle",
    "circular_park",
    "compositions",
    "count_min_defect",
    "count_nondecreasing_restricted",
    "count_prime_restricted",
    "count_restricted",
    "decompose",
    "defect",
    "enum_prime_restricted",
    "enum_restricted",
    "fiber_size_bruteforce",
    "fiber_size_formula",
    "involution",
    "is_parking_function",
    "is_prime",
    "is_u_parking",
    "linearize",
    "max_run_length",
    "mod_count",
    "mod_count_k1",
    "multinomial",
    "nondecreasing",
    "ones_distribution",
    "ones_poly_alternating",
    "ones_poly_subtractive",
    "outcome_permutation",
    "park",
    "pf_total",
    "ppf_total",
    "preferred_spots",
    "prime_alternating",
    "prime_subtractive",
    "prime_to_restricted",
    "restricted_alternating",
    "restricted_subtractive",
    "restricted_to_prime",
    "shift_restriction",
    "to_u_parking",
    "u_vector",
    "verify_relation",
]
