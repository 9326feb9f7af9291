"""Exact commutative algebra over Q[x1..xn].

The package computes with ideals and cyclic modules over rational
polynomial rings: Groebner bases with budgets, monomial prime structure
(associated primes, irreducible decomposition, radicals), Stanley-Reisner
depth and cohomological dimension, Koszul grade and regular sequences,
linkage of ideals over cyclic modules, attached primes of top local
cohomology, and a randomized batch verifier for a small catalog of
structural claims about all of the above.  Everything is exact; nothing
floats.
"""

from .groebner import (
    BudgetExceeded,
    Ideal,
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    is_proper,
    radical_member,
    reduced_gb,
    saturate,
    set_limits,
)
from .invariants import (
    Verdict,
    ass_formal_zeroth,
    assh,
    att_top,
    att_top_via_cd,
    height_in_module,
    is_equidimensional,
    module_ass_primes,
)
from .linkage import (
    GenParams,
    LinkageCertificate,
    LinkageError,
    check_linked,
    link_of,
    minimal_primes_in_core_ass,
    random_linked_pairs,
    support_identity,
)
from .modules import (
    CyclicModule,
    FPModule,
    ass_member,
    ext1_selfdual,
    hom_cyclic,
    is_regular_sequence,
    koszul_grade,
    maximal_ideal,
    module_ass,
)
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    PrimeSet,
    as_monomial,
    associated_primes,
    irreducible_decomposition,
    min_assh_dim,
    mono_radical,
    polarize,
)
from .ring import ParseError, Polynomial, RingCtx, RingError, parse_poly, ring
from .session import SessionFile, parse_session, parse_session_text, render_session
from .simplicial import (
    SimplicialComplex,
    cd_squarefree,
    complex_of,
    depth_monomial,
    dim_monomial,
    reduced_cohomology,
)
from .theorems import CLAIMS, InstanceParams, run_claim

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CLAIMS",
    "CyclicModule",
    "FPModule",
    "GenParams",
    "Ideal",
    "InstanceParams",
    "LinkageCertificate",
    "LinkageError",
    "MonomialIdeal",
    "MonomialPrime",
    "ParseError",
    "Polynomial",
    "PrimeSet",
    "RingCtx",
    "RingError",
    "SessionFile",
    "SimplicialComplex",
    "Verdict",
    "as_monomial",
    "ass_formal_zeroth",
    "ass_member",
    "assh",
    "associated_primes",
    "att_top",
    "att_top_via_cd",
    "cd_squarefree",
    "check_linked",
    "complex_of",
    "depth_monomial",
    "dim_monomial",
    "eliminate",
    "ext1_selfdual",
    "height_in_module",
    "hom_cyclic",
    "ideal_contains",
    "ideal_equal",
    "ideal_intersect",
    "ideal_member",
    "ideal_product",
    "ideal_quotient",
    "ideal_sum",
    "irreducible_decomposition",
    "is_equidimensional",
    "is_proper",
    "is_regular_sequence",
    "koszul_grade",
    "link_of",
    "maximal_ideal",
    "min_assh_dim",
    "minimal_primes_in_core_ass",
    "module_ass",
    "module_ass_primes",
    "mono_radical",
    "parse_poly",
    "parse_session",
    "parse_session_text",
    "polarize",
    "radical_member",
    "random_linked_pairs",
    "reduced_cohomology",
    "reduced_gb",
    "render_session",
    "ring",
    "run_claim",
    "saturate",
    "set_limits",
    "support_identity",
]
