"""Prime-theoretic invariants of local cohomology for cyclic modules.

Attached primes of the top local cohomology of M = R/J along an ideal a, and
associated primes of the zeroth formal local cohomology, are computed through
their characterizations over the associated primes of M; no cohomology module
is ever materialized.  Everything is taken at the ideal generated by the
variables, which plays the role of the maximal ideal.

These sets are only enumerable here when J is monomial (so that Ass M
consists of monomial primes); the functions refuse other inputs rather than
guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import Ideal, ideal_sum, is_proper, radical_member
from .modules import CyclicModule
from .monomial import (
    ImproperIdealError,
    MonomialIdeal,
    MonomialPrime,
    PrimeSet,
    as_monomial,
    associated_primes,
    min_assh_dim,
    mono_radical,
    mono_sum,
)
from .ring import Polynomial, RingError

GRADED_NOTE = (
    "attached and associated sets are read off prime-theoretic"
    " characterizations at the ideal of variables; no cohomology module is"
    " materialized"
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one claim on one instance (or one batch).

    status is one of pass / fail / skip / inconclusive; `holds` is None
    whenever the claim was not actually decided.
    """

    claim: str
    holds: bool | None
    status: str
    witnesses: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    counterexample: str | None = None

    @classmethod
    def passing(cls, claim: str, witnesses=(), notes=()) -> "Verdict":
        return cls(claim, True, "pass", tuple(witnesses), tuple(notes))

    @classmethod
    def failing(cls, claim: str, counterexample: str, witnesses=(), notes=()) -> "Verdict":
        return cls(claim, False, "fail", tuple(witnesses), tuple(notes), counterexample)

    @classmethod
    def skipped(cls, claim: str, reason: str) -> "Verdict":
        return cls(claim, None, "skip", (), (reason,))

    @classmethod
    def inconclusive(cls, claim: str, reason: str) -> "Verdict":
        return cls(claim, None, "inconclusive", (), (reason,))

    def as_json(self) -> dict:
        return {
            "claim": self.claim,
            "holds": self.holds,
            "status": self.status,
            "witnesses": list(self.witnesses),
            "notes": list(self.notes),
            "counterexample": self.counterexample,
        }


def module_ass_primes(M: CyclicModule) -> PrimeSet:
    """Ass of R/J as primes of R; needs a monomial defining ideal."""
    if M.monomial is None:
        raise RingError("associated primes here need a monomial defining ideal")
    return associated_primes(M.monomial)


def assh(M: CyclicModule) -> PrimeSet:
    """The top-dimensional associated primes of M."""
    d = M.dim()
    n = M.ctx.n
    return PrimeSet(p for p in module_ass_primes(M) if n - p.height == d)


def _becomes_maximal(a: Ideal, am: MonomialIdeal | None, p: MonomialPrime) -> bool:
    """Whether sqrt(a + p) is the ideal of all variables."""
    ctx = a.ctx
    if am is not None:
        prime = MonomialIdeal.from_exponents(
            ctx, [tuple(1 if k == i else 0 for k in range(ctx.n)) for i in p.vars]
        )
        rad = mono_radical(mono_sum(am, prime))
        return all(
            rad.contains_mono(tuple(1 if k == i else 0 for k in range(ctx.n)))
            for i in range(ctx.n)
        )
    ap = ideal_sum(a, p.to_ideal(ctx))
    return all(
        radical_member(Polynomial.variable(ctx, v), ap) for v in ctx.var_names
    )


def att_top(a: Ideal, M: CyclicModule) -> PrimeSet:
    """Attached primes of the top local cohomology of M along a.

    These are the top-dimensional associated primes p of M for which a + p is
    cofinal with the ideal of variables.
    """
    if not is_proper(ideal_sum(a, M.ideal)):
        raise ImproperIdealError("att_top wants aM != M")
    am = as_monomial(a)
    return PrimeSet(p for p in assh(M) if _becomes_maximal(a, am, p))


def att_top_via_cd(a: Ideal, M: CyclicModule) -> PrimeSet:
    """The same attached set through cohomological dimensions.

    A prime p in Ass M is attached to the top cohomology exactly when a
    still has cohomological dimension dim M on R/p.  Only available along
    the monomial route.
    """
    from .simplicial import cd_on_quotient

    am = as_monomial(a)
    if am is None:
        raise RingError("the cohomological-dimension route needs a monomial ideal")
    if not is_proper(ideal_sum(a, M.ideal)):
        raise ImproperIdealError("att_top wants aM != M")
    rad = mono_radical(am)
    d = M.dim()
    return PrimeSet(
        p for p in module_ass_primes(M) if cd_on_quotient(rad, p) == d
    )


def ass_formal_zeroth(a: Ideal, M: CyclicModule) -> PrimeSet:
    """Associated primes of the zeroth formal local cohomology of M along a:
    the associated primes of M that a pushes up to the maximal ideal."""
    am = as_monomial(a)
    return PrimeSet(p for p in module_ass_primes(M) if _becomes_maximal(a, am, p))


def height_in_module(p: MonomialPrime, M: CyclicModule) -> int:
    """Height of p over M: the largest gap to a minimal prime below it."""
    if M.monomial is None:
        raise RingError("module heights here need a monomial defining ideal")
    mins = min_assh_dim(M.monomial).min_primes
    pv = set(p.vars)
    below = [q for q in mins if set(q.vars) <= pv]
    if not below:
        raise RingError("prime lies outside the support of the module")
    return max(len(pv - set(q.vars)) for q in below)


def is_equidimensional(M: CyclicModule) -> bool:
    """All minimal primes of M cut out quotients of the same dimension."""
    if M.monomial is None:
        raise RingError("equidimensionality here needs a monomial defining ideal")
    if M.monomial.is_zero():
        return True
    info = min_assh_dim(M.monomial)
    return all(M.ctx.n - q.height == info.dim for q in info.min_primes)
