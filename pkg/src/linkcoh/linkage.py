"""Linkage of ideals over a cyclic module M = R/J.

Two ideals a and b of R are linked over M through an ideal I when I is
generated by an M-regular sequence contained (mod J) in both, neither kills
M, and each is the other's colon:  b + J = (I+J) : a  and  a + J = (I+J) : b.
The link is geometric when (a+J) and (b+J) meet exactly in I+J, and a is
selflinked when the two sides agree mod J.

`check_linked` certifies a triple or raises LinkageError with a reason code;
`link_of` takes the colon partner; `random_linked_pairs` draws certified
instances, exploiting that a double colon is always colon-stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .groebner import (
    Ideal,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_quotient,
    ideal_sum,
    is_proper,
    radical_member,
    reduced_gb,
)
from .modules import CyclicModule, is_regular_sequence
from .monomial import as_monomial, associated_primes, min_assh_dim
from .ring import Polynomial, RingError


class LinkageError(RingError):
    """A triple (a, b, I) failed one of the linkage conditions."""

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class LinkageCertificate:
    """A verified linkage instance; construction goes through check_linked."""

    module: CyclicModule
    I: Ideal
    a: Ideal
    b: Ideal
    geometric: bool
    selflinked: bool

    @property
    def ctx(self):
        return self.module.ctx

    def a_mod(self) -> Ideal:
        return ideal_sum(self.a, self.module.ideal)

    def b_mod(self) -> Ideal:
        return ideal_sum(self.b, self.module.ideal)

    def core(self) -> Ideal:
        return ideal_sum(self.I, self.module.ideal)

    def as_json(self) -> dict:
        return {
            "module": self.module.describe(),
            "I": [str(g) for g in reduced_gb(self.I)] or ["0"],
            "a": [str(g) for g in reduced_gb(self.a)],
            "b": [str(g) for g in reduced_gb(self.b)],
            "geometric": self.geometric,
            "selflinked": self.selflinked,
        }


def check_linked(a: Ideal, b: Ideal, I: Ideal, M: CyclicModule) -> LinkageCertificate:
    """Verify every linkage condition for (a, b) through I over M.

    Raises LinkageError (reason codes: not-regular, not-contained, improper-a,
    improper-b, colon-mismatch-a, colon-mismatch-b) when a condition fails.
    """
    ctx = M.ctx
    for X in (a, b, I):
        if X.ctx != ctx:
            raise RingError("linkage data lives in different rings")
    J = M.ideal
    seq = [g for g in I.gens if not g.is_zero()]
    if not is_regular_sequence(seq, J):
        raise LinkageError(
            "not-regular", "the generators of I are not an M-regular sequence"
        )
    aJ = ideal_sum(a, J)
    bJ = ideal_sum(b, J)
    for g in seq:
        if not (ideal_member(g, aJ) and ideal_member(g, bJ)):
            raise LinkageError("not-contained", "I does not sit inside both ideals mod J")
    if not is_proper(aJ):
        raise LinkageError("improper-a", "a kills the module: aM = M")
    if not is_proper(bJ):
        raise LinkageError("improper-b", "b kills the module: bM = M")
    T = ideal_sum(I, J)
    if not ideal_equal(ideal_quotient(T, a), bJ):
        raise LinkageError("colon-mismatch-a", "(I+J) : a is not b mod J")
    if not ideal_equal(ideal_quotient(T, b), aJ):
        raise LinkageError("colon-mismatch-b", "(I+J) : b is not a mod J")
    geometric = ideal_equal(ideal_intersect(aJ, bJ), T)
    selflinked = ideal_equal(aJ, bJ)
    return LinkageCertificate(M, I, a, b, geometric, selflinked)


def link_of(a: Ideal, I: Ideal, M: CyclicModule, close: bool = False) -> LinkageCertificate:
    """The colon partner b = (I+J) : a, certified.

    When a is not colon-stable the pair fails certification; with close=True
    a is first replaced by its double colon (which is always stable).
    """
    T = ideal_sum(I, M.ideal)
    b = Ideal(M.ctx, reduced_gb(ideal_quotient(T, a)))
    if close:
        a = Ideal(M.ctx, reduced_gb(ideal_quotient(T, b)))
    return check_linked(a, b, I, M)


def support_identity(cert: LinkageCertificate) -> bool:
    """Radical identity sqrt(I+J) = sqrt(a+J) ∩ sqrt(b+J), checked indirectly.

    Containment of radicals one way reduces to radical membership of the
    generators; the other way uses that the intersection of the two radicals
    is the radical of the product ideal, so it suffices to put every product
    of generators inside sqrt(I+J).  No radical is ever computed.
    """
    T = cert.core()
    aJ = cert.a_mod()
    bJ = cert.b_mod()
    for g in T.gens:
        if g.is_zero():
            continue
        if not (radical_member(g, aJ) and radical_member(g, bJ)):
            return False
    for g1 in aJ.gens:
        if g1.is_zero():
            continue
        for g2 in bJ.gens:
            if g2.is_zero():
                continue
            if not radical_member(g1 * g2, T):
                return False
    return True


def minimal_primes_in_core_ass(cert: LinkageCertificate) -> bool | None:
    """Whether every minimal prime of a+J is associated to R/(I+J).

    Decided along the monomial route; returns None when either ideal is not
    monomial, since general primary decomposition is out of scope here.
    """
    am = as_monomial(cert.a_mod())
    tm = as_monomial(cert.core())
    if am is None or tm is None:
        return None
    mins = min_assh_dim(am).min_primes
    ass = associated_primes(tm)
    return mins.issubset(ass)


# ---------------------------------------------------------------------------
# Random certified instances.

@dataclass(frozen=True)
class GenParams:
    count: int = 10
    maxdeg: int = 3
    max_extra: int = 2
    seq_len_max: int = 2
    attempts_factor: int = 80
    allow_sums: bool = True


def _random_monomial(rng: random.Random, ctx, maxdeg: int) -> Polynomial:
    deg = rng.randint(1, maxdeg)
    e = [0] * ctx.n
    for _ in range(deg):
        e[rng.randrange(ctx.n)] += 1
    return Polynomial.from_monomial(ctx, tuple(e))


def _sequence_pool(rng: random.Random, ctx, maxdeg: int, allow_sums: bool) -> Polynomial:
    i = rng.randrange(ctx.n)
    if allow_sums and ctx.n > 1 and rng.random() < 0.3:
        j = rng.randrange(ctx.n)
        while j == i:
            j = rng.randrange(ctx.n)
        return Polynomial.variable(ctx, ctx.var_names[i]) + Polynomial.variable(
            ctx, ctx.var_names[j]
        )
    d = rng.randint(1, maxdeg)
    e = [0] * ctx.n
    e[i] = d
    return Polynomial.from_monomial(ctx, tuple(e))


def random_linked_pairs(
    M: CyclicModule, params: GenParams = GenParams(), seed: int = 0
) -> Iterator[LinkageCertificate]:
    """Draw up to params.count distinct certified linkage instances over M.

    Each draw picks an M-regular sequence I, throws extra monomials on top to
    get a trial ideal, and closes it under the double colon before the full
    certification; duplicates (same pair mod J) are dropped.
    """
    rng = random.Random(seed)
    ctx = M.ctx
    J = M.ideal
    produced = 0
    seen: set = set()
    attempts = params.attempts_factor * max(1, params.count)
    min_len = 0 if not J.is_zero_ideal() else 1

    def gb_key(X: Ideal) -> tuple[str, ...]:
        return tuple(str(g) for g in reduced_gb(X))

    for _ in range(attempts):
        if produced >= params.count:
            return
        want = rng.randint(min_len, max(min_len, params.seq_len_max))
        seq: list[Polynomial] = []
        ok = True
        for _ in range(want):
            for _ in range(12):
                cand = _sequence_pool(rng, ctx, params.maxdeg, params.allow_sums)
                if is_regular_sequence(seq + [cand], J):
                    seq.append(cand)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        I = Ideal(ctx, seq)
        extra_min = 1 if not seq else 0
        extras = [
            _random_monomial(rng, ctx, params.maxdeg)
            for _ in range(rng.randint(extra_min, max(extra_min, params.max_extra)))
        ]
        trial = ideal_sum(I, Ideal(ctx, extras)) if extras else I
        if not is_proper(ideal_sum(trial, J)):
            continue
        T = ideal_sum(I, J)
        b = Ideal(ctx, reduced_gb(ideal_quotient(T, trial)))
        if not is_proper(ideal_sum(b, J)):
            continue
        a = Ideal(ctx, reduced_gb(ideal_quotient(T, b)))
        try:
            cert = check_linked(a, b, I, M)
        except LinkageError:
            continue
        key = (frozenset({gb_key(cert.a_mod()), gb_key(cert.b_mod())}), gb_key(T))
        if key in seen:
            continue
        seen.add(key)
        produced += 1
        yield cert
