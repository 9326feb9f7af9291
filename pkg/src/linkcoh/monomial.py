"""Combinatorics of monomial ideals: minimal generators, colon and
intersection, irreducible decomposition, associated primes, radicals, and
polarization.

Everything here is divisibility arithmetic on exponent tuples; no Groebner
machinery is needed (and the general-path results are cross-checked against
these routines in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import groebner
from .ring import (
    Exponents,
    Polynomial,
    RingCtx,
    RingError,
    mono_degree,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    mono_one,
    mono_quotient,
    mono_support,
    parse_poly,
)


class ImproperIdealError(RingError):
    """An operation that needs a proper (or nonzero) ideal got something else."""


@total_ordering
@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime ideal, i.e. an ideal generated by a set of variables.

    The empty set is allowed and denotes the zero prime (0).
    """

    vars: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(i, int) for i in self.vars):
            raise RingError("MonomialPrime wants variable indices, not names")
        object.__setattr__(self, "vars", tuple(sorted(set(self.vars))))

    @property
    def height(self) -> int:
        return len(self.vars)

    def is_zero_prime(self) -> bool:
        return not self.vars

    def sort_key(self):
        return (len(self.vars), self.vars)

    def __lt__(self, other: "MonomialPrime") -> bool:
        return self.sort_key() < other.sort_key()

    def contains_var(self, i: int) -> bool:
        return i in self.vars

    def contains_poly(self, f: Polynomial) -> bool:
        """Membership of a polynomial: every term must involve a var of p."""
        if f.is_zero():
            return True
        vs = set(self.vars)
        return all(any(e[i] for i in vs) for e in f.term_map())

    def to_ideal(self, ctx: RingCtx) -> groebner.Ideal:
        gens = [Polynomial.variable(ctx, ctx.var_names[i]) for i in self.vars]
        return groebner.Ideal(ctx, gens)

    def render(self, ctx: RingCtx) -> list[str]:
        return [ctx.var_names[i] for i in self.vars]


class PrimeSet:
    """An immutable set of monomial primes with canonical iteration order."""

    __slots__ = ("_primes",)

    def __init__(self, primes: Iterable[MonomialPrime] = ()) -> None:
        self._primes = frozenset(primes)

    def __iter__(self) -> Iterator[MonomialPrime]:
        return iter(sorted(self._primes))

    def __len__(self) -> int:
        return len(self._primes)

    def __contains__(self, p: MonomialPrime) -> bool:
        return p in self._primes

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeSet) and self._primes == other._primes

    def __hash__(self) -> int:
        return hash(self._primes)

    def __and__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self._primes & other._primes)

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self._primes | other._primes)

    def issubset(self, other: "PrimeSet") -> bool:
        return self._primes <= other._primes

    def render(self, ctx: RingCtx) -> list[list[str]]:
        return [p.render(ctx) for p in self]

    def __repr__(self) -> str:
        return "PrimeSet(" + ", ".join(str(p.vars) for p in self) + ")"


def minimalize(exps: Iterable[Exponents]) -> tuple[Exponents, ...]:
    """The divisibility antichain of minimal generators."""
    uniq = sorted(set(exps), key=lambda e: (mono_degree(e), e))
    kept: list[Exponents] = []
    for e in uniq:
        if not any(mono_divides(f, e) for f in kept):
            kept.append(e)
    return tuple(sorted(kept, key=lambda e: (mono_degree(e), e)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its (unique) minimal generators.

    No generators at all means the zero ideal; the single generator 1 means
    the unit ideal.
    """

    ctx: RingCtx
    min_gens: tuple[Exponents, ...]

    @classmethod
    def from_exponents(cls, ctx: RingCtx, exps: Iterable[Exponents]) -> "MonomialIdeal":
        return cls(ctx, minimalize(exps))

    @classmethod
    def zero(cls, ctx: RingCtx) -> "MonomialIdeal":
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx: RingCtx) -> "MonomialIdeal":
        return cls(ctx, (mono_one(ctx.n),))

    @classmethod
    def parse(cls, ctx: RingCtx, text: str) -> "MonomialIdeal":
        I = groebner.Ideal.parse(ctx, text)
        got = from_ideal(I)
        if got is None:
            raise RingError("not a monomial ideal: " + text)
        return got

    def is_zero(self) -> bool:
        return not self.min_gens

    def is_unit(self) -> bool:
        return any(not any(e) for e in self.min_gens)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(all(x <= 1 for x in e) for e in self.min_gens)

    def contains_mono(self, e: Exponents) -> bool:
        return any(mono_divides(g, e) for g in self.min_gens)

    def contains_poly(self, f: Polynomial) -> bool:
        return all(self.contains_mono(e) for e in f.term_map())

    def to_ideal(self) -> groebner.Ideal:
        if self.is_zero():
            return groebner.Ideal.zero(self.ctx)
        gens = [Polynomial.from_monomial(self.ctx, e) for e in self.min_gens]
        return groebner.Ideal(self.ctx, gens)

    def render(self) -> list[str]:
        return [str(Polynomial.from_monomial(self.ctx, e)) for e in self.min_gens]

    def __repr__(self) -> str:
        return "<monomial ideal (" + ", ".join(self.render()) + ")>"


def from_ideal(I: groebner.Ideal) -> MonomialIdeal | None:
    """Reinterpret a general ideal as monomial when its generators are terms."""
    exps = []
    for g in I.gens:
        if g.is_zero():
            continue
        if not g.is_term():
            return None
        (e,) = g.term_map().keys()
        exps.append(e)
    return MonomialIdeal.from_exponents(I.ctx, exps)


def as_monomial(I: groebner.Ideal) -> MonomialIdeal | None:
    """Recognize a general ideal as monomial via its reduced Groebner basis.

    An ideal is monomial exactly when its reduced basis consists of terms, so
    this test is sound and complete (unlike `from_ideal`, which only looks at
    the given generators).
    """
    m = from_ideal(I)
    if m is not None:
        return m
    gb = groebner.reduced_gb(I)
    return from_ideal(groebner.Ideal(I.ctx, gb))


def mono_equal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.ctx == J.ctx and I.min_gens == J.min_gens


def mono_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Whether J ⊆ I."""
    return all(I.contains_mono(g) for g in J.min_gens)


def mono_sum(I: MonomialIdeal, *others: MonomialIdeal) -> MonomialIdeal:
    exps = list(I.min_gens)
    for J in others:
        exps.extend(J.min_gens)
    return MonomialIdeal.from_exponents(I.ctx, exps)


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    exps = [mono_lcm(f, g) for f in I.min_gens for g in J.min_gens]
    return MonomialIdeal.from_exponents(I.ctx, exps)


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    exps = [mono_mul(f, g) for f in I.min_gens for g in J.min_gens]
    return MonomialIdeal.from_exponents(I.ctx, exps)


def mono_colon_single(I: MonomialIdeal, m: Exponents) -> MonomialIdeal:
    exps = [mono_quotient(g, mono_gcd(g, m)) for g in I.min_gens]
    return MonomialIdeal.from_exponents(I.ctx, exps)


def mono_colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J = the intersection over J's generators of I : (m)."""
    if J.is_zero():
        return MonomialIdeal.unit(I.ctx)
    result: MonomialIdeal | None = None
    for m in J.min_gens:
        part = mono_colon_single(I, m)
        result = part if result is None else mono_intersect(result, part)
    assert result is not None
    return result


def mono_radical(I: MonomialIdeal) -> MonomialIdeal:
    exps = []
    for g in I.min_gens:
        exps.append(tuple(1 if x else 0 for x in g))
    return MonomialIdeal.from_exponents(I.ctx, exps)


# ---------------------------------------------------------------------------
# Irreducible decomposition and associated primes.

def irreducible_decomposition(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    """The unique irredundant decomposition into irreducible monomial ideals.

    Splits a generator m = u*v with coprime nontrivial u, v via
    I = (I + (u)) ∩ (I + (v)) until all generators are pure powers, then
    removes redundant components.
    """
    if I.is_zero() or not I.is_proper():
        raise ImproperIdealError("irreducible decomposition needs a nonzero proper ideal")
    memo: dict[frozenset, set[tuple[Exponents, ...]]] = {}

    def rec(key: frozenset) -> set[tuple[Exponents, ...]]:
        got = memo.get(key)
        if got is not None:
            return got
        gens = minimalize(key)
        split = None
        for g in gens:
            sup = mono_support(g)
            if len(sup) >= 2:
                split = (g, sup[0])
                break
        if split is None:
            out = {gens}
        else:
            g, i = split
            u = tuple(g[j] if j == i else 0 for j in range(len(g)))
            v = tuple(0 if j == i else g[j] for j in range(len(g)))
            out = rec(frozenset(minimalize(set(gens) | {u})))
            out = out | rec(frozenset(minimalize(set(gens) | {v})))
        memo[key] = out
        return out

    raw = rec(frozenset(I.min_gens))
    comps = [MonomialIdeal(I.ctx, gens) for gens in raw]
    comps.sort(key=lambda c: c.min_gens)

    # drop any component containing the intersection of the others
    changed = True
    while changed:
        changed = False
        for i in range(len(comps)):
            others = comps[:i] + comps[i + 1 :]
            if not others:
                break
            meet = others[0]
            for c in others[1:]:
                meet = mono_intersect(meet, c)
            if mono_contains(comps[i], meet):
                comps.pop(i)
                changed = True
                break
    return tuple(comps)


def associated_primes(I: MonomialIdeal) -> PrimeSet:
    """Ass of R/I: radicals of the irredundant irreducible components.

    The zero ideal contributes exactly the zero prime.
    """
    if I.is_zero():
        return PrimeSet([MonomialPrime(())])
    if not I.is_proper():
        raise ImproperIdealError("associated primes need a proper ideal")
    primes = set()
    for comp in irreducible_decomposition(I):
        sup: set[int] = set()
        for g in comp.min_gens:
            sup.update(mono_support(g))
        primes.add(MonomialPrime(tuple(sup)))
    return PrimeSet(primes)


@dataclass(frozen=True)
class MinAsshDim:
    min_primes: PrimeSet
    assh: PrimeSet
    dim: int
    height: int


def min_assh_dim(I: MonomialIdeal, ambient: MonomialIdeal | None = None) -> MinAsshDim:
    """Minimal primes, top-dimensional primes, dim, and height of R/(I + ambient)."""
    T = I if ambient is None else mono_sum(I, ambient)
    n = T.ctx.n
    ass = associated_primes(T)
    mins = []
    for p in ass:
        ps = set(p.vars)
        if not any(q != p and set(q.vars) < ps for q in ass):
            mins.append(p)
    dim = n - min(p.height for p in mins)
    assh = [p for p in mins if n - p.height == dim]
    return MinAsshDim(PrimeSet(mins), PrimeSet(assh), dim, n - dim)


def all_monomial_primes(ctx: RingCtx, include_zero: bool = True) -> list[MonomialPrime]:
    out = []
    idx = range(ctx.n)
    for k in range(0 if include_zero else 1, ctx.n + 1):
        for sub in combinations(idx, k):
            out.append(MonomialPrime(sub))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Polarization.

@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    ctx: RingCtx
    added: int
    copies: tuple[tuple[int, ...], ...]  # original var i -> indices of its copies


def polarize(I: MonomialIdeal) -> Polarization:
    """The standard squarefree polarization; depth shifts by `added`."""
    ctx = I.ctx
    n = ctx.n
    maxexp = [1] * n
    for g in I.min_gens:
        for i, x in enumerate(g):
            if x > maxexp[i]:
                maxexp[i] = x
    names: list[str] = []
    copies: list[tuple[int, ...]] = []
    used = set()

    def uniq(name: str) -> str:
        while name in used:
            name = name + "_"
        used.add(name)
        return name

    for i in range(n):
        if maxexp[i] == 1:
            names.append(uniq(ctx.var_names[i]))
            copies.append((len(names) - 1,))
        else:
            idxs = []
            for j in range(1, maxexp[i] + 1):
                names.append(uniq(f"{ctx.var_names[i]}_{j}"))
                idxs.append(len(names) - 1)
            copies.append(tuple(idxs))
    big = RingCtx(tuple(names))
    exps = []
    for g in I.min_gens:
        e = [0] * big.n
        for i, x in enumerate(g):
            for j in range(x):
                e[copies[i][j]] = 1
        exps.append(tuple(e))
    pol = MonomialIdeal.from_exponents(big, exps)
    return Polarization(pol, big, big.n - n, tuple(copies))


# ---------------------------------------------------------------------------
# Auto-dispatch helpers: use the combinatorial path when both sides are
# monomial, the Groebner path otherwise.

def colon_auto(I: groebner.Ideal, J: groebner.Ideal) -> groebner.Ideal:
    a, b = from_ideal(I), from_ideal(J)
    if a is not None and b is not None:
        return mono_colon(a, b).to_ideal()
    return groebner.ideal_quotient(I, J)


def intersect_auto(I: groebner.Ideal, J: groebner.Ideal) -> groebner.Ideal:
    a, b = from_ideal(I), from_ideal(J)
    if a is not None and b is not None:
        return mono_intersect(a, b).to_ideal()
    return groebner.ideal_intersect(I, J)
