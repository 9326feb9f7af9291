"""Finitely presented modules over Q[x_1..x_n]: Groebner bases of submodules
of free modules, syzygies, Hom from cyclic quotients, annihilators, associated
prime membership, a self-dual Ext computation for cyclic quotients, Koszul
homology grades, and cyclic modules R/J with cached dimension and depth.

Free-module elements are plain tuples of Polynomial.  The module order is
position-over-term with lower positions dominant and degrevlex inside each
position; that makes the tag-block elimination used by the syzygy routine a
textbook module elimination.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, Sequence

from .groebner import (
    BudgetExceeded,
    Ideal,
    _Meter,
    ideal_equal,
    ideal_intersect,
    ideal_quotient,
    ideal_sum,
    is_proper,
    is_unit_ideal,
    reduced_gb,
)
from .monomial import (
    ImproperIdealError,
    MonomialIdeal,
    MonomialPrime,
    PrimeSet,
    all_monomial_primes,
    from_ideal,
)
from .simplicial import POLARIZATION_VAR_BUDGET, depth_monomial, dim_monomial
from .ring import (
    DEGREVLEX,
    Exponents,
    MonomialOrder,
    Polynomial,
    RingCtx,
    RingError,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_quotient,
)

log = logging.getLogger("linkcoh")

Vec = tuple[Polynomial, ...]


def vec_zero(ctx: RingCtx, rank: int) -> Vec:
    z = Polynomial.zero(ctx)
    return (z,) * rank


def vec_is_zero(v: Vec) -> bool:
    return all(p.is_zero() for p in v)


def unit_vec(ctx: RingCtx, rank: int, pos: int) -> Vec:
    z = Polynomial.zero(ctx)
    return tuple(Polynomial.const(ctx, 1) if k == pos else z for k in range(rank))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(f: Polynomial, v: Vec) -> Vec:
    return tuple(f * p for p in v)


def vec_mul_term(v: Vec, e: Exponents, c) -> Vec:
    return tuple(p.mul_term(e, c) for p in v)


def vec_lead(v: Vec, order: MonomialOrder = DEGREVLEX) -> tuple:
    """Lead (position, exponent, coefficient); lowest position dominates."""
    for pos, p in enumerate(v):
        if not p.is_zero():
            e, c = p.lead(order)
            return pos, e, c
    raise RingError("zero vector has no lead term")


def vec_monic(v: Vec, order: MonomialOrder = DEGREVLEX) -> Vec:
    _, _, c = vec_lead(v, order)
    inv = 1 / c
    return tuple(inv * p for p in v)


def ideal_block(I: Ideal, rank: int) -> list[Vec]:
    """The vectors g*e_j for generators g of I; spans I times the free module."""
    out = []
    for g in I.gens:
        if g.is_zero():
            continue
        for j in range(rank):
            out.append(tuple(g if k == j else Polynomial.zero(I.ctx) for k in range(rank)))
    return out


def _pot_key(order: MonomialOrder):
    key = order.key

    def k(pe):
        return (-pe[0], key(pe[1]))

    return k


def module_normal_form(v: Vec, basis: Sequence[Vec], order: MonomialOrder = DEGREVLEX) -> Vec:
    """Full remainder of v under division by the given vectors."""
    leads = [(vec_lead(w, order), w) for w in basis if not vec_is_zero(w)]
    if not leads or vec_is_zero(v):
        return v
    ctx = v[0].ctx
    rank = len(v)
    potkey = _pot_key(order)
    work: dict[tuple[int, Exponents], object] = {}
    for pos, p in enumerate(v):
        for e, c in p.term_map().items():
            work[(pos, e)] = c
    rem: dict[tuple[int, Exponents], object] = {}
    while work:
        pos, e = max(work, key=potkey)
        c = work.pop((pos, e))
        for (lp, le, lc), w in leads:
            if lp == pos and mono_divides(le, e):
                q = mono_quotient(e, le)
                t = c / lc
                for wpos, wp in enumerate(w):
                    for ge, gc in wp.term_map().items():
                        k = (wpos, mono_mul(ge, q))
                        if k == (pos, e):
                            continue  # cancels with the popped lead
                        val = work.get(k, 0) - t * gc
                        if val:
                            work[k] = val
                        else:
                            work.pop(k, None)
                break
        else:
            rem[(pos, e)] = c
    comps: list[dict] = [{} for _ in range(rank)]
    for (pos, e), c in rem.items():
        comps[pos][e] = c
    return tuple(Polynomial(ctx, d) for d in comps)


def _module_spair(u: Vec, w: Vec, order: MonomialOrder) -> Vec:
    pu, eu, cu = vec_lead(u, order)
    pw, ew, cw = vec_lead(w, order)
    if pu != pw:
        raise RingError("S-vector needs equal lead positions")
    l = mono_lcm(eu, ew)
    a = vec_mul_term(u, mono_quotient(l, eu), 1 / cu)
    b = vec_mul_term(w, mono_quotient(l, ew), 1 / cw)
    return vec_sub(a, b)


def module_gb(gens: Sequence[Vec], order: MonomialOrder = DEGREVLEX) -> list[Vec]:
    """Reduced Groebner basis of the submodule spanned by `gens`.

    Only pairs with equal lead positions produce S-vectors.  The coprime-lcm
    shortcut is unsound for modules and is not applied; the chain criterion
    (with matching positions) still is.
    """
    meter = _Meter()
    G: list[Vec] = [vec_monic(g, order) for g in gens if not vec_is_zero(g)]
    if not G:
        return []
    leads: list[tuple[int, Exponents]] = [vec_lead(g, order)[:2] for g in G]
    pairs: set[tuple[int, int]] = {
        (i, j) for j in range(len(G)) for i in range(j) if leads[i][0] == leads[j][0]
    }
    key = order.key

    def pairkey(p):
        return (key(mono_lcm(leads[p[0]][1], leads[p[1]][1])), p)

    while pairs:
        meter.charge("module buchberger")
        i, j = min(pairs, key=pairkey)
        pairs.discard((i, j))
        pos = leads[i][0]
        l = mono_lcm(leads[i][1], leads[j][1])
        skip = False
        for k in range(len(G)):
            if k in (i, j) or leads[k][0] != pos:
                continue
            if mono_divides(leads[k][1], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        h = module_normal_form(_module_spair(G[i], G[j], order), G, order)
        if vec_is_zero(h):
            continue
        h = vec_monic(h, order)
        G.append(h)
        leads.append(vec_lead(h, order)[:2])
        new = len(G) - 1
        # the reduced S-vector may lead at a different position than the pair
        # that produced it; pair it at its own position
        newpos = leads[new][0]
        pairs.update((t, new) for t in range(new) if leads[t][0] == newpos)

    potkey = _pot_key(order)
    orderidx = sorted(range(len(G)), key=lambda i: potkey(leads[i]))
    kept: list[Vec] = []
    kept_leads: list[tuple[int, Exponents]] = []
    for i in orderidx:
        p, e = leads[i]
        if not any(lp == p and mono_divides(le, e) for lp, le in kept_leads):
            kept.append(G[i])
            kept_leads.append(leads[i])
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            r = module_normal_form(kept[i], others, order)
            if vec_is_zero(r):
                raise RingError("reduced module basis collapsed; minimalization is broken")
            r = vec_monic(r, order)
            if r != kept[i]:
                kept[i] = r
                changed = True
    kept.sort(key=lambda g: potkey(vec_lead(g, order)[:2]))
    return kept


def submodule_member(v: Vec, gb: Sequence[Vec], order: MonomialOrder = DEGREVLEX) -> bool:
    return vec_is_zero(module_normal_form(v, gb, order))


def submodule_syzygies(vectors: Sequence[Vec], modulo: Sequence[Vec]) -> list[Vec]:
    """Generators of {a in R^k : sum a_i vectors[i] lies in <modulo>}.

    Each input vector is tagged with a fresh unit coordinate below the main
    block; basis elements whose main block vanished carry exactly the wanted
    coefficient vectors in their tags.
    """
    k = len(vectors)
    if k == 0:
        return []
    rank = len(vectors[0])
    if rank == 0:
        raise RingError("syzygies of rank-zero vectors are everything; handle that upstream")
    ctx = vectors[0][0].ctx
    zeros_tag = vec_zero(ctx, k)
    aug: list[Vec] = []
    for i, v in enumerate(vectors):
        if len(v) != rank:
            raise RingError("syzygy input vectors have mixed ranks")
        aug.append(v + unit_vec(ctx, k, i))
    for w in modulo:
        if len(w) != rank:
            raise RingError("modulo vectors have the wrong rank")
        aug.append(w + zeros_tag)
    out: list[Vec] = []
    for g in module_gb(aug):
        if all(p.is_zero() for p in g[:rank]):
            out.append(g[rank:])
    return out


class FPModule:
    """Cokernel of a map into a free module, held by its relation vectors.

    The module is R^rank / <relations>; a zero rank is the zero module.
    `multigraded` is a promise made by the constructor that the module admits
    a fine Z^n-grading, which is what lets associated primes be found among
    the monomial primes.
    """

    __slots__ = ("ctx", "rank", "relations", "multigraded", "_gb")

    def __init__(
        self,
        ctx: RingCtx,
        rank: int,
        relations: Iterable[Vec] = (),
        multigraded: bool = False,
    ) -> None:
        self.ctx = ctx
        self.rank = rank
        kept = []
        for v in relations:
            if len(v) != rank:
                raise RingError("relation vector has the wrong rank")
            if not vec_is_zero(v):
                kept.append(v)
        self.relations: tuple[Vec, ...] = tuple(kept)
        self.multigraded = multigraded
        self._gb: list[Vec] | None = None

    def rel_gb(self) -> list[Vec]:
        if self._gb is None:
            self._gb = module_gb(self.relations)
        return self._gb

    def nf(self, v: Vec) -> Vec:
        if len(v) != self.rank:
            raise RingError("element has the wrong rank")
        return module_normal_form(v, self.rel_gb())

    def is_zero_elt(self, v: Vec) -> bool:
        return vec_is_zero(self.nf(v))

    def is_zero_module(self) -> bool:
        return all(self.is_zero_elt(unit_vec(self.ctx, self.rank, j)) for j in range(self.rank))

    def annihilator(self) -> Ideal:
        """Intersection over generators of the colons (relations : e_j)."""
        if self.rank == 0:
            return Ideal.unit(self.ctx)
        ann: Ideal | None = None
        for j in range(self.rank):
            tags = submodule_syzygies([unit_vec(self.ctx, self.rank, j)], self.relations)
            colon = Ideal(self.ctx, [t[0] for t in tags])
            ann = colon if ann is None else ideal_intersect(ann, colon)
        return ann

    def __repr__(self) -> str:
        return f"<fp module rank {self.rank}, {len(self.relations)} relations>"


def present_subquotient(
    gens: Sequence[Vec], modulo: Sequence[Vec], ctx: RingCtx, rank: int, multigraded: bool = False
) -> FPModule:
    """Present (<gens> + <modulo>)/<modulo> by generators and fresh syzygies."""
    mgb = module_gb(list(modulo))
    seen: dict[Vec, None] = {}
    for g in gens:
        if len(g) != rank:
            raise RingError("subquotient generator has the wrong rank")
        r = module_normal_form(g, mgb)
        if not vec_is_zero(r):
            seen.setdefault(r)
    kept = list(seen)
    if not kept:
        return FPModule(ctx, 0, (), multigraded)
    rels = submodule_syzygies(kept, list(modulo))
    return FPModule(ctx, len(kept), rels, multigraded)


def hom_cyclic(a: Ideal, N: FPModule) -> FPModule:
    """Hom(R/a, N), presented; canonically the submodule of N killed by a."""
    if a.ctx != N.ctx:
        raise RingError("ideal and module live in different rings")
    ctx = N.ctx
    if N.rank == 0:
        return N
    g = [p for p in a.gens if not p.is_zero()]
    if not g:
        return N  # Hom(R, N) is N itself
    t, r = len(g), N.rank
    zero = Polynomial.zero(ctx)
    columns: list[Vec] = []
    for j in range(r):
        col = [zero] * (t * r)
        for i in range(t):
            col[i * r + j] = g[i]
        columns.append(tuple(col))
    modulo: list[Vec] = []
    for i in range(t):
        for rel in N.relations:
            block = [zero] * (t * r)
            for j in range(r):
                block[i * r + j] = rel[j]
            modulo.append(tuple(block))
    kernel = submodule_syzygies(columns, modulo)
    graded = N.multigraded and a.is_monomial()
    return present_subquotient(kernel, N.relations, ctx, r, graded)


def ass_member(p: MonomialPrime, N: FPModule) -> bool:
    """Whether p is an associated prime of N.

    p is associated iff Hom(R/p, N) is nonzero after localizing at p; for the
    module H = Hom(R/p, N), which p kills, that localization is nonzero
    exactly when Ann H is contained in p.
    """
    if N.is_zero_module():
        return False
    H = hom_cyclic(p.to_ideal(N.ctx), N)
    if H.is_zero_module():
        return False
    ann = H.annihilator()
    return all(p.contains_poly(f) for f in ann.gens)


def module_ass(N: FPModule) -> PrimeSet:
    """All associated primes, found by scanning monomial primes over Ann N."""
    if not N.multigraded:
        raise RingError("associated-prime scan needs a multigraded module")
    if N.is_zero_module():
        return PrimeSet(())
    ann = N.annihilator()
    found = []
    for p in all_monomial_primes(N.ctx, include_zero=True):
        if not all(p.contains_poly(f) for f in ann.gens):
            continue  # Ass lies inside the support, i.e. over V(Ann)
        if ass_member(p, N):
            found.append(p)
    return PrimeSet(found)


def ext1_selfdual(a: Ideal, J: Ideal) -> FPModule:
    """Hom_{R'}(a, R'/a) over R' = R/J, presented over R.

    For a cyclic argument this module is isomorphic to Ext^1_{R'}(R'/a, R'/a):
    applying Hom(-, R'/a) to 0 -> a -> R' -> R'/a -> 0 gives a connecting map
    Hom(a, R'/a) -> Ext^1(R'/a, R'/a) whose cokernel vanishes and whose kernel
    is the image of Hom(R', R'/a); that image is zero because a*a lies in a.
    A hom is a choice of images of the generators of a, constrained by every
    syzygy among those generators over R'.
    """
    if a.ctx != J.ctx:
        raise RingError("ideals live in different rings")
    ctx = a.ctx
    aJ = ideal_sum(a, J)
    if not is_proper(aJ):
        raise ImproperIdealError("self-dual Ext wants a proper ideal")
    g = [p for p in a.gens if not p.is_zero()]
    if not g:
        return FPModule(ctx, 0, ())
    t = len(g)
    syz = submodule_syzygies([(p,) for p in g], [(h,) for h in J.gens if not h.is_zero()])
    graded = a.is_monomial() and J.is_monomial()
    if not syz:
        kernel = [unit_vec(ctx, t, i) for i in range(t)]
    else:
        s = len(syz)
        columns = [tuple(syz[i][j] for i in range(s)) for j in range(t)]
        kernel = submodule_syzygies(columns, ideal_block(aJ, s))
    return present_subquotient(kernel, ideal_block(aJ, t), ctx, t, graded)


# ---------------------------------------------------------------------------
# Koszul complexes and grade.

KOSZUL_SIZE_BUDGET = 10


class KoszulComplex:
    """The Koszul complex on a tuple of ring elements, with exact matrices."""

    __slots__ = ("ctx", "elements", "size", "basis", "_cols")

    def __init__(self, ctx: RingCtx, elements: Sequence[Polynomial]) -> None:
        self.ctx = ctx
        self.elements = tuple(elements)
        s = len(self.elements)
        if s > KOSZUL_SIZE_BUDGET:
            raise BudgetExceeded("koszul complex size", s, KOSZUL_SIZE_BUDGET)
        self.size = s
        self.basis: dict[int, list[tuple[int, ...]]] = {
            i: list(combinations(range(s), i)) for i in range(s + 1)
        }
        self._cols: dict[int, list[Vec]] = {}
        for i in range(1, s + 1):
            self._cols[i] = self._differential(i)
        for i in range(2, s + 1):
            self._check_square_zero(i)

    def _differential(self, i: int) -> list[Vec]:
        target_index = {T: k for k, T in enumerate(self.basis[i - 1])}
        cols = []
        for T in self.basis[i]:
            col = [Polynomial.zero(self.ctx)] * len(self.basis[i - 1])
            for drop, v in enumerate(T):
                sub = T[:drop] + T[drop + 1 :]
                sign = -1 if drop % 2 else 1
                col[target_index[sub]] = col[target_index[sub]] + sign * self.elements[v]
            cols.append(tuple(col))
        return cols

    def _check_square_zero(self, i: int) -> None:
        lower = self._cols[i - 1]
        for col in self._cols[i]:
            acc = vec_zero(self.ctx, len(self.basis[i - 2]))
            for j, f in enumerate(col):
                if not f.is_zero():
                    acc = vec_add(acc, vec_scale(f, lower[j]))
            if not vec_is_zero(acc):
                raise RingError("koszul differential does not square to zero")

    def columns(self, i: int) -> list[Vec]:
        """Matrix of d_i : K_i -> K_{i-1}, one vector per basis element of K_i."""
        if i < 1 or i > self.size:
            return []
        return self._cols[i]


def koszul_grade(seq: Sequence[Polynomial], base: Ideal) -> int:
    """grade of the ideal generated by seq on R/base, via Koszul homology.

    Equals s minus the top nonvanishing homological degree of the Koszul
    complex on the s given elements, tensored with R/base.  The search runs
    top down and stops at the first nonzero homology.
    """
    ctx = base.ctx
    elements = [f for f in seq if not f.is_zero()]
    if not elements:
        return 0
    if is_unit_ideal(ideal_sum(base, Ideal(ctx, elements))):
        raise ImproperIdealError("grade is undefined when the sequence generates everything")
    K = KoszulComplex(ctx, elements)
    s = K.size
    for i in range(s, 0, -1):
        kernel = submodule_syzygies(K.columns(i), ideal_block(base, len(K.basis[i - 1])))
        image = list(K.columns(i + 1)) + ideal_block(base, len(K.basis[i]))
        igb = module_gb(image)
        if any(not submodule_member(z, igb) for z in kernel):
            return s - i
    return s


def is_regular_sequence(seq: Sequence[Polynomial], base: Ideal) -> bool:
    """Whether seq is a regular sequence on R/base (in the given order)."""
    Q = base
    for f in seq:
        step = Ideal(Q.ctx, [f])
        if not ideal_equal(ideal_quotient(Q, step), Q):
            return False
        Q = ideal_sum(Q, step)
    return is_proper(Q)


# ---------------------------------------------------------------------------
# Cyclic modules.

def maximal_ideal(ctx: RingCtx) -> Ideal:
    return Ideal(ctx, [Polynomial.variable(ctx, v) for v in ctx.var_names])


class CyclicModule:
    """The module R/J, with cached dimension and depth at the variable ideal."""

    __slots__ = ("ctx", "ideal", "monomial", "_dim", "_depth")

    def __init__(self, ctx: RingCtx, J: Ideal) -> None:
        if J.ctx != ctx:
            raise RingError("defining ideal lives in a different ring")
        if not is_proper(J):
            raise ImproperIdealError("cyclic module wants a proper defining ideal")
        self.ctx = ctx
        self.ideal = J
        self.monomial: MonomialIdeal | None = from_ideal(J)
        self._dim: int | None = None
        self._depth: int | None = None

    @classmethod
    def full_ring(cls, ctx: RingCtx) -> "CyclicModule":
        return cls(ctx, Ideal.zero(ctx))

    def lead_term_ideal(self) -> MonomialIdeal:
        gb = reduced_gb(self.ideal)
        return MonomialIdeal.from_exponents(self.ctx, [g.lead()[0] for g in gb])

    def dim(self) -> int:
        # Krull dimension survives the flat degeneration to the lead-term ideal
        if self._dim is None:
            mono = self.monomial if self.monomial is not None else self.lead_term_ideal()
            self._dim = dim_monomial(mono)
        return self._dim

    def depth(self) -> int:
        if self._depth is None:
            self._depth = self._compute_depth()
        return self._depth

    def _compute_depth(self) -> int:
        if self.monomial is not None:
            try:
                return depth_monomial(self.monomial)
            except BudgetExceeded:
                log.info(
                    "depth: polarization needs more than %d variables, using the Koszul route",
                    POLARIZATION_VAR_BUDGET,
                )
        gens = [Polynomial.variable(self.ctx, v) for v in self.ctx.var_names]
        return koszul_grade(gens, self.ideal)

    def is_cohen_macaulay(self) -> bool:
        return self.depth() == self.dim()

    def to_fp(self) -> FPModule:
        rels = [(g,) for g in self.ideal.gens if not g.is_zero()]
        return FPModule(self.ctx, 1, rels, multigraded=self.monomial is not None)

    def describe(self) -> str:
        if self.ideal.is_zero_ideal():
            return "R"
        return "R/(" + ", ".join(str(g) for g in self.ideal.gens) + ")"

    def __repr__(self) -> str:
        return f"<cyclic module {self.describe()}>"
