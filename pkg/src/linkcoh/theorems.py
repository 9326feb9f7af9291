"""Batch verification of linkage and local-cohomology claims on randomized
desk-scale instances.

Every claim gets a checker that takes fully constructed domain objects and
returns a Verdict, plus a sampler that draws one seeded instance; `run_claim`
fans instances out (optionally across processes) and merges the verdicts
deterministically.  Gates that a claim genuinely needs (monomial data, no
embedded primes, equidimensionality, ...) produce skip verdicts rather than
silently passing; search-based certificates that cannot be closed produce
inconclusive verdicts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from multiprocessing import Pool

from .groebner import (
    BudgetExceeded,
    Ideal,
    ideal_equal,
    ideal_quotient,
    ideal_sum,
    is_proper,
    reduced_gb,
    radical_member,
    set_limits,
)
from .invariants import (
    Verdict,
    GRADED_NOTE,
    ass_formal_zeroth,
    assh,
    att_top,
    height_in_module,
    is_equidimensional,
    module_ass_primes,
)
from .linkage import GenParams, LinkageCertificate, LinkageError, check_linked, random_linked_pairs
from .modules import CyclicModule, ext1_selfdual, koszul_grade, maximal_ideal, module_ass
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    PrimeSet,
    all_monomial_primes,
    as_monomial,
    associated_primes,
    min_assh_dim,
    mono_contains,
    mono_intersect,
    mono_product,
    mono_radical,
    mono_sum,
    polarize,
)
from .ring import Polynomial, RingCtx, RingError, ring
from .simplicial import POLARIZATION_VAR_BUDGET

_VAR_NAMES = ("x", "y", "z", "w", "v", "u")


def ctx_for(n: int) -> RingCtx:
    if not 1 <= n <= len(_VAR_NAMES):
        raise RingError(f"supported variable counts are 1..{len(_VAR_NAMES)}")
    return ring(*_VAR_NAMES[:n])


@dataclass(frozen=True)
class InstanceParams:
    """Knobs shared by all samplers; `module` pins the base module when set."""

    n_vars: int = 3
    count: int = 20
    maxdeg: int = 3
    seed: int = 0
    module: str | None = None
    max_spairs: int | None = None


# ---------------------------------------------------------------------------
# Samplers.

def _random_monomial(rng: random.Random, ctx: RingCtx, maxdeg: int) -> tuple[int, ...]:
    deg = rng.randint(1, maxdeg)
    e = [0] * ctx.n
    for _ in range(deg):
        e[rng.randrange(ctx.n)] += 1
    return tuple(e)


def _random_proper_monomial_ideal(
    rng: random.Random, ctx: RingCtx, maxdeg: int, max_gens: int = 3
) -> MonomialIdeal:
    """A nonzero proper monomial ideal within the polarization variable budget."""
    for _ in range(24):
        gens = [_random_monomial(rng, ctx, maxdeg) for _ in range(rng.randint(1, max_gens))]
        I = MonomialIdeal.from_exponents(ctx, gens)
        if polarize(I).ctx.n <= POLARIZATION_VAR_BUDGET:
            return I
    return mono_radical(I)  # squarefree always fits the budget


def _random_module(
    rng: random.Random, ctx: RingCtx, maxdeg: int, allow_zero: bool = False
) -> CyclicModule:
    if allow_zero and rng.random() < 0.1:
        return CyclicModule.full_ring(ctx)
    return CyclicModule(ctx, _random_proper_monomial_ideal(rng, ctx, maxdeg).to_ideal())


def _pinned_module(params: InstanceParams, ctx: RingCtx) -> CyclicModule | None:
    if params.module is None:
        return None
    text = params.module.strip()
    if text in ("", "0"):
        return CyclicModule.full_ring(ctx)
    return CyclicModule(ctx, Ideal.parse(ctx, text))


def _prime_ideal(ctx: RingCtx, p: MonomialPrime) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(
        ctx, [tuple(1 if k == i else 0 for k in range(ctx.n)) for i in p.vars]
    )


def _meet_of_primes(ctx: RingCtx, primes: list[MonomialPrime]) -> MonomialIdeal:
    acc = _prime_ideal(ctx, primes[0])
    for p in primes[1:]:
        acc = mono_intersect(acc, _prime_ideal(ctx, p))
    return acc


def _random_prime_antichain(
    rng: random.Random, ctx: RingCtx, k: int, height: int | None
) -> list[MonomialPrime]:
    chosen: list[MonomialPrime] = []
    pool = [p for p in all_monomial_primes(ctx, include_zero=False) if p.height < ctx.n]
    if height is not None:
        pool = [p for p in pool if p.height == height]
    rng.shuffle(pool)
    for p in pool:
        ps = set(p.vars)
        if any(set(q.vars) <= ps or ps <= set(q.vars) for q in chosen):
            continue
        chosen.append(p)
        if len(chosen) == k:
            break
    return chosen


def bipartition_zero_link(
    rng: random.Random, ctx: RingCtx, equal_height: bool
) -> LinkageCertificate | None:
    """A certified geometric zero-link from a split antichain of primes.

    With J the intersection of an antichain of monomial primes and a, b the
    intersections over the two halves of any split, the colon of J at either
    side is the other, and the two sides meet exactly in J.
    """
    h = rng.randint(1, ctx.n - 1) if equal_height else None
    primes = _random_prime_antichain(rng, ctx, rng.randint(2, 4), h)
    if len(primes) < 2:
        return None
    cut = rng.randint(1, len(primes) - 1)
    a = _meet_of_primes(ctx, primes[:cut])
    b = _meet_of_primes(ctx, primes[cut:])
    J = mono_intersect(a, b)
    M = CyclicModule(ctx, J.to_ideal())
    return check_linked(a.to_ideal(), b.to_ideal(), Ideal.zero(ctx), M)


def _one_linked_cert(
    M: CyclicModule, rng: random.Random, maxdeg: int, seq_len_max: int = 1
) -> LinkageCertificate | None:
    gen = random_linked_pairs(
        M,
        GenParams(count=2, maxdeg=min(maxdeg, 3), max_extra=2, seq_len_max=seq_len_max),
        seed=rng.randrange(1 << 30),
    )
    for cert in gen:
        return cert
    return None


# ---------------------------------------------------------------------------
# Claim checkers.

def check_height_and_self_ext(cert: LinkageCertificate) -> Verdict:
    """Two facts about a linked pair (a, b) through I over M = R/J.

    Heights: when R/(I+J) has no embedded primes, every associated prime of
    either side (mod J) has module height equal to the Koszul grade of that
    side on M.  Self-dual Ext: over the base R/(I+J), the Ext module of
    either side against its own quotient has exactly the associated primes
    common to R/(a+J) and R/(b+J).
    """
    claim = "l1"
    M = cert.module
    tm = as_monomial(cert.core())  # never zero: a zero core would force a = 0 : 0 = R
    am = as_monomial(cert.a_mod())
    bm = as_monomial(cert.b_mod())
    if tm is None or am is None or bm is None:
        return Verdict.skipped(claim, "needs a monomial core and monomial sides")
    if associated_primes(tm) != min_assh_dim(tm).min_primes:
        # shared hypothesis for both parts; with an embedded prime in the
        # core the Ext module can pick up extra associated primes
        return Verdict.skipped(claim, "core has embedded primes")
    witnesses: list[str] = []
    notes = [GRADED_NOTE]

    for label, side, side_m in (("a", cert.a, am), ("b", cert.b, bm)):
        gens = [g for g in reduced_gb(side) if not g.is_zero()]
        if len(gens) > 8:
            notes.append(f"heights: side {label} skipped, too many generators")
            continue
        g = koszul_grade(gens, M.ideal)
        for p in associated_primes(side_m):
            ht = height_in_module(p, M)
            if ht != g:
                return Verdict.failing(
                    claim,
                    f"module height {ht} of {p.render(cert.ctx)} on side {label}"
                    f" differs from grade {g} over {M.describe()}",
                    notes=notes,
                )
        witnesses.append(f"heights[{label}]=grade={g}")

    common = associated_primes(am) & associated_primes(bm)
    base = tm.to_ideal()
    # mod the core, am and bm generate the same ideals as a and b, and Hom
    # does not care which generating set presents its argument
    for label, side in (("a", am.to_ideal()), ("b", bm.to_ideal())):
        E = ext1_selfdual(side, base)
        got = module_ass(E)
        if got != common:
            return Verdict.failing(
                claim,
                f"self-dual Ext of side {label} has associated primes"
                f" {got.render(cert.ctx)}, expected {common.render(cert.ctx)}",
                notes=notes,
            )
    witnesses.append(f"ext-ass={common.render(cert.ctx)}")
    return Verdict.passing(claim, witnesses, notes)


def check_pure_height_split(a: MonomialIdeal) -> Verdict:
    """Splitting the radical by height.

    With h the height of a, the intersection a' of the height-h minimal
    primes and the intersection b of the remaining minimal primes satisfy
    sqrt(a) = a' ∩ b, and a' + b has height at least h + 2.
    """
    claim = "t2"
    info = min_assh_dim(a)
    h = info.height
    pure = [p for p in info.min_primes if p.height == h]
    rest = [p for p in info.min_primes if p.height > h]
    ctx = a.ctx
    if not rest:
        return Verdict.passing(
            claim, (f"height={h}",), ("all minimal primes share one height; the split is trivial",)
        )
    ap = _meet_of_primes(ctx, pure)
    b = _meet_of_primes(ctx, rest)
    if associated_primes(ap) != PrimeSet(pure):
        return Verdict.failing(claim, "pure-height part has unexpected associated primes")
    if mono_radical(a) != mono_intersect(ap, b):
        return Verdict.failing(claim, "radical differs from the intersection of the two parts")
    joint = min_assh_dim(mono_sum(ap, b)).height
    if not joint > h + 1:
        return Verdict.failing(
            claim,
            f"parts meet in height {joint}, not above {h + 1}",
        )
    return Verdict.passing(claim, (f"height={h}", f"joint-height={joint}",))


def check_grade_one_links(cert: LinkageCertificate) -> Verdict:
    """Pairs linked through a principal ideal over the full ring are unmixed
    of height one, their monomial radical is principal, and in two variables
    nothing is attached to the top cohomology along them."""
    claim = "p1"
    ctx = cert.ctx
    if not cert.module.ideal.is_zero_ideal():
        return Verdict.skipped(claim, "needs the full ring as base module")
    seq = [g for g in cert.I.gens if not g.is_zero()]
    if len(seq) != 1:
        return Verdict.skipped(claim, "needs a principal core")
    gens_a = [g for g in reduced_gb(cert.a) if not g.is_zero()]
    if koszul_grade(gens_a, cert.module.ideal) != 1:
        return Verdict.skipped(claim, "needs grade one")
    witnesses = []
    for label, side in (("a", cert.a), ("b", cert.b)):
        sm = as_monomial(side)
        if sm is None:
            return Verdict.skipped(claim, "needs monomial sides")
        info = min_assh_dim(sm)
        if any(p.height != 1 for p in info.min_primes):
            return Verdict.failing(
                claim, f"side {label} has a minimal prime of height above one"
            )
        rad = mono_radical(sm)
        if len(rad.min_gens) != 1:
            return Verdict.failing(claim, f"side {label} has a non-principal radical")
        if ctx.n == 2:
            att = att_top(side, cert.module)
            if len(att) != 0:
                return Verdict.failing(
                    claim,
                    f"side {label} attaches {att.render(ctx)} to the top cohomology",
                )
        witnesses.append(f"{label}-radical={rad.render()}")
    return Verdict.passing(claim, witnesses, (GRADED_NOTE,))


def check_att_calculus(a: MonomialIdeal, b: MonomialIdeal, M: CyclicModule) -> Verdict:
    """Attached/associated calculus for two ideals against one module.

    Always: the attached set of the top cohomology along a ∩ b is the
    intersection of the attached sets, and likewise for the associated primes
    of the zeroth formal cohomology.  When additionally a*b kills M: the same
    sets along a + b are the unions.
    """
    claim = "l08"
    ctx = M.ctx
    aI, bI = a.to_ideal(), b.to_ideal()
    cap = mono_intersect(a, b).to_ideal()
    att_a, att_b = att_top(aI, M), att_top(bI, M)
    if att_top(cap, M) != att_a & att_b:
        return Verdict.failing(claim, "attached set of the intersection is not the intersection")
    f_a, f_b = ass_formal_zeroth(aI, M), ass_formal_zeroth(bI, M)
    if ass_formal_zeroth(cap, M) != f_a & f_b:
        return Verdict.failing(claim, "formal zeroth sets fail the intersection rule")
    witnesses = [f"att(a)={att_a.render(ctx)}", f"att(b)={att_b.render(ctx)}"]
    notes = [GRADED_NOTE]
    if M.monomial is not None and mono_contains(M.monomial, mono_product(a, b)):
        plus = mono_sum(a, b).to_ideal()
        if att_top(plus, M) != att_a | att_b:
            return Verdict.failing(claim, "attached set of the sum is not the union")
        if ass_formal_zeroth(plus, M) != f_a | f_b:
            return Verdict.failing(claim, "formal zeroth sets fail the union rule")
        witnesses.append("product-kills-module")
    return Verdict.passing(claim, witnesses, notes)


def _homogeneous_pool(rng: random.Random, ctx: RingCtx, maxdeg: int) -> list[Polynomial]:
    out: list[Polynomial] = [Polynomial.variable(ctx, v) for v in ctx.var_names]
    xs = out[: ctx.n]
    for d in range(2, maxdeg + 1):
        out.extend(x**d for x in xs)
    idx = list(range(ctx.n))
    for size in range(2, ctx.n + 1):
        for _ in range(min(4, ctx.n)):
            sub = rng.sample(idx, size)
            out.append(sum((xs[i] for i in sub[1:]), xs[sub[0]]))
    for _ in range(4):
        i, j = rng.randrange(ctx.n), rng.randrange(ctx.n)
        if i == j:
            continue
        c = rng.choice((1, 2, 3, -1))
        out.append(xs[i] + c * xs[j])
        d = rng.randint(2, max(2, maxdeg))
        out.append(xs[i] ** d + xs[j] ** d)
    uniq: dict[Polynomial, None] = {}
    for f in out:
        if not f.is_zero():
            uniq.setdefault(f)
    pool = list(uniq)
    rng.shuffle(pool)
    return pool


def _greedy_maximal_sequence(M: CyclicModule, pool: list[Polynomial]):
    """Extend a regular sequence greedily; certify maximality by depth zero.

    Returns (sequence, J + sequence, certified); certified means the colon at
    the ideal of variables moved, i.e. no regular element exists at all.
    """
    ctx = M.ctx
    Q = M.ideal
    seq: list[Polynomial] = []
    used: set[Polynomial] = set()
    progress = True
    while progress and len(seq) < ctx.n:
        progress = False
        for f in pool:
            if f in used:
                continue
            step = Ideal(ctx, [f])
            if ideal_equal(ideal_quotient(Q, step), Q):
                seq.append(f)
                used.add(f)
                Q = ideal_sum(Q, step)
                progress = True
                break
            used.add(f)
    certified = not ideal_equal(ideal_quotient(Q, maximal_ideal(ctx)), Q)
    return seq, Q, certified


def check_cm_criteria(M: CyclicModule, rng: random.Random, maxdeg: int) -> Verdict:
    """Cohen-Macaulayness two ways against the depth/dimension oracle.

    Linkage route: any zero-linked pair over R/(I+J) whose two attached sets
    meet forces that module to be Cohen-Macaulay.  Sequence route: after a
    certified-maximal regular sequence, the quotient has dimension zero
    exactly when the module was Cohen-Macaulay.
    """
    claim = "t6"
    ctx = M.ctx
    notes = [GRADED_NOTE]
    witnesses: list[str] = []

    cert = _one_linked_cert(M, rng, maxdeg)
    if cert is not None:
        att_a = att_top(cert.a, M)
        att_b = att_top(cert.b, M)
        if len(att_a & att_b) != 0:
            if not M.is_cohen_macaulay():
                return Verdict.failing(
                    claim,
                    f"attached sets meet in {(att_a & att_b).render(ctx)} but"
                    f" {M.describe()} is not Cohen-Macaulay",
                    notes=notes,
                )
            witnesses.append("linkage-route: forced and confirmed")
        else:
            witnesses.append("linkage-route: attached sets disjoint")

    pool = _homogeneous_pool(rng, ctx, maxdeg)
    seq, Q, certified = _greedy_maximal_sequence(M, pool)
    if not certified:
        return Verdict.inconclusive(
            claim, "pool exhausted before certifying a maximal regular sequence"
        )
    dim_zero = all(
        radical_member(Polynomial.variable(ctx, v), Q) for v in ctx.var_names
    )
    oracle = M.is_cohen_macaulay()
    if dim_zero != oracle:
        return Verdict.failing(
            claim,
            f"maximal sequence of length {len(seq)} leaves dimension-zero={dim_zero}"
            f" but the depth/dimension oracle says CM={oracle} for {M.describe()}",
            notes=notes,
        )
    qm = as_monomial(Q)
    if qm is not None and not qm.is_zero():
        no_embedded = associated_primes(qm) == min_assh_dim(qm).min_primes
        if no_embedded != dim_zero:
            return Verdict.failing(
                claim,
                "embedded-prime view disagrees with the dimension-zero view"
                " after a maximal sequence",
                notes=notes,
            )
        witnesses.append("monomial cross-check: embedded-prime view agrees")
    witnesses.append(f"sequence-route: len={len(seq)}, CM={oracle}")
    return Verdict.passing(claim, witnesses, notes)


def check_equidim_transfer(cert: LinkageCertificate) -> Verdict:
    """Geometric zero-links over an equidimensional module leave both
    quotients equidimensional of the same full dimension."""
    claim = "r1"
    if not cert.geometric or not cert.I.is_zero_ideal():
        return Verdict.skipped(claim, "needs a geometric zero-link")
    M = cert.module
    if M.monomial is None:
        return Verdict.skipped(claim, "needs a monomial base ideal")
    if not is_equidimensional(M):
        return Verdict.skipped(claim, "needs an equidimensional module")
    d = M.dim()
    for label, side in (("a", cert.a_mod()), ("b", cert.b_mod())):
        sm = as_monomial(side)
        if sm is None:
            return Verdict.skipped(claim, "needs monomial sides")
        info = min_assh_dim(sm)
        dims = {cert.ctx.n - p.height for p in info.min_primes}
        if dims != {d}:
            return Verdict.failing(
                claim,
                f"side {label} has quotient dimensions {sorted(dims)}, expected {{{d}}}",
            )
    return Verdict.passing(claim, (f"dim={d}",))


def check_top_prime_transfer(cert: LinkageCertificate) -> Verdict:
    """Attached primes of one side of a zero-link against the other side.

    Over a positive-dimensional M: (i) the attached set along a lies among
    the top-dimensional associated primes of M/bM, and symmetrically; (ii) if
    the two quotients have different dimensions, one of the attached sets is
    empty; when the zeroth formal set of a exhausts the associated primes of
    M, the attached set along a is everything and along b is empty; (iii)
    over an equidimensional module with a geometric link, fullness on one
    side is equivalent to fullness on the other.
    """
    claim = "l15"
    ctx = cert.ctx
    if not cert.I.is_zero_ideal():
        return Verdict.skipped(claim, "needs a zero-link")
    M = cert.module
    if M.monomial is None:
        return Verdict.skipped(claim, "needs a monomial base ideal")
    if M.dim() <= 0:
        return Verdict.skipped(claim, "needs positive dimension")
    am = as_monomial(cert.a_mod())
    bm = as_monomial(cert.b_mod())
    if am is None or bm is None:
        return Verdict.skipped(claim, "needs monomial sides")
    Ma = CyclicModule(ctx, am.to_ideal())
    Mb = CyclicModule(ctx, bm.to_ideal())
    att_a = att_top(cert.a, M)
    att_b = att_top(cert.b, M)
    assh_a = assh(Ma)
    assh_b = assh(Mb)
    notes = [GRADED_NOTE]
    if not att_a.issubset(assh_b):
        return Verdict.failing(
            claim,
            f"attached along a {att_a.render(ctx)} leaves the top primes of M/bM"
            f" {assh_b.render(ctx)}",
            notes=notes,
        )
    if not att_b.issubset(assh_a):
        return Verdict.failing(
            claim,
            f"attached along b {att_b.render(ctx)} leaves the top primes of M/aM"
            f" {assh_a.render(ctx)}",
            notes=notes,
        )
    witnesses = [f"att(a)={att_a.render(ctx)}", f"att(b)={att_b.render(ctx)}"]
    if Ma.dim() != Mb.dim():
        if len(att_a) != 0 and len(att_b) != 0:
            return Verdict.failing(
                claim, "both attached sets are nonempty although the dimensions differ",
                notes=notes,
            )
        witnesses.append("dimension-gap: one side empty")
    if ass_formal_zeroth(cert.a, M) == module_ass_primes(M):
        if att_a != att_top(maximal_ideal(ctx), M) or len(att_b) != 0:
            return Verdict.failing(
                claim,
                "zeroth formal set of a exhausts the associated primes, yet the"
                " attached sets are not everything/nothing",
                notes=notes,
            )
        witnesses.append("exhaustive-case fired")
    if cert.geometric and is_equidimensional(M):
        full_a = att_a == assh_b
        full_b = att_b == assh_a
        if full_a != full_b:
            return Verdict.failing(
                claim, "fullness holds on exactly one side of a geometric link",
                notes=notes,
            )
        witnesses.append(f"fullness-equivalence: {full_a}")
    return Verdict.passing(claim, witnesses, notes)


# ---------------------------------------------------------------------------
# Per-claim instance draws.

def _draw_l1(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    M = _pinned_module(params, ctx) or _random_module(rng, ctx, min(params.maxdeg, 2))
    if M.ideal.is_zero_ideal():
        return Verdict.skipped("l1", "needs a proper base module")
    cert = _one_linked_cert(M, rng, params.maxdeg)
    if cert is None:
        return Verdict.skipped("l1", "no linked pair found for this draw")
    return check_height_and_self_ext(cert)


def _draw_t2(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    if ctx.n >= 3 and rng.random() < 0.7:
        # bias toward genuinely mixed heights: meet primes of two different sizes
        low = _random_prime_antichain(rng, ctx, 1, rng.randint(1, ctx.n - 2))
        high = [
            p
            for p in _random_prime_antichain(rng, ctx, 2, rng.randint(low[0].height + 1, ctx.n - 1))
            if not set(p.vars) >= set(low[0].vars) and not set(p.vars) <= set(low[0].vars)
        ]
        if high:
            acc = _meet_of_primes(ctx, low + high)
            extra = _random_proper_monomial_ideal(rng, ctx, params.maxdeg, 1)
            a = mono_intersect(acc, extra) if rng.random() < 0.3 else acc
            return check_pure_height_split(a)
    return check_pure_height_split(
        _random_proper_monomial_ideal(rng, ctx, params.maxdeg, 3)
    )


def _draw_p1(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    M = CyclicModule.full_ring(ctx)
    core = Ideal(ctx, [Polynomial.from_monomial(ctx, _random_monomial(rng, ctx, params.maxdeg))])
    extras = [
        Polynomial.from_monomial(ctx, _random_monomial(rng, ctx, params.maxdeg))
        for _ in range(rng.randint(1, 2))
    ]
    T = core
    trial = ideal_sum(core, Ideal(ctx, extras))
    b = Ideal(ctx, reduced_gb(ideal_quotient(T, trial)))
    if not is_proper(b):
        return Verdict.skipped("p1", "trial collapsed to a unit colon")
    a = Ideal(ctx, reduced_gb(ideal_quotient(T, b)))
    try:
        cert = check_linked(a, b, core, M)
    except LinkageError as err:
        return Verdict.skipped("p1", f"draw not linked: {err.reason}")
    return check_grade_one_links(cert)


def _draw_l08(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    a = _random_proper_monomial_ideal(rng, ctx, params.maxdeg, 2)
    b = _random_proper_monomial_ideal(rng, ctx, params.maxdeg, 2)
    M = _pinned_module(params, ctx)
    if M is None:
        if seed % 2 == 0:
            J = mono_product(a, b)  # the product gate is exact here
        else:
            J = _random_proper_monomial_ideal(rng, ctx, params.maxdeg, 3)
        M = CyclicModule(ctx, J.to_ideal())
    return check_att_calculus(a, b, M)


def _draw_t6(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    M = _pinned_module(params, ctx) or _random_module(rng, ctx, params.maxdeg, allow_zero=True)
    return check_cm_criteria(M, rng, params.maxdeg)


def _draw_r1(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    if ctx.n < 2:
        return Verdict.skipped("r1", "needs at least two variables")
    cert = bipartition_zero_link(rng, ctx, equal_height=rng.random() < 0.7)
    if cert is None:
        return Verdict.skipped("r1", "no antichain of primes found for this draw")
    return check_equidim_transfer(cert)


def _draw_l15(params: InstanceParams, seed: int) -> Verdict:
    rng = random.Random(seed)
    ctx = ctx_for(params.n_vars)
    if ctx.n < 2:
        return Verdict.skipped("l15", "needs at least two variables")
    if seed % 2 == 0:
        cert = bipartition_zero_link(rng, ctx, equal_height=rng.random() < 0.6)
        if cert is None:
            return Verdict.skipped("l15", "no antichain of primes found for this draw")
    else:
        M = _random_module(rng, ctx, min(params.maxdeg, 2))
        cert = _one_linked_cert(M, rng, params.maxdeg, seq_len_max=0)
        if cert is None:
            return Verdict.skipped("l15", "no zero-linked pair found for this draw")
    return check_top_prime_transfer(cert)


@dataclass(frozen=True)
class ClaimInfo:
    key: str
    title: str
    draw: object


CLAIMS: dict[str, ClaimInfo] = {
    "l1": ClaimInfo(
        "l1",
        "linked sides sit at their Koszul grade; self-dual Ext carries the common"
        " associated primes",
        _draw_l1,
    ),
    "t2": ClaimInfo(
        "t2",
        "the radical splits into a pure-height part and a rest meeting in height"
        " at least two more",
        _draw_t2,
    ),
    "p1": ClaimInfo(
        "p1",
        "pairs linked through a principal ideal are unmixed of height one with a"
        " principal radical",
        _draw_p1,
    ),
    "l08": ClaimInfo(
        "l08",
        "attached/associated sets send intersections to intersections, and sums to"
        " unions once the product kills the module",
        _draw_l08,
    ),
    "t6": ClaimInfo(
        "t6",
        "a nonempty common attached set forces Cohen-Macaulayness; maximal regular"
        " sequences detect it by dimension zero",
        _draw_t6,
    ),
    "r1": ClaimInfo(
        "r1",
        "geometric zero-links over an equidimensional module keep both quotients"
        " equidimensional of full dimension",
        _draw_r1,
    ),
    "l15": ClaimInfo(
        "l15",
        "attached primes of one side land among the top primes of the other side's"
        " quotient",
        _draw_l15,
    ),
}


def _run_instance(args: tuple[str, InstanceParams, int]) -> dict:
    claim, params, seed = args
    info = CLAIMS[claim]
    try:
        if params.max_spairs is not None:
            with set_limits(max_spairs=params.max_spairs):
                verdict = info.draw(params, seed)
        else:
            verdict = info.draw(params, seed)
    except BudgetExceeded as err:
        verdict = Verdict.skipped(claim, f"budget exhausted: {err}")
    out = verdict.as_json()
    out["seed"] = seed
    return out


def run_claim(claim: str, params: InstanceParams, jobs: int = 1) -> dict:
    """Check one claim on `params.count` seeded instances and tally verdicts.

    The instance stream depends only on params, never on jobs, so reruns are
    reproducible byte for byte.
    """
    if claim not in CLAIMS:
        raise RingError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}")
    tasks = [(claim, params, params.seed + k) for k in range(params.count)]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            verdicts = pool.map(_run_instance, tasks, chunksize=1)
    else:
        verdicts = [_run_instance(t) for t in tasks]
    counts = {"pass": 0, "fail": 0, "skip": 0, "inconclusive": 0}
    for v in verdicts:
        counts[v["status"]] += 1
    return {
        "claim": claim,
        "title": CLAIMS[claim].title,
        "params": {
            "n_vars": params.n_vars,
            "count": params.count,
            "maxdeg": params.maxdeg,
            "seed": params.seed,
            "module": params.module,
        },
        "counts": counts,
        "ok": counts["fail"] == 0,
        "verdicts": verdicts,
    }
