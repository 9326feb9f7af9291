"""Attached/associated prime sets of (formal) top local cohomology."""

import pytest

from linkcoh.groebner import Ideal
from linkcoh.invariants import (
    GRADED_NOTE,
    Verdict,
    ass_formal_zeroth,
    assh,
    att_top,
    att_top_via_cd,
    height_in_module,
    is_equidimensional,
    module_ass_primes,
)
from linkcoh.modules import CyclicModule
from linkcoh.monomial import (
    ImproperIdealError,
    MonomialIdeal,
    MonomialPrime,
    PrimeSet,
)
from linkcoh.ring import RingError, parse_poly, ring

import random


def squarefree(rng, ctx):
    gens = []
    for _ in range(rng.randint(1, 4)):
        e = tuple(1 if rng.random() < 0.5 else 0 for _ in range(ctx.n))
        if any(e):
            gens.append(e)
    return MonomialIdeal.from_exponents(ctx, gens)


def I_of(ctx, *texts):
    return Ideal(ctx, [parse_poly(t, ctx) for t in texts])


def R_mod(ctx, *texts):
    if not texts:
        return CyclicModule.full_ring(ctx)
    return CyclicModule(ctx, I_of(ctx, *texts))


def primes(*var_tuples):
    return PrimeSet(MonomialPrime(v) for v in var_tuples)


# ---------------------------------------------------------------------------
# att_top hand values.

def test_att_top_picks_the_branch_that_becomes_isolated():
    # on R/(xy), the ideal (x) is cofinal with m only along the branch (y)
    ctx = ring("x", "y")
    M = R_mod(ctx, "x*y")
    assert att_top(I_of(ctx, "x"), M) == primes((1,))
    assert att_top(I_of(ctx, "y"), M) == primes((0,))


def test_att_top_of_maximal_ideal_is_assh():
    ctx = ring("x", "y", "z")
    for M in [R_mod(ctx), R_mod(ctx, "x*y"), R_mod(ctx, "x*z", "y*z")]:
        m = I_of(ctx, "x", "y", "z")
        assert att_top(m, M) == assh(M)


def test_att_top_along_zero_is_empty_in_positive_dimension():
    ctx = ring("x", "y")
    M = R_mod(ctx, "x*y")
    assert att_top(Ideal.zero(ctx), M) == PrimeSet()


def test_att_top_ignores_embedded_primes():
    ctx = ring("x", "y")
    M = R_mod(ctx, "x^2", "x*y")  # Ass = {(x), (x,y)}, assh = {(x)}
    assert att_top(I_of(ctx, "y"), M) == primes((0,))
    assert att_top(I_of(ctx, "x"), M) == PrimeSet()


def test_att_top_rejects_improper():
    ctx = ring("x", "y")
    M = R_mod(ctx, "x*y")
    with pytest.raises(ImproperIdealError):
        att_top(I_of(ctx, "1"), M)


def test_att_top_nonmonomial_argument_still_works():
    # the fallback route radical-tests a + p directly
    ctx = ring("x", "y")
    M = R_mod(ctx, "x*y")
    assert att_top(I_of(ctx, "x + y"), M) == primes((0,), (1,))


# ---------------------------------------------------------------------------
# agreement of the two att_top routes.

def test_att_top_routes_agree_on_random_squarefree():
    rng = random.Random(7)
    checked = 0
    for n in (2, 3, 4):
        ctx = ring(*[f"x{i}" for i in range(n)])
        for _ in range(12):
            J = squarefree(rng, ctx)
            if J.is_unit():
                continue
            M = CyclicModule(ctx, J.to_ideal())
            a = squarefree(rng, ctx)
            if not a.min_gens or a.is_unit():
                continue
            left = att_top(a.to_ideal(), M)
            right = att_top_via_cd(a.to_ideal(), M)
            assert left == right, (n, J.min_gens, a.min_gens)
            checked += 1
    assert checked >= 25


def test_att_top_via_cd_needs_monomial():
    ctx = ring("x", "y")
    with pytest.raises(RingError):
        att_top_via_cd(I_of(ctx, "x + y"), R_mod(ctx, "x*y"))


# ---------------------------------------------------------------------------
# zeroth formal local cohomology.

def test_ass_formal_zeroth_sees_embedded_primes():
    ctx = ring("x", "y")
    M = R_mod(ctx, "x^2", "x*y")
    # (x) survives along y; the embedded maximal ideal is always cofinal
    assert ass_formal_zeroth(I_of(ctx, "y"), M) == primes((0,), (0, 1))
    assert ass_formal_zeroth(I_of(ctx, "x"), M) == primes((0, 1))
    assert ass_formal_zeroth(Ideal.zero(ctx), M) == primes((0, 1))


def test_ass_formal_zeroth_contains_att_top():
    ctx = ring("x", "y", "z")
    M = R_mod(ctx, "x*y", "x*z")
    for texts in [("y",), ("x",), ("y", "z"), ("x + y",)]:
        a = I_of(ctx, *texts)
        assert att_top(a, M).issubset(ass_formal_zeroth(a, M))


# ---------------------------------------------------------------------------
# heights, equidimensionality, Verdict.

def test_height_in_module():
    ctx = ring("x", "y", "z")
    M = R_mod(ctx, "x*y")  # minimal primes (x), (y)
    assert height_in_module(MonomialPrime((0,)), M) == 0
    assert height_in_module(MonomialPrime((0, 1)), M) == 1
    assert height_in_module(MonomialPrime((0, 1, 2)), M) == 2
    with pytest.raises(RingError):
        height_in_module(MonomialPrime((2,)), M)  # (z) not in the support


def test_height_in_module_takes_largest_gap():
    ctx = ring("x", "y", "z")
    M = R_mod(ctx, "x*y", "x*z")  # minimal primes (x) and (y, z)
    assert height_in_module(MonomialPrime((0, 1, 2)), M) == 2


def test_is_equidimensional():
    ctx = ring("x", "y", "z")
    assert is_equidimensional(R_mod(ctx))
    assert is_equidimensional(R_mod(ctx, "x*y"))
    assert is_equidimensional(R_mod(ctx, "x*y", "x*z", "y*z"))
    assert not is_equidimensional(R_mod(ctx, "x*y", "x*z"))
    with pytest.raises(RingError):
        is_equidimensional(CyclicModule(ctx, I_of(ctx, "x + y^2")))


def test_module_ass_primes_requires_monomial():
    ctx = ring("x", "y")
    with pytest.raises(RingError):
        module_ass_primes(CyclicModule(ctx, I_of(ctx, "x^2 + y")))


def test_assh_hand_values():
    ctx = ring("x", "y", "z")
    assert assh(R_mod(ctx, "x*y", "x*z")) == primes((0,))
    assert assh(R_mod(ctx, "x*y")) == primes((0,), (1,))
    assert assh(R_mod(ctx)) == primes(())


def test_verdict_shapes():
    v = Verdict.passing("c", witnesses=("w",), notes=("n",))
    assert (v.status, v.holds) == ("pass", True)
    f = Verdict.failing("c", "bad", witnesses=("w",))
    assert (f.status, f.holds, f.counterexample) == ("fail", False, "bad")
    s = Verdict.skipped("c", "why")
    assert (s.status, s.holds, s.notes) == ("skip", None, ("why",))
    i = Verdict.inconclusive("c", "dunno")
    assert i.status == "inconclusive" and i.holds is None
    doc = f.as_json()
    assert doc == {
        "claim": "c",
        "holds": False,
        "status": "fail",
        "witnesses": ["w"],
        "notes": [],
        "counterexample": "bad",
    }
    assert GRADED_NOTE and isinstance(GRADED_NOTE, str)
