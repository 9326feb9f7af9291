"""Groebner engine: reduced bases, membership, quotients, budgets.

Membership on homogeneous inputs is cross-checked against a test-local
linear-algebra oracle: f lies in I in degree d exactly when f is a
rational combination of the monomial multiples of the generators in
degree d.
"""

import itertools
import random
from fractions import Fraction

import pytest

from linkcoh.groebner import (
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
    is_unit_ideal,
    is_zero_ideal,
    normal_form,
    radical_member,
    reduced_gb,
    saturate,
    set_limits,
)
from linkcoh.ring import Polynomial, parse_poly, ring


def P(ctx, text):
    return parse_poly(text, ctx)


def I_of(ctx, *texts):
    return Ideal(ctx, [parse_poly(t, ctx) for t in texts])


# ---------------------------------------------------------------------------
# Linear-algebra membership oracle for homogeneous ideals.

def monomials_of_degree(n, d):
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev)
        yield tuple(exps)


def homogeneous_member_oracle(f, gens, ctx):
    """Exact span test in the graded piece of f's degree."""
    d = f.total_degree()
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        dg = g.total_degree()
        if dg > d:
            continue
        for e in monomials_of_degree(ctx.n, d - dg):
            rows.append(g.mul_term(e, Fraction(1)))
    basis = sorted(set(m for r in rows for m in r.term_map()) | set(f.term_map()))
    index = {m: k for k, m in enumerate(basis)}

    def vec(p):
        v = [Fraction(0)] * len(basis)
        for m, c in p.term_map().items():
            v[index[m]] = c
        return v

    matrix = [vec(r) for r in rows]
    target = vec(f)
    # Gaussian elimination; reduce target against the row space
    pivot_cols = []
    reduced = []
    for row in matrix:
        row = row[:]
        for col, rr in zip(pivot_cols, reduced):
            if row[col]:
                fac = row[col] / rr[col]
                row = [a - fac * b for a, b in zip(row, rr)]
        lead = next((j for j, a in enumerate(row) if a), None)
        if lead is not None:
            pivot_cols.append(lead)
            reduced.append(row)
    for col, rr in zip(pivot_cols, reduced):
        if target[col]:
            fac = target[col] / rr[col]
            target = [a - fac * b for a, b in zip(target, rr)]
    return all(a == 0 for a in target)


def random_homogeneous(rng, ctx, degree):
    p = Polynomial.zero(ctx)
    monos = list(monomials_of_degree(ctx.n, degree))
    for e in rng.sample(monos, k=min(len(monos), rng.randint(1, 3))):
        p = p + Polynomial.from_monomial(ctx, e, Fraction(rng.randint(-2, 2)))
    return p


def test_membership_matches_linear_algebra_oracle():
    ctx = ring("x", "y", "z")
    rng = random.Random(17)
    agreements = 0
    for _ in range(120):
        gens = [random_homogeneous(rng, ctx, rng.randint(1, 3)) for _ in range(2)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        I = Ideal(ctx, gens)
        f = random_homogeneous(rng, ctx, rng.randint(1, 4))
        if f.is_zero():
            continue
        assert ideal_member(f, I) == homogeneous_member_oracle(f, gens, ctx)
        agreements += 1
    assert agreements >= 100


def test_reduced_gb_shape_and_idempotence():
    ctx = ring("x", "y")
    I = I_of(ctx, "x^2 + y", "x*y")
    gb = reduced_gb(I)
    # monic leads, pairwise non-divisible, tails fully reduced
    leads = [g.lead()[0] for g in gb]
    for g in gb:
        assert g.lead()[1] == 1
    for i, u in enumerate(leads):
        for j, v in enumerate(leads):
            if i != j:
                assert not all(a <= b for a, b in zip(u, v))
    again = reduced_gb(Ideal(ctx, list(gb)))
    assert list(again) == list(gb)


def test_spair_closure_of_reduced_gb():
    ctx = ring("x", "y", "z")
    rng = random.Random(3)
    for _ in range(25):
        gens = [random_homogeneous(rng, ctx, rng.randint(1, 3)) for _ in range(2)]
        I = Ideal(ctx, [g for g in gens if not g.is_zero()] or [Polynomial.zero(ctx)])
        gb = reduced_gb(I)
        for g, h in itertools.combinations(gb, 2):
            eg, cg = g.lead()
            eh, ch = h.lead()
            lcm = tuple(max(a, b) for a, b in zip(eg, eh))
            s = g.mul_term(
                tuple(l - a for l, a in zip(lcm, eg)), Fraction(1) / cg
            ) - h.mul_term(tuple(l - a for l, a in zip(lcm, eh)), Fraction(1) / ch)
            assert normal_form(s, gb).is_zero()


def test_zero_and_unit_ideals():
    ctx = ring("x", "y")
    Z = Ideal.zero(ctx)
    assert is_zero_ideal(Z)
    assert is_proper(Z)
    assert not ideal_member(P(ctx, "x"), Z)
    assert ideal_member(Polynomial.zero(ctx), Z)
    U = I_of(ctx, "x", "x + 1")
    assert is_unit_ideal(U)
    assert not is_proper(U)


def test_equality_containment_sum_product():
    ctx = ring("x", "y")
    A = I_of(ctx, "x", "y")
    B = I_of(ctx, "y", "x")
    C = I_of(ctx, "x + y", "x - y")
    assert ideal_equal(A, B)
    assert ideal_equal(A, C)
    assert ideal_contains(A, I_of(ctx, "x*y"))
    assert not ideal_contains(I_of(ctx, "x*y"), A)
    S = ideal_sum(I_of(ctx, "x"), I_of(ctx, "y"))
    assert ideal_equal(S, A)
    Pr = ideal_product(I_of(ctx, "x"), I_of(ctx, "y"))
    assert ideal_equal(Pr, I_of(ctx, "x*y"))


def test_intersection_hand_and_membership_property():
    ctx = ring("x", "y", "z")
    T = ideal_intersect(I_of(ctx, "x"), I_of(ctx, "y"))
    assert ideal_equal(T, I_of(ctx, "x*y"))
    rng = random.Random(9)
    for _ in range(15):
        A = Ideal(ctx, [random_homogeneous(rng, ctx, rng.randint(1, 2)) for _ in range(2)])
        B = Ideal(ctx, [random_homogeneous(rng, ctx, rng.randint(1, 2)) for _ in range(2)])
        T = ideal_intersect(A, B)
        for g in reduced_gb(T):
            if not g.is_zero():
                assert ideal_member(g, A) and ideal_member(g, B)
        for g in reduced_gb(ideal_product(A, B)):
            if not g.is_zero():
                assert ideal_member(g, T)


def test_quotient_hand_cases_and_property():
    ctx = ring("x", "y")
    assert ideal_equal(ideal_quotient(I_of(ctx, "x*y"), I_of(ctx, "x")), I_of(ctx, "y"))
    assert ideal_equal(
        ideal_quotient(I_of(ctx, "x^2", "x*y"), I_of(ctx, "x")), I_of(ctx, "x", "y")
    )
    # (I : J) * J inside I
    A = I_of(ctx, "x^2", "y^3")
    B = I_of(ctx, "x*y")
    Q = ideal_quotient(A, B)
    for q in Q.gens:
        for b in B.gens:
            assert ideal_member(q * b, A)


def test_saturation():
    ctx = ring("x", "y")
    S = saturate(I_of(ctx, "x^2*y", "x*y^2"), P(ctx, "x"))
    assert ideal_equal(S, I_of(ctx, "y"))
    # saturation is idempotent
    assert ideal_equal(saturate(S, P(ctx, "x")), S)


def test_eliminate():
    ctx = ring("t", "x", "y")
    I = I_of(ctx, "x - t^2", "y - t^3")
    E = eliminate(I, ["t"])
    # the result lives over the smaller ring Q[x, y]
    assert E.ctx.var_names == ("x", "y")
    assert ideal_member(parse_poly("y^2 - x^3", E.ctx), E)
    assert ideal_equal(E, Ideal(E.ctx, [parse_poly("x^3 - y^2", E.ctx)]))


def test_radical_member():
    ctx = ring("x", "y")
    assert radical_member(P(ctx, "x"), I_of(ctx, "x^2"))
    cube = parse_poly("x + y", ctx) ** 3
    assert radical_member(P(ctx, "x + y"), Ideal(ctx, [cube]))
    assert not radical_member(P(ctx, "x"), I_of(ctx, "y"))
    assert radical_member(P(ctx, "x*y"), I_of(ctx, "x^2*y^3"))


def test_random_membership_of_constructed_elements():
    ctx = ring("x", "y", "z")
    rng = random.Random(23)
    for _ in range(20):
        gens = [random_homogeneous(rng, ctx, rng.randint(1, 2)) for _ in range(2)]
        I = Ideal(ctx, [g for g in gens if not g.is_zero()] or [Polynomial.zero(ctx)])
        combo = Polynomial.zero(ctx)
        for g in I.gens:
            e = tuple(rng.randint(0, 1) for _ in range(3))
            combo = combo + g.mul_term(e, Fraction(rng.randint(-2, 2)))
        assert ideal_member(combo, I)
        if is_proper(I):
            assert not ideal_member(combo + 1, I)


def test_budget_trips():
    ctx = ring("x", "y", "z", "w")
    hard = I_of(ctx, "x^3*y - z*w^2 + x", "y^2*w - x*z^2", "z^3 - x*y*w", "w^3 - x^2*y^2")
    with set_limits(max_spairs=3):
        with pytest.raises(BudgetExceeded):
            reduced_gb(hard)
    # fresh ideal object: the capped run must not have poisoned any cache
    hard2 = I_of(ctx, "x^3*y - z*w^2 + x", "y^2*w - x*z^2", "z^3 - x*y*w", "w^3 - x^2*y^2")
    assert len(reduced_gb(hard2)) > 0


def test_ideal_parse():
    ctx = ring("x", "y")
    I = Ideal.parse(ctx, "x^2, x*y")
    assert len(I.gens) == 2
    Z = Ideal.parse(ctx, "0")
    assert is_zero_ideal(Z)
