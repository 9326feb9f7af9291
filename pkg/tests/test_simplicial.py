"""Simplicial cohomology, Hochster-route depth, cohomological dimension.

Cohomology ranks are cross-checked against a test-local rank oracle
(straight Gaussian elimination on the coboundary matrices) and against
the reduced Euler characteristic computed from face counts alone.
"""

import itertools
import random
from fractions import Fraction

import pytest

from linkcoh.monomial import MonomialIdeal, polarize
from linkcoh.ring import RingError, ring
from linkcoh.simplicial import (
    CohomologyProfile,
    SimplicialComplex,
    cd_on_quotient,
    cd_squarefree,
    complex_of,
    depth_monomial,
    depth_squarefree,
    dim_monomial,
    is_cohen_macaulay_ideal,
    reduced_cohomology,
)
from linkcoh.monomial import MonomialPrime


def MI(ctx, *texts):
    return MonomialIdeal.parse(ctx, ", ".join(texts))


# ---------------------------------------------------------------------------
# Independent cohomology oracle: coboundary ranks by Gaussian elimination.

def _rank(matrix):
    rows = [list(r) for r in matrix if any(r)]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    used = [False] * len(rows)
    for c in range(cols):
        pivot = None
        for i, row in enumerate(rows):
            if not used[i] and row[c]:
                pivot = i
                break
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        prow = rows[pivot]
        for i, row in enumerate(rows):
            if i != pivot and row[c]:
                fac = row[c] / prow[c]
                rows[i] = [a - fac * b for a, b in zip(row, prow)]
    return rank


def cohomology_oracle(cx: SimplicialComplex) -> CohomologyProfile:
    if cx.is_void():
        return CohomologyProfile({})
    if cx.is_irrelevant():
        return CohomologyProfile({-1: 1})
    faces = {}
    for k in range(0, cx.dim + 2):
        faces[k - 1] = sorted(cx.faces_of_size(k), key=sorted)

    def coboundary(j):
        # map from j-cochains to (j+1)-cochains
        dom = faces.get(j, [])
        cod = faces.get(j + 1, [])
        idx = {f: i for i, f in enumerate(dom)}
        rows = []
        for g in cod:
            row = [Fraction(0)] * len(dom)
            verts = sorted(g)
            for pos, v in enumerate(verts):
                sub = frozenset(g - {v})
                if sub in idx:
                    row[idx[sub]] = Fraction((-1) ** pos)
            rows.append(row)
        return rows

    ranks = {}
    for j in range(-1, cx.dim + 1):
        dom = len(faces.get(j, []))
        up = coboundary(j)
        down = coboundary(j - 1)
        rank_up = _rank(up) if up else 0
        rank_down = _rank(down) if down else 0
        ranks[j] = dom - rank_up - rank_down
    return CohomologyProfile(ranks)


def random_complex(rng, n):
    sets = []
    for _ in range(rng.randint(1, 5)):
        k = rng.randint(1, n)
        sets.append(rng.sample(range(n), k))
    return SimplicialComplex.from_facets(n, sets)


def test_known_profiles():
    # two isolated points: one extra connected component
    two_pts = SimplicialComplex.from_facets(2, [[0], [1]])
    assert reduced_cohomology(two_pts) == CohomologyProfile({0: 1})
    # hollow triangle: a circle
    circle = SimplicialComplex.from_facets(3, [[0, 1], [1, 2], [0, 2]])
    assert reduced_cohomology(circle) == CohomologyProfile({1: 1})
    # boundary of the tetrahedron: a 2-sphere
    sphere = SimplicialComplex.from_facets(
        4, [s for s in itertools.combinations(range(4), 3)]
    )
    assert reduced_cohomology(sphere) == CohomologyProfile({2: 1})
    # solid simplex: contractible
    solid = SimplicialComplex.from_facets(3, [[0, 1, 2]])
    assert reduced_cohomology(solid) == CohomologyProfile({})
    # the complex {emptyset}
    irrelevant = SimplicialComplex.from_facets(3, [[]])
    assert irrelevant.is_irrelevant()
    assert reduced_cohomology(irrelevant) == CohomologyProfile({-1: 1})
    # void complex
    void = SimplicialComplex.from_facets(3, [])
    assert reduced_cohomology(void) == CohomologyProfile({})


def test_cohomology_matches_oracle_and_euler():
    rng = random.Random(7)
    for _ in range(30):
        cx = random_complex(rng, rng.randint(2, 5))
        prof = reduced_cohomology(cx)
        assert prof == cohomology_oracle(cx)
        # reduced Euler characteristic from face counts
        chi = 0
        for k in range(0, cx.dim + 2):
            chi += (-1) ** (k - 1) * len(cx.faces_of_size(k))
        assert prof.euler_reduced() == chi


def test_cones_are_acyclic():
    rng = random.Random(19)
    for _ in range(10):
        base = random_complex(rng, 4)
        if base.is_void() or base.is_irrelevant():
            continue
        coned = SimplicialComplex.from_facets(
            5, [set(f) | {4} for f in base.facets]
        )
        assert coned.is_cone()
        assert reduced_cohomology(coned) == CohomologyProfile({})


def test_complex_of_and_links():
    ctx = ring("x", "y", "z")
    cx = complex_of(MI(ctx, "x*y*z"))
    # hollow triangle
    assert set(cx.facets) == {frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})}
    lk = cx.link([0])
    assert set(lk.facets) == {frozenset({1}), frozenset({2})}
    with pytest.raises(RingError):
        complex_of(MI(ctx, "x^2"))
    with pytest.raises(RingError):
        cx.link([0, 1, 2])


def test_depth_squarefree_known_values():
    ctx = ring("x", "y", "z")
    # three coordinate points: 1-dimensional, connected enough to be CM
    pts = MI(ctx, "x*y", "x*z", "y*z")
    assert depth_squarefree(pts) == 1
    assert dim_monomial(pts) == 1
    assert is_cohen_macaulay_ideal(pts)
    # an edge plus an isolated vertex: depth 1 < dim 2
    mixed = MI(ctx, "x*z", "y*z")
    assert depth_squarefree(mixed) == 1
    assert dim_monomial(mixed) == 2
    assert not is_cohen_macaulay_ideal(mixed)
    # hypersurface: depth = dim = 2
    assert depth_squarefree(MI(ctx, "x*y")) == 2
    # the zero ideal: the full ring
    zero = MonomialIdeal.from_exponents(ctx, [])
    assert depth_squarefree(zero) == 3
    assert dim_monomial(zero) == 3


def test_depth_monomial_polarizes():
    ctx = ring("x", "y")
    m = MI(ctx, "x^2", "x*y")
    # embedded maximal ideal forces depth 0
    assert depth_monomial(m) == 0
    assert dim_monomial(m) == 1
    ctx3 = ring("x", "y", "z")
    assert depth_monomial(MI(ctx3, "x^2*y")) == 2
    pol = polarize(MI(ctx3, "x^2*y"))
    assert depth_squarefree(pol.ideal) - pol.added == 2


def test_cd_squarefree_known_values():
    ctx = ring("x", "y", "z")
    assert cd_squarefree(MI(ctx, "x")) == 1
    assert cd_squarefree(MI(ctx, "x", "y", "z")) == 3
    # three points: pd of the quotient is 2
    assert cd_squarefree(MI(ctx, "x*y", "x*z", "y*z")) == 2
    assert cd_squarefree(MI(ctx, "x*y")) == 1


def test_cd_on_quotient():
    ctx = ring("x", "y", "z")
    a = MI(ctx, "x")
    # on R/(y): a still cuts a hypersurface, cd 1
    assert cd_on_quotient(a, MonomialPrime((1,))) == 1
    # on R/(x): a becomes 0, cd 0
    assert cd_on_quotient(a, MonomialPrime((0,))) == 0
