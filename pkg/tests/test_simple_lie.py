import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affine_sing.simple_lie import (
    AlgebraMismatchError,
    GeneratorSyntaxError,
    LieElement,
    bracket,
    dominant_integral,
    invariant_form,
    parse_weight,
    render_weight,
    sl,
    weight_inner,
)


def L(n, text, c=1):
    return LieElement.from_gen(n, text, c)


def matrix(x: LieElement):
    """Dense matrix of x in the defining representation (independent oracle)."""
    n = x.n
    alg = sl(n)
    M = [[Fraction(0)] * n for _ in range(n)]
    for r, c in x.terms.items():
        g = alg.gens[r]
        if g.kind == "E":
            M[g.i - 1][g.j - 1] += c
        elif g.kind == "F":
            M[g.j - 1][g.i - 1] += c
        else:
            M[g.i - 1][g.i - 1] += c
            M[g.i][g.i] -= c
    return M


def mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_bracket_examples():
    assert bracket(L(4, "e[1,2]"), L(4, "e[3,4]")).is_zero()
    assert bracket(L(4, "e[1,2]"), L(4, "f[1,2]")) == L(4, "h[1]")
    assert bracket(L(4, "h[1]"), L(4, "e[1,2]")) == L(4, "e[1,2]", 2)


def test_form_examples():
    for n in (2, 4, 6):
        assert invariant_form(L(n, f"e[1,{n}]"), L(n, f"f[1,{n}]")) == 1
    assert invariant_form(L(6, "h[1]"), L(6, "h[2]")) == -1
    assert invariant_form(L(6, "e[1,2]"), L(6, "e[2,3]")) == 0


def test_weight_examples():
    alg = sl(6)
    w1, w2, w4 = alg.fundamental(1), alg.fundamental(2), alg.fundamental(4)
    assert weight_inner(w1, w1) == Fraction(5, 6)
    lam = tuple(a + b for a, b in zip(w2, w4))
    shifted = tuple(a + 2 * b for a, b in zip(lam, alg.rho()))
    assert weight_inner(lam, shifted) == 20
    assert weight_inner(alg.zero_weight(), lam) == 0
    assert dominant_integral((3, 0, 0, 0, 0))
    assert not dominant_integral((0, Fraction(-7, 2), 0, 0, 0))
    assert dominant_integral(alg.rho())


def test_theta_and_cartan():
    for n in range(2, 8):
        alg = sl(n)
        th = alg.theta()
        assert weight_inner(th, th) == 2
        if n >= 3:
            assert th == (1,) + (0,) * (n - 3) + (1,)
        alphas = [alg.weight_of(alg.e(i, i + 1)) for i in range(1, n)]
        for i, j in itertools.product(range(n - 1), repeat=2):
            assert weight_inner(alphas[i], alphas[j]) == alg.cartan[i][j]


def test_rank_order():
    alg = sl(4)
    kinds = [g.kind for g in alg.gens]
    assert kinds == sorted(kinds, key="FHE".index)
    assert sorted(alg.rank_of.values()) == list(range(15))
    assert str(alg.gens[0]) == "f[1,2]" and alg.gen_name(alg.h(2)) == "h[2]"


def test_errors():
    with pytest.raises(AlgebraMismatchError):
        bracket(L(3, "e[1,2]"), L(4, "e[1,2]"))
    with pytest.raises(AlgebraMismatchError):
        invariant_form(L(3, "e[1,2]"), L(4, "f[1,2]"))
    with pytest.raises(AlgebraMismatchError):
        weight_inner((1, 0), (1, 0, 0))
    for bad in ("e[2,1]", "h[4]", "e[1,5]", "g[1,2]", "e[1]"):
        with pytest.raises(GeneratorSyntaxError):
            sl(4).parse_gen(bad)


def test_weight_text():
    assert parse_weight("0,1,0,1,0") == (0, 1, 0, 1, 0)
    assert parse_weight("1/2, -3/2") == (Fraction(1, 2), Fraction(-3, 2))
    assert render_weight((Fraction(-7, 2), 0)) == "-7/2,0"


def test_bracket_matches_matrices_exhaustively():
    n = 4
    alg = sl(n)
    for a, b in itertools.product(range(alg.dim), repeat=2):
        x, y = alg.element(a), alg.element(b)
        X, Y = matrix(x), matrix(y)
        XY, YX = mat_mul(X, Y), mat_mul(Y, X)
        C = [[XY[i][j] - YX[i][j] for j in range(n)] for i in range(n)]
        assert matrix(bracket(x, y)) == C
        assert invariant_form(x, y) == sum(XY[i][i] for i in range(n))


def test_jacobi_exhaustive_sl4():
    alg = sl(4)
    els = [alg.element(r) for r in range(alg.dim)]
    for x, y, z in itertools.combinations(els, 3):
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert s.is_zero()


@st.composite
def lie_elements(draw, n):
    alg = sl(n)
    ranks = draw(st.lists(st.integers(0, alg.dim - 1), min_size=1, max_size=4))
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(ranks), max_size=len(ranks)))
    return LieElement(n, dict(zip(ranks, map(Fraction, coeffs))))


@st.composite
def triples(draw):
    n = draw(st.integers(2, 5))
    return tuple(draw(lie_elements(n)) for _ in range(3))


@pytest.mark.criterion(8)
@settings(max_examples=150, deadline=None)
@given(triples())
def test_jacobi_and_invariance(t):
    x, y, z = t
    assert (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero()
    assert invariant_form(bracket(x, y), z) + invariant_form(y, bracket(x, z)) == 0
    assert bracket(x, y) == bracket(y, x).scale(-1)
    assert invariant_form(x, y) == invariant_form(y, x)


@pytest.mark.criterion(8)
@settings(max_examples=150, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.lists(st.fractions(max_denominator=6), min_size=n - 1, max_size=n - 1),
    st.lists(st.fractions(max_denominator=6), min_size=n - 1, max_size=n - 1))))
def test_weight_form_symmetric_and_flip(pair):
    mu, nu = pair
    assert weight_inner(mu, nu) == weight_inner(nu, mu)
    assert weight_inner(mu[::-1], nu[::-1]) == weight_inner(mu, nu)
    assert parse_weight(render_weight(mu)) == tuple(mu)
