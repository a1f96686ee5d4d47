import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affine_sing.hc_classify import (
    CartanPoly,
    PolySyntaxError,
    TPoly,
    WeightFamily,
    evaluate,
    evaluate_family,
    integral_members,
    load_chains,
    load_families,
    load_polys,
    parse_family,
    parse_poly,
    perturb,
    poly_rank,
    project_hc,
    render_poly,
    reparametrizes,
    verify_classification,
)
from affine_sing.simple_lie import LieElement, bracket, sl
from affine_sing.uea import UeaElement, parse_uea, pbw_normalize

from conftest import FIXTURES


def P(text, l=5):
    return parse_poly(text, l)


@pytest.fixture(scope="module")
def printed():
    return load_polys((FIXTURES / "p_polys.txt").read_text(), 5)


@pytest.fixture(scope="module")
def families():
    return load_families((FIXTURES / "families.txt").read_text())


# -- Verma-module oracle ---------------------------------------------------------------
#
# M(mu) = U(n-) v with n- free on the F generators.  A state is a dict from an
# unreduced F-word to its coefficient; every nonempty word lies in n- M, so the
# coefficient of the empty word is the HC projection evaluated at mu.  Only the
# Lie bracket is used, never the PBW straightener.


def _act_gen(n, r, word, mu):
    alg = sl(n)
    g = alg.gens[r]
    if g.kind == "F":
        return {(r,) + word: Fraction(1)}
    if g.kind == "H":
        i = g.i - 1
        val = Fraction(mu[i]) + sum(alg.gen_weights[x][i] for x in word)
        return {word: val} if val else {}
    if not word:
        return {}
    out = {}
    head, rest = word[0], word[1:]
    comm = bracket(alg.element(r), alg.element(head))
    for s, c in comm.terms.items():
        for w, d in _act_gen(n, s, rest, mu).items():
            out[w] = out.get(w, 0) + c * d
    for w, d in _act_gen(n, r, rest, mu).items():
        out[(head,) + w] = out.get((head,) + w, 0) + d
    return {w: c for w, c in out.items() if c}


def verma_vacuum_coefficient(n, word, mu):
    state = {(): Fraction(1)}
    for r in reversed(word):
        new = {}
        for w, c in state.items():
            for w2, d in _act_gen(n, r, w, mu).items():
                new[w2] = new.get(w2, 0) + c * d
        state = {w: c for w, c in new.items() if c}
    return state.get((), Fraction(0))


def test_project_examples():
    n = 3
    assert project_hc(parse_uea("h[1] h[2] + 3", n)) == P("h1 h2 + 3", 2)
    assert project_hc(parse_uea("f[1,2] e[1,2] + e[1,2]", n)).is_zero()
    # e f = f e + h
    assert project_hc(pbw_normalize(n, [sl(n).e(1, 2), sl(n).f(1, 2)])) == P("h1", 2)
    assert project_hc(UeaElement(n)).is_zero()


def test_verma_oracle_by_hand():
    alg = sl(2)
    e, f = alg.e(1, 2), alg.f(1, 2)
    # e f v = mu v;  e e f f v = 2 mu (mu - 1) v
    assert verma_vacuum_coefficient(2, [e, f], (5,)) == 5
    assert verma_vacuum_coefficient(2, [e, e, f, f], (5,)) == 40


@pytest.mark.criterion(8)
@settings(max_examples=200, deadline=None)
@given(st.integers(2, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, sl(n).dim - 1), max_size=6),
    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=n - 1, max_size=n - 1))))
def test_projection_matches_verma_action(t):
    n, word, mu = t
    assert evaluate(project_hc(pbw_normalize(n, word)), mu) == verma_vacuum_coefficient(n, word, mu)


# -- polynomial text ---------------------------------------------------------------------


def test_poly_parse_and_render():
    p = P("h1 (7/2 + h_2)^2 - 3*h[5]")
    assert p == P("h1*h2^2 + 7 h1 h2 + 49/4 h1 - 3 h5")
    assert P(render_poly(p)) == p
    assert P("2 - 2").is_zero()
    for bad in ("", "h6", "h1 +", "(h1", "h1^1/2", "h1 $ h2"):
        with pytest.raises(PolySyntaxError):
            P(bad)
    with pytest.raises(PolySyntaxError) as err:
        load_polys("p1 = h1\np2 = h1 +", 5)
    assert "line 2" in str(err.value)


def test_printed_p7_factor(printed):
    assert len(printed) == 9
    p7 = printed["p7"]
    assert evaluate(p7, (0,) * 5) == 0
    assert evaluate(p7, (Fraction(-7, 2), 0, 0, 0, 0)) == 0
    assert evaluate(p7, (0, 1, 0, 0, 0)) != 0


def test_evaluate_examples(printed, families):
    assert evaluate_family(printed["p1"], families[0]).is_zero()
    assert evaluate_family(printed["p4"], families[2]).is_zero()
    with pytest.raises(ValueError):
        evaluate(printed["p1"], (1, 2))
    assert poly_rank(list(printed.values())) == 9
    assert poly_rank([P("h1"), P("2 h1")]) == 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5), st.lists(st.integers(-3, 3), min_size=5, max_size=5),
       st.fractions(min_value=-5, max_value=5, max_denominator=4))
def test_family_restriction_matches_pointwise(base, direction, t):
    p = P("h1 h3 (2 + h2) - 1/2 h5^3 + h4")
    fam = WeightFamily(tuple(map(Fraction, base)), tuple(map(Fraction, direction)))
    assert evaluate_family(p, fam)(t) == evaluate(p, fam.at(t))


def test_tpoly():
    a, b = TPoly((1, 1)), TPoly((-1, 1))
    assert a * b == TPoly((-1, 0, 1))
    assert (a + b).degree() == 1 and TPoly().is_zero()
    assert str(TPoly((Fraction(7, 2), 0, -1))) == "-t^2 + 7/2"
    assert TPoly((0, 0, 0)) == TPoly()


# -- classification ---------------------------------------------------------------------


def test_grid_on_fixtures(printed, families):
    assert len(families) == 96
    rep = verify_classification(list(printed.values()), families)
    assert len(rep.results) == 9 * 96 and rep.passed
    assert rep.records()[0] == {"poly": 1, "family": 1, "zero": True, "value": "0"}


def test_bogus_family_and_empty_inputs(printed):
    bogus = parse_family("0,0,1,0,0 | 0,0,0,0,0")
    assert not verify_classification(list(printed.values()), [bogus]).passed
    assert verify_classification(list(printed.values()), []).passed
    assert verify_classification([], [bogus]).passed


def test_perturbation_and_reparametrization():
    fam = parse_family("0,0,0,0,0 | 1,0,0,0,0")
    assert reparametrizes(fam, 0) and not reparametrizes(fam, 1)
    assert perturb(fam, 1).base == (0, 1, 0, 0, 0)
    moved = perturb(fam, 0, 3)
    assert {moved.at(t) for t in range(5)} <= {fam.at(t) for t in range(10)}


def test_family_parse_errors():
    with pytest.raises(ValueError):
        parse_family("0,0,0")
    with pytest.raises(ValueError):
        parse_family("0,0 | 1")
    with pytest.raises(ValueError) as err:
        load_families("# header\n0,0 | 1,0\nnonsense")
    assert "line 3" in str(err.value)


def test_chain_file():
    chains = load_chains((FIXTURES / "chains.txt").read_text(), 6)
    assert [c.name for c in chains] == [f"p{i}" for i in range(1, 10)]
    assert [c.scale for c in chains] == [Fraction(1, 30)] * 6 + [Fraction(1, 15)] * 3
    with pytest.raises(ValueError):
        load_chains("p1 | 1/30", 6)


# -- integral members ---------------------------------------------------------------------


def test_integral_member_examples(families):
    assert integral_members(families[0]).describe() == "all t in Z>=0"
    assert integral_members(families[2]).empty
    half = integral_members(parse_family("1/2,0 | 1/2,1"))
    assert (half.kind, half.start, half.step) == ("progression", 1, 2)
    fin = integral_members(parse_family("3,0 | -1,1"))
    assert fin.kind == "finite" and fin.values == (0, 1, 2, 3)
    assert integral_members(parse_family("2,1 | 0,0")).kind == "every"
    assert integral_members(parse_family("1/2,1 | 0,0")).empty
    assert integral_members(parse_family("1/2,0 | 1,1")).empty
    down = integral_members(parse_family("0,5 | 0,-2"))
    assert (down.kind, down.start, down.step) == ("progression", Fraction(5, 2), Fraction(-1, 2))
    box = integral_members(parse_family("0,5 | 1,-2"))
    assert box.kind == "finite" and box.values == (0, 1, 2)
    neg = integral_members(parse_family("1/3 | -1/3"))
    assert (neg.kind, neg.start, neg.step) == ("progression", 1, -3)


def _brute_members(fam, window):
    L = 1
    for x in fam.base + fam.direction:
        L = L * x.denominator // math.gcd(L, x.denominator)
    for d in fam.direction:
        if d:
            L *= abs(d.numerator)
    out = set()
    for j in range(-window * L, window * L + 1):
        t = Fraction(j, L)
        if all(c.denominator == 1 and c >= 0 for c in fam.at(t)):
            out.add(t)
    return out


coord = st.fractions(min_value=-3, max_value=3, max_denominator=2)


@pytest.mark.criterion(8)
@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=3))
def test_integral_members_match_brute_force(pairs):
    fam = WeightFamily(tuple(b for b, _ in pairs), tuple(d for _, d in pairs))
    window = 12
    seen = _brute_members(fam, window)
    res = integral_members(fam)
    inside = lambda t: -window <= t <= window
    if res.kind == "none":
        assert not seen
    elif res.kind == "every":
        assert not any(fam.direction) and Fraction(0) in seen and Fraction(-window) in seen
    elif res.kind == "finite":
        assert set(res.values) == seen
    else:
        expected = set()
        t = res.start
        while inside(t):
            expected.add(t)
            t += res.step
        assert expected == seen
