"""The Zhu-algebra image map V^k(sl_n) -> U(sl_n)."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .affine_vacuum import VacuumContext, VacuumElement
from .pbw import add_into
from .uea import UeaElement, straightener


def zhu_image(v: VacuumElement) -> UeaElement:
    """[a1(-n1-1) ... ar(-nr-1) |0>]  ->  (-1)^(n1+...+nr) ar ... a1."""
    ctx = v.ctx
    st = straightener(ctx.n)
    out: dict = {}
    for w, c in v.terms.items():
        ranks = []
        sign = 1
        for code in w:
            rank, mode = ctx.decode(code)
            ranks.append(rank)
            if (-mode - 1) % 2:
                sign = -sign
        add_into(out, st.normalize_word(ranks[::-1]), c * sign)
    return UeaElement(ctx.n, out)


def zhu_image_oracle(v: VacuumElement) -> UeaElement:
    """Same map by leftmost-letter reduction in A(V):

        a(-m-2) u == -a(-m-1) u            (m >= 0)
        [a(-1) u] == a * [u] - [a(0) u]
    """
    ctx = v.ctx
    memo: Dict[Tuple[int, ...], Dict[Tuple[int, ...], Fraction]] = {}
    out: dict = {}
    for w, c in v.terms.items():
        add_into(out, _reduce(ctx, w, memo), c)
    return UeaElement(ctx.n, out)


def _reduce(ctx: VacuumContext, w, memo):
    hit = memo.get(w)
    if hit is not None:
        return hit
    st = straightener(ctx.n)
    if not w:
        res = {(): 1}
    else:
        rank, mode = ctx.decode(w[0])
        rest = w[1:]
        res = {}
        if mode <= -2:
            # a(mode + 1) rest, straightened, with a sign flip
            for u, c in ctx.straightener.insert(ctx.code(rank, mode + 1), rest).items():
                add_into(res, _reduce(ctx, u, memo), -c)
        else:
            for u, c in _reduce(ctx, rest, memo).items():
                add_into(res, st.insert(rank, u), c)
            for u, c in ctx.act_word(rank, 0, rest).items():
                add_into(res, _reduce(ctx, u, memo), -c)
    memo[w] = res
    return res
