"""The vacuum module V^k(sl_n).

A basis vector is ``x1(m1) x2(m2) ... xr(mr) |0>`` with all modes negative,
stored as a nondecreasing tuple of letter codes ``mode * D + rank``
(``D = n^2 - 1``).  Code order is mode ascending (most negative first) with
ties broken by generator rank, which is the canonical order.

Commutation relation used everywhere:

    [x(m), y(p)] = [x, y](m + p) + m delta_{m+p,0} <x, y> k
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .expr_text import ExprSyntaxError, parse_terms
from .pbw import Straightener, add_into
from .simple_lie import GeneratorSyntaxError, LieElement, Weight, sl
from .uea import render_terms

Word = Tuple[int, ...]


class CriticalLevelError(ValueError):
    pass


class ModeError(ValueError):
    """Nonnegative mode handed to :func:`normal_form`."""


class VacuumContext:
    """sl_n at a fixed non-critical level k, with rewriting caches."""

    def __init__(self, n: int, k):
        k = Fraction(k)
        if n < 2:
            raise ValueError("need n >= 2")
        if k == -n:
            raise CriticalLevelError(f"k = {k} is critical for sl_{n}")
        self.n = n
        self.k = k
        self.alg = sl(n)
        self.D = self.alg.dim
        table = self.alg.bracket_table
        D = self.D

        def neg_bracket(a: int, b: int):
            ma, ra = divmod(a, D)
            mb, rb = divmod(b, D)
            m = ma + mb
            return tuple((m * D + z, c) for z, c in table[ra][rb])

        self.straightener = Straightener(neg_bracket)
        self._act_cache: Dict[Tuple[int, int, Word], Dict[Word, Fraction]] = {}

    def code(self, rank: int, mode: int) -> int:
        return mode * self.D + rank

    def decode(self, code: int) -> Tuple[int, int]:
        """code -> (rank, mode)"""
        mode, rank = divmod(code, self.D)
        return rank, mode

    def __repr__(self):
        return f"VacuumContext(sl{self.n}, k={self.k})"

    # -- the mode action on basis words --------------------------------------

    def act_word(self, x: int, m: int, w: Word) -> Dict[Word, Fraction]:
        """x(m) applied to the canonical basis vector ``w``."""
        if m < 0:
            return self.straightener.insert(m * self.D + x, w)
        if not w:
            return {}
        key = (x, m, w)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        D = self.D
        y = w[0]
        p, yr = divmod(y, D)
        rest = w[1:]
        out: Dict[Word, Fraction] = {}
        # y(p) x(m) rest
        for u, c in self.act_word(x, m, rest).items():
            add_into(out, self.straightener.insert(y, u), c)
        # [x, y](m + p) rest
        for z, c in self.alg.bracket_table[x][yr]:
            add_into(out, self.act_word(z, m + p, rest), c)
        # central term
        if m + p == 0:
            form = self.alg.form_table[x][yr]
            if form:
                add_into(out, {rest: 1}, m * form * self.k)
        self._act_cache[key] = out
        return out


@lru_cache(maxsize=None)
def context(n: int, k: Fraction) -> VacuumContext:
    return VacuumContext(n, Fraction(k))


class VacuumElement:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VacuumContext, terms: Dict[Word, Fraction] | None = None):
        self.ctx = ctx
        self.terms: Dict[Word, Fraction] = {
            tuple(w): Fraction(c) for w, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def vacuum(cls, ctx: VacuumContext) -> "VacuumElement":
        return cls(ctx, {(): Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        add_into(out, other.terms)
        return VacuumElement(self.ctx, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "VacuumElement":
        c = Fraction(c)
        return VacuumElement(self.ctx, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (isinstance(other, VacuumElement) and self.ctx.n == other.ctx.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, letters: Sequence[Tuple[str, int]]) -> Fraction:
        """Coefficient of the canonical monomial written as [(gen, mode), ...]."""
        w = tuple(sorted(self.ctx.code(self.ctx.alg.parse_gen(g), m) for g, m in letters))
        return self.terms.get(w, Fraction(0))

    def __repr__(self):
        return f"VacuumElement(sl{self.ctx.n}, k={self.ctx.k}: {render_vacuum(self)})"


def normal_form(ctx: VacuumContext, word: Iterable[Tuple[int, int]]) -> VacuumElement:
    """Straighten ``x1(m1) ... xr(mr) |0>`` given as (rank, mode) pairs, all modes < 0."""
    codes = []
    for rank, mode in word:
        if mode >= 0:
            raise ModeError(f"mode {mode} >= 0; use act() for annihilation-type modes")
        codes.append(ctx.code(rank, mode))
    return VacuumElement(ctx, ctx.straightener.normalize_word(codes))


def act(ctx: VacuumContext, x, m: int, v: VacuumElement) -> VacuumElement:
    """x(m) v for a generator rank or a LieElement ``x``."""
    xs = x.terms if isinstance(x, LieElement) else {x: Fraction(1)}
    out: dict = {}
    for a, ca in xs.items():
        for w, c in v.terms.items():
            add_into(out, ctx.act_word(a, m, w), c * ca)
    return VacuumElement(ctx, out)


def hweight(ctx: VacuumContext, w: Word) -> Weight:
    wts = ctx.alg.gen_weights
    acc = [0] * ctx.alg.l
    for code in w:
        r = code % ctx.D
        for i, c in enumerate(wts[r]):
            acc[i] += c
    return tuple(Fraction(a) for a in acc)


def degree(ctx: VacuumContext, w: Word) -> int:
    return -sum(code // ctx.D for code in w)


def weight_basis(ctx: VacuumContext, lam: Sequence, d: int) -> List[Word]:
    """All canonical monomials of h-weight ``lam`` and degree ``d``, lexicographic."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    alg = ctx.alg
    roots = alg.to_root_coords(lam)
    if any(Fraction(c).denominator != 1 for c in roots):
        return []
    target = tuple(int(c) for c in roots)
    l, D = alg.l, ctx.D
    rc = alg.root_coords
    out: List[Word] = []
    max_height = l

    # letters in code order: mode -d..-1, then rank
    letters = [(mode * D + r, -mode, rc[r]) for mode in range(-d, 0) for r in range(D)]

    def rec(start: int, deg_left: int, need: Tuple[int, ...], acc: List[int]):
        if deg_left == 0:
            if not any(need):
                out.append(tuple(acc))
            return
        # each further letter has degree >= 1 and moves the root vector by at
        # most one per coordinate and at most max_height in total
        if max(map(abs, need), default=0) > deg_left or sum(map(abs, need)) > max_height * deg_left:
            return
        for idx in range(start, len(letters)):
            code, dg, vec = letters[idx]
            if dg > deg_left:
                continue
            acc.append(code)
            rec(idx, deg_left - dg, tuple(a - b for a, b in zip(need, vec)), acc)
            acc.pop()

    rec(0, d, target, [])
    return out


# -- text format ----------------------------------------------------------------


def parse_vacuum(text: str, ctx: VacuumContext, source: str = "<input>") -> VacuumElement:
    """Parse the vacuum expression format.  Letters act right to left, so
    nonnegative modes are allowed and simply act on what follows them."""
    alg = ctx.alg
    out: dict = {}
    for term in parse_terms(text, allow_modes=True, source=source):
        cur: Dict[Word, Fraction] = {(): Fraction(1)}
        for f in reversed(term.factors):
            try:
                rank = alg.parse_gen(f.gen)
            except GeneratorSyntaxError as exc:
                raise ExprSyntaxError(str(exc), text, f.pos, source) from None
            nxt: dict = {}
            for w, c in cur.items():
                add_into(nxt, ctx.act_word(rank, f.mode, w), c)
            cur = nxt
        add_into(out, cur, term.coeff)
    return VacuumElement(ctx, out)


def render_monomial(ctx: VacuumContext, w: Word) -> str:
    parts = []
    for code in w:
        rank, mode = ctx.decode(code)
        parts.append(f"{ctx.alg.gen_name(rank)}({mode})")
    return " ".join(parts)


def render_vacuum(v: VacuumElement) -> str:
    if not v.terms:
        return "0"
    items = sorted(v.terms.items())
    text = render_terms(items, lambda w: render_monomial(v.ctx, w) + " |0>" if w else "|0>")
    return text
