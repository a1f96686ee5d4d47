"""PBW arithmetic in U(sl_n).

Elements are dicts ``word -> Fraction`` where a word is a nondecreasing tuple
of generator ranks (F's, then H's, then E's).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple, Union

from .expr_text import ExprSyntaxError, parse_terms
from .exact_arith import render_rational
from .pbw import Straightener, add_into
from .simple_lie import AlgebraMismatchError, GeneratorSyntaxError, LieElement, sl

Word = Tuple[int, ...]


@lru_cache(maxsize=None)
def straightener(n: int) -> Straightener:
    table = sl(n).bracket_table
    return Straightener(lambda x, y: table[x][y])


class UeaElement:
    """A PBW-normal element of U(sl_n)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Word, Fraction] | None = None):
        self.n = n
        self.terms: Dict[Word, Fraction] = {
            tuple(w): Fraction(c) for w, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def one(cls, n: int) -> "UeaElement":
        return cls(n, {(): Fraction(1)})

    @classmethod
    def gen(cls, n: int, rank: int, coeff=1) -> "UeaElement":
        return cls(n, {(rank,): Fraction(coeff)})

    def __add__(self, other: "UeaElement") -> "UeaElement":
        _same(self, other)
        out = dict(self.terms)
        add_into(out, other.terms)
        return UeaElement(self.n, out)

    def __sub__(self, other: "UeaElement") -> "UeaElement":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "UeaElement":
        c = Fraction(c)
        return UeaElement(self.n, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UeaElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, UeaElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"UeaElement(sl{self.n}: {render_uea(self)})"


def _same(u: UeaElement, v: UeaElement):
    if u.n != v.n:
        raise AlgebraMismatchError(f"U(sl_{u.n}) vs U(sl_{v.n})")


def pbw_normalize(n: int, word: Iterable[int]) -> UeaElement:
    """PBW normal form of a product of generators given by rank."""
    return UeaElement(n, straightener(n).normalize_word(tuple(word)))


def multiply(u: UeaElement, v: UeaElement) -> UeaElement:
    _same(u, v)
    st = straightener(u.n)
    out: dict = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            add_into(out, st.left_multiply_word(a, b), ca * cb)
    return UeaElement(u.n, out)


def monomial_weight(n: int, word: Sequence[int]) -> Tuple[int, ...]:
    """h-weight of a monomial in fundamental coordinates."""
    wts = sl(n).gen_weights
    acc = [0] * (n - 1)
    for r in word:
        for k, c in enumerate(wts[r]):
            acc[k] += c
    return tuple(acc)


def _as_lie(n: int, x: Union[int, LieElement]) -> Dict[int, Fraction]:
    if isinstance(x, LieElement):
        if x.n != n:
            raise AlgebraMismatchError(f"sl_{x.n} acting on U(sl_{n})")
        return x.terms
    return {x: Fraction(1)}


def adjoint(x: Union[int, LieElement], u: UeaElement) -> UeaElement:
    """[x, u] = xu - ux, computed as a derivation letter by letter."""
    n = u.n
    xs = _as_lie(n, x)
    table = sl(n).bracket_table
    st = straightener(n)
    out: dict = {}
    for word, c in u.terms.items():
        for pos, letter in enumerate(word):
            head, tail = word[:pos], word[pos + 1:]
            for a, ca in xs.items():
                for z, s in table[a][letter]:
                    # head is canonical; z . tail needs straightening first
                    for t, ct in st.insert(z, tail).items():
                        add_into(out, st.left_multiply_word(head, t), c * ca * s * ct)
    return UeaElement(n, out)


def adjoint_chain(chain: Sequence[Union[int, LieElement]], u: UeaElement) -> UeaElement:
    """(x_1 ... x_r)_L u = x_1_L( ... x_r_L(u)); the rightmost factor acts first."""
    for x in reversed(list(chain)):
        u = adjoint(x, u)
    return u


# -- text format ----------------------------------------------------------------


def parse_uea(text: str, n: int, source: str = "<input>") -> UeaElement:
    alg = sl(n)
    st = straightener(n)
    out: dict = {}
    for term in parse_terms(text, allow_modes=False, source=source):
        try:
            word = tuple(alg.parse_gen(f.gen) for f in term.factors)
        except GeneratorSyntaxError as exc:
            bad = next(f for f in term.factors if _bad_gen(alg, f.gen))
            raise ExprSyntaxError(str(exc), text, bad.pos, source) from None
        add_into(out, st.normalize_word(word), term.coeff)
    return UeaElement(n, out)


def _bad_gen(alg, text):
    try:
        alg.parse_gen(text)
        return False
    except GeneratorSyntaxError:
        return True


def word_sort_key(word: Word):
    return (len(word), word)


def render_word(n: int, word: Word) -> str:
    alg = sl(n)
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = alg.gen_name(word[i])
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return " ".join(parts)


def render_terms(items, render_mono) -> str:
    """Shared renderer: ``items`` is an ordered list of (monomial, coeff)."""
    if not items:
        return "0"
    chunks = []
    for k, (mono, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = render_mono(mono)
        if not body:
            text = render_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{render_rational(mag)} {body}"
        if k == 0:
            chunks.append(text if sign == "+" else f"-{text}")
        else:
            chunks.append(f"{sign} {text}")
    return " ".join(chunks)


def render_uea(u: UeaElement) -> str:
    items = sorted(u.terms.items(), key=lambda kv: word_sort_key(kv[0]))
    return render_terms(items, lambda w: render_word(u.n, w))
