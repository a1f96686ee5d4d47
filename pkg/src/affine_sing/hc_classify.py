"""Cartan polynomials from v' and the check of the highest-weight families.

A zero-weight element r of U(sl_n) acts on a highest-weight vector v_mu by a
scalar.  Modulo n_- U + U n_+ only the pure-H PBW monomials survive, so that
scalar is the polynomial ``project_hc(r)`` evaluated at mu(h_i) = mu_i.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .expr_text import parse_terms
from .exact_arith import render_rational
from .simple_lie import Weight, parse_weight, render_weight, sl
from .uea import UeaElement, adjoint, straightener

Exponents = Tuple[int, ...]


class PolySyntaxError(ValueError):
    pass


# -- polynomials in h_1..h_l ----------------------------------------------------


class CartanPoly:
    """Polynomial in h_1..h_l with exact coefficients, keyed by exponent vectors."""

    __slots__ = ("l", "terms")

    def __init__(self, l: int, terms: Dict[Exponents, Fraction] | None = None):
        self.l = l
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != l:
                raise ValueError(f"exponent vector {e} has length != {l}")
            if c:
                clean[tuple(e)] = Fraction(c)
        self.terms: Dict[Exponents, Fraction] = clean

    @classmethod
    def constant(cls, l: int, c) -> "CartanPoly":
        return cls(l, {(0,) * l: Fraction(c)})

    @classmethod
    def var(cls, l: int, i: int) -> "CartanPoly":
        """h_i, 1-based."""
        if not 1 <= i <= l:
            raise ValueError(f"h{i} out of range for rank {l}")
        e = [0] * l
        e[i - 1] = 1
        return cls(l, {tuple(e): Fraction(1)})

    def __add__(self, other: "CartanPoly") -> "CartanPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CartanPoly(self.l, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "CartanPoly":
        c = Fraction(c)
        return CartanPoly(self.l, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CartanPoly):
            return self.scale(other)
        out: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CartanPoly(self.l, out)

    __rmul__ = scale

    def __pow__(self, k: int) -> "CartanPoly":
        out = CartanPoly.constant(self.l, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, CartanPoly) and self.l == other.l and self.terms == other.terms

    def __hash__(self):
        return hash((self.l, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"CartanPoly({render_poly(self)})"


def _degree_key(e: Exponents):
    return (sum(e), tuple(-x for x in e))


def render_poly(p: CartanPoly, var: str = "h") -> str:
    if not p.terms:
        return "0"
    chunks = []
    for k, e in enumerate(sorted(p.terms, key=_degree_key)):
        c = p.terms[e]
        mono = " ".join(
            f"{var}{i}" if x == 1 else f"{var}{i}^{x}"
            for i, x in enumerate(e, start=1) if x
        )
        mag = abs(c)
        if not mono:
            body = render_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{render_rational(mag)} {mono}"
        if k == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


_POLY_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>h\s*(?:_\s*|\[\s*)?(?P<idx>\d+)\s*\]?)"
    r"|(?P<op>[-+*^()]))"
)


def parse_poly(text: str, l: int) -> CartanPoly:
    """Parse sums/products of rationals, variables h1 / h_1 / h[1], powers and
    parentheses.  Juxtaposition means multiplication."""
    toks: List[Tuple[str, str, int]] = []
    pos = 0
    text_s = text.rstrip()
    while pos < len(text_s):
        m = _POLY_TOKEN.match(text_s, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character at column {pos + 1}: {text_s[pos:pos + 10]!r}")
        if m.group("num"):
            toks.append(("num", m.group("num").replace(" ", ""), m.start("num")))
        elif m.group("var"):
            toks.append(("var", m.group("idx"), m.start("var")))
        else:
            toks.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    toks.append(("end", "", len(text_s)))
    i = 0

    def peek():
        return toks[i]

    def fail(msg):
        raise PolySyntaxError(f"{msg} at column {toks[i][2] + 1}")

    def expr() -> CartanPoly:
        nonlocal i
        acc = CartanPoly(l)
        first = True
        while True:
            sign = 1
            if peek()[0] == "op" and peek()[1] in "+-":
                sign = -1 if peek()[1] == "-" else 1
                i += 1
            elif not first:
                break
            first = False
            acc = acc + term().scale(sign)
            if not (peek()[0] == "op" and peek()[1] in "+-"):
                break
        return acc

    def term() -> CartanPoly:
        nonlocal i
        acc = factor()
        while True:
            kind, val, _ = peek()
            if kind == "op" and val == "*":
                i += 1
                acc = acc * factor()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = acc * factor()
            else:
                return acc

    def factor() -> CartanPoly:
        nonlocal i
        kind, val, _ = peek()
        if kind == "num":
            p, _, q = val.partition("/")
            if q and int(q) == 0:
                fail("zero denominator")
            base = CartanPoly.constant(l, Fraction(int(p), int(q) if q else 1))
            i += 1
        elif kind == "var":
            idx = int(val)
            if not 1 <= idx <= l:
                fail(f"variable h{idx} out of range 1..{l}")
            base = CartanPoly.var(l, idx)
            i += 1
        elif kind == "op" and val == "(":
            i += 1
            base = expr()
            if peek()[:2] != ("op", ")"):
                fail("expected ')'")
            i += 1
        else:
            fail("expected a number, variable or '('")
        if peek()[0] == "op" and peek()[1] == "^":
            i += 1
            if peek()[0] != "num" or "/" in peek()[1]:
                fail("expected an integer exponent")
            base = base ** int(peek()[1])
            i += 1
        return base

    if peek()[0] == "end":
        fail("empty polynomial")
    out = expr()
    if peek()[0] != "end":
        fail("unexpected token")
    return out


def load_polys(text: str, l: int) -> Dict[str, CartanPoly]:
    """``name = expression`` lines; ``#`` comments."""
    out: Dict[str, CartanPoly] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, eq, body = line.partition("=")
        if not eq:
            raise PolySyntaxError(f"line {lineno}: expected 'name = polynomial'")
        try:
            out[name.strip()] = parse_poly(body, l)
        except PolySyntaxError as exc:
            raise PolySyntaxError(f"line {lineno}: {exc}") from None
    return out


def evaluate(p: CartanPoly, mu: Sequence) -> Fraction:
    if len(mu) != p.l:
        raise ValueError(f"weight of length {len(mu)} for a polynomial in {p.l} variables")
    mu = [Fraction(c) for c in mu]
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for x, k in zip(mu, e):
            if k:
                term *= x ** k
        total += term
    return total


def poly_rank(polys: Sequence[CartanPoly]) -> int:
    """Dimension of the span, by exact elimination on coefficient vectors."""
    from .singular import rank, RationalMatrix

    monos = sorted({e for p in polys for e in p.terms})
    if not monos:
        return 0
    col = {e: j for j, e in enumerate(monos)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monos)
        for e, c in p.terms.items():
            row[col[e]] = c
        rows.append(row)
    return rank(RationalMatrix.from_rows(rows))


# -- polynomials in t -------------------------------------------------------------


class TPoly:
    """Univariate polynomial in t; ``coeffs[k]`` multiplies t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(c)

    def __add__(self, other: "TPoly") -> "TPoly":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return TPoly((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(m))

    def __mul__(self, other) -> "TPoly":
        if not isinstance(other, TPoly):
            return TPoly(c * Fraction(other) for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return TPoly(out)

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = render_rational(mag) if not mono else (mono if mag == 1 else f"{render_rational(mag)} {mono}")
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"TPoly({self})"


@dataclass(frozen=True)
class WeightFamily:
    """mu(t) = base + t * direction."""

    base: Weight
    direction: Weight

    def __post_init__(self):
        if len(self.base) != len(self.direction):
            raise ValueError("base and direction have different lengths")

    def at(self, t) -> Weight:
        t = Fraction(t)
        return tuple(b + t * d for b, d in zip(self.base, self.direction))

    def __str__(self):
        return f"{render_weight(self.base)} | {render_weight(self.direction)}"


def parse_family(line: str) -> WeightFamily:
    base, bar, direction = line.partition("|")
    if not bar:
        raise ValueError(f"expected 'base | direction': {line!r}")
    return WeightFamily(parse_weight(base.strip()), parse_weight(direction.strip()))


def load_families(text: str) -> List[WeightFamily]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_family(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


def evaluate_family(p: CartanPoly, fam: WeightFamily) -> TPoly:
    if len(fam.base) != p.l:
        raise ValueError(f"family of rank {len(fam.base)} for a polynomial in {p.l} variables")
    lin = [TPoly((b, d)) for b, d in zip(fam.base, fam.direction)]
    powers: Dict[Tuple[int, int], TPoly] = {}

    def pw(i: int, k: int) -> TPoly:
        key = (i, k)
        if key not in powers:
            powers[key] = TPoly((1,)) if k == 0 else pw(i, k - 1) * lin[i]
        return powers[key]

    total = TPoly()
    for e, c in p.terms.items():
        term = TPoly((c,))
        for i, k in enumerate(e):
            if k:
                term = term * pw(i, k)
        total = total + term
    return total


# -- projection and P_0 -------------------------------------------------------------


def project_hc(u: UeaElement) -> CartanPoly:
    """Keep the pure-H PBW monomials of u, read as a polynomial in h_1..h_l."""
    alg = sl(u.n)
    h0 = alg.h_ranks[0]
    hs = set(alg.h_ranks)
    # terms are already PBW-normal; re-normalize defensively anyway
    st = straightener(u.n)
    out: Dict[Exponents, Fraction] = {}
    for w, c in u.terms.items():
        for v, cv in st.normalize_word(w).items():
            if all(x in hs for x in v):
                e = [0] * alg.l
                for x in v:
                    e[x - h0] += 1
                e = tuple(e)
                out[e] = out.get(e, 0) + c * cv
    return CartanPoly(alg.l, out)


@dataclass
class ChainSpec:
    """A linear combination of adjoint words plus the scale relating its
    projection to a named polynomial."""

    name: str
    scale: Fraction
    words: List[Tuple[Fraction, Tuple[int, ...]]]


def load_chains(text: str, n: int) -> List[ChainSpec]:
    alg = sl(n)
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'name | scale | chain'")
        name, scale, body = parts
        words = [
            (t.coeff, tuple(alg.parse_gen(f.gen) for f in t.factors))
            for t in parse_terms(body, allow_modes=False, source=f"line {lineno}")
        ]
        out.append(ChainSpec(name, Fraction(scale), words))
    return out


def apply_chain(spec: ChainSpec, v: UeaElement) -> UeaElement:
    """sum_c c * ad(x1) ... ad(xr) v, rightmost letter first; shared suffixes reuse work."""
    cache: Dict[Tuple[int, ...], UeaElement] = {(): v}

    def run(word):
        if word not in cache:
            cache[word] = adjoint(word[0], run(word[1:]))
        return cache[word]

    acc = UeaElement(v.n)
    for c, word in spec.words:
        acc = acc + run(word).scale(c)
    return acc


def p0_generators(v: UeaElement, chains: Sequence[ChainSpec]) -> List[CartanPoly]:
    """project_hc(chain(v)) / scale for every chain."""
    return [project_hc(apply_chain(spec, v)).scale(1 / spec.scale) for spec in chains]


# -- classification check --------------------------------------------------------


@dataclass
class PairResult:
    poly: int  # 0-based
    family: int
    value: TPoly

    @property
    def ok(self) -> bool:
        return self.value.is_zero()


@dataclass
class ClassificationReport:
    results: List[PairResult] = field(default_factory=list)

    @property
    def failures(self) -> List[PairResult]:
        return [r for r in self.results if not r.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def records(self) -> List[dict]:
        return [
            {"poly": r.poly + 1, "family": r.family + 1, "zero": r.ok, "value": str(r.value)}
            for r in self.results
        ]


def verify_classification(polys: Sequence[CartanPoly], families: Sequence[WeightFamily]) -> ClassificationReport:
    """Every p restricted to every family must vanish identically.
    Results are ordered polynomial-major, family-minor."""
    rep = ClassificationReport()
    for i, p in enumerate(polys):
        for j, fam in enumerate(families):
            rep.results.append(PairResult(i, j, evaluate_family(p, fam)))
    return rep


def reparametrizes(fam: WeightFamily, coord: int) -> bool:
    """True when shifting ``coord`` only moves t along the same family, i.e.
    the direction is a nonzero multiple of the coordinate vector."""
    return bool(fam.direction[coord]) and not any(
        d for k, d in enumerate(fam.direction) if k != coord
    )


def perturb(fam: WeightFamily, coord: int, delta=1) -> WeightFamily:
    base = list(fam.base)
    base[coord] += Fraction(delta)
    return WeightFamily(tuple(base), fam.direction)


# -- dominant integral members of a family ---------------------------------------------


@dataclass(frozen=True)
class IntegralMembers:
    """The t with mu(t) dominant integral.

    kind is one of
      "none"        no such t
      "every"       every complex t (constant family with dominant integral base)
      "finite"      exactly ``values``
      "progression" start + step * s for s in Z>=0 (step may be negative)
    """

    kind: str
    values: Tuple[Fraction, ...] = ()
    start: Optional[Fraction] = None
    step: Optional[Fraction] = None

    @property
    def empty(self) -> bool:
        return self.kind == "none"

    def describe(self) -> str:
        if self.kind == "none":
            return "none"
        if self.kind == "every":
            return "all t"
        if self.kind == "finite":
            return "t in {" + ", ".join(render_rational(v) for v in self.values) + "}"
        if self.start == 0 and self.step == 1:
            return "all t in Z>=0"
        return f"t = {render_rational(self.start)} + {render_rational(self.step)} s, s in Z>=0"


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _merge_cosets(c1: Fraction, g1: Fraction, c2: Fraction, g2: Fraction):
    """(c1 + g1 Z) meet (c2 + g2 Z) for positive rationals g1, g2; None if empty."""
    L = 1
    for x in (c1, g1, c2, g2):
        L = _lcm(L, x.denominator)
    C1, G1, C2, G2 = (int(x * L) for x in (c1, g1, c2, g2))
    g = math.gcd(G1, G2)
    if (C2 - C1) % g:
        return None
    m = G2 // g
    x0 = ((C2 - C1) // g * pow(G1 // g, -1, m)) % m if m > 1 else 0
    C = C1 + G1 * x0
    G = G1 // g * G2
    return Fraction(C % G, L), Fraction(G, L)


def integral_members(fam: WeightFamily) -> IntegralMembers:
    """Solve b_i + t d_i in Z>=0 for all i: a rational coset intersected with a
    (half-)interval."""
    coset: Tuple[Fraction, Fraction] | None = None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for b, d in zip(fam.base, fam.direction):
        b, d = Fraction(b), Fraction(d)
        if d == 0:
            if b.denominator != 1 or b < 0:
                return IntegralMembers("none")
            continue
        # b + t d = a in Z  <=>  t in -b/d + (1/|d|) Z
        this = (-b / d, 1 / abs(d))
        if coset is None:
            coset = (this[0] % this[1], this[1])
        else:
            coset = _merge_cosets(coset[0], coset[1], *this)
            if coset is None:
                return IntegralMembers("none")
        edge = -b / d
        if d > 0:
            lo = edge if lo is None else max(lo, edge)
        else:
            hi = edge if hi is None else min(hi, edge)
    if coset is None:
        return IntegralMembers("every")
    c, g = coset
    if lo is not None:
        first = c + g * math.ceil((lo - c) / g)
        if hi is None:
            return IntegralMembers("progression", start=first, step=g)
        vals = []
        t = first
        while t <= hi:
            vals.append(t)
            t += g
        return IntegralMembers("finite", tuple(vals)) if vals else IntegralMembers("none")
    last = c + g * math.floor((hi - c) / g)
    return IntegralMembers("progression", start=last, step=-g)
