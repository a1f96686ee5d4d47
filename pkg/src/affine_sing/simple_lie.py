"""Chevalley data for sl_n in the matrix-unit realization.

    e[i,j] -> E_ij  (i < j),   f[i,j] -> E_ji,   h[i] -> E_ii - E_{i+1,i+1}

Generators are numbered by a *rank* in 0..n^2-2 with every F below every H
below every E, lexicographic inside each kind.  The rank order is the PBW
order used throughout the package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple

Weight = Tuple[Fraction, ...]


class AlgebraMismatchError(ValueError):
    """Operands live in sl_n for different n."""


class GeneratorSyntaxError(ValueError):
    pass


class Gen(NamedTuple):
    kind: str  # "E", "F" or "H"
    i: int
    j: int = 0  # unused for H

    def __str__(self):
        if self.kind == "H":
            return f"h[{self.i}]"
        return f"{self.kind.lower()}[{self.i},{self.j}]"


class SlAlgebra:
    """sl_n with cached structure constants and invariant form."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("sl_n needs n >= 2")
        self.n = n
        self.l = n - 1
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        gens = [Gen("F", i, j) for i, j in pairs]
        gens += [Gen("H", i) for i in range(1, n)]
        gens += [Gen("E", i, j) for i, j in pairs]
        self.gens: Tuple[Gen, ...] = tuple(gens)
        self.dim = len(gens)
        self.rank_of: Dict[Gen, int] = {g: r for r, g in enumerate(gens)}
        self.num_f = len(pairs)
        self.h_ranks = tuple(range(self.num_f, self.num_f + self.l))
        self.e_start = self.num_f + self.l

        mats = [self._matrix(g) for g in gens]
        # bracket_table[a][b] = ((rank, int coeff), ...) for [x_a, x_b]
        table = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                row.append(self._decompose(_commutator(mats[a], mats[b], n)))
            table.append(tuple(row))
        self.bracket_table = tuple(table)
        self.form_table = tuple(
            tuple(_trace_product(mats[a], mats[b], n) for b in range(self.dim))
            for a in range(self.dim)
        )
        # weights in fundamental coordinates and in simple-root coordinates
        cartan = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(self.l)]
                  for i in range(self.l)]
        self.cartan = cartan
        root_coords = []
        for g in gens:
            v = [0] * self.l
            if g.kind != "H":
                sign = 1 if g.kind == "E" else -1
                for k in range(g.i - 1, g.j - 1):
                    v[k] = sign
            root_coords.append(tuple(v))
        self.root_coords: Tuple[Tuple[int, ...], ...] = tuple(root_coords)
        self.gen_weights: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sum(rc[a] * cartan[a][b] for a in range(self.l)) for b in range(self.l))
            for rc in root_coords
        )

    # -- construction helpers -------------------------------------------------

    def _matrix(self, g: Gen) -> Dict[Tuple[int, int], int]:
        if g.kind == "E":
            return {(g.i, g.j): 1}
        if g.kind == "F":
            return {(g.j, g.i): 1}
        return {(g.i, g.i): 1, (g.i + 1, g.i + 1): -1}

    def _decompose(self, mat: Dict[Tuple[int, int], int]) -> Tuple[Tuple[int, int], ...]:
        out = {}
        diag = [0] * (self.n + 1)
        for (r, c), v in mat.items():
            if v == 0:
                continue
            if r < c:
                out[self.rank_of[Gen("E", r, c)]] = v
            elif r > c:
                out[self.rank_of[Gen("F", c, r)]] = v
            else:
                diag[r] = v
        acc = 0
        for i in range(1, self.n):
            acc += diag[i]
            if acc:
                out[self.rank_of[Gen("H", i)]] = acc
        return tuple(sorted(out.items()))

    # -- generators ------------------------------------------------------------

    def e(self, i: int, j: int) -> int:
        return self.rank_of[Gen("E", i, j)]

    def f(self, i: int, j: int) -> int:
        return self.rank_of[Gen("F", i, j)]

    def h(self, i: int) -> int:
        return self.rank_of[Gen("H", i)]

    def kind(self, rank: int) -> str:
        if rank < self.num_f:
            return "F"
        if rank < self.e_start:
            return "H"
        return "E"

    def parse_gen(self, text: str) -> int:
        g = parse_generator(text)
        if g not in self.rank_of:
            raise GeneratorSyntaxError(f"{text!r} is not a generator of sl_{self.n}")
        return self.rank_of[g]

    def gen_name(self, rank: int) -> str:
        return str(self.gens[rank])

    def element(self, rank: int, coeff=1) -> "LieElement":
        return LieElement(self.n, {rank: Fraction(coeff)})

    # -- weights -----------------------------------------------------------------

    def zero_weight(self) -> Weight:
        return tuple(Fraction(0) for _ in range(self.l))

    def fundamental(self, i: int) -> Weight:
        return tuple(Fraction(int(k == i - 1)) for k in range(self.l))

    def rho(self) -> Weight:
        return tuple(Fraction(1) for _ in range(self.l))

    def theta(self) -> Weight:
        return self.weight_of(self.e(1, self.n))

    def weight_of(self, rank: int) -> Weight:
        return tuple(Fraction(c) for c in self.gen_weights[rank])

    def to_root_coords(self, mu: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Coordinates of ``mu`` in the simple-root basis (inverse Cartan matrix)."""
        n, l = self.n, self.l
        # (A^{-1})_{ij} = min(i,j) - i j / n, 1-based
        return tuple(
            sum(Fraction(min(i, j) * n - i * j, n) * Fraction(mu[j - 1]) for j in range(1, l + 1))
            for i in range(1, l + 1)
        )

    def __eq__(self, other):
        return isinstance(other, SlAlgebra) and other.n == self.n

    def __hash__(self):
        return hash(("sl", self.n))

    def __repr__(self):
        return f"SlAlgebra({self.n})"


@lru_cache(maxsize=None)
def sl(n: int) -> SlAlgebra:
    """Shared, immutable sl_n instance."""
    return SlAlgebra(n)


def _commutator(a, b, n):
    out = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            if j == k:
                out[(i, l)] = out.get((i, l), 0) + x * y
            if l == i:
                out[(k, j)] = out.get((k, j), 0) - x * y
    return out


def _trace_product(a, b, n):
    return sum(x * b.get((j, i), 0) for (i, j), x in a.items())


_GEN_RE = re.compile(r"\s*([efhEFH])\s*\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]\s*$")


def parse_generator(text: str) -> Gen:
    m = _GEN_RE.match(text)
    if not m:
        raise GeneratorSyntaxError(f"bad generator syntax: {text!r}")
    kind = m.group(1).upper()
    i = int(m.group(2))
    if kind == "H":
        if m.group(3) is not None:
            raise GeneratorSyntaxError(f"h takes one index: {text!r}")
        return Gen("H", i)
    if m.group(3) is None:
        raise GeneratorSyntaxError(f"{kind.lower()} takes two indices: {text!r}")
    j = int(m.group(3))
    if not i < j:
        raise GeneratorSyntaxError(f"need i < j in {text!r}")
    return Gen(kind, i, j)


class LieElement:
    """Finite combination of Chevalley generators of sl_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[int, Fraction] | None = None):
        self.n = n
        self.terms = {r: Fraction(c) for r, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_gen(cls, n: int, text: str, coeff=1) -> "LieElement":
        return cls(n, {sl(n).parse_gen(text): Fraction(coeff)})

    def __add__(self, other):
        _check(self, other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, 0) + c
        return LieElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "LieElement":
        return LieElement(self.n, {r: v * c for r, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        alg = sl(self.n)
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{alg.gen_name(r)}" for r, c in sorted(self.terms.items()))


def _check(x: LieElement, y: LieElement):
    if x.n != y.n:
        raise AlgebraMismatchError(f"sl_{x.n} vs sl_{y.n}")


def bracket(x: LieElement, y: LieElement) -> LieElement:
    _check(x, y)
    table = sl(x.n).bracket_table
    out: Dict[int, Fraction] = {}
    for a, ca in x.terms.items():
        row = table[a]
        for b, cb in y.terms.items():
            for r, s in row[b]:
                out[r] = out.get(r, 0) + ca * cb * s
    return LieElement(x.n, out)


def invariant_form(x: LieElement, y: LieElement) -> Fraction:
    """trace(XY); for sl_n this is the form with <theta, theta> = 2."""
    _check(x, y)
    table = sl(x.n).form_table
    return sum((ca * cb * table[a][b] for a, ca in x.terms.items() for b, cb in y.terms.items()),
               Fraction(0))


def weight_inner(mu: Sequence, nu: Sequence) -> Fraction:
    """Inner product on h^* with <omega_i, omega_j> = min(i,j) - ij/n."""
    if len(mu) != len(nu):
        raise AlgebraMismatchError(f"weights of length {len(mu)} and {len(nu)}")
    n = len(mu) + 1
    total = Fraction(0)
    for i, a in enumerate(mu, start=1):
        if a == 0:
            continue
        for j, b in enumerate(nu, start=1):
            if b:
                total += Fraction(a) * Fraction(b) * Fraction(min(i, j) * n - i * j, n)
    return total


def dominant_integral(mu: Iterable) -> bool:
    return all(Fraction(c).denominator == 1 and c >= 0 for c in mu)


def parse_weight(text: str) -> Weight:
    from .exact_arith import parse_rational

    parts = [p for p in text.replace(" ", "").split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"bad weight syntax: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def render_weight(mu: Sequence) -> str:
    from .exact_arith import render_rational

    return ",".join(render_rational(Fraction(c)) for c in mu)


def weight_add(mu: Sequence, nu: Sequence) -> Weight:
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(mu, nu))


def weight_scale(c, mu: Sequence) -> Weight:
    return tuple(Fraction(c) * Fraction(a) for a in mu)
