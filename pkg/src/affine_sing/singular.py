"""Singular-vector certification and search in V^k(sl_n)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .affine_vacuum import VacuumContext, VacuumElement, act, degree, hweight, weight_basis
from .simple_lie import Weight, render_weight


class InhomogeneousError(ValueError):
    pass


class RationalMatrix:
    """Dense rectangular matrix of Fractions (rows x cols)."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows, self.cols = rows, cols
        if entries is None:
            entries = [[Fraction(0)] * cols for _ in range(rows)]
        entries = [[Fraction(x) for x in row] for row in entries]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entries do not match the stated shape")
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def sparse_rows(self) -> List[Dict[int, Fraction]]:
        return [{j: x for j, x in enumerate(r) if x} for r in self.entries]

    def apply(self, vec: Sequence) -> List[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, vec)), Fraction(0)) for r in self.entries]


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {j: v // g for j, v in row.items()}
    return row


def _integral(row: Dict[int, Fraction]) -> Dict[int, int]:
    den = 1
    for v in row.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    return {j: int(v * den) for j, v in row.items() if v}


def echelon(rows, ncols: int):
    """Fraction-free sparse forward elimination.

    Rows are scaled to primitive integer vectors; a new row is reduced
    against existing pivots on its leading column (the first nonzero
    column, scanning row-major) until it vanishes or gets a fresh pivot.
    Returns ``{pivot_col: row}``.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    for raw in rows:
        row = _integral({j: Fraction(v) for j, v in raw.items() if v})
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = _primitive(row)
                break
            a, b = prow[lead], row[lead]
            g = math.gcd(a, b)
            sa, sb = a // g, b // g
            new = {j: v * sa for j, v in row.items()}
            for j, v in prow.items():
                x = new.get(j, 0) - v * sb
                if x:
                    new[j] = x
                else:
                    new.pop(j, None)
            row = _primitive(new) if new else new
    return pivots


def nullspace_sparse(rows, ncols: int) -> List[List[Fraction]]:
    pivots = echelon(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    order = sorted(pivots, reverse=True)
    basis = []
    for f in free:
        x: Dict[int, Fraction] = {f: Fraction(1)}
        for p in order:
            row = pivots[p]
            s = sum((v * x[j] for j, v in row.items() if j != p and j in x), Fraction(0))
            if s:
                x[p] = -s / row[p]
        vec = [x.get(j, Fraction(0)) for j in range(ncols)]
        first = next(v for v in vec if v)
        basis.append([v / first for v in vec])
    return basis


def nullspace(M: RationalMatrix) -> List[List[Fraction]]:
    """Basis of the right kernel; each vector has first nonzero entry 1."""
    return nullspace_sparse(M.sparse_rows(), M.cols)


def rank(M: RationalMatrix) -> int:
    return len(echelon(M.sparse_rows(), M.cols))


# -- singular vectors ----------------------------------------------------------


def raising_operators(ctx: VacuumContext) -> List[Tuple[str, int, int]]:
    """(label, rank, mode): e_{i,i+1}(0) for all i and f_{1,n}(1)."""
    alg = ctx.alg
    ops = [(f"e[{i},{i + 1}](0)", alg.e(i, i + 1), 0) for i in range(1, ctx.n)]
    ops.append((f"f[1,{ctx.n}](1)", alg.f(1, ctx.n), 1))
    return ops


def extended_operators(ctx: VacuumContext) -> List[Tuple[str, int, int]]:
    """All e_{i,j}(0) and x(1): a redundant check of singularity."""
    alg = ctx.alg
    ops = [(f"{alg.gen_name(r)}(0)", r, 0) for r in range(alg.e_start, alg.dim)]
    ops += [(f"{alg.gen_name(r)}(1)", r, 1) for r in range(alg.dim)]
    return ops


@dataclass
class CheckResult:
    label: str
    residual: VacuumElement

    @property
    def is_zero(self) -> bool:
        return self.residual.is_zero()


@dataclass
class SingularReport:
    weight: Weight | None
    degree: int | None
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.is_zero for c in self.checks)

    def records(self) -> List[dict]:
        from .affine_vacuum import render_vacuum

        return [
            {
                "operator": c.label,
                "zero": c.is_zero,
                "residual_terms": len(c.residual),
                "residual": render_vacuum(c.residual),
            }
            for c in self.checks
        ]


def homogeneous_component(v: VacuumElement) -> Tuple[Weight | None, int | None]:
    ctx = v.ctx
    seen = {(hweight(ctx, w), degree(ctx, w)) for w in v.terms}
    if not seen:
        return None, None
    if len(seen) > 1:
        raise InhomogeneousError(
            "element mixes components: "
            + "; ".join(f"({render_weight(a)}, deg {b})" for a, b in sorted(seen))
        )
    return seen.pop()


def verify_singular(v: VacuumElement, extended: bool = False) -> SingularReport:
    ctx = v.ctx
    wt, deg = homogeneous_component(v)
    ops = extended_operators(ctx) if extended else raising_operators(ctx)
    report = SingularReport(wt, deg)
    for label, r, m in ops:
        report.checks.append(CheckResult(label, act(ctx, r, m, v)))
    return report


def search_singular(ctx: VacuumContext, lam: Sequence, d: int) -> List[VacuumElement]:
    """Basis of the joint kernel of the raising operators on the (lam, d) component."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    lam = tuple(Fraction(c) for c in lam)
    source = weight_basis(ctx, lam, d)
    if not source:
        return []
    rows: List[Dict[int, Fraction]] = []
    alg = ctx.alg
    for label, r, m in raising_operators(ctx):
        shift = alg.gen_weights[r]
        tgt_wt = tuple(a + b for a, b in zip(lam, shift))
        tgt_deg = d - m
        target = weight_basis(ctx, tgt_wt, tgt_deg) if tgt_deg >= 0 else []
        index = {w: i for i, w in enumerate(target)}
        block: List[Dict[int, Fraction]] = [dict() for _ in target]
        for col, w in enumerate(source):
            for u, c in ctx.act_word(r, m, w).items():
                i = index.get(u)
                if i is None:
                    raise AssertionError(f"image of {label} left its weight component")
                block[i][col] = Fraction(c)
        rows.extend(b for b in block if b)
    kernel = nullspace_sparse(rows, len(source))
    out = []
    for vec in kernel:
        v = VacuumElement(ctx, {w: c for w, c in zip(source, vec) if c})
        if not verify_singular(v).passed:
            raise AssertionError("kernel element failed the singularity check")
        out.append(v)
    return out


def coordinates_in_words(v: VacuumElement, words: Sequence[Sequence[Tuple[int, int]]]) -> List[Fraction]:
    """Coefficients x_j with v = sum_j x_j * w_j |0>, where each w_j is a list of
    (rank, mode) letters in any order.  Raises ValueError unless the solution
    exists and is unique."""
    from .affine_vacuum import normal_form

    ctx = v.ctx
    cols = [normal_form(ctx, w).terms for w in words] + [v.terms]
    rows: Dict[Tuple[int, ...], Dict[int, Fraction]] = {}
    for j, col in enumerate(cols):
        for mono, c in col.items():
            rows.setdefault(mono, {})[j] = c
    m = len(words)
    kernel = nullspace_sparse(list(rows.values()), m + 1)
    hits = [vec for vec in kernel if vec[m]]
    if not hits:
        raise ValueError("vector is not in the span of the given words")
    if len(kernel) > 1:
        raise ValueError("the given words are linearly dependent")
    vec = hits[0]
    return [-x / vec[m] for x in vec[:m]]
