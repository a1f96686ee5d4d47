"""Highest-weight eigenvalues for the minimal W-algebra of sl_{m+2} and the
small-weight enumeration that rules out low conformal weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from .affine_vacuum import CriticalLevelError
from .simple_lie import sl, weight_inner


@dataclass(frozen=True)
class WTopData:
    j_eigenvalue: Fraction
    conformal_weight: Fraction


def sugawara_weight(n: int, k, lam: Sequence) -> Fraction:
    """<lam, lam + 2 rho> / (2 (k + n)) for sl_n."""
    k = Fraction(k)
    if k == -n:
        raise CriticalLevelError(f"k = {k} is critical for sl_{n}")
    if len(lam) != n - 1:
        raise ValueError(f"weight of length {len(lam)} for sl_{n}")
    lam = tuple(Fraction(c) for c in lam)
    rho2 = tuple(2 * c for c in sl(n).rho())
    shifted = tuple(a + b for a, b in zip(lam, rho2))
    return weight_inner(lam, shifted) / (2 * (k + n))


def minimal_w_top(m: int, k, lam: Sequence) -> WTopData:
    """J(0) and L(0) on the top vector of the W^min module built from lam (a weight of sl_{m+2})."""
    n = m + 2
    alg = sl(n)
    lam = tuple(Fraction(c) for c in lam)
    j = weight_inner(lam, tuple(a - b for a, b in zip(alg.fundamental(1), alg.fundamental(n - 1))))
    h = sugawara_weight(n, k, lam) - weight_inner(lam, alg.theta()) / 2
    return WTopData(j, h)


class SmallWeightPair(NamedTuple):
    q: int
    n: int
    t: int
    h: Fraction
    j: int


def _h(q: int, n: int) -> Fraction:
    return Fraction((q * q + q) * (n + 1), 2)


def small_weight_pairs(bound=4) -> List[SmallWeightPair]:
    """All (q, n) with q >= 1, n >= 2 and (q^2 + q)(n + 1)/2 <= bound.

    Here t = q(n + 1) is the smallest t making the J-eigenvalue 2n t/(2n+2)
    integral, and h = t^2/(2n+2) + t/2 is the corresponding conformal weight.
    The weight grows in both q and n, so the scan stops at the first overshoot.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    rows = []
    q = 1
    while _h(q, 2) <= bound:
        n = 2
        while _h(q, n) <= bound:
            rows.append(SmallWeightPair(q, n, q * (n + 1), _h(q, n), q * n))
            n += 1
        q += 1
    return rows
