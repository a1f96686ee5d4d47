"""Tokenizer/parser for the linear-combination text formats.

    UEA:     7/2 e[1,5] e[2,6] - 4/3 f[1,2] e[1,5] e[1,6] + h[1]^2
    vacuum:  5/2 e[1,5](-2) e[2,6](-2) |0> - e[1,6](-3) e[2,5](-1)

Terms are ``[coeff [*]] factor*`` joined by ``+``/``-``; a factor is a
generator with an optional ``(mode)`` and an optional ``^power``.  ``#``
starts a comment.  Whitespace (including newlines) is insignificant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple


class ExprSyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int, source: str = "<input>"):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col, self.source = line, col, source
        super().__init__(f"{source}:{line}:{col}: {msg}")


class Factor(NamedTuple):
    gen: str  # e.g. "e[1,5]"
    mode: Optional[int]
    pos: int


class Term(NamedTuple):
    coeff: Fraction
    factors: Tuple[Factor, ...]
    pos: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<gen>[efhEFH]\s*\[\s*\d+\s*(?:,\s*\d+\s*)?\])
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<vac>\|\s*0\s*>|\bvac\b)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<sign>[+-])
  | (?P<star>\*)
  | (?P<caret>\^)
    """,
    re.VERBOSE,
)


def _tokenize(text: str, source: str):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", text, pos, source)
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(), pos))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_terms(text: str, allow_modes: bool, source: str = "<input>") -> List[Term]:
    toks = _tokenize(text, source)
    i = 0
    terms: List[Term] = []

    def peek():
        return toks[i]

    def fail(msg, tok=None):
        tok = tok or toks[i]
        raise ExprSyntaxError(msg, text, tok[2], source)

    def signed_int():
        nonlocal i
        sign = 1
        if peek()[0] == "sign":
            sign = -1 if peek()[1] == "-" else 1
            i += 1
        if peek()[0] != "num" or "/" in peek()[1]:
            fail("expected an integer")
        val = sign * int(peek()[1])
        i += 1
        return val

    if peek()[0] == "end":
        fail("empty expression")
    first = True
    while peek()[0] != "end":
        start = peek()[2]
        sign = 1
        if peek()[0] == "sign":
            sign = -1 if peek()[1] == "-" else 1
            i += 1
        elif not first:
            fail("expected '+' or '-' between terms")
        first = False
        coeff = Fraction(1)
        seen_coeff = False
        if peek()[0] == "num":
            num = peek()[1].replace(" ", "")
            p, _, q = num.partition("/")
            if q and int(q) == 0:
                fail("zero denominator")
            coeff = Fraction(int(p), int(q) if q else 1)
            seen_coeff = True
            i += 1
            if peek()[0] == "star":
                i += 1
        factors: List[Factor] = []
        saw_vac = False
        while True:
            kind = peek()[0]
            if kind == "gen":
                if saw_vac:
                    fail("generator after the vacuum")
                tok = peek()
                i += 1
                mode = None
                if peek()[0] == "lpar":
                    if not allow_modes:
                        fail("modes are not allowed here")
                    i += 1
                    mode = signed_int()
                    if peek()[0] != "rpar":
                        fail("expected ')'")
                    i += 1
                elif allow_modes:
                    fail("expected '(mode)' after generator")
                power = 1
                if peek()[0] == "caret":
                    i += 1
                    power = signed_int()
                    if power < 1:
                        fail("power must be positive")
                f = Factor(re.sub(r"\s+", "", tok[1]), mode, tok[2])
                factors.extend([f] * power)
                if peek()[0] == "star":
                    i += 1
            elif kind == "vac":
                if not allow_modes or saw_vac:
                    fail("unexpected vacuum symbol")
                saw_vac = True
                i += 1
            else:
                break
        if not factors and not seen_coeff and not saw_vac:
            fail("expected a term")
        terms.append(Term(sign * coeff, tuple(factors), start))
    return terms
