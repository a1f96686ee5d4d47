"""Memoized PBW straightening shared by U(g) and the vacuum module.

Letters are ints, canonical words are nondecreasing tuples.  The only input
is a bracket function returning ``[x, y]`` as ``((letter, coeff), ...)``;
it must not produce central terms (the negative-mode subalgebra of the
affinization has none).

Rewriting ``x y -> y x + [x, y]`` lowers (length, inversions)
lexicographically, so the recursion below terminates.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Tuple

Word = Tuple[int, ...]
Bracket = Callable[[int, int], Tuple[Tuple[int, int], ...]]


def add_into(acc: dict, terms: dict, scale=1) -> None:
    for w, c in terms.items():
        v = acc.get(w, 0) + c * scale
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


class Straightener:
    def __init__(self, bracket: Bracket):
        self.bracket = bracket
        self._cache: Dict[Tuple[int, Word], Dict[Word, int]] = {}

    def insert(self, x: int, w: Word) -> Dict[Word, int]:
        """Normal form of the word ``x w`` where ``w`` is canonical."""
        if not w or x <= w[0]:
            return {(x,) + w: 1}
        key = (x, w)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        y, rest = w[0], w[1:]
        out: Dict[Word, int] = {}
        for u, c in self.insert(x, rest).items():
            add_into(out, self.insert(y, u), c)
        for z, c in self.bracket(x, y):
            add_into(out, self.insert(z, rest), c)
        self._cache[key] = out
        return out

    def left_multiply_word(self, letters: Iterable[int], w: Word) -> Dict[Word, int]:
        """Normal form of ``letters . w`` (``w`` canonical)."""
        cur: Dict[Word, int] = {w: 1}
        for x in reversed(tuple(letters)):
            nxt: Dict[Word, int] = {}
            for u, c in cur.items():
                add_into(nxt, self.insert(x, u), c)
            cur = nxt
        return cur

    def normalize_word(self, letters: Iterable[int]) -> Dict[Word, int]:
        return self.left_multiply_word(letters, ())

    def normalize(self, terms: Dict[Word, object]) -> dict:
        """Normalize a combination of arbitrary words."""
        out: dict = {}
        for w, c in terms.items():
            if _is_canonical(w):
                add_into(out, {w: 1}, c)
            else:
                add_into(out, self.normalize_word(w), c)
        return out


def _is_canonical(w: Word) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1))


def bubble_normalize(word: Word, bracket: Bracket, choose) -> dict:
    """Plain rewriting to a fixed point; ``choose(positions)`` picks which
    adjacent inversion to resolve next.  Used to check confluence against
    :class:`Straightener`."""
    todo = {tuple(word): 1}
    done: dict = {}
    while todo:
        w, c = todo.popitem()
        if c == 0:
            continue
        inv = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not inv:
            add_into(done, {w: 1}, c)
            continue
        i = choose(inv)
        swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
        add_into(todo, {swapped: 1}, c)
        for z, s in bracket(w[i], w[i + 1]):
            add_into(todo, {w[:i] + (z,) + w[i + 2:]: 1}, c * s)
    return done
