"""Relator words in the two generators a, b and their lattice paths.

Letters are single characters: ``a``, ``b`` and the inverses ``A``, ``B``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable

from .errors import ParseError

LETTERS = "abAB"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
STEP = {"a": (1, 0), "A": (-1, 0), "b": (0, 1), "B": (0, -1)}

_TOKEN = re.compile(r"([abAB])(?:\^([+-]?\d+))?\Z")


def free_reduce(letters: Iterable[str]) -> tuple[str, ...]:
    stack: list[str] = []
    for x in letters:
        if x not in INVERSE:
            raise ParseError(f"not a letter: {x!r}")
        if stack and stack[-1] == INVERSE[x]:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word. The constructor reduces its input."""

    letters: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return format_word(self)

    def rotate(self, k: int) -> Word:
        """Cyclic rotation by ``k`` letters (reduced again)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k])

    def inverse(self) -> Word:
        return Word(tuple(INVERSE[x] for x in reversed(self.letters)))

    def is_cyclically_reduced(self) -> bool:
        return len(self) < 2 or self.letters[0] != INVERSE[self.letters[-1]]


@dataclass(frozen=True)
class LatticePath:
    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs or vs[0] != (0, 0):
            raise ValueError("a lattice path starts at the origin")
        for (x0, y0), (x1, y1) in zip(vs, vs[1:]):
            if abs(x1 - x0) + abs(y1 - y0) != 1:
                raise ValueError("consecutive vertices must differ by a unit step")

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.vertices[-1] == (0, 0)

    @property
    def segment_count(self) -> int:
        return len(self.vertices) - 1


def parse_word(text: str) -> Word:
    """Parse whitespace separated tokens such as ``a^2 b^-3 A B``.

    Uppercase letters are inverses, so ``A^2`` is ``a^-2``. The result is
    freely reduced after power expansion.
    """
    letters: list[str] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad token {tok!r} in word {text!r}")
        letter, exp = m.group(1), m.group(2)
        n = 1 if exp is None else int(exp)
        if n == 0:
            raise ParseError(f"zero exponent in token {tok!r}")
        if n < 0:
            letter = INVERSE[letter]
        letters.extend(letter * abs(n))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    """Canonical power notation: ``a^2 b^-3``. Inverses are printed as
    negative powers of the lowercase generator."""
    parts = []
    for letter, run in groupby(w.letters):
        n = len(list(run))
        gen = letter.lower()
        if letter.isupper():
            parts.append(f"{gen}^-{n}")
        else:
            parts.append(gen if n == 1 else f"{gen}^{n}")
    return " ".join(parts)


def exponent_sums(w: Word) -> tuple[int, int]:
    sa = sum(STEP[x][0] for x in w.letters)
    sb = sum(STEP[x][1] for x in w.letters)
    return sa, sb


def build_path(w: Word) -> LatticePath:
    x = y = 0
    vertices = [(0, 0)]
    for letter in w.letters:
        dx, dy = STEP[letter]
        x, y = x + dx, y + dy
        vertices.append((x, y))
    return LatticePath(tuple(vertices))
