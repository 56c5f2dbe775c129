"""Exact real-root counting for integer polynomials.

A number field has a real place iff its minimal polynomial has a real
root. Counting uses Sturm sequences built from pseudo-remainders scaled by
positive factors only, so every sign in the chain is exact.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DegeneracyError, ParseError


def _trim(coeffs) -> tuple[int, ...]:
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficients constant term first; the zero polynomial has none."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def compose_neg(self) -> IntPolynomial:
        """``f(-x)``."""
        return IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide by the (positive) content; signs are preserved."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            term = body + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(x(?:\s*\^\s*(\d+))?)?")


def parse_polynomial(text) -> IntPolynomial:
    """Accept a coefficient list ``[c0, c1, ...]`` (constant first), as a
    Python sequence or JSON text, or a string like ``x^4 - x^3 - 2x^2 + 1``."""
    if not isinstance(text, str):
        return IntPolynomial(tuple(int(c) for c in text))
    s = text.strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad coefficient list {text!r}: {exc}") from None
        if not all(isinstance(c, int) for c in data):
            raise ParseError(f"coefficients must be integers: {text!r}")
        return IntPolynomial(tuple(data))
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, xpart, exp = m.groups()
        if m.end() == pos or (not num and not xpart):
            raise ParseError(f"cannot parse polynomial at {s[pos:]!r}")
        if pos > 0 and not sign:
            raise ParseError(f"missing operator before {s[pos:]!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = 0 if not xpart else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``k * a`` by ``b`` for some positive integer ``k``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lb = b.lc
    s = 1 if lb > 0 else -1
    r = list(a.coeffs)
    db = b.degree
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [abs(lb) * c for c in r]
        for k, c in enumerate(b.coeffs):
            r[k + shift] -= s * lr * c
        r = list(_trim(r))
    return IntPolynomial(tuple(r))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    if a.is_zero():
        return a
    a = a.primitive()
    return -a if a.lc < 0 else a


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` when ``b`` divides ``a`` in Q[x] and ``b`` is primitive."""
    r = [Fraction(c) for c in a.coeffs]
    q = [Fraction(0)] * max(a.degree - b.degree + 1, 0)
    for shift in range(len(q) - 1, -1, -1):
        t = r[shift + b.degree] / b.lc
        q[shift] = t
        for k, c in enumerate(b.coeffs):
            r[k + shift] -= t * c
    if any(r) or any(x.denominator != 1 for x in q):
        raise ArithmeticError("inexact polynomial division")
    return IntPolynomial(tuple(int(x) for x in q))


def squarefree_part(f) -> IntPolynomial:
    f = f if isinstance(f, IntPolynomial) else parse_polynomial(f)
    if f.is_zero():
        raise DegeneracyError("the zero polynomial has no square-free part")
    if f.degree == 0:
        return IntPolynomial((1,))
    g = poly_gcd(f, f.derivative())
    out = exact_quotient(f, g).primitive()
    return -out if out.lc < 0 else out


def sturm_sequence(f: IntPolynomial) -> list[IntPolynomial]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        seq.append(-pseudo_remainder(seq[-2], seq[-1]).primitive())
    if seq[-1].is_zero():
        seq.pop()
    return seq


def sign_variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u * v < 0)


def count_real_roots(f) -> int:
    """Number of distinct real roots."""
    f = f if isinstance(f, IntPolynomial) else parse_polynomial(f)
    if f.is_zero() or f.degree < 1:
        raise DegeneracyError("real-root counting needs degree >= 1")
    seq = sturm_sequence(squarefree_part(f))
    at_pos = [1 if p.lc > 0 else -1 for p in seq]
    at_neg = [s if p.degree % 2 == 0 else -s for s, p in zip(at_pos, seq)]
    return sign_variations(at_neg) - sign_variations(at_pos)


def has_real_root(f) -> bool:
    f = f if isinstance(f, IntPolynomial) else parse_polynomial(f)
    if f.is_zero() or f.degree < 1:
        raise DegeneracyError("real-root counting needs degree >= 1")
    if f.degree % 2 == 1:
        return True
    return count_real_roots(f) >= 1
