"""Exact univariate polynomials over the integers.

A polynomial is a dense, lowest-degree-first tuple of arbitrary-precision
integers: Polynomial([4, 4, 0, 1]) is 4 + 4z + z^3. The zero polynomial is
the empty tuple. All values are immutable and every operation is pure.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction

from . import numtheory


class Polynomial:
    """Dense integer polynomial, coefficients indexed by power of z."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = [operator.index(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        """Coefficient of z^i (0 beyond the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        out = x * 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def shift_up(self, t: int) -> Polynomial:
        """Multiply by z^t."""
        if self.is_zero():
            return self
        return Polynomial((0,) * t + self.coeffs)

    # -- display ------------------------------------------------------------

    def to_sparse_string(self) -> str:
        """Canonical sparse form, highest power first, e.g. 'z^3 + 4z + 4'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial('{self.to_sparse_string()}')"


ZERO = Polynomial()
ONE = Polynomial([1])
Z = Polynomial([0, 1])


@dataclass(frozen=True)
class NormalizedInput:
    """f = content * z**z_power * primitive_part, with the primitive part
    having gcd-1 coefficients and nonzero constant and leading terms."""

    original: Polynomial
    content: int
    z_power: int
    primitive_part: Polynomial


def content(f: Polynomial) -> int:
    """Positive gcd of the coefficients."""
    if f.is_zero():
        raise ValueError("zero polynomial has no content")
    return math.gcd(*f.coeffs) if len(f.coeffs) > 1 else abs(f.coeffs[0])


def is_primitive(f: Polynomial) -> bool:
    return not f.is_zero() and content(f) == 1


def normalize(f: Polynomial) -> NormalizedInput:
    """Split off content and z-power so criteria see a primitive polynomial
    with nonzero constant term."""
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    c = content(f)
    t = 0
    while f.coeffs[t] == 0:
        t += 1
    prim = Polynomial([a // c for a in f.coeffs[t:]])
    return NormalizedInput(original=f, content=c, z_power=t, primitive_part=prim)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def evaluate(f: Polynomial, x):
    return f.evaluate(x)


def divmod_exact(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, bool]:
    """Integer polynomial division with an exactness flag.

    Returns (q, r, exact) with f = q*g + r always. exact is True precisely
    when g divides f over the integers; otherwise q and r hold the state
    where division stopped (the first non-integral quotient step, or the
    nonzero final remainder).
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    gl = g.leading_coefficient
    gd = g.degree
    q = [0] * max(len(rem) - gd, 0)
    for k in range(len(rem) - gd - 1, -1, -1):
        top = rem[k + gd]
        if top == 0:
            continue
        step, residue = divmod(top, gl)
        if residue:
            return Polynomial(q), Polynomial(rem), False
        q[k] = step
        for j, gc in enumerate(g.coeffs):
            rem[k + j] -= step * gc
    r = Polynomial(rem)
    return Polynomial(q), r, r.is_zero()


def divides_exactly(g: Polynomial, f: Polynomial) -> Polynomial | None:
    """Quotient f/g when g divides f over the integers, else None."""
    q, _, exact = divmod_exact(f, g)
    return q if exact else None


def scale_transform(f: Polynomial, b: int) -> Polynomial:
    """Map f(z) to b**(m-1) * f(z/b) for a positive divisor b of the leading
    coefficient. The result has integer coefficients a_i * b**(m-1-i) and the
    same number of irreducible integer factors as f."""
    if f.is_zero() or f.constant_term == 0:
        raise ValueError("scale transform requires a nonzero constant term")
    if not is_primitive(f):
        raise ValueError("scale transform requires a primitive polynomial")
    m = f.degree
    if b < 1 or abs(f.leading_coefficient) % b != 0:
        raise ValueError(f"invalid divisor: {b} does not divide the leading coefficient")
    if m == 0:
        return f
    out = [a * b ** (m - 1 - i) for i, a in enumerate(f.coeffs[:-1])]
    out.append(f.leading_coefficient // b)
    return Polynomial(out)


def rational_roots(f: Polynomial) -> set[Fraction]:
    """All rational roots p/q in lowest terms, via the divisor candidate scan
    (p | constant term, q | leading coefficient) with exact verification."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.constant_term == 0:
        raise ValueError("rational root scan requires a nonzero constant term")
    if f.degree == 0:
        return set()
    m = f.degree
    roots: set[Fraction] = set()
    for q in numtheory.positive_divisors(f.leading_coefficient):
        qpow = [q**e for e in range(m + 1)]
        for p_abs in numtheory.positive_divisors(f.constant_term):
            if math.gcd(p_abs, q) != 1:
                continue
            for p in (p_abs, -p_abs):
                # sum a_i p^i q^(m-i) == 0 <=> f(p/q) == 0
                acc = 0
                pk = 1
                for i, a in enumerate(f.coeffs):
                    if a:
                        acc += a * pk * qpow[m - i]
                    pk *= p
                if acc == 0:
                    roots.add(Fraction(p, q))
    return roots
