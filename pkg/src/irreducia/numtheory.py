"""Integer factorization utilities: prime decompositions, p-adic valuations,
divisor enumeration.

These back the witness searches of the criteria: every candidate prime comes
from the factorization of a single coefficient, so inputs stay at desk scale.
Trial division handles everything up to 10^12; larger survivors go through
Miller-Rabin plus Pollard rho with a bounded retry budget.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

_TRIAL_LIMIT = 10**6
_RHO_RETRIES = 32

# factorize() refuses to grind on composites past this size; coefficients in
# practice are tiny and the audit corpus guarantees it.
DEFAULT_FACTOR_BOUND = 2**64


class FactorizationLimitError(ValueError):
    """A composite resisted factorization within the configured budget."""


@dataclass(frozen=True)
class PrimePowerDecomposition:
    """Signed prime factorization: n = sign * prod(p**e)."""

    n: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out


# Witnesses cover all n < 3,317,044,064,679,887,385,961,981; far beyond the
# factorization bound used here.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the supported integer range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int | None:
    """One Brent-cycle attempt at a nontrivial factor of odd composite n."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


@lru_cache(maxsize=1 << 16)
def _factor_positive(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs."""
    if n == 1:
        return ()
    powers: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
    d = 5
    while d <= _TRIAL_LIMIT and d * d <= n:
        for step in (0, 2):  # 6k-1, 6k+1 wheel
            q = d + step
            while n % q == 0:
                powers[q] = powers.get(q, 0) + 1
                n //= q
        d += 6
    if n > 1:
        if n <= _TRIAL_LIMIT**2 or is_prime(n):
            powers[n] = powers.get(n, 0) + 1
        else:
            rng = random.Random(n)
            stack = [n]
            budget = _RHO_RETRIES
            while stack:
                m = stack.pop()
                if is_prime(m):
                    powers[m] = powers.get(m, 0) + 1
                    continue
                g = None
                while g is None and budget > 0:
                    budget -= 1
                    g = _pollard_rho(m, rng)
                if g is None:
                    raise FactorizationLimitError(
                        f"factorization limit reached on {m} "
                        f"(input above {DEFAULT_FACTOR_BOUND})"
                    )
                stack.extend((g, m // g))
    return tuple(sorted(powers.items()))


def factorize(n: int) -> PrimePowerDecomposition:
    """Complete prime factorization of a nonzero integer."""
    if n == 0:
        raise ValueError("zero has no prime factorization")
    sign = 1 if n > 0 else -1
    return PrimePowerDecomposition(n=n, sign=sign, factors=_factor_positive(abs(n)))


def primes_dividing(n: int) -> list[int]:
    """Distinct primes dividing |n|, ascending. n must be nonzero."""
    return [p for p, _ in factorize(n).factors]


def valuation(p: int, n: int) -> int:
    """Largest e with p**e dividing n (n nonzero, p >= 2)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    if p < 2:
        raise ValueError("valuation base must be at least 2")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def smallest_prime_divisor(n: int) -> int:
    """Least prime dividing |n|; requires |n| >= 2."""
    if abs(n) < 2:
        raise ValueError(f"no prime divisor: |{n}| < 2")
    return _factor_positive(abs(n))[0][0]


def positive_divisors(n: int) -> list[int]:
    """All positive divisors of |n| in increasing order (n nonzero)."""
    divs = [1]
    for p, e in factorize(n).factors:
        pk = 1
        block = list(divs)
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in block)
    return sorted(divs)
