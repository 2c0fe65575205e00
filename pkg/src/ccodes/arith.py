"""Multiplicative number theory primitives.

Trial-division factorization, divisor enumeration, the Moebius function,
Euler's totient, and Ramanujan sums computed two independent ways: exactly,
through Kluyver's divisor formula

    c_n(m) = sum_{d | gcd(m, n)} mu(n / d) * d,

and numerically, as the literal sum of the m-th powers of the primitive
n-th roots of unity. The numeric path exists only to cross-check the exact
one; nothing downstream consumes it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import IntegralityFailure

__all__ = [
    "FactoredInteger",
    "factor",
    "divisors",
    "moebius",
    "totient",
    "ramanujan_sum",
    "ramanujan_sum_direct",
]


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization.

    ``factors`` holds (prime, exponent) pairs with primes strictly
    increasing and every exponent at least 1. The unit 1 carries an
    empty factor list.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError("FactoredInteger must be positive")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization of {self.value}")
            prod *= p**e
            last = p
        if prod != self.value:
            raise ValueError(f"factors do not multiply out to {self.value}")


def factor(n: int) -> FactoredInteger:
    """Factor a positive integer by trial division up to sqrt(n).

    Rejects n < 1; factor(1) has an empty factor list.
    """
    if n < 1:
        raise ValueError("factor() requires n >= 1")
    m = n
    fs: list[tuple[int, int]] = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            fs.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        fs.append((m, 1))
    return FactoredInteger(n, tuple(fs))


def divisors(n: FactoredInteger) -> list[int]:
    """All positive divisors of n, in increasing order."""
    out = [1]
    for p, e in n.factors:
        out = [d * p**i for i in range(e + 1) for d in out]
    out.sort()
    return out


def moebius(n: int) -> int:
    """mu(n): 1 for n=1, 0 when a square divides n, else (-1)^(prime count)."""
    fi = factor(n)
    if any(e >= 2 for _, e in fi.factors):
        return 0
    return -1 if len(fi.factors) % 2 else 1


def totient(n: int) -> int:
    """Euler's phi through the Moebius divisor sum phi(n) = sum_{d|n} mu(n/d) d."""
    return sum(moebius(n // d) * d for d in divisors(factor(n)))


def ramanujan_sum(n: int, m: int) -> int:
    """c_n(m) by Kluyver's divisor formula.

    m may be any integer; it is reduced mod n first, and gcd(0, n) is n,
    which makes c_n(0) = phi(n) fall out of the same expression.
    """
    if n < 1:
        raise ValueError("ramanujan_sum() requires n >= 1")
    g = math.gcd(m % n, n)
    return sum(moebius(n // d) * d for d in divisors(factor(g)))


def ramanujan_sum_direct(n: int, m: int) -> float:
    """c_n(m) as the literal complex sum over j coprime to n of e(j m / n).

    Floating point on purpose: this is the independent check on
    ramanujan_sum. The accumulated imaginary part must stay below
    1e-9 * n or IntegralityFailure is raised.
    """
    if n < 1:
        raise ValueError("ramanujan_sum_direct() requires n >= 1")
    total = 0j
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            total += cmath.exp(2j * math.pi * ((j * m) % n) / n)
    if abs(total.imag) > 1e-9 * n:
        raise IntegralityFailure(
            f"imaginary part {total.imag!r} of the c_{n}({m}) sum exceeds tolerance"
        )
    return total.real
