"""Rational scalars: parsing, formatting, valuations and exact integer roots.

Rationals are plain :class:`fractions.Fraction` values; this module only adds
the helpers the rest of the package needs around them.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Fraction
Scalar = Union[int, Fraction]


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: everything in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    s = text.strip()
    if not s:
        raise ValueError("empty fraction string")
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed fraction {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rat(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def valuation(n: Scalar, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    q = Fraction(n)
    if q == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n, or None if n is not a perfect k-th power."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = iroot(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    if k == 1:
        return n
    if k == 2:
        r = isqrt(n)
        return r if r * r == n else None
    # Newton iteration from an overestimate
    r = 1 << -(-n.bit_length() // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r if r**k == n else None


def rational_root(q: Scalar, k: int) -> Fraction | None:
    """Exact k-th root in Q (the positive one for even k), else None."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    n = iroot(q.numerator, k)
    d = iroot(q.denominator, k)
    if n is None or d is None:
        return None
    return Fraction(n, d)


def is_square(q: Scalar) -> bool:
    q = Fraction(q)
    return q >= 0 and rational_root(q, 2) is not None


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def reduce_mod(q: Scalar, p: int) -> int:
    """Image of q in F_p; the denominator must be prime to p."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise ZeroDivisionError(f"{format_rat(q)} has denominator divisible by {p}")
    return q.numerator * pow(q.denominator, -1, p) % p
