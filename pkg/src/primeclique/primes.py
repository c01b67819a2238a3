"""Exact arithmetic over squarefree products of primes.

A squarefree natural number stands in for a finite set of primes: 1 is the
empty set, multiplying coprime values is disjoint union, gcd is
intersection, lcm is union, and divisibility is the subset test. All
operations use Python's arbitrary-precision integers, so results are exact
at any bit width. The practical ceiling is around 10**4 vertices, where
weights grow to a few hundred thousand bits; storage, not overflow, is the
limit.
"""

import math
from itertools import count

__all__ = [
    "first_n_primes",
    "is_prime",
    "multiply",
    "divides",
    "gcd",
    "exact_divide",
    "union_product",
    "factor_over_basis",
]


def _sieve(limit: int) -> list[int]:
    """All primes <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def first_n_primes(n: int) -> list[int]:
    """Return the first n primes in ascending order.

    Deterministic: the sieve bound is grown until n primes fit, so the
    result for a given n never depends on prior calls.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return []
    # p_n < n (ln n + ln ln n) for n >= 6; small n handled by the floor of 15.
    bound = 15 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 1
    while True:
        primes = _sieve(bound)
        if len(primes) >= n:
            return primes[:n]
        bound *= 2


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in count(3, 2):
        if d * d > n:
            return True
        if n % d == 0:
            return False
    raise AssertionError("unreachable")


def multiply(factors: list[int]) -> int:
    """Product of pairwise coprime squarefree values; the empty product is 1.

    Raises ValueError if two factors share a prime divisor, since the
    result would not be squarefree.
    """
    acc = 1
    for f in factors:
        if f < 1:
            raise ValueError(f"factor must be >= 1, got {f}")
        shared = math.gcd(acc, f)
        if shared != 1:
            raise ValueError(f"factors are not coprime: share divisor {shared}")
        acc *= f
    return acc


def divides(d: int, x: int) -> bool:
    """True iff d divides x exactly (set containment on squarefree values)."""
    return x % d == 0


def gcd(x: int, y: int) -> int:
    """Greatest common divisor: the product of primes common to both."""
    return math.gcd(x, y)


def exact_divide(x: int, d: int) -> int:
    """Return x / d, requiring the division to be exact."""
    q, r = divmod(x, d)
    if r != 0:
        raise ValueError(f"{d} does not divide {x}")
    return q


def union_product(x: int, y: int) -> int:
    """Least common multiple: the product of primes in either operand."""
    return math.lcm(x, y)


def factor_over_basis(x: int, basis: list[int]) -> set[int]:
    """Factor squarefree x over an ordered prime basis.

    Returns the unique index set S with x == prod(basis[i] for i in S).
    Raises ValueError when x has a divisor outside the basis.
    """
    if x < 1:
        raise ValueError(f"value must be >= 1, got {x}")
    indices = set()
    for i, p in enumerate(basis):
        if x == 1:
            break
        if x % p == 0:
            indices.add(i)
            x //= p
    if x != 1:
        raise ValueError(f"residue {x} is not 1: value has divisors outside the basis")
    return indices
