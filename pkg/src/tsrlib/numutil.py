"""Integer helpers: primality, factorization, lcm of small field-order chains.

Factorization is trial division up to 2^16 followed by a deterministic
Miller-Rabin primality check on whatever remains.  That fully factors any
n <= 2^32 and, beyond that, anything whose second-largest prime factor is
below 2^16, which covers every field order and exponent this library is
allowed to touch (fields are capped at 2^31 elements).  A composite
remainder raises FactorizationCap instead of silently looping.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import FactorizationCap

_TRIAL_BOUND = 1 << 16

# Deterministic Miller-Rabin witness set for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: dict[int, int] = {}
    m = n
    for p in range(2, _TRIAL_BOUND):
        if p * p > m:
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1:
        if m < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
            out[m] = out.get(m, 0) + 1
        else:
            raise FactorizationCap(f"cannot factor remainder {m} of {n}")
    return dict(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorize(n)))


def multiplicative_order_from(value_pow, group_exponent: int) -> int:
    """Order of an element given a verified exponent of it.

    value_pow(e) must report whether element^e is the identity, and
    value_pow(group_exponent) must be True.  Divisor descent over the
    factorization of group_exponent.
    """
    order = group_exponent
    for p in prime_divisors(group_exponent):
        while order % p == 0 and value_pow(order // p):
            order //= p
    return order
