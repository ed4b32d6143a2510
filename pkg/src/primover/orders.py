"""Multiplicative orders, order lifting to prime powers, Wieferich orders.

The order modulo a composite is assembled per prime-power component: the
order modulo p divides p - 1 and is found by reducing that exponent over
its prime factors; the order modulo p^t then follows from the lifting rule
|b|_{p^t} = |b|_p for t <= m and p^{t-m} |b|_p for t > m, where m is the
p-adic valuation of b^{|b|_p} - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from primover.core_arith import (
    Factorization,
    NotCoprimeError,
    factorize,
)


@dataclass(frozen=True)
class OrderRecord:
    """A certified multiplicative order |base|_modulus.

    witnesses holds (q, base**(order//q) mod modulus) for each prime q
    dividing the order; every residue differs from 1, certifying minimality.
    """

    base: int
    modulus: int
    order: int
    witnesses: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class OrderLift:
    """Order of base modulo prime**t obtained by the lifting rule."""

    base: int
    prime: int
    base_order: int  # |base|_prime
    m: int           # valuation of prime in base**base_order - 1
    t: int
    order: int       # |base|_{prime**t}


@dataclass(frozen=True)
class WieferichRecord:
    """Wieferich order w of a prime: w + 1 is the valuation of p in b^(p-1) - 1."""

    base: int
    prime: int
    w: int

    @property
    def is_wieferich(self) -> bool:
        return self.w >= 1


class IndeterminateOrderError(RuntimeError):
    """The valuation scan hit its cap; carries the established lower bound."""

    def __init__(self, base: int, prime: int, lower_bound: int, cap: int):
        self.base = base
        self.prime = prime
        self.lower_bound = lower_bound
        self.cap = cap
        super().__init__(
            f"nu_{prime}({base}^{prime - 1} - 1) >= {lower_bound + 1}; "
            f"scan capped at exponent {cap}"
        )


DEFAULT_WIEFERICH_CAP = 8

_PRIME_ORDER_CACHE: dict[tuple[int, int], int] = {}


def _reduce_exponent(b: int, modulus: int, exponent: int, exponent_factors) -> int:
    """Minimal divisor d of exponent with b^d == 1 (mod modulus).

    Requires b^exponent == 1 (mod modulus); the result is then the exact
    multiplicative order since the order divides the exponent.
    """
    d = exponent
    for q, _ in exponent_factors:
        while d % q == 0 and pow(b, d // q, modulus) == 1:
            d //= q
    return d


def order_mod_prime(b: int, p: int) -> int:
    """|b|_p for a prime p not dividing b; cached."""
    if b % p == 0:
        raise NotCoprimeError(f"{p} divides {b}")
    key = (b, p)
    cached = _PRIME_ORDER_CACHE.get(key)
    if cached is not None:
        return cached
    if b % p == 1:
        order = 1
    else:
        order = _reduce_exponent(b, p, p - 1, factorize(p - 1).factors)
    _PRIME_ORDER_CACHE[key] = order
    return order


def order_mod_prime_from_multiple(b: int, p: int, multiple: int) -> int:
    """|b|_p given a known multiple of the order (e.g. a cyclotomic index).

    Falls back to the p - 1 route when b^multiple is not 1 modulo p.
    """
    if b % p == 0:
        raise NotCoprimeError(f"{p} divides {b}")
    key = (b, p)
    cached = _PRIME_ORDER_CACHE.get(key)
    if cached is not None:
        return cached
    if pow(b, multiple, p) != 1:
        return order_mod_prime(b, p)
    order = _reduce_exponent(b, p, multiple, factorize(multiple).factors)
    _PRIME_ORDER_CACHE[key] = order
    return order


def lift_valuation(b: int, p: int, base_order: int) -> int:
    """m = nu_p(b^base_order - 1), computed modularly; terminates at the
    exact (finite) valuation."""
    m = 1
    while pow(b, base_order, p ** (m + 1)) == 1:
        m += 1
    return m


def order_mod_prime_power(b: int, p: int, t: int, multiple: int | None = None) -> OrderLift:
    """|b|_{p^t} for an odd prime p not dividing b, via the lifting rule."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"the lifting rule requires an odd prime, got {p}")
    if b % p == 0:
        raise NotCoprimeError(f"{p} divides {b}")
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if multiple is not None:
        base_order = order_mod_prime_from_multiple(b, p, multiple)
    else:
        base_order = order_mod_prime(b, p)
    m = lift_valuation(b, p, base_order)
    order = base_order if t <= m else p ** (t - m) * base_order
    return OrderLift(base=b, prime=p, base_order=base_order, m=m, t=t, order=order)


def order_mod_two_power(b: int, t: int) -> int:
    """|b|_{2^t} for odd b, by direct iteration (the lifting rule is stated
    for odd primes only)."""
    if b % 2 == 0:
        raise NotCoprimeError(f"2 divides {b}")
    mod = 1 << t
    x = b % mod
    k = 1
    while x != 1:
        x = x * b % mod
        k += 1
    return k


def order_int(b: int, n: int, fact: Factorization | None = None,
              multiple: int | None = None) -> int:
    """|b|_n as a plain integer (lcm over prime-power components)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if gcd(b, n) != 1:
        raise NotCoprimeError(f"gcd({b}, {n}) > 1")
    if fact is None:
        fact = factorize(n)
    order = 1
    for p, e in fact.factors:
        if p == 2:
            order = lcm(order, order_mod_two_power(b, e))
        else:
            order = lcm(order, order_mod_prime_power(b, p, e, multiple=multiple).order)
    return order


def multiplicative_order(b: int, n: int, fact: Factorization | None = None,
                         multiple: int | None = None) -> OrderRecord:
    """|b|_n with minimality witnesses."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    order = order_int(b, n, fact=fact, multiple=multiple)
    witnesses = []
    for q, _ in factorize(order).factors if order > 1 else ():
        residue = pow(b, order // q, n)
        if residue == 1:
            raise AssertionError(f"order {order} of {b} mod {n} is not minimal")
        witnesses.append((q, residue))
    return OrderRecord(base=b, modulus=n, order=order, witnesses=tuple(witnesses))


def wieferich_order(b: int, p: int, cap: int = DEFAULT_WIEFERICH_CAP) -> WieferichRecord:
    """Wieferich order of the odd prime p in base b.

    Scans b^(p-1) modulo p^k for growing k; w + 1 is the last k giving
    residue 1. The scan refuses to pass the cap.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"{p} is not an odd prime")
    if b % p == 0:
        raise NotCoprimeError(f"{p} divides {b}")
    k = 1
    while pow(b, p - 1, p ** (k + 1)) == 1:
        k += 1
        if k > cap:
            raise IndeterminateOrderError(b, p, lower_bound=cap, cap=cap)
    return WieferichRecord(base=b, prime=p, w=k - 1)
