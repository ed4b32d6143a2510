"""Cyclotomic polynomial values at integer points and primover families.

Phi_n(b) is evaluated as the Moebius product over divisors of n of
(b^(n/d) - 1)^mu(d), with exact divisions asserted. The family generators
(generalized Fermat and Mersenne numbers, Phi_pq, Phi_{p^n}, Moebius
products) each validate their hypotheses strictly and return the generated
value together with a verified classification of the primover candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from primover.classify import ClassificationReport, classify
from primover.core_arith import (
    divisors,
    factorize,
    is_prime,
    moebius,
    primes_up_to,
    probably_prime,
)
from primover.orders import order_int


@dataclass(frozen=True)
class FamilyNumber:
    """A generated member of one of the primover families.

    reduced is the primover candidate: the value itself, or the value with
    one copy of the relevant prime divided out when the family's criterion
    calls for it. verdict classifies the reduced value.
    """

    family: str
    base: int
    parameters: tuple[int, ...]
    index: int  # cyclotomic index whose value underlies the family member
    value: int
    reduced: int
    verdict: ClassificationReport

    @property
    def is_primover(self) -> bool:
        return bool(self.verdict.is_primover)


def cyclotomic_value(n: int, b: int) -> int:
    """Phi_n(b) for n >= 1, b >= 2."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    num = 1
    den = 1
    for d in divisors(factorize(n)) if n > 1 else (1,):
        mu = moebius(d)
        if mu == 1:
            num *= b ** (n // d) - 1
        elif mu == -1:
            den *= b ** (n // d) - 1
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"Phi_{n}({b}) division left remainder {rem}")
    return q


def _combine_factorizations(n: int, parts) -> "Factorization":
    from primover.core_arith import Factorization

    merged: dict[int, int] = {}
    for part in parts:
        for p, e in part.factors:
            merged[p] = merged.get(p, 0) + e
    return Factorization(n, tuple(sorted(merged.items())))


def mersenne_factorization(b: int, n: int):
    """Factorization of (b^n - 1)/(b - 1), assembled from its cyclotomic
    pieces Phi_d(b) for the divisors d > 1 of n.

    The pieces are far smaller than the whole, which keeps hard semiprime
    cofactors out of the rho stage.
    """
    value = (b**n - 1) // (b - 1)
    parts = []
    for d in divisors(factorize(n)):
        if d == 1:
            continue
        v = cyclotomic_value(d, b)
        if v > 1:
            parts.append(factorize(v))
    return _combine_factorizations(value, parts)


def power_plus_one_factorization(b: int, m: int):
    """Factorization of b^m + 1 via the cyclotomic pieces Phi_d(b) for
    d | 2m, d not dividing m."""
    value = b**m + 1
    parts = []
    for d in divisors(factorize(2 * m)):
        if m % d == 0:
            continue
        v = cyclotomic_value(d, b)
        if v > 1:
            parts.append(factorize(v))
    return _combine_factorizations(value, parts)


def phi_criterion(b: int, n: int) -> bool:
    """Composite n with gcd(n, |b|_n) = 1 is overpseudoprime exactly when
    Phi_{|b|_n}(b) == 0 (mod n) with |b|_n > 1."""
    if probably_prime(n):
        raise ValueError(f"the criterion applies to composite n, got prime {n}")
    k = order_int(b, n)
    if gcd(n, k) != 1:
        raise ValueError(f"criterion hypothesis violated: gcd({n}, |b|_n={k}) > 1")
    return k > 1 and cyclotomic_value(k, b) % n == 0


def reduced_phi(n: int, b: int) -> tuple[int, int]:
    """(P_n(b), g) where P_n(b) = Phi_n(b) / g and g = gcd(n, Phi_n(b)).

    g is always 1 or the greatest prime divisor of n.
    """
    if n <= 2:
        raise ValueError(f"index must be > 2, got {n}")
    phi = cyclotomic_value(n, b)
    g = gcd(n, phi)
    return phi // g, g


def _verified(family: str, b: int, parameters: tuple[int, ...], index: int,
              value: int, reduced: int, guaranteed: bool,
              fact=None) -> FamilyNumber:
    verdict = classify(b, reduced, order_multiple=index, fact=fact)
    fam = FamilyNumber(family=family, base=b, parameters=parameters,
                       index=index, value=value, reduced=reduced, verdict=verdict)
    if guaranteed and not fam.is_primover:
        raise AssertionError(
            f"{family} member {reduced} (base {b}) failed its primover guarantee")
    return fam


def gen_fermat(b: int, n: int) -> FamilyNumber:
    """Generalized Fermat number b^(2^n) + 1 for even b; always primover."""
    if b % 2:
        raise ValueError(f"generalized Fermat numbers require an even base, got {b}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = b ** (2**n) + 1
    return _verified("GeneralizedFermat", b, (n,), 2 ** (n + 1), value, value,
                     guaranteed=True)


def gen_mersenne(b: int, p: int) -> FamilyNumber:
    """Generalized Mersenne number (b^p - 1)/(b - 1) for prime p with
    gcd(p, b - 1) = 1; always primover."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if gcd(p, b - 1) != 1:
        raise ValueError(f"gcd({p}, {b} - 1) must be 1")
    value = (b**p - 1) // (b - 1)
    fam = _verified("GeneralizedMersenne", b, (p,), p, value, value,
                    guaranteed=True, fact=mersenne_factorization(b, p))
    if fam.verdict.factorization is not None:
        ds = divisors(fam.verdict.factorization)
        if any((d2 - d1) % p for d1 in ds for d2 in ds if d2 > d1):
            raise AssertionError(
                f"divisor differences of {value} are not all multiples of {p}")
    return fam


def phi_pq(b: int, q: int, p: int) -> FamilyNumber:
    """Phi_pq(b) for primes q < p; primover unless divisible by p, in which
    case the quotient by p is primover instead."""
    if not (is_prime(q) and is_prime(p)):
        raise ValueError(f"{q} and {p} must both be prime")
    if not q < p:
        raise ValueError(f"need q < p, got q={q}, p={p}")
    value = cyclotomic_value(p * q, b)
    # value == p would reduce to the unit; p itself is prime, hence primover
    reduced = value // p if value % p == 0 and value > p else value
    return _verified("PhiPQ", b, (q, p), p * q, value, reduced, guaranteed=True)


def phi_prime_power(b: int, p: int, n: int) -> FamilyNumber:
    """Phi_{p^n}(b) = (b^(p^n) - 1)/(b^(p^(n-1)) - 1); primover unless
    divisible by p, in which case the quotient by p is primover."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value = (b ** p**n - 1) // (b ** p ** (n - 1) - 1)
    if value != cyclotomic_value(p**n, b):
        raise AssertionError(f"Phi_{p}^{n}({b}) identity check failed")
    reduced = value // p if value % p == 0 and value > p else value
    return _verified("PhiPrimePower", b, (p, n), p**n, value, reduced,
                     guaranteed=True)


def moebius_product(b: int, n: int) -> FamilyNumber:
    """Product over e | n of (b^e - 1)^(mu(e) mu(n)) for squarefree n;
    equals Phi_n(b). Primover, after dividing out the largest prime factor
    of n when it divides the value."""
    fact = factorize(n)
    if not fact.is_squarefree:
        raise ValueError(f"{n} must be squarefree")
    mun = moebius(n)
    num = 1
    den = 1
    for e in divisors(fact):
        s = moebius(e) * mun
        if s == 1:
            num *= b**e - 1
        elif s == -1:
            den *= b**e - 1
    value, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"Moebius product for n={n}, b={b} left remainder")
    pt = fact.largest_prime
    reduced = value // pt if gcd(value, pt) > 1 and value > pt else value
    return _verified("MoebiusProduct", b, tuple(fact.primes), n, value, reduced,
                     guaranteed=True)


@dataclass(frozen=True)
class ProgressionCensus:
    """Primes p <= limit in the progression 1 + r*x whose order of b is r."""

    base: int
    r: int
    limit: int
    primes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.primes)


def progression_census(b: int, r: int, limit: int) -> ProgressionCensus:
    """List primes p <= limit with p == 1 (mod r) and |b|_p = r.

    When the limit covers M_r(b), a single entry certifies its primality
    and several entries certify compositeness.
    """
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if gcd(r, b - 1) != 1:
        raise ValueError(f"gcd({r}, {b} - 1) must be 1")
    hits = []
    for p in primes_up_to(limit):
        if p % r != 1:
            continue
        if b % p and pow(b, r, p) == 1 and b % p != 1:
            # r prime: order divides r and exceeds 1, hence equals r
            hits.append(p)
    return ProgressionCensus(base=b, r=r, limit=limit, primes=tuple(hits))
