"""The pseudoprime taxonomy: Fermat, strong, super, overpseudoprime, primover.

The overpseudoprime test comes in two independent flavours. The fast route
factors n and demands a single common order across all prime divisors plus
order stability on each full prime-power component; the definitional route
enumerates cyclotomic cosets and checks n = r * |b|_n + 1 directly. Their
agreement is enforced by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm

from primover import cosets as cosets_mod
from primover.core_arith import (
    DIVISOR_CAP,
    Factorization,
    IncompleteFactorizationError,
    NotCoprimeError,
    PrimalityVerdict,
    divisors,
    factorize,
    is_prime,
)
from primover.orders import (
    IndeterminateOrderError,
    order_int,
    order_mod_prime,
    order_mod_prime_from_multiple,
    order_mod_prime_power,
    order_mod_two_power,
    wieferich_order,
)


@dataclass(frozen=True)
class ClassificationReport:
    """All predicate verdicts for one (n, base) pair, with evidence.

    Verdict fields are None when the supporting factorization could not be
    completed within budget; complete is False in that case.
    """

    n: int
    base: int
    primality: PrimalityVerdict
    is_prime: bool
    is_fermat_psp: bool
    is_strong_psp: bool
    is_super_psp: bool | None
    is_overpseudoprime: bool | None
    is_primover: bool | None
    factorization: Factorization | None
    order: int | None
    coset_count: int | None
    prime_orders: tuple[tuple[int, int], ...]
    wieferich: tuple[tuple[int, int], ...]
    complete: bool = True


def _check(b: int, n: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if gcd(b, n) != 1:
        raise NotCoprimeError(f"gcd({b}, {n}) > 1")


def _prime_order(b: int, p: int, multiple: int | None) -> int:
    if multiple is not None:
        return order_mod_prime_from_multiple(b, p, multiple)
    return order_mod_prime(b, p)


def is_fermat_psp(b: int, n: int) -> bool:
    """Composite n with b^(n-1) == 1 (mod n)."""
    _check(b, n)
    if is_prime(n):
        return False
    return pow(b, n - 1, n) == 1


def is_strong_psp(b: int, n: int) -> bool:
    """Odd composite n passing the square-root-refined Fermat test."""
    _check(b, n)
    if n % 2 == 0:
        raise ValueError(f"strong pseudoprimality is defined for odd n, got {n}")
    if is_prime(n):
        return False
    d = n - 1
    r = (d & -d).bit_length() - 1
    s = d >> r
    x = pow(b, s, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_super_psp(b: int, n: int, fact: Factorization | None = None,
                 cap: int = DIVISOR_CAP) -> bool:
    """Composite n whose every divisor d > 1 satisfies b^(d-1) == 1 (mod d)."""
    _check(b, n)
    if is_prime(n):
        return False
    if fact is None:
        fact = factorize(n)
    return all(pow(b, d - 1, d) == 1 for d in divisors(fact, cap=cap) if d > 1)


def is_overpseudoprime_fast(b: int, n: int, fact: Factorization | None = None,
                            order_multiple: int | None = None) -> bool:
    """Composite n whose divisors d > 1 all share the same order of b.

    Only prime divisors and full prime-power components are examined; every
    other divisor's order is an lcm of component orders, so invariance over
    components implies invariance over all divisors.
    """
    _check(b, n)
    if fact is None:
        if is_prime(n):
            return False
        fact = factorize(n)
    if fact.is_prime:
        return False
    common = None
    for p, l in fact.factors:
        if p == 2:
            op = order_mod_two_power(b, 1)  # == 1
            if l > 1 and order_mod_two_power(b, l) != op:
                return False
        else:
            op = _prime_order(b, p, order_multiple)
            # order stays |b|_p up the power iff b^|b|_p == 1 mod p^l
            if l > 1 and pow(b, op, p**l) != 1:
                return False
        if common is None:
            common = op
        elif op != common:
            return False
    return True


def is_overpseudoprime_definitional(b: int, n: int,
                                    cap: int = cosets_mod.ENUMERATION_CAP) -> bool:
    """Oracle route: enumerate cosets and test n = r * |b|_n + 1 literally."""
    _check(b, n)
    if is_prime(n):
        return False
    r, order = cosets_mod.coset_scan(b, n, cap=cap)
    return n == r * order + 1


def is_primover(b: int, n: int, fact: Factorization | None = None,
                order_multiple: int | None = None) -> bool:
    """Prime or overpseudoprime to base b."""
    _check(b, n)
    if fact is None and is_prime(n):
        return True
    if fact is not None and fact.is_prime:
        return True
    return is_overpseudoprime_fast(b, n, fact=fact, order_multiple=order_multiple)


def classify(b: int, n: int, order_multiple: int | None = None,
             factor_budget: int | None = None,
             fact: Factorization | None = None) -> ClassificationReport:
    """Full report for (n, base b): all five verdicts plus evidence."""
    _check(b, n)
    primality = is_prime(n)
    prime = bool(primality)
    fermat = False if prime else pow(b, n - 1, n) == 1
    strong = False
    if n % 2 == 1 and not prime:
        strong = is_strong_psp(b, n)
    try:
        if fact is None:
            kwargs = {} if factor_budget is None else {"budget": factor_budget}
            fact = factorize(n, **kwargs)
        elif fact.n != n:
            raise ValueError(f"factorization of {fact.n} supplied for {n}")
    except IncompleteFactorizationError:
        return ClassificationReport(
            n=n, base=b, primality=primality, is_prime=prime,
            is_fermat_psp=fermat, is_strong_psp=strong,
            is_super_psp=None, is_overpseudoprime=None, is_primover=None,
            factorization=None, order=None, coset_count=None,
            prime_orders=(), wieferich=(), complete=False,
        )
    prime_orders = []
    order = 1
    for p, l in fact.factors:
        if p == 2:
            prime_orders.append((2, 1))
            order = lcm(order, order_mod_two_power(b, l))
        else:
            op = _prime_order(b, p, order_multiple)
            prime_orders.append((p, op))
            order = lcm(order, order_mod_prime_power(b, p, l).order)
    r = cosets_mod.coset_count(b, n, fact=fact) if n >= 3 else None
    over = False if prime else is_overpseudoprime_fast(
        b, n, fact=fact, order_multiple=order_multiple)
    supr = False if prime else is_super_psp(b, n, fact=fact)
    wief = []
    if not fact.is_squarefree:
        for p, l in fact.factors:
            if l >= 2 and p % 2 == 1:
                try:
                    wief.append((p, wieferich_order(b, p).w))
                except IndeterminateOrderError as err:
                    wief.append((p, err.lower_bound))
    return ClassificationReport(
        n=n, base=b, primality=primality, is_prime=prime,
        is_fermat_psp=fermat, is_strong_psp=strong,
        is_super_psp=supr, is_overpseudoprime=over,
        is_primover=prime or over,
        factorization=fact, order=order, coset_count=r,
        prime_orders=tuple(prime_orders), wieferich=tuple(wief),
    )


def check_divisor_differences(b: int, n: int, fact: Factorization | None = None) -> bool:
    """For an overpseudoprime n: |b|_n divides d2 - d1 for every divisor pair
    (1 and n included)."""
    if fact is None:
        fact = factorize(n)
    if not is_overpseudoprime_fast(b, n, fact=fact):
        raise ValueError(f"{n} is not overpseudoprime to base {b}")
    k = order_int(b, n, fact=fact)
    ds = divisors(fact)
    return all((d2 - d1) % k == 0 for d1, d2 in combinations(ds, 2))


def coprimality_check(b: int, n1: int, n2: int) -> bool:
    """Distinct-order overpseudoprimes must be coprime; same order is vacuous."""
    for n in (n1, n2):
        if not is_overpseudoprime_fast(b, n):
            raise ValueError(f"{n} is not overpseudoprime to base {b}")
    if order_int(b, n1) == order_int(b, n2):
        return True
    return gcd(n1, n2) == 1


def equal_order_product(b: int, prime_powers) -> ClassificationReport:
    """Product of primover prime powers sharing one prime order is
    overpseudoprime; returns the product's verified report."""
    prime_powers = list(prime_powers)
    if not prime_powers:
        raise ValueError("at least one prime power is required")
    primes = [p for p, _ in prime_powers]
    if len(set(primes)) != len(primes):
        raise ValueError(f"primes must be distinct: {primes}")
    orders = set()
    for p, l in prime_powers:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if l < 1:
            raise ValueError(f"exponent must be positive, got {l}")
        if l > 1 and not is_primover(b, p**l):
            raise ValueError(f"{p}^{l} is not primover to base {b}")
        orders.add(order_mod_prime(b, p))
    if len(orders) != 1:
        raise ValueError(f"prime orders differ: {sorted(orders)}")
    n = 1
    for p, l in prime_powers:
        n *= p**l
    report = classify(b, n)
    if not report.is_overpseudoprime:
        raise AssertionError(f"product {n} failed the overpseudoprime guarantee")
    return report
