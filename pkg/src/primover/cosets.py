"""Cyclotomic-coset decomposition of Z_n \\ {0} under multiplication by b.

Two routes are provided: full enumeration (the definitional oracle, linear
in n) and a counting formula that sums phi(d) / |b|_d over the divisors
d > 1 of n, which scales to large n once n is factored.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from primover._accel import coset_scan as _kernel_scan
from primover.core_arith import Factorization, NotCoprimeError, factorize
from primover.orders import order_mod_prime_power, order_mod_two_power

ENUMERATION_CAP = 10**8
_KERNEL_MODULUS_LIMIT = 1 << 31


@dataclass(frozen=True)
class CosetPartition:
    """All multiplication-by-b orbits on {1, .., n-1}, sorted by leader.

    Each coset is stored in orbit order starting from its minimal element.
    """

    n: int
    base: int
    cosets: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.cosets)

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cosets)

    @property
    def order(self) -> int:
        """|base|_n, the lcm of the coset sizes."""
        return lcm(*self.sizes)


def _check_inputs(b: int, n: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if n < 3:
        raise ValueError(f"modulus must be >= 3, got {n}")
    if gcd(b, n) != 1:
        raise NotCoprimeError(f"gcd({b}, {n}) > 1")


def coset_scan(b: int, n: int, cap: int = ENUMERATION_CAP) -> tuple[int, int]:
    """(r, |b|_n) by full orbit enumeration; refuses n above the cap."""
    _check_inputs(b, n)
    if n > cap:
        raise ValueError(f"enumeration refused for n = {n} above cap {cap}")
    if n < _KERNEL_MODULUS_LIMIT:
        return _kernel_scan(b, n)
    from primover._coset_pure import coset_scan as pure_scan
    return pure_scan(b, n)


def coset_partition(b: int, n: int, cap: int = ENUMERATION_CAP) -> CosetPartition:
    """The complete coset decomposition, cosets ordered by minimal leader."""
    _check_inputs(b, n)
    if n > cap:
        raise ValueError(f"enumeration refused for n = {n} above cap {cap}")
    br = b % n
    seen = bytearray(n)
    cosets = []
    for s in range(1, n):
        if seen[s]:
            continue
        orbit = []
        t = s
        while not seen[t]:
            seen[t] = 1
            orbit.append(t)
            t = t * br % n
        cosets.append(tuple(orbit))
    return CosetPartition(n=n, base=b, cosets=tuple(cosets))


def coset_count(b: int, n: int, fact: Factorization | None = None) -> int:
    """r_b(n) without enumeration: sum of phi(d) / |b|_d over divisors d > 1.

    Per-component orders and totients are combined over all exponent
    patterns, so the cost is the divisor count times a few lcm operations.
    """
    if fact is None:
        _check_inputs(b, n)
        fact = factorize(n)
    else:
        _check_inputs(b, n)
    # per prime-power tables: phi(p^e) and |b|_{p^e} for e = 0..l
    tables = []
    for p, l in fact.factors:
        phis = [1] + [(p - 1) * p ** (e - 1) for e in range(1, l + 1)]
        if p == 2:
            ords = [1] + [order_mod_two_power(b, e) for e in range(1, l + 1)]
        else:
            ords = [1] + [order_mod_prime_power(b, p, e).order for e in range(1, l + 1)]
        tables.append((phis, ords))

    total = 0

    def walk(i: int, phi_acc: int, ord_acc: int, nontrivial: bool) -> None:
        nonlocal total
        if i == len(tables):
            if nontrivial:
                total += phi_acc // ord_acc
            return
        phis, ords = tables[i]
        for e in range(len(phis)):
            walk(i + 1, phi_acc * phis[e], lcm(ord_acc, ords[e]), nontrivial or e > 0)

    walk(0, 1, 1, False)
    return total
