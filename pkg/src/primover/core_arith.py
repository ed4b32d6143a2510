"""Exact big-integer arithmetic: primality, factorization, divisors, Moebius.

Everything here is exact integer work; no floating point is used anywhere.
The factorizer does trial division over a cached prime sieve, then switches
to Brent's cycle-finding method with a deterministic per-input seed so runs
are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from math import prod

import gmpy2

TRIAL_DIVISION_LIMIT = 10**6
SMALL_FACTOR_TABLE_LIMIT = 10**6

# Largest bound for which the first twelve prime bases form a deterministic
# Miller-Rabin witness set (Sorenson & Webster).
DETERMINISTIC_MR_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_FACTOR_BUDGET = 20_000_000  # modular multiplications in the rho stage
DEFAULT_SEED = 0
DIVISOR_CAP = 1 << 20

# runtime defaults, adjustable via configure() (the CLI maps its global
# flags here)
_config = {
    "extra_rounds": 0,
    "factor_budget": DEFAULT_FACTOR_BUDGET,
    "seed": DEFAULT_SEED,
}


def configure(extra_rounds: int | None = None, factor_budget: int | None = None,
              seed: int | None = None) -> None:
    """Override the default Miller-Rabin round count, factoring budget, seed."""
    if extra_rounds is not None:
        _config["extra_rounds"] = extra_rounds
    if factor_budget is not None:
        _config["factor_budget"] = factor_budget
    if seed is not None:
        _config["seed"] = seed


class NotCoprimeError(ValueError):
    """A base and modulus that must be coprime are not."""


class DivisorCapError(ValueError):
    """Divisor enumeration would exceed the configured cap."""


class IncompleteFactorizationError(RuntimeError):
    """The factoring budget ran out; carries what was found so far."""

    def __init__(self, n: int, partial: tuple[tuple[int, int], ...], cofactor: int, budget: int):
        self.n = n
        self.partial = partial
        self.cofactor = cofactor
        self.budget = budget
        super().__init__(
            f"factoring budget of {budget} multiplications exhausted on {n}; "
            f"unfactored cofactor {cofactor}"
        )


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality test.

    kind is "prime" or "composite" when the answer is unconditional,
    "probable_prime" when only a probabilistic test was applied; rounds
    then records how many strong-pseudoprime rounds were run on top of
    the Baillie-PSW combination.
    """

    kind: str
    rounds: int = 0

    def __bool__(self) -> bool:
        return self.kind != "composite"

    @property
    def is_deterministic(self) -> bool:
        return self.kind in ("prime", "composite")


@dataclass(frozen=True)
class Factorization:
    """Complete prime-power decomposition of n, primes ascending.

    n == 1 is representable with an empty factor tuple but is never
    produced by factorize(); callers that need the unit must build it
    explicitly.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"cannot represent factorization of {self.n}")
        if prod(p**e for p, e in self.factors) != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def largest_prime(self) -> int:
        if not self.factors:
            raise ValueError("the unit has no prime factors")
        return self.factors[-1][0]

    @property
    def divisor_count(self) -> int:
        return prod(e + 1 for _, e in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


# ---------------------------------------------------------------------------
# sieves

@lru_cache(maxsize=4)
def smallest_factor_table(limit: int):
    """Smallest-prime-factor table for 0..limit (numpy int64 array)."""
    import numpy as np

    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
    return spf


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit, ascending."""
    import numpy as np

    if limit < 2:
        return ()
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.nonzero(sieve)[0])


# ---------------------------------------------------------------------------
# primality

def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus, with modulus >= 2 enforced."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError("negative exponents are not supported")
    return pow(base, exponent, modulus)


def _mr_witness_passes(n: int, a: int, d: int, r: int) -> bool:
    # n - 1 = 2^r * d with d odd
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, extra_rounds: int | None = None,
             seed: int | None = None) -> PrimalityVerdict:
    """Classify n as prime/composite (deterministic below the 12-witness
    Miller-Rabin bound) or probable prime (Baillie-PSW plus extra rounds)."""
    if extra_rounds is None:
        extra_rounds = _config["extra_rounds"]
    if seed is None:
        seed = _config["seed"]
    if n < 2:
        return PrimalityVerdict("composite")
    if n <= SMALL_FACTOR_TABLE_LIMIT:
        spf = smallest_factor_table(SMALL_FACTOR_TABLE_LIMIT)
        return PrimalityVerdict("prime" if int(spf[n]) == n else "composite")
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    if n < DETERMINISTIC_MR_BOUND:
        for a in _MR_WITNESSES:
            if a % n == 0:
                continue
            if not _mr_witness_passes(n, a, d, r):
                return PrimalityVerdict("composite")
        return PrimalityVerdict("prime")
    # Large inputs: strong base-2 test plus a strong Lucas-Selfridge test
    # (the Baillie-PSW combination), then optional random strong rounds.
    z = gmpy2.mpz(n)
    if not (gmpy2.is_strong_prp(z, 2) and gmpy2.is_strong_selfridge_prp(z)):
        return PrimalityVerdict("composite")
    rng = random.Random(f"{seed}:mr:{n}")
    for _ in range(extra_rounds):
        a = rng.randrange(2, n - 1)
        if not _mr_witness_passes(n, a, d, r):
            return PrimalityVerdict("composite")
    return PrimalityVerdict("probable_prime", rounds=2 + extra_rounds)


def probably_prime(n: int) -> bool:
    """Boolean shorthand for is_prime."""
    return bool(is_prime(n))


# ---------------------------------------------------------------------------
# factorization

class _Budget:
    __slots__ = ("remaining", "total")

    def __init__(self, total: int):
        self.remaining = total
        self.total = total

    def spend(self, amount: int) -> bool:
        self.remaining -= amount
        return self.remaining > 0


def _brent_rho(n, budget: _Budget, rng: random.Random):
    """One Brent cycle-finding attempt; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    n = gmpy2.mpz(n)
    y = gmpy2.mpz(rng.randrange(1, int(n)))
    c = gmpy2.mpz(rng.randrange(1, int(n)))
    m = 128
    g = r = q = gmpy2.mpz(1)
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
            g = gmpy2.gcd(q, n)
            k += m
            if not budget.spend(2 * min(m, r)):
                return None
        r *= 2
    if g == n:
        # backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = gmpy2.gcd(abs(x - ys), n)
            if g > 1:
                break
            if not budget.spend(1):
                return None
    return int(g) if g != n else None


POLLARD_PM1_BOUND = 500_000


def _pollard_pm1(n: int, budget: _Budget, bound: int = POLLARD_PM1_BOUND):
    """Stage-1 p-1 attempt: finds prime factors p with p - 1 bound-smooth.

    The exponentiation is chunked with a gcd check per chunk; an overshoot
    (gcd == n) replays the chunk prime by prime to separate factors that
    complete at different primes.
    """
    z = gmpy2.mpz(n)
    a = gmpy2.mpz(2)
    plist = primes_up_to(bound)
    budget.spend(bound)
    chunk = 512
    for i in range(0, len(plist), chunk):
        a_prev = a
        for p in plist[i : i + chunk]:
            pe = p
            while pe * p <= bound:
                pe *= p
            a = gmpy2.powmod(a, pe, z)
        g = int(gmpy2.gcd(a - 1, z))
        if g == 1:
            continue
        if g < n:
            return g
        a = a_prev
        for p in plist[i : i + chunk]:
            pe = p
            while pe * p <= bound:
                pe *= p
            a = gmpy2.powmod(a, pe, z)
            g = int(gmpy2.gcd(a - 1, z))
            if 1 < g < n:
                return g
            if g == n:
                return None
        return None
    return None


def _factor_with_rho(n: int, out: dict[int, int], budget: _Budget, rng: random.Random) -> int:
    """Fully factor n (no factors below the trial limit) into out.

    Returns 0 on success, or the unfactored cofactor on budget exhaustion.
    """
    stack = [(n, False)]
    while stack:
        m, pm1_tried = stack.pop()
        if m == 1:
            continue
        if probably_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = None
        if not pm1_tried:
            d = _pollard_pm1(m, budget)
        while d is None:
            d = _brent_rho(m, budget, rng)
            if d is None and budget.remaining <= 0:
                return m * prod(q for q, _ in stack)
        stack.append((d, True))
        stack.append((m // d, True))
    return 0


def factorize(
    n: int,
    budget: int | None = None,
    seed: int | None = None,
) -> Factorization:
    """Complete factorization of n >= 2.

    Trial division runs over primes up to TRIAL_DIVISION_LIMIT; the
    remaining cofactor is split by Brent's method under a multiplication
    budget. Exhausting the budget raises IncompleteFactorizationError
    carrying the partial factors and the unfactored cofactor.
    """
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    if budget is None:
        budget = _config["factor_budget"]
    if seed is None:
        seed = _config["seed"]
    found: dict[int, int] = {}
    if n <= SMALL_FACTOR_TABLE_LIMIT:
        spf = smallest_factor_table(SMALL_FACTOR_TABLE_LIMIT)
        m = n
        while m > 1:
            p = int(spf[m])
            found[p] = found.get(p, 0) + 1
            m //= p
        return Factorization(n, tuple(sorted(found.items())))
    m = n
    for p in primes_up_to(TRIAL_DIVISION_LIMIT):
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    if m > 1:
        if m < TRIAL_DIVISION_LIMIT**2 or probably_prime(m):
            # below the square of the trial limit any cofactor is prime
            found[m] = found.get(m, 0) + 1
        else:
            rng = random.Random(f"{seed}:rho:{n}")
            cofactor = _factor_with_rho(m, found, _Budget(budget), rng)
            if cofactor:
                raise IncompleteFactorizationError(
                    n, tuple(sorted(found.items())), cofactor, budget
                )
    return Factorization(n, tuple(sorted(found.items())))


# ---------------------------------------------------------------------------
# arithmetic functions

def valuation(p: int, n: int) -> int:
    """Exponent of the prime p in n >= 1."""
    if not probably_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"valuation requires n >= 1, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisors(f: Factorization, cap: int = DIVISOR_CAP) -> tuple[int, ...]:
    """All divisors of f.n in increasing order, including 1 and n."""
    if f.divisor_count > cap:
        raise DivisorCapError(
            f"{f.n} has {f.divisor_count} divisors, above the cap of {cap}"
        )
    out = [1]
    for p, e in f.factors:
        powers = [p**k for k in range(e + 1)]
        out = [d * q for d in out for q in powers]
    return tuple(sorted(out))


def moebius(n: int) -> int:
    """Moebius function of n >= 1."""
    if n < 1:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    if n == 1:
        return 1
    f = factorize(n)
    if not f.is_squarefree:
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(f: Factorization) -> int:
    """Euler totient from a factorization."""
    return prod((p - 1) * p ** (e - 1) for p, e in f.factors)


def divisor_factorizations(f: Factorization):
    """Yield (divisor, its factor tuple) for every divisor of f.n."""
    comps = [[(p, k) for k in range(e + 1)] for p, e in f.factors]
    for combo in iter_product(*comps):
        d = prod(p**k for p, k in combo)
        yield d, tuple((p, k) for p, k in combo if k > 0)
