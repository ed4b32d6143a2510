from math import gcd, prod

import pytest

from primover.classify import is_overpseudoprime_fast
from primover.core_arith import divisors, factorize, is_prime
from primover.cyclotomic import (
    cyclotomic_value,
    gen_fermat,
    gen_mersenne,
    mersenne_factorization,
    moebius_product,
    phi_criterion,
    phi_pq,
    phi_prime_power,
    power_plus_one_factorization,
    progression_census,
    reduced_phi,
)
from primover.orders import order_mod_prime


class TestCyclotomicValue:
    @pytest.mark.parametrize("n,b,expected", [
        (1, 2, 1), (2, 2, 3), (3, 2, 7), (4, 2, 5), (6, 2, 3),
        (9, 2, 73), (11, 2, 2047), (15, 2, 151), (12, 10, 9901),
    ])
    def test_known_values(self, n, b, expected):
        assert cyclotomic_value(n, b) == expected

    def test_product_identity(self):
        # prod_{d | n} Phi_d(b) = b^n - 1
        for b in (2, 3, 10):
            for n in range(1, 40):
                ds = divisors(factorize(n)) if n > 1 else (1,)
                assert prod(cyclotomic_value(d, b) for d in ds) == b**n - 1

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            cyclotomic_value(0, 2)
        with pytest.raises(ValueError):
            cyclotomic_value(5, 1)


class TestSplitFactorizations:
    def test_mersenne(self):
        f = mersenne_factorization(2, 11)
        assert f.n == 2047 and f.factors == ((23, 1), (89, 1))

    def test_mersenne_composite_exponent(self):
        f = mersenne_factorization(10, 38)
        assert prod(p**e for p, e in f.factors) == (10**38 - 1) // 9

    def test_power_plus_one(self):
        f = power_plus_one_factorization(2, 32)
        assert f.n == 2**32 + 1 and f.factors == ((641, 1), (6700417, 1))


class TestPhiCriterion:
    def test_over_iff_criterion(self):
        for n in (2047, 3277, 4033, 8321):
            assert phi_criterion(2, n)
        for n in (341, 561, 645):
            assert not phi_criterion(2, n)

    def test_rejects_prime(self):
        with pytest.raises(ValueError):
            phi_criterion(2, 23)

    def test_matches_over_sweep(self):
        for n in range(9, 4000, 2):
            if gcd(2, n) != 1 or is_prime(n):
                continue
            from primover.orders import order_int
            if gcd(n, order_int(2, n)) != 1:
                continue
            assert phi_criterion(2, n) == is_overpseudoprime_fast(2, n)


class TestReducedPhi:
    def test_gcd_is_unit_or_largest_prime(self):
        for b in (2, 3, 5):
            for n in range(3, 200):
                value, g = reduced_phi(n, b)
                assert value * g == cyclotomic_value(n, b)
                assert g == 1 or g == factorize(n).largest_prime


class TestFamilies:
    def test_fermat_composite_member(self):
        fam = gen_fermat(2, 5)
        assert fam.value == 2**32 + 1
        assert not fam.verdict.is_prime
        assert fam.is_primover
        # both prime divisors share the order 2^(n+1)
        assert order_mod_prime(2, 641) == order_mod_prime(2, 6700417) == 64

    def test_fermat_prime_member(self):
        fam = gen_fermat(2, 4)
        assert fam.value == 65537 and fam.verdict.is_prime

    def test_fermat_rejects_odd_base(self):
        with pytest.raises(ValueError):
            gen_fermat(3, 2)

    def test_fermat_grid(self):
        for b in (2, 4, 6, 10):
            for n in (1, 2, 3):
                assert gen_fermat(b, n).is_primover

    def test_mersenne_2047(self):
        fam = gen_mersenne(2, 11)
        assert fam.value == 2047
        assert fam.verdict.is_overpseudoprime

    def test_mersenne_grid(self):
        for b in (2, 3, 5, 10):
            for p in (3, 5, 7, 11, 13, 17, 19, 23):
                if gcd(p, b - 1) != 1:
                    continue
                assert gen_mersenne(b, p).is_primover

    def test_mersenne_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            gen_mersenne(2, 9)
        with pytest.raises(ValueError):
            gen_mersenne(4, 3)  # gcd(3, 3) > 1

    def test_phi_pq_grid(self):
        for b in (2, 3, 5):
            for q, p in ((2, 3), (2, 5), (3, 5), (3, 7), (5, 7), (2, 11)):
                fam = phi_pq(b, q, p)
                assert fam.value == cyclotomic_value(p * q, b)
                assert fam.is_primover

    def test_phi_pq_reduction(self):
        # Phi_10(3) = 61 is not divisible by 5; Phi_6(4) = 13 not by 3;
        # Phi_6(5) = 21 = 3 * 7 reduces by p = 3 to 7
        fam = phi_pq(5, 2, 3)
        assert fam.value == 21 and fam.reduced == 7

    def test_phi_pq_rejects_order(self):
        with pytest.raises(ValueError):
            phi_pq(2, 5, 3)

    def test_phi_prime_power_grid(self):
        for b in (2, 3, 5, 10):
            for p in (2, 3, 5, 7):
                for n in (1, 2, 3):
                    if p == 2 and b % 2 == 0:
                        continue
                    if p**n * (1 if b < 4 else 2) > 64:
                        # keep the generated values small enough to factor
                        continue
                    fam = phi_prime_power(b, p, n)
                    assert fam.value == cyclotomic_value(p**n, b)
                    assert fam.is_primover

    def test_phi_prime_power_reduction(self):
        # Phi_9(4) = 4^6 + 4^3 + 1 = 4161 = 3 * 19 * 73, divisible by p = 3
        fam = phi_prime_power(4, 3, 2)
        assert fam.value == 4161 and fam.reduced == 1387
        assert fam.is_primover

    def test_moebius_product_grid(self):
        for b in (2, 3, 10):
            for n in (6, 10, 14, 15, 21, 30, 33, 35):
                fam = moebius_product(b, n)
                assert fam.value == cyclotomic_value(n, b)
                assert fam.is_primover

    def test_moebius_product_rejects_nonsquarefree(self):
        with pytest.raises(ValueError):
            moebius_product(2, 12)


class TestProgressionCensus:
    def test_mersenne_11_divisors(self):
        census = progression_census(2, 11, 100)
        assert census.primes == (23, 89)
        assert census.count == 2

    def test_entries_have_exact_order(self):
        census = progression_census(3, 5, 10**4)
        for p in census.primes:
            assert p % 5 == 1
            assert order_mod_prime(3, p) == 5

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            progression_census(2, 9, 100)
        with pytest.raises(ValueError):
            progression_census(4, 3, 100)
