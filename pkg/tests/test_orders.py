import random
from math import gcd

import pytest

from primover.core_arith import NotCoprimeError, mod_pow, primes_up_to
from primover.orders import (
    IndeterminateOrderError,
    multiplicative_order,
    order_mod_prime,
    order_mod_prime_from_multiple,
    order_mod_prime_power,
    order_mod_two_power,
    wieferich_order,
)


def naive_order(b, n):
    x = b % n
    k = 1
    while x != 1:
        x = x * b % n
        k += 1
    return k


class TestMultiplicativeOrder:
    def test_small(self):
        assert multiplicative_order(2, 15).order == 4

    def test_known_orders(self):
        assert multiplicative_order(2, 167).order == 83
        assert multiplicative_order(2, 499).order == 166
        assert multiplicative_order(2, 1163).order == 166

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            multiplicative_order(2, 12)

    def test_witnesses_certify_minimality(self):
        rec = multiplicative_order(2, 2047)
        assert rec.order == 11
        assert pow(2, rec.order, 2047) == 1
        for q, residue in rec.witnesses:
            assert rec.order % q == 0
            assert residue == pow(2, rec.order // q, 2047) != 1

    def test_matches_naive_loop(self):
        for b in (2, 3, 5, 7, 10, 13):
            for n in range(2, 2500):
                if gcd(b, n) == 1:
                    assert multiplicative_order(b, n).order == naive_order(b, n)

    def test_matches_naive_loop_sampled_high(self):
        rnd = random.Random(42)
        for _ in range(300):
            b = rnd.choice((2, 3, 5, 7, 10, 13))
            n = rnd.randrange(2500, 10**4)
            if gcd(b, n) == 1:
                assert multiplicative_order(b, n).order == naive_order(b, n)

    def test_from_known_multiple(self):
        # 23 and 89 divide 2^11 - 1, so 11 is a valid order multiple
        assert order_mod_prime_from_multiple(2, 23, 11) == 11
        assert order_mod_prime_from_multiple(2, 89, 11) == 11


class TestOrderModPrimePower:
    def test_lift_stays_flat(self):
        lift = order_mod_prime_power(3, 11, 2)
        assert (lift.base_order, lift.m, lift.order) == (5, 2, 5)

    def test_wieferich_prime_lift(self):
        lift = order_mod_prime_power(2, 1093, 2)
        assert lift.order == order_mod_prime(2, 1093) == 364
        assert lift.m == 2

    def test_lift_multiplies(self):
        lift = order_mod_prime_power(2, 7, 2)
        assert (lift.base_order, lift.m, lift.order) == (3, 1, 21)

    def test_rejects_two(self):
        with pytest.raises(ValueError):
            order_mod_prime_power(3, 2, 2)

    def test_rejects_divisor(self):
        with pytest.raises(NotCoprimeError):
            order_mod_prime_power(14, 7, 2)

    def test_small_grid_matches_naive(self):
        for p in (3, 5, 7, 11, 13):
            for b in range(2, 12):
                if b % p == 0:
                    continue
                for t in (1, 2, 3):
                    assert order_mod_prime_power(b, p, t).order == naive_order(b, p**t)


class TestOrderModTwoPower:
    def test_values(self):
        assert order_mod_two_power(3, 1) == 1
        assert order_mod_two_power(3, 2) == 2
        assert order_mod_two_power(3, 3) == 2
        assert order_mod_two_power(7, 4) == 2
        assert order_mod_two_power(3, 5) == 8

    def test_matches_naive(self):
        for b in (3, 5, 7, 9, 11, 15):
            for t in range(1, 7):
                assert order_mod_two_power(b, t) == naive_order(b, 2**t)

    def test_rejects_even(self):
        with pytest.raises(NotCoprimeError):
            order_mod_two_power(6, 3)


class TestWieferichOrder:
    def test_known_wieferich(self):
        assert wieferich_order(2, 1093).w == 1
        assert wieferich_order(2, 3511).w == 1

    def test_ordinary_prime(self):
        assert wieferich_order(2, 7).w == 0

    def test_base_three(self):
        assert wieferich_order(3, 11).w == 1

    def test_matches_square_congruence(self):
        for b in (2, 3, 5):
            for p in primes_up_to(10**4):
                if p == 2 or b % p == 0:
                    continue
                expected = mod_pow(b, p - 1, p * p) == 1
                assert (wieferich_order(b, p).w >= 1) is expected

    def test_cap_raises(self):
        with pytest.raises(IndeterminateOrderError) as err:
            wieferich_order(2, 1093, cap=1)
        assert err.value.lower_bound >= 1

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            wieferich_order(2, 2)
        with pytest.raises(NotCoprimeError):
            wieferich_order(22, 11)
