import pytest

from tnomial.errors import EmptyInput
from tnomial.numtheory import (
    divisors,
    euler_phi,
    factorize,
    gcd_all,
    is_prime,
    lcm_all,
    prime_divisors,
)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    for n in range(-3, 32):
        assert is_prime(n) == (n in primes)


def test_is_prime_larger():
    assert is_prime(139571)
    assert not is_prime(139569)
    assert not is_prime(65536)
    assert is_prime(2**31 - 1)


def test_factorize():
    assert factorize(1) == ()
    assert factorize(2) == ((2, 1),)
    assert factorize(12) == ((2, 2), (3, 1))
    assert factorize(139570) == ((2, 1), (5, 1), (17, 1), (821, 1))
    assert factorize(2**10) == ((2, 10),)
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_roundtrip():
    for n in [6, 30, 128, 600, 9973, 104729, 2 * 3 * 5 * 7 * 11 * 13]:
        prod = 1
        for p, e in factorize(n):
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_prime_divisors():
    assert prime_divisors(12) == (2, 3)
    assert prime_divisors(1) == ()
    assert prime_divisors(30) == (2, 3, 5)


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(6) == (1, 2, 3, 6)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(36) == (1, 2, 3, 4, 6, 9, 12, 18, 36)


def test_divisors_count():
    # tau is multiplicative: tau(p^a * q^b) = (a+1)(b+1)
    assert len(divisors(2**3 * 3**2)) == 12
    assert len(divisors(97)) == 2


def test_gcd_all():
    assert gcd_all([12, 18, 30]) == 6
    assert gcd_all([12, 18], 30) == 6
    assert gcd_all([], 7) == 7
    assert gcd_all([0, 0], 5) == 5
    with pytest.raises(EmptyInput):
        gcd_all([])


def test_lcm_all():
    assert lcm_all([4, 6]) == 12
    assert lcm_all([2, 3, 5]) == 30
    with pytest.raises(EmptyInput):
        lcm_all([])


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(13) == 12
    # phi(n) = number of units mod n
    for n in range(2, 40):
        import math

        direct = sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
        assert euler_phi(n) == direct
