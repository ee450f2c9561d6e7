import random

import pytest

from ztwo.arith import OddSquarefree, factor_squarefree, factorize, is_prime, modpow
from ztwo.errors import InvalidInput, NotSquarefree


def test_is_prime_examples():
    assert is_prime(89)
    assert is_prime(2)
    assert not is_prime(187449)  # 3 * 62483


@pytest.mark.parametrize("bad", [0, 1, -7, 1 << 64])
def test_is_prime_range(bad):
    with pytest.raises(InvalidInput):
        is_prime(bad)


def test_is_prime_agrees_with_sieve_to_one_million():
    limit = 10 ** 6
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit, i)))
    assert all(is_prime(n) == bool(sieve[n]) for n in range(2, limit))


def test_factor_squarefree_examples():
    assert factor_squarefree(247).factors == (13, 19)
    assert factor_squarefree(3).factors == (3,)
    with pytest.raises(NotSquarefree):
        factor_squarefree(45)  # 3^2 | 45


@pytest.mark.parametrize("bad", [4, 1, -3, 2 ** 40 + 1])
def test_factor_squarefree_rejects(bad):
    with pytest.raises(InvalidInput):
        factor_squarefree(bad)


def test_factor_roundtrip():
    rng = random.Random(20817)
    for _ in range(200):
        n = rng.randrange(3, 10 ** 7, 2)
        try:
            d = factor_squarefree(n)
        except NotSquarefree:
            continue
        prod = 1
        for p in d.factors:
            assert is_prime(p)
            prod *= p
        assert prod == n
        assert sorted(set(d.factors)) == list(d.factors)


def test_factorize_pollard_rho_path():
    # two primes above the trial-division limit force the rho stage
    p, q = 262147, 262153
    assert factorize(p * q) == {p: 1, q: 1}
    assert factor_squarefree(p * q).factors == (p, q)


def test_oddsquarefree_validates():
    with pytest.raises(InvalidInput):
        OddSquarefree(15, (3,))


def test_modpow_examples():
    assert modpow(2, 22, 89) == 1  # 2^11 = 1 (mod 89), squared
    assert modpow(7, 0, 11) == 1
    assert modpow(4, 1, 5) == 4


def test_modpow_canonical_range_and_errors():
    assert modpow(-3, 3, 7) == (-27) % 7
    assert modpow(5, 2, 1) == 0
    with pytest.raises(InvalidInput):
        modpow(2, -1, 5)
    with pytest.raises(InvalidInput):
        modpow(2, 3, 0)


def test_modpow_exponent_additivity():
    rng = random.Random(40917)
    for _ in range(300):
        m = rng.randrange(2, 10 ** 9)
        a = rng.randrange(0, m)
        e1 = rng.randrange(0, 1000)
        e2 = rng.randrange(0, 1000)
        assert modpow(a, e1 + e2, m) == modpow(a, e1, m) * modpow(a, e2, m) % m
