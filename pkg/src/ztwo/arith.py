"""Exact integer kernel: primality, squarefree factorization, modular power.

All functions are pure and deterministic.  Bounds are deliberately modest
(inputs below 2**40 for factorization, 2**64 for primality) so that every
intermediate stays well inside native big-int comfort and the primality
test is provably correct, not probabilistic.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InvalidInput, NotSquarefree

PRIMALITY_BOUND = 1 << 64
FACTOR_BOUND = 1 << 40

# Witnesses proven sufficient for a deterministic Miller-Rabin below 3.3e24,
# which covers the full 2**64 input range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

_TRIAL_LIMIT = 1 << 16


@dataclass(frozen=True)
class OddSquarefree:
    """A validated odd squarefree integer with its sorted prime factors."""

    value: int
    factors: tuple

    def __post_init__(self):
        if self.value % 2 == 0:
            raise InvalidInput(f"{self.value} is even")
        prod = 1
        for p in self.factors:
            prod *= p
        if prod != self.value:
            raise InvalidInput(f"factors {self.factors} do not multiply to {self.value}")
        if list(self.factors) != sorted(set(self.factors)):
            raise InvalidInput(f"factors {self.factors} not sorted and distinct")
        if not all(is_prime(p) for p in self.factors):
            raise InvalidInput(f"non-prime entry in {self.factors}")

    @property
    def num_factors(self):
        return len(self.factors)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for 1 < n < 2**64."""
    if not 1 < n < PRIMALITY_BOUND:
        raise InvalidInput(f"is_prime defined for 1 < n < 2**64, got {n}")
    for p in _SMALL_PRIMES:
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


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise InvalidInput(f"factorization of {n} failed")  # unreachable in range


def factorize(n: int) -> dict:
    """Prime factorization {p: e} of 1 <= n < 2**40 by trial division + rho."""
    if not 1 <= n < FACTOR_BOUND:
        raise InvalidInput(f"factorize defined for 1 <= n < 2**40, got {n}")
    fac = {}
    for p in (2, 3, 5):
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    f = 7
    # wheel over residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < _TRIAL_LIMIT:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            fac[f] = e
        f += steps[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return fac


def factor_squarefree(n: int) -> OddSquarefree:
    """Factor an odd squarefree n in [3, 2**40); error if a square divides it."""
    if n % 2 == 0 or not 3 <= n < FACTOR_BOUND:
        raise InvalidInput(f"need odd n with 3 <= n < 2**40, got {n}")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        raise NotSquarefree(f"{n} is divisible by a square")
    return OddSquarefree(n, tuple(sorted(fac)))


def is_squarefree(n: int) -> bool:
    """True iff no square > 1 divides n (1 <= n < 2**40)."""
    return all(e == 1 for e in factorize(n).values())


def modpow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus, canonical representative in [0, modulus)."""
    if modulus < 1:
        raise InvalidInput(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise InvalidInput(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n
