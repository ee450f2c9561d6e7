"""Bounded solvers for the three representation problems the criteria use.

Every solver is a deterministic bounded search; a witness that exists but
lies beyond the bound surfaces as NoRepresentationInBound or
NoSolutionInBound, never as a wrong answer.  Returned objects re-validate
their defining identities on construction, independently of the search
path that produced them.
"""

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .arith import is_prime
from .errors import (
    BadPrimeClass,
    InvalidInput,
    NoRepresentationInBound,
    NoSolutionInBound,
    PrecondViolated,
)
from .symbols import jacobi, quartic_residue

DEFAULT_BOUND = 10 ** 6

# numpy int64 stays exact below 2**62; larger operands fall back to pure int
_VECTOR_SAFE = 1 << 62


@dataclass(frozen=True)
class PellRepresentation:
    """p = u**2 - 2*v**2 with u, v > 0 and u = 1 (mod 8)."""

    p: int
    u: int
    v: int

    def __post_init__(self):
        check_pell_representation(self)


@dataclass(frozen=True)
class KaplanParams:
    """Witness for 2q = k**2 X**2 + 2lXY + 2mY**2 with p = l**2 - 2 k**2 m."""

    p: int
    q: int
    k: int
    l: int
    m: int
    X: int
    Y: int

    def __post_init__(self):
        check_kaplan_params(self)

    @property
    def norm_value(self):
        """k**2 X + l Y; satisfies norm_value**2 - p Y**2 = 2 q k**2.

        This is the quantity that is invariant (up to sign) across
        witnesses; for k = 1 it is simply X + l Y.
        """
        return self.k * self.k * self.X + self.l * self.Y


@dataclass(frozen=True)
class LegendreSolution:
    """Positive solution of p*Xp**2 + q*Yp**2 = Z**2, normalized.

    Coprimality: (Xp,Yp) = (Yp,Z) = (Z,Xp) = (p, Yp*Z) = (q, Xp*Z) = 1;
    parity: Xp odd, Yp even, Z = 1 (mod 4).
    """

    p: int
    q: int
    Xp: int
    Yp: int
    Z: int

    def __post_init__(self):
        check_legendre_solution(self)


# ---------------------------------------------------------------------------
# independent validators (raise InvalidInput; no dependence on the solvers)
# ---------------------------------------------------------------------------

def check_pell_representation(rep):
    p, u, v = rep.p, rep.u, rep.v
    if u <= 0 or v <= 0:
        raise InvalidInput(f"u, v must be positive: {rep}")
    if u * u - 2 * v * v != p:
        raise InvalidInput(f"{u}**2 - 2*{v}**2 != {p}")
    if u % 8 != 1:
        raise InvalidInput(f"u = {u} is not 1 (mod 8)")


def check_kaplan_params(w):
    if w.l * w.l - 2 * w.k * w.k * w.m != w.p:
        raise InvalidInput(f"l^2 - 2k^2 m != p for {w}")
    lhs = w.k * w.k * w.X * w.X + 2 * w.l * w.X * w.Y + 2 * w.m * w.Y * w.Y
    if lhs != 2 * w.q:
        raise InvalidInput(f"form value {lhs} != 2q for {w}")


def check_legendre_solution(sol):
    p, q, X, Y, Z = sol.p, sol.q, sol.Xp, sol.Yp, sol.Z
    if min(X, Y, Z) <= 0:
        raise InvalidInput(f"solution must be positive: {sol}")
    if p * X * X + q * Y * Y != Z * Z:
        raise InvalidInput(f"p X'^2 + q Y'^2 != Z^2 for {sol}")
    if X % 2 == 0 or Y % 2 == 1 or Z % 4 != 1:
        raise InvalidInput(f"parity conditions violated for {sol}")
    if not (gcd(X, Y) == gcd(Y, Z) == gcd(Z, X) == 1):
        raise InvalidInput(f"X', Y', Z not pairwise coprime in {sol}")
    if gcd(p, Y * Z) != 1 or gcd(q, X * Z) != 1:
        raise InvalidInput(f"p or q divides a forbidden component in {sol}")


# ---------------------------------------------------------------------------
# solvers
# ---------------------------------------------------------------------------

def solve_pell_rep(p: int, bound: int = DEFAULT_BOUND) -> PellRepresentation:
    """Smallest-v representation p = u**2 - 2v**2 with u = 1 (mod 8)."""
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if p % 8 != 1:
        raise BadPrimeClass(f"need p = 1 (mod 8), got p = {p}")
    for v in range(1, bound + 1):
        u2 = p + 2 * v * v
        u = isqrt(u2)
        if u * u == u2 and u % 8 == 1:
            return PellRepresentation(p, u, v)
    raise NoRepresentationInBound(f"no u = 1 (mod 8) representation of {p} with v <= {bound}")


def _norm_rep_pairs(p, target, y_bound, keep=256):
    """Positive (Y, s) with s**2 - p Y**2 = target, Y ascending, Y <= y_bound."""
    if p * (y_bound + 1) * (y_bound + 1) + target < _VECTOR_SAFE:
        pairs = []
        block = 1 << 16
        for lo in range(1, y_bound + 1, block):
            ys = np.arange(lo, min(lo + block, y_bound + 1), dtype=np.int64)
            s2 = p * ys * ys + target
            s = np.rint(np.sqrt(s2.astype(np.float64))).astype(np.int64)
            for ds in (0, -1, 1):
                cand = s + ds
                for i in np.nonzero(cand * cand == s2)[0]:
                    pairs.append((int(ys[i]), int(cand[i])))
            if len(pairs) >= keep:
                break
        pairs.sort()
        return pairs[:keep]
    pairs = []
    for y in range(1, y_bound + 1):
        s2 = p * y * y + target
        s = isqrt(s2)
        if s * s == s2:
            pairs.append((y, s))
            if len(pairs) >= keep:
                break
    return pairs


def solve_kaplan(p: int, q: int, bound: int = DEFAULT_BOUND,
                 k_max: int = 64, l_max: int = 1 << 16) -> KaplanParams:
    """First witness in (k, then l, then |Y|) order; bound caps |Y|."""
    if not (is_prime(p) and is_prime(q)):
        raise InvalidInput(f"{p}, {q} must both be prime")
    if p % 8 != 3 or q % 8 != 3:
        raise PrecondViolated(f"need p = q = 3 (mod 8), got {p}, {q}")
    if jacobi(p, q) != 1:
        raise PrecondViolated(f"need (p/q) = +1; order the pair so it holds")
    for k in range(1, k_max + 1):
        k2 = k * k
        pairs = _norm_rep_pairs(p, 2 * q * k2, bound)
        if not pairs:
            continue
        modulus = 2 * k2
        for l in range(0, l_max + 1):
            if (l * l - p) % modulus:
                continue
            m = (l * l - p) // modulus
            for abs_y, s in pairs:
                for Y in (abs_y, -abs_y):
                    for root in (s, -s):
                        num = -l * Y + root
                        if num % k2 == 0:
                            return KaplanParams(p, q, k, l, m, num // k2, Y)
    raise NoSolutionInBound(f"no Kaplan witness for ({p}, {q}) with |Y| <= {bound}, k <= {k_max}")


def _sqrt_mod_prime(n, p):
    """A square root of n modulo an odd prime p (Tonelli-Shanks)."""
    n %= p
    if n == 0:
        return 0
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    r = pow(n, (q + 1) // 2, p)
    t = pow(n, q, p)
    m = s
    while t != 1:
        i, x = 0, t
        while x != 1:
            x = x * x % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def _check_legendre_preconds(p, q):
    if not (is_prime(p) and is_prime(q)):
        raise InvalidInput(f"{p}, {q} must both be prime")
    if p % 8 != 5 or q % 8 != 3:
        raise PrecondViolated(f"need p = 5 and q = 3 (mod 8), got {p}, {q}")
    if jacobi(p, q) != 1:
        raise PrecondViolated(f"need (p/q) = +1 for ({p}, {q})")
    if quartic_residue(-q % p, p) != 1:
        raise PrecondViolated(f"need (-q/p)_4 = +1 for ({p}, {q})")


def _legendre_candidates(p, q, z_bound):
    """Admissible solutions in increasing-Z order (generator).

    For each Z, X' must satisfy p X'**2 = Z**2 (mod q), so only two
    residue classes of X' mod q can occur; scanning those keeps the
    search near-linear in Z.
    """
    root = _sqrt_mod_prime(pow(p, -1, q), q)
    for Z in range(5, z_bound + 1, 4):
        zz = Z * Z
        if zz <= 4 * q:
            continue
        xmax = isqrt((zz - 4 * q) // p)  # Y' even forces q Y'**2 >= 4q
        residues = sorted({Z * root % q, -Z * root % q})
        xs = []
        for r in residues:
            x = r if r else q
            while x <= xmax:
                xs.append(x)
                x += q
        for X in sorted(xs):
            if X % 2 == 0:
                continue
            rem = zz - p * X * X
            if rem <= 0 or rem % q:
                continue
            yy = rem // q
            Y = isqrt(yy)
            if Y * Y != yy or Y % 2 or Y == 0:
                continue
            if gcd(X, Y) != 1 or gcd(Y, Z) != 1 or gcd(Z, X) != 1:
                continue
            if Y % p == 0 or Z % p == 0 or X % q == 0 or Z % q == 0:
                continue
            yield LegendreSolution(p, q, X, Y, Z)


def solve_legendre(p: int, q: int, bound: int = DEFAULT_BOUND) -> LegendreSolution:
    """The admissible solution with smallest Z (then smallest X')."""
    _check_legendre_preconds(p, q)
    for sol in _legendre_candidates(p, q, bound):
        return sol
    raise NoSolutionInBound(f"no admissible solution for ({p}, {q}) with Z <= {bound}")


def enumerate_legendre_solutions(p: int, q: int, bound: int) -> list:
    """All admissible solutions with Z <= bound, in increasing-Z order."""
    _check_legendre_preconds(p, q)
    return list(_legendre_candidates(p, q, bound))


def williams_criterion(sol: LegendreSolution) -> int:
    """+1 when (Z/p)_4 differs from (2X'/Z); -1 when they agree."""
    quartic = quartic_residue(sol.Z % sol.p, sol.p)
    jac = jacobi(2 * sol.Xp, sol.Z)
    return 1 if quartic != jac else -1
