"""Family classification, exponent computation, and tower predictions.

Families of odd squarefree d, by congruence and symbol conditions:

  A1  d = p prime, p = 9 (mod 16), (2/p)_4 = +1
  A2  d = p*q, p = q = 3 (mod 8), ordered so that (p/q) = +1
  B   d = p*q, p = 5 (mod 8), q = 3 (mod 8)
  C7  d = p prime, p = 7 (mod 16)

For A1/A2/B the 2-class group of every layer n >= 1 of both towers
(L over the quartic field containing i and sqrt(d), K over Q(sqrt(-d)))
is an exact function of one integer r read off an imaginary quadratic
class group:

  A-families: 2**r = h2(-2d);  layer shapes [2, 2^(n+r-2)] (L) and
              [2, 2^(n+r-1)] (K).
  B:          2**r = 2*h2(-p*q); both towers cyclic of order 2^(n+r-1).

C7 towers are cyclic and non-trivial but no order formula is available.
The corollary route recovers r (or a lower bound) from residue symbols
of small representation witnesses instead of a class-group computation;
cross_check confronts the two routes over a whole range of d.
"""

from dataclasses import dataclass, field

from .arith import OddSquarefree, factor_squarefree
from .diophantine import solve_kaplan, solve_legendre, solve_pell_rep, williams_criterion
from .errors import (
    EnumerationBoundExceeded,
    HypothesisNotMet,
    NoRepresentationInBound,
    NoSolutionInBound,
    PrecondViolated,
    UnsupportedFamily,
    ZtwoError,
)
from .qforms import class_group, discriminant_of
from .symbols import jacobi, quartic_2_reciprocal, quartic_residue

FAMILIES = ("A1", "A2", "B", "C7", "UNCLASSIFIED")
EXACT_FAMILIES = ("A1", "A2", "B")
TOWERS = ("L", "K")


@dataclass(frozen=True)
class FamilyTag:
    """Classification of d with the ordered primes and symbols that placed it."""

    tag: str
    d: OddSquarefree
    primes: tuple
    symbols: tuple = ()

    def describe(self):
        parts = [self.tag]
        if self.tag in ("A2", "B"):
            parts.append(f"p={self.primes[0]} q={self.primes[1]}")
        elif self.tag in ("A1", "C7"):
            parts.append(f"p={self.primes[0]}")
        parts.extend(f"{name}={'+1' if val == 1 else '-1'}" for name, val in self.symbols)
        return " ".join(parts)


@dataclass(frozen=True)
class GroupShape:
    """Cyclic decomposition of a predicted 2-group, ascending orders."""

    divisors: tuple
    exact: bool = True
    note: str = ""

    @property
    def order(self):
        n = 1
        for d in self.divisors:
            n *= d
        return n

    def __str__(self):
        if not self.divisors:
            return self.note or "trivial"
        return " x ".join(f"Z/{d}" for d in self.divisors)


@dataclass(frozen=True)
class Prediction:
    """Shape of the 2-class group of one tower layer, with its provenance."""

    d: OddSquarefree
    tower: str
    n: int
    shape: GroupShape
    r: int
    r_source: str
    theorem: str


@dataclass(frozen=True)
class IwasawaInvariants:
    """(lambda, mu, nu) with log2 |Cl2(layer n)| = lambda*n + mu*2**n + nu."""

    lam: int
    mu: int
    nu: int
    valid_from: int = 1


@dataclass(frozen=True)
class RBound:
    """Either an exact exponent r or a lower bound r >= bound."""

    value: int = None
    lower: int = None

    @classmethod
    def exact(cls, r):
        return cls(value=r)

    @classmethod
    def at_least(cls, r):
        return cls(lower=r)

    @property
    def is_exact(self):
        return self.value is not None

    def satisfied_by(self, r: int) -> bool:
        return r == self.value if self.is_exact else r >= self.lower

    def __str__(self):
        return str(self.value) if self.is_exact else f">={self.lower}"

    @classmethod
    def parse(cls, text: str):
        text = text.strip()
        if text.startswith(">="):
            return cls.at_least(int(text[2:]))
        return cls.exact(int(text))


def _as_oddsf(d) -> OddSquarefree:
    return d if isinstance(d, OddSquarefree) else factor_squarefree(int(d))


def classify(d) -> FamilyTag:
    """Assign the unique family tag of an odd squarefree d >= 3."""
    d = _as_oddsf(d)
    ps = d.factors
    if len(ps) == 1:
        p = ps[0]
        if p % 16 == 9:
            q4 = quartic_residue(2, p)
            if q4 == 1:
                return FamilyTag("A1", d, (p,), (("(2/p)_4", 1),))
            return FamilyTag("UNCLASSIFIED", d, (p,), (("(2/p)_4", q4),))
        if p % 16 == 7:
            return FamilyTag("C7", d, (p,))
        return FamilyTag("UNCLASSIFIED", d, (p,))
    if len(ps) == 2:
        p1, p2 = ps
        if p1 % 8 == 3 and p2 % 8 == 3:
            p, q = (p1, p2) if jacobi(p1, p2) == 1 else (p2, p1)
            return FamilyTag("A2", d, (p, q), (("(p/q)", 1),))
        if {p1 % 8, p2 % 8} == {3, 5}:
            p, q = (p1, p2) if p1 % 8 == 5 else (p2, p1)
            return FamilyTag("B", d, (p, q))
    return FamilyTag("UNCLASSIFIED", d, ps)


def _log2(n: int) -> int:
    return n.bit_length() - 1


def exponent_r_oracle(tag: FamilyTag) -> int:
    """r from the class-group engine: 2**r = h2(-2d) (A) or 2*h2(-pq) (B)."""
    if tag.tag not in EXACT_FAMILIES:
        raise UnsupportedFamily(f"no exponent r for family {tag.tag}")
    if tag.tag in ("A1", "A2"):
        return _log2(class_group(discriminant_of(-2 * tag.d.value)).h2)
    p, q = tag.primes
    return 1 + _log2(class_group(discriminant_of(-p * q)).h2)


def exponent_r_corollary(tag: FamilyTag, bound: int = 10 ** 6) -> RBound:
    """r (or a lower bound) from representation witnesses and symbols alone.

    A1: (u/p)_4 = -1 for the u of p = u^2 - 2v^2  <=>  r = 3.
    A2: (-2/|k^2 X + l Y|) = -1 for a Kaplan witness  <=>  r = 3 (for the
        k = 1 witnesses this is the plain (-2/|X + l Y|) criterion).
    B:  (p/q) = -1 => r = 2;  else (q/p)_4 = +1 => r = 3;  else the
        normalized solution of p X'^2 + q Y'^2 = Z^2 decides between
        r = 4 and r >= 5 via (Z/p)_4 vs (2X'/Z).
    """
    if tag.tag not in EXACT_FAMILIES:
        raise PrecondViolated(f"no corollary route for family {tag.tag}")
    if tag.tag == "A1":
        rep = solve_pell_rep(tag.primes[0], bound=bound)
        fires = quartic_residue(rep.u, rep.p) == -1
        return RBound.exact(3) if fires else RBound.at_least(4)
    if tag.tag == "A2":
        p, q = tag.primes
        wit = solve_kaplan(p, q, bound=bound)
        fires = jacobi(-2, abs(wit.norm_value)) == -1
        return RBound.exact(3) if fires else RBound.at_least(4)
    p, q = tag.primes
    if jacobi(p, q) == -1:
        return RBound.exact(2)
    if quartic_residue(q % p, p) == 1:
        return RBound.exact(3)
    if quartic_residue(-q % p, p) != 1:
        # unreachable for p = 5 (mod 8), where (-1/p)_4 = -1 flips the sign
        return RBound.at_least(4)
    sol = solve_legendre(p, q, bound=bound)
    if williams_criterion(sol) == 1:
        return RBound.exact(4)
    return RBound.at_least(5)


_THEOREMS = {
    ("A", "L"): "rank-2 L-tower: Z/2 x Z/2^(n+r-2) with 2^r = h2(-2d)",
    ("A", "K"): "rank-2 K-tower: Z/2 x Z/2^(n+r-1) with 2^r = h2(-2d)",
    ("B", "L"): "cyclic L-tower: Z/2^(n+r-1) with 2^r = 2*h2(-pq)",
    ("B", "K"): "cyclic K-tower: Z/2^(n+r-1) with 2^r = 2*h2(-pq)",
}


def predict(d, n: int, tower: str) -> Prediction:
    """Exact 2-class group of layer n >= 1 of the chosen tower."""
    if n < 1:
        raise ZtwoError(f"layer index must be >= 1, got {n}")
    if tower not in TOWERS:
        raise ZtwoError(f"tower must be 'L' or 'K', got {tower!r}")
    tag = classify(d)
    if tag.tag == "C7":
        if tower == "K":
            raise UnsupportedFamily("no K-tower formula for a prime d = 7 (mod 16)")
        shape = GroupShape((), exact=False, note="cyclic non-trivial, order not determined")
        return Prediction(tag.d, tower, n, shape, r=0, r_source="none",
                          theorem="cyclic L-tower of undetermined order")
    if tag.tag == "UNCLASSIFIED":
        raise UnsupportedFamily(f"d = {tag.d} matches no family with a prediction")
    r = exponent_r_oracle(tag)
    if tag.tag in ("A1", "A2"):
        divisors = (2, 2 ** (n + r - 2)) if tower == "L" else (2, 2 ** (n + r - 1))
        key = ("A", tower)
    else:
        divisors = (2 ** (n + r - 1),)
        key = ("B", tower)
    return Prediction(tag.d, tower, n, GroupShape(divisors), r=r,
                      r_source="oracle", theorem=_THEOREMS[key])


def iwasawa_invariants(d, tower: str) -> IwasawaInvariants:
    """lambda = 1, mu = 0 and the family's nu, valid from layer 1 on."""
    tag = classify(d)
    if tag.tag not in EXACT_FAMILIES:
        raise UnsupportedFamily(f"no invariants for family {tag.tag}")
    if tower not in TOWERS:
        raise ZtwoError(f"tower must be 'L' or 'K', got {tower!r}")
    r = exponent_r_oracle(tag)
    if tower == "K" and tag.tag in ("A1", "A2"):
        nu = r
    else:
        nu = r - 1
    return IwasawaInvariants(lam=1, mu=0, nu=nu, valid_from=1)


def lambda_minus(d) -> int:
    """2a + b - 1, counting prime factors with p mod 16 in {7, 9} (a) and
    p mod 8 in {3, 5} (b); every factor must fall in one of the classes."""
    d = _as_oddsf(d)
    a = sum(1 for p in d.factors if p % 16 in (7, 9))
    b = sum(1 for p in d.factors if p % 8 in (3, 5))
    if a + b != len(d.factors):
        bad = [p for p in d.factors if p % 16 not in (7, 9) and p % 8 not in (3, 5)]
        raise HypothesisNotMet(f"prime(s) {bad} lie outside the covered congruence classes")
    return 2 * a + b - 1


def plus_part_odd(d) -> bool:
    """Whether the real layers above sqrt(d) and sqrt(2) have odd class number."""
    d = _as_oddsf(d)
    ps = d.factors
    if len(ps) == 1:
        p = ps[0]
        if p % 4 == 3 or p % 8 == 5:
            return True
        if p % 8 == 1:
            return quartic_residue(2, p) * quartic_2_reciprocal(p) == -1
        return False
    if len(ps) == 2:
        q1, q2 = ps
        return (q1 % 4 == 3 and q2 % 4 == 3
                and (q1 % 8 == 3 or q2 % 8 == 3))
    return False


def is_cyclic_tower(d) -> bool:
    """True when every L-layer (n >= 2) has cyclic non-trivial 2-class group."""
    d = _as_oddsf(d)
    ps = d.factors
    if len(ps) == 1:
        return ps[0] % 16 == 7
    if len(ps) == 2:
        return {ps[0] % 8, ps[1] % 8} == {3, 5}
    return False


def greenberg_holds(d) -> bool:
    """Bounded growth of the real layers; asserted exactly for cyclic towers."""
    return is_cyclic_tower(d)


# ---------------------------------------------------------------------------
# corollary <-> oracle cross-validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossCheckEntry:
    d: int
    tag: str
    primes: tuple
    r_oracle: int
    r_corollary: RBound
    status: str  # "ok" | "violation" | "skipped"
    detail: str = ""


@dataclass
class CrossCheckReport:
    d_max: int
    entries: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def checked(self):
        return len(self.entries)

    def add(self, entry):
        self.entries.append(entry)
        if entry.status == "violation":
            self.violations.append(entry)
        elif entry.status == "skipped":
            self.skipped.append(entry)


def cross_check(d_max: int, families=None, bound: int = 10 ** 6) -> CrossCheckReport:
    """Confront the corollary exponent with the oracle for every classified d <= d_max.

    Per entry: the corollary's exact r must equal the oracle r, or its
    lower bound must be satisfied.  Family extras: A-families must have
    oracle r >= 3; family B must have a cyclic even 2-part for Cl(-pq).
    """
    report = CrossCheckReport(d_max=d_max)
    wanted = set(families) if families else set(EXACT_FAMILIES)
    for d in range(3, d_max + 1, 2):
        try:
            tag = classify(d)
        except ZtwoError:
            continue
        if tag.tag not in wanted or tag.tag not in EXACT_FAMILIES:
            continue
        try:
            r_oracle = exponent_r_oracle(tag)
        except EnumerationBoundExceeded as exc:
            report.add(CrossCheckEntry(d, tag.tag, tag.primes, -1, RBound.at_least(1),
                                       "skipped", f"oracle: {exc}"))
            continue
        try:
            r_cor = exponent_r_corollary(tag, bound=bound)
        except (NoSolutionInBound, NoRepresentationInBound) as exc:
            report.add(CrossCheckEntry(d, tag.tag, tag.primes, r_oracle, RBound.at_least(1),
                                       "skipped", f"corollary: {exc}"))
            continue
        problems = []
        if not r_cor.satisfied_by(r_oracle):
            problems.append(f"corollary {r_cor} vs oracle {r_oracle}")
        if tag.tag in ("A1", "A2"):
            if r_oracle < 3:
                problems.append(f"oracle r = {r_oracle} < 3 for an A-family")
        else:
            structure = class_group(discriminant_of(-tag.primes[0] * tag.primes[1]))
            if structure.two_rank != 1:
                problems.append(f"Cl({structure.D.D}) 2-part not cyclic: {structure.divisors}")
        status = "violation" if problems else "ok"
        report.add(CrossCheckEntry(d, tag.tag, tag.primes, r_oracle, r_cor,
                                   status, "; ".join(problems)))
    return report
