"""Type I / IIa / IIb / III classification of maximally even sets.

The type depends only on m = gcd(c, d):

    I    m = 1 (generated, well formed)
    IIa  m = d (regular division, d | c)
    IIb  1 < m = c - d < d (complement of a IIa set)
    III  everything else
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import EvensetError, PitchClassSet, period
from .maxeven import is_maximally_even, me_formula, me_representative


@dataclass(frozen=True)
class MEClassification:
    c: int
    d: int
    type: str
    m: int
    c_prime: int
    d_prime: int
    generator: Optional[int]
    period: int
    reduced: Optional[PitchClassSet]
    representative: PitchClassSet

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "d": self.d,
            "type": self.type,
            "m": self.m,
            "cPrime": self.c_prime,
            "dPrime": self.d_prime,
            "generator": self.generator,
            "period": self.period,
            "reduced": list(self.reduced.members) if self.reduced is not None else None,
        }


@dataclass(frozen=True)
class TypeIIIWitness:
    c: int
    d: int
    k: int
    p: int
    witness: PitchClassSet


def me_type(c: int, d: int) -> str:
    if not 0 < d < c:
        raise EvensetError("need 0 < d < c")
    m = math.gcd(c, d)
    if m == 1:
        return "I"
    if m == d:
        return "IIa"
    if m == c - d and m < d:
        return "IIb"
    return "III"


def classify(c: int, d: int) -> MEClassification:
    kind = me_type(c, d)
    m = math.gcd(c, d)
    rep = me_representative(c, d)
    if m == 1:
        generator, reduced = pow(d, -1, c), None
    else:
        generator = None
        reduced, _ = decompose(rep)
    return MEClassification(
        c=c, d=d, type=kind, m=m, c_prime=c // m, d_prime=d // m,
        generator=generator, period=c // m, reduced=reduced, representative=rep,
    )


def classify_set(A: PitchClassSet) -> MEClassification:
    if not is_maximally_even(A):
        raise EvensetError(f"{A} is not maximally even")
    return classify(A.c, len(A))


def decompose(A: PitchClassSet) -> tuple[PitchClassSet, int]:
    """Split a maximally even set into its residues mod c/m and m.

    The original set is recovered as the union of the reduced set shifted by
    every multiple of c/m.
    """
    if not 0 < len(A) < A.c or not is_maximally_even(A):
        raise EvensetError(f"{A} is not maximally even")
    m = math.gcd(A.c, len(A))
    if m == 1:
        raise EvensetError("irreducible (type I)")
    c_prime = A.c // m
    reduced = PitchClassSet.from_residues(c_prime, A.members)
    rebuilt = PitchClassSet.from_residues(
        A.c, (a + j * c_prime for a in reduced for j in range(m))
    )
    if rebuilt != A:
        raise AssertionError(f"decomposition of {A} does not rebuild it")
    return reduced, m


def find_generator(A: PitchClassSet) -> Optional[int]:
    """Smallest f in 1..c-1 with A = {a0 + j f : j < d} for some a0, or None."""
    d = len(A)
    if d == 0:
        return None
    if d == 1:
        return 1
    members = set(A.members)
    for f in range(1, A.c):
        for a0 in A:
            if {(a0 + j * f) % A.c for j in range(d)} == members:
                return f
    return None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


def type_iii_search(c: int) -> Optional[int]:
    """Smallest d whose maximally even d-subset of Z_c is of type III."""
    if c < 2:
        raise EvensetError("need c >= 2")
    for d in range(1, c):
        if me_type(c, d) == "III":
            return d
    return None


def _lemma_pair(c: int) -> tuple[int, int]:
    odd = c
    while odd % 2 == 0:
        odd //= 2
    if odd == 1:
        return c // 2, 3
    if odd == 3:
        return c // 2, 5
    if odd == c:
        # odd composite: its largest proper divisor is odd and >= 5 once c > 12
        spf = next(q for q in range(3, c) if c % q == 0)
        return c // spf, 2
    return odd, 2


def lemma_witness(c: int) -> TypeIIIWitness:
    """Constructive type III set for composite c > 12.

    Picks a divisor k of c and a prime p not dividing k (k = c/2, p = 3 for
    powers of two; an odd factor k > 3 with p = 2; k = c/2, p = 5 for
    3 * 2^a), then replicates the set generated by p in Z_k across the c/k
    cosets of k*Z_c.
    """
    if c <= 12 or is_prime(c):
        raise EvensetError("out of theorem scope: need composite c > 12")
    k, p = _lemma_pair(c)
    d_sub = pow(p, -1, k)
    cell = [(j * p) % k for j in range(d_sub)]
    witness = PitchClassSet.from_residues(c, (a + k * r for a in cell for r in range(c // k)))
    if me_type(c, len(witness)) != "III" or not is_maximally_even(witness):
        raise AssertionError(f"lemma construction failed for c={c}: {witness}")
    return TypeIIIWitness(c, len(witness), k, p, witness)


def period_matches(c: int, d: int) -> bool:
    return period(me_formula(c, d)) == c // math.gcd(c, d)
