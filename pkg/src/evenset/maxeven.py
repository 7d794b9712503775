"""Maximally even sets: the subsets whose Fourier coefficient at their own
cardinality has the largest possible modulus.

Two independent routes are provided.  :func:`me_oracle` enumerates every
d-subset and keeps the argmax family; :func:`me_formula` is the closed-form
floor construction ``{floor((k c + alpha) / d) mod c}``.  The test suite
checks that they agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .core import (
    EnumerationTooLarge,
    EvensetError,
    PitchClassSet,
    canonical_class,
    translate,
)
from .spectral import TOLERANCE, dft_subset

DEFAULT_BUDGET = 3_000_000


def _as_fraction(alpha) -> Fraction:
    if isinstance(alpha, str):
        return Fraction(alpha.strip())
    return Fraction(alpha)


@dataclass(frozen=True)
class MEQuery:
    c: int
    d: int
    alpha: Fraction = Fraction(0)

    def __post_init__(self):
        if not 0 <= self.d <= self.c:
            raise EvensetError(f"cardinality {self.d} outside [0, {self.c}]")
        object.__setattr__(self, "alpha", _as_fraction(self.alpha))

    def generate(self) -> PitchClassSet:
        return me_formula(self.c, self.d, self.alpha)


@dataclass
class MEResult:
    c: int
    d: int
    maximizers: list[PitchClassSet]
    max_magnitude: float
    class_representatives: list[PitchClassSet] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.class_representatives)

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "d": self.d,
            "maxMagnitude": self.max_magnitude,
            "maximizers": [list(A.members) for A in self.maximizers],
            "classRepresentatives": [list(A.members) for A in self.class_representatives],
        }


def enumeration_guard(c: int, d: int, budget: int | None = None) -> int:
    n = math.comb(c, d)
    limit = DEFAULT_BUDGET if budget is None else budget
    if n > limit:
        raise EnumerationTooLarge(f"enumeration too large: C({c},{d}) = {n} > budget {limit}")
    return n


def argmax_family(c: int, d: int, scores: np.ndarray, tol: float) -> tuple[list[PitchClassSet], float]:
    """Sets whose score is within ``tol`` of the best, in lexicographic order."""
    best = float(scores.max())
    ranks = np.flatnonzero(scores >= best - tol)
    return [PitchClassSet(c, _kernels.unrank(c, d, int(r))) for r in ranks], best


def class_representatives(sets: list[PitchClassSet]) -> list[PitchClassSet]:
    reps = {canonical_class(A).canonical for A in sets}
    return sorted(reps, key=lambda A: A.members)


def me_oracle(c: int, d: int, budget: int | None = None) -> MEResult:
    """Exhaustive argmax of |F_A(d)| over all d-subsets of Z_c."""
    if not 0 <= d <= c:
        raise EvensetError(f"cardinality {d} outside [0, {c}]")
    enumeration_guard(c, d, budget)
    scores = _kernels.fourier_scores(c, d, d)
    maximizers, best = argmax_family(c, d, scores, TOLERANCE)
    return MEResult(c, d, maximizers, best, class_representatives(maximizers))


def me_formula(c: int, d: int, alpha=0) -> PitchClassSet:
    """The set {floor((k c + alpha) / d) mod c : k = 0..d-1}, floored exactly."""
    if not 0 <= d <= c or c < 1:
        raise EvensetError(f"need 0 <= d <= c, got c={c}, d={d}")
    a = _as_fraction(alpha)
    p, q = a.numerator, a.denominator
    return PitchClassSet.from_residues(c, ((k * c * q + p) // (d * q) for k in range(d)))


def me_representative(c: int, d: int) -> PitchClassSet:
    """Lexicographically least translate of the maximally even d-subset of Z_c."""
    return canonical_class(me_formula(c, d)).canonical


def fourier_balance(A: PitchClassSet) -> float:
    """|F_A(d)| where d is the cardinality of A."""
    return abs(dft_subset(A)[len(A)])


def is_maximally_even(A: PitchClassSet) -> bool:
    d = len(A)
    if not 0 < d < A.c:
        raise EvensetError("maximal evenness needs 0 < Card A < c")
    return abs(fourier_balance(A) - fourier_balance(me_formula(A.c, d))) < TOLERANCE


def me_class_count(c: int, d: int) -> int:
    """Number of distinct maximally even d-subsets of Z_c (as sets)."""
    if not 0 < d < c:
        raise EvensetError("need 0 < d < c")
    return c // math.gcd(c, d)


def me_family(c: int, d: int, alpha=0) -> list[PitchClassSet]:
    """Every distinct translate of the formula set, sorted."""
    base = me_formula(c, d, alpha)
    return sorted({translate(base, t) for t in range(c)}, key=lambda A: A.members)


def verify_generated(c: int, d: int) -> int:
    """Return f = d^-1 mod c after checking {f, 2f, ..., d f} is maximally even."""
    if math.gcd(c, d) != 1:
        raise EvensetError("not coprime")
    f = pow(d, -1, c) if c > 1 else 0
    generated = PitchClassSet.from_residues(c, (j * f for j in range(1, d + 1)))
    if canonical_class(generated).canonical != me_representative(c, d):
        raise EvensetError(f"generated set {generated} is not a translate of the formula set")
    return f


def scaled_image(A: PitchClassSet) -> list[int]:
    """The multiset d*A (d = Card A) as a sorted list of residues."""
    d = len(A)
    return sorted((d * a) % A.c for a in A)


def is_consecutive_run(residues: list[int], c: int) -> bool:
    """True when the residues (no repeats) form one cyclic run of consecutive integers."""
    values = set(residues)
    if len(values) != len(residues):
        return False
    if len(values) in (0, c):
        return True
    starts = [v for v in values if (v - 1) % c not in values]
    return len(starts) == 1
