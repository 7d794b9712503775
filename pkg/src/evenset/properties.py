"""Scale-theoretic consequences of maximal evenness, plus the two
pairwise-distance sums that fail or succeed to single it out.

Both distance sums run over ORDERED pairs (x, y), x != y.  That is the
convention under which the pentachord values 40..72 and the Euclidean total
30.5758 come out; unordered sums are exactly half.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import EvensetError, PitchClassSet, canonical_class, translate
from .maxeven import (
    argmax_family,
    class_representatives,
    enumeration_guard,
    is_maximally_even,
    me_formula,
    me_representative,
)

METRICS = ("angular", "euclidean")


@dataclass(frozen=True)
class StepPattern:
    c: int
    steps: tuple[int, ...]


@dataclass(frozen=True)
class VarietyReport:
    c: int
    d: int
    span: int
    orbit_count: int
    representatives: tuple[PitchClassSet, ...]
    # internal step sequence of each orbit, parallel to representatives
    shapes: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class InclusionReport:
    c: int
    d: int
    count: int
    expected: int
    witnesses: tuple[PitchClassSet, ...]


@dataclass
class DistanceSumResult:
    c: int
    d: int
    metric: str
    max_value: float
    maximizers: list[PitchClassSet]
    class_representatives: list[PitchClassSet]
    value_counts: dict

    @property
    def class_count(self) -> int:
        return len(self.class_representatives)


def circular_distance(x: int, y: int, c: int) -> int:
    r = (x - y) % c
    return min(r, c - r)


def step_pattern(A: PitchClassSet) -> StepPattern:
    if not A.members:
        raise EvensetError("step pattern of the empty set")
    a = A.members
    steps = tuple((a[(i + 1) % len(a)] - a[i]) % A.c or A.c for i in range(len(a)))
    return StepPattern(A.c, steps)


def myhill_check(A: PitchClassSet) -> tuple[frozenset, bool]:
    """Distinct step sizes of a maximally even set, and whether there are two."""
    if not is_maximally_even(A):
        raise EvensetError(f"{A} is not maximally even")
    values = frozenset(step_pattern(A).steps)
    return values, len(values) == 2


def generic_interval_spectrum(A: PitchClassSet, span: int) -> frozenset:
    d = len(A)
    if not 1 <= span < d:
        raise EvensetError(f"span must satisfy 1 <= span < {d}")
    a = A.members
    return frozenset((a[(i + span) % d] - a[i]) % A.c for i in range(d))


def windows(A: PitchClassSet, span: int) -> list[PitchClassSet]:
    """The d runs of ``span`` circularly consecutive members, as sets."""
    a, d = A.members, len(A)
    return [PitchClassSet(A.c, tuple(a[(i + j) % d] for j in range(span))) for i in range(d)]


def window_sequences(A: PitchClassSet, span: int) -> list[tuple[int, ...]]:
    a, d = A.members, len(A)
    return [tuple(a[(i + j) % d] for j in range(span)) for i in range(d)]


def cardinality_variety(c: int, d: int, span: int, as_sets: bool = False) -> VarietyReport:
    """Count transposition types among the d windows of ``span`` consecutive
    members of the maximally even d-set.

    Windows are ordered sequences by default: two windows are equivalent when
    one is the other shifted by a constant, i.e. when their internal steps
    agree.  ``as_sets=True`` forgets the order and compares translation
    classes of the underlying sets, which can merge orbits.
    """
    if not 0 < d <= c or not 1 <= span <= d:
        raise EvensetError(f"need 0 < d <= c and 1 <= span <= d (c={c}, d={d}, span={span})")
    base = me_representative(c, d)
    if as_sets:
        reps = class_representatives(windows(base, span))
        shapes = tuple(tuple(s for s in _steps(r.members, c)) for r in reps)
        return VarietyReport(c, d, span, len(reps), tuple(reps), shapes)
    orbits: dict[tuple[int, ...], PitchClassSet] = {}
    for seq in window_sequences(base, span):
        shape = _steps(seq, c)
        orbits.setdefault(shape, PitchClassSet.from_residues(c, (x - seq[0] for x in seq)))
    shapes = tuple(sorted(orbits))
    return VarietyReport(c, d, span, len(shapes), tuple(orbits[s] for s in shapes), shapes)


def _steps(seq, c: int) -> tuple[int, ...]:
    return tuple((seq[j + 1] - seq[j]) % c for j in range(len(seq) - 1))


def inclusion_in_complement(c: int, d: int) -> InclusionReport:
    """Translates of the maximally even (c-d)-set containing a fixed d-set.

    ``expected`` is c' - 2 d' + 1 with c' = c/m, d' = d/m; for coprime
    arguments that is c - 2d + 1.
    """
    if not 0 < d or 2 * d >= c:
        raise EvensetError("need 0 < d < c/2")
    small = me_formula(c, d)
    big = me_formula(c, c - d)
    found = sorted(
        {T for T in (translate(big, t) for t in range(c)) if small.issubset(T)},
        key=lambda s: s.members,
    )
    m = math.gcd(c, d)
    expected = c // m - 2 * (d // m) + 1
    return InclusionReport(c, d, len(found), expected, tuple(found))


def distance_matrix(c: int, metric: str) -> np.ndarray:
    idx = np.arange(c)
    raw = np.abs(idx[:, None] - idx[None, :]) % c
    dist = np.minimum(raw, c - raw)
    if metric == "angular":
        return dist.astype(np.float64)
    if metric == "euclidean":
        return 2.0 * np.sin(np.pi * dist / c)
    raise EvensetError(f"unknown metric {metric!r}; choose from {METRICS}")


def angular_interval_sum(A: PitchClassSet) -> int:
    return sum(circular_distance(x, y, A.c) for x in A for y in A if x != y)


def euclidean_chord_sum(A: PitchClassSet) -> float:
    return math.fsum(
        2.0 * math.sin(math.pi * circular_distance(x, y, A.c) / A.c)
        for x in A for y in A if x != y
    )


def distance_sum_argmax(c: int, d: int, metric: str, budget: int | None = None) -> DistanceSumResult:
    enumeration_guard(c, d, budget)
    scores = _kernels.pair_scores(c, d, distance_matrix(c, metric))
    if metric == "angular":
        scores = np.rint(scores)
        values, counts = np.unique(scores.astype(np.int64), return_counts=True)
        value_counts = {int(v): int(n) for v, n in zip(values, counts)}
    else:
        value_counts = {}
    maximizers, best = argmax_family(c, d, scores, 1e-9)
    if metric == "angular":
        best = int(best)
    return DistanceSumResult(
        c, d, metric, best, maximizers, class_representatives(maximizers), value_counts
    )


def second_order_me(c: int, d: int, e: int, offset: int = 0, base: PitchClassSet | None = None) -> PitchClassSet:
    """Pick the members of a maximally even d-set at the indices of a
    maximally even e-subset of Z_d (shifted by ``offset``).

    ``base`` defaults to the canonical maximally even (c, d) set; any sorted
    d-subset of Z_c can be supplied instead, e.g. a specific mode.
    """
    if not 0 <= e <= d <= c:
        raise EvensetError("need e <= d <= c")
    if base is None:
        base = me_representative(c, d)
    elif base.c != c or len(base) != d:
        raise EvensetError(f"base set must be a {d}-subset of Z_{c}")
    indices = me_formula(d, e).members if d else ()
    return PitchClassSet(c, tuple(base.members[(i + offset) % d] for i in indices))
