"""Exhaustive property sweeps backing the ``verify`` command.

Each ``check_*`` function yields :class:`Check` records; nothing raises on a
violated property, so one run reports every failure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import _kernels
from .classify import (
    classify,
    is_prime,
    lemma_witness,
    me_type,
    type_iii_search,
)
from .core import (
    PitchClassSet,
    canonical_class,
    complement,
    invert,
    period,
    translate,
)
from .maxeven import (
    is_consecutive_run,
    is_maximally_even,
    me_family,
    me_formula,
    me_oracle,
    scaled_image,
)
from .properties import (
    angular_interval_sum,
    cardinality_variety,
    distance_sum_argmax,
    euclidean_chord_sum,
    generic_interval_spectrum,
    inclusion_in_complement,
    step_pattern,
)
from .spectral import TOLERANCE, dft_subset, verify_hexachord, verify_lewin


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def all_subsets(c: int) -> Iterator[PitchClassSet]:
    for d in range(c + 1):
        for combo in itertools.combinations(range(c), d):
            yield PitchClassSet(c, combo)


def _first_failure(name, cases, predicate) -> Check:
    n = 0
    for case in cases:
        n += 1
        if not predicate(case):
            return Check(name, False, f"counterexample: {case}")
    return Check(name, True, f"{n} cases")


def check_core(max_c: int = 10) -> Iterator[Check]:
    sets = [A for c in range(1, max_c + 1) for A in all_subsets(c)]
    yield _first_failure(
        "core: canonical class is translation invariant",
        sets,
        lambda A: all(
            canonical_class(translate(A, t)).canonical == canonical_class(A).canonical
            for t in range(A.c)
        ),
    )
    yield _first_failure(
        "core: complement and inversion are involutions",
        sets,
        lambda A: complement(complement(A)) == A and invert(invert(A)) == A,
    )
    nonempty = [A for A in sets if len(A)]
    yield _first_failure(
        "core: period invariant under translation and inversion",
        nonempty,
        lambda A: period(A) == period(translate(A, 1)) == period(invert(A)),
    )
    yield _first_failure(
        "core: orbit size equals period and divides c",
        nonempty,
        lambda A: canonical_class(A).orbit_size == period(A) and A.c % period(A) == 0,
    )


def check_spectral(max_c: int = 10, hexachord_c: int = 12) -> Iterator[Check]:
    sets = [A for c in range(1, max_c + 1) for A in all_subsets(c)]
    yield _first_failure("spectral: Lewin identity", sets, lambda A: verify_lewin(A)[0])

    def translation_phase(A):
        F = dft_subset(A).values
        t = np.arange(A.c)
        for p in range(A.c):
            shifted = dft_subset(translate(A, -p)).values
            if np.max(np.abs(shifted - np.exp(2j * np.pi * p * t / A.c) * F)) > TOLERANCE:
                return False
        return True

    yield _first_failure("spectral: translation multiplies by a phase", sets, translation_phase)
    yield _first_failure(
        "spectral: inversion conjugates",
        sets,
        lambda A: np.max(np.abs(dft_subset(invert(A)).values - np.conj(dft_subset(A).values)), initial=0)
        < TOLERANCE,
    )
    yield _first_failure(
        "spectral: complement spectrum is opposite off zero",
        sets,
        lambda A: np.max(np.abs((dft_subset(A).values + dft_subset(complement(A)).values)[1:]), initial=0)
        < TOLERANCE,
    )

    def regular(cd):
        c, d = cd
        F = dft_subset(PitchClassSet(c, tuple(range(0, c, c // d)))).values
        expect = np.array([d if t % d == 0 else 0 for t in range(c)])
        return np.max(np.abs(F - expect)) < TOLERANCE

    yield _first_failure(
        "spectral: regular division spectrum",
        [(c, d) for c in range(1, 65) for d in range(1, c + 1) if c % d == 0],
        regular,
    )
    if hexachord_c >= 2:
        c = hexachord_c - hexachord_c % 2
        yield _first_failure(
            f"spectral: hexachord theorem in Z_{c}",
            (PitchClassSet(c, s) for s in itertools.combinations(range(c), c // 2)),
            verify_hexachord,
        )


def oracle_matches_formula(c: int, d: int) -> bool:
    result = me_oracle(c, d)
    family = me_family(c, d)
    return result.maximizers == family and len(family) == c // math.gcd(c, d)


def rigidity_holds(c: int) -> bool:
    """|F_A(d)| = d exactly for the translates of the regular d-gon, nowhere else."""
    for d in range(1, c + 1):
        scores = _kernels.fourier_scores(c, d, d)
        hits = {
            _kernels.unrank(c, d, int(r)) for r in np.flatnonzero(np.abs(scores - d) < TOLERANCE)
        }
        if c % d:
            expected = set()
        else:
            expected = {translate(PitchClassSet(c, tuple(range(0, c, c // d))), t).members for t in range(c)}
        if hits != expected:
            return False
    return True


def check_maxeven(max_c: int = 20, rigid_c: int = 16) -> Iterator[Check]:
    pairs = [(c, d) for c in range(2, max_c + 1) for d in range(1, c)]
    yield _first_failure(
        "maxeven: oracle argmax family equals formula translates",
        pairs,
        lambda cd: oracle_matches_formula(*cd),
    )
    yield _first_failure(
        "maxeven: |F_A(d)| = d iff regular polygon",
        range(1, rigid_c + 1),
        rigidity_holds,
    )
    small = [(c, d) for c, d in pairs if c <= rigid_c]
    yield _first_failure(
        "maxeven: complement of maximally even is maximally even",
        small,
        lambda cd: all(
            is_maximally_even(A) == is_maximally_even(complement(A))
            for A in (PitchClassSet(cd[0], s) for s in itertools.combinations(range(cd[0]), cd[1]))
        ),
    )
    yield _first_failure(
        "maxeven: inversion of a maximally even set is a translate",
        pairs,
        lambda cd: canonical_class(invert(me_formula(*cd))).canonical
        == canonical_class(me_formula(*cd)).canonical,
    )

    def alpha_ok(cd):
        c, d = cd
        family = set(me_family(c, d))
        alphas = {Fraction(0), Fraction(1, 2)} | {Fraction(n, 3) for n in range(3 * d)}
        return all(me_formula(c, d, a) in family for a in alphas)

    yield _first_failure("maxeven: offset independence", small, alpha_ok)
    yield _first_failure(
        "maxeven: d*A is a consecutive run when coprime",
        [(c, d) for c, d in pairs if math.gcd(c, d) == 1],
        lambda cd: all(is_consecutive_run(scaled_image(A), cd[0]) for A in me_family(*cd)),
    )


def check_classify(max_c: int = 64, period_c: int = 20, existence_c: int = 200) -> Iterator[Check]:
    pairs = [(c, d) for c in range(2, max_c + 1) for d in range(1, c)]

    def exactly_one(cd):
        c, d = cd
        m = math.gcd(c, d)
        # d = 1 satisfies both m = 1 and m = d; type I takes precedence
        preds = [m == 1, 1 < m == d, 1 < m == c - d < d, 1 < m < d and m != c - d]
        return sum(preds) == 1

    yield _first_failure("classify: types partition all (c, d)", pairs, exactly_one)
    dual = {"I": "I", "IIa": "IIb", "IIb": "IIa", "III": "III"}
    yield _first_failure(
        "classify: complement duality of types",
        pairs,
        lambda cd: me_type(cd[0], cd[0] - cd[1]) == dual[me_type(*cd)]
        or (me_type(*cd) == "IIa" and cd[1] * 2 == cd[0]),
    )
    yield _first_failure(
        "classify: period of a maximally even set is c/m",
        [(c, d) for c, d in pairs if c <= period_c],
        lambda cd: period(me_formula(*cd)) == classify(*cd).period,
    )
    composites = [c for c in range(13, existence_c + 1) if not is_prime(c)]
    yield _first_failure(
        "classify: type III exists for composite c > 12",
        composites,
        lambda c: type_iii_search(c) is not None,
    )
    yield _first_failure(
        "classify: no type III for c = 12 or prime c",
        [12] + [c for c in range(2, existence_c + 1) if is_prime(c)],
        lambda c: type_iii_search(c) is None,
    )
    yield _first_failure(
        "classify: lemma witness is type III and maximally even",
        composites,
        lambda c: me_type(c, len(lemma_witness(c).witness)) == "III"
        and is_maximally_even(lemma_witness(c).witness),
    )


def check_properties(max_c: int = 30, variety_c: int = 20) -> Iterator[Check]:
    pairs = [(c, d) for c in range(2, max_c + 1) for d in range(1, c)]

    def myhill(cd):
        c, d = cd
        A = me_formula(c, d)
        steps = set(step_pattern(A).steps)
        if not steps <= {c // d, -(-c // d)}:
            return False
        if (len(steps) == 1) != (c % d == 0):
            return False
        for k in range(1, d):
            spec = generic_interval_spectrum(A, k)
            if len(spec) > 2 or not spec <= {k * c // d, -(-k * c // d)}:
                return False
        return True

    yield _first_failure("properties: Myhill two-step property", pairs, myhill)
    coprime = [(c, d) for c, d in pairs if c <= variety_c and math.gcd(c, d) == 1]
    yield _first_failure(
        "properties: cardinality equals variety",
        coprime,
        lambda cd: all(cardinality_variety(*cd, k).orbit_count == k for k in range(1, cd[1])),
    )
    yield _first_failure(
        "properties: inclusion count c - 2d + 1",
        [(c, d) for c, d in coprime if 2 * d < c],
        lambda cd: inclusion_in_complement(*cd).count == cd[0] - 2 * cd[1] + 1,
    )
    angular = distance_sum_argmax(12, 5, "angular")
    euclid = distance_sum_argmax(12, 5, "euclidean")
    yield Check(
        "properties: angular sum has several maximizing classes in (12, 5)",
        angular.class_count > 1,
        f"{angular.class_count} classes, {len(angular.maximizers)} sets",
    )
    yield Check(
        "properties: euclidean sum has one maximizing class in (12, 5)",
        euclid.class_count == 1,
        f"{euclid.class_representatives}",
    )
    yield _first_failure(
        "properties: distance sums invariant under translation and inversion",
        [A for c in range(1, 11) for A in all_subsets(c)],
        lambda A: angular_interval_sum(A) == angular_interval_sum(translate(A, 1)) == angular_interval_sum(invert(A))
        and abs(euclidean_chord_sum(A) - euclidean_chord_sum(invert(translate(A, 1)))) < 1e-9,
    )


SUITES = {
    "core": check_core,
    "spectral": check_spectral,
    "maxeven": check_maxeven,
    "classify": check_classify,
    "properties": check_properties,
}


def run_all(scale: float = 1.0) -> Iterator[Check]:
    """Run every suite; ``scale`` < 1 shrinks the c-ranges for a quick pass."""
    s = lambda n, lo=2: max(lo, int(round(n * scale)))
    yield from check_core(s(10))
    yield from check_spectral(s(10), s(12))
    yield from check_maxeven(s(20), s(16))
    yield from check_classify(s(64), s(20), s(200, 13))
    yield from check_properties(s(30), s(20))
