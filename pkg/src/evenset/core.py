"""Subsets of the cyclic group Z_c and their translation orbits."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_MODULUS = 64

_LITERAL = re.compile(r"^\s*(\d+)\s*:\s*(\d+)\s*:\s*\{([^}]*)\}\s*$")


class EvensetError(ValueError):
    """Base class for precondition failures in this package."""


class EnumerationTooLarge(EvensetError):
    pass


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def check_modulus(c: int, limit: int | None = None) -> None:
    limit = MAX_MODULUS if limit is None else limit
    if c > limit:
        raise EvensetError(f"modulus {c} exceeds configured maximum {limit}")


@dataclass(frozen=True, order=True)
class PitchClassSet:
    """An unordered subset of Z_c, stored as a sorted tuple of residues."""

    c: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        if self.c < 1:
            raise EvensetError(f"modulus must be positive, got {self.c}")
        members = tuple(int(a) for a in self.members)
        if any(a < 0 or a >= self.c for a in members):
            raise EvensetError(f"members out of range [0, {self.c - 1}]: {members}")
        if len(set(members)) != len(members):
            raise EvensetError(f"duplicate members: {members}")
        object.__setattr__(self, "members", tuple(sorted(members)))

    @classmethod
    def from_residues(cls, c: int, values: Iterable[int]) -> "PitchClassSet":
        """Build a set from arbitrary integers, reducing mod c and dropping repeats."""
        return cls(c, tuple(sorted({int(v) % c for v in values})))

    @classmethod
    def parse(cls, text: str) -> "PitchClassSet":
        """Parse the ``c:d:{a1,a2,...}`` literal form."""
        match = _LITERAL.match(text)
        if match is None:
            raise EvensetError(f"malformed set literal {text!r}; expected c:d:{{a1,...}}")
        c, d, body = int(match.group(1)), int(match.group(2)), match.group(3).strip()
        try:
            members = tuple(int(tok) for tok in body.split(",")) if body else ()
        except ValueError:
            raise EvensetError(f"non-integer member in {text!r}") from None
        pcs = cls(c, members)
        if len(pcs) != d:
            raise EvensetError(f"declared cardinality {d} but {len(pcs)} members given")
        return pcs

    def __str__(self) -> str:
        return f"{self.c}:{len(self.members)}:{{{','.join(map(str, self.members))}}}"

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members

    @property
    def d(self) -> int:
        return len(self.members)

    def indicator(self) -> list[int]:
        out = [0] * self.c
        for a in self.members:
            out[a] = 1
        return out

    def issubset(self, other: "PitchClassSet") -> bool:
        return self.c == other.c and set(self.members) <= set(other.members)


@dataclass(frozen=True)
class TranslationClass:
    canonical: PitchClassSet
    orbit_size: int


def translate(A: PitchClassSet, t: int) -> PitchClassSet:
    return PitchClassSet.from_residues(A.c, (a + t for a in A))


def invert(A: PitchClassSet) -> PitchClassSet:
    return PitchClassSet.from_residues(A.c, (-a for a in A))


def complement(A: PitchClassSet) -> PitchClassSet:
    present = set(A.members)
    return PitchClassSet(A.c, tuple(k for k in range(A.c) if k not in present))


def translates(A: PitchClassSet) -> list[PitchClassSet]:
    """All c translates of A, with repeats when A has a nontrivial period."""
    return [translate(A, t) for t in range(A.c)]


def period(A: PitchClassSet) -> int:
    """Smallest positive shift fixing A; always a divisor of c."""
    if not A.members:
        raise EvensetError("undefined period for the empty set")
    members = set(A.members)
    for tau in divisors(A.c):
        if all((a + tau) % A.c in members for a in members):
            return tau
    raise AssertionError("unreachable: c itself fixes every set")


def is_limited_transposition(A: PitchClassSet) -> bool:
    return period(A) < A.c


def canonical_class(A: PitchClassSet, include_inversion: bool = False) -> TranslationClass:
    candidates = translates(A)
    if include_inversion:
        candidates += translates(invert(A))
    best = min(candidates, key=lambda s: s.members)
    orbit = len({s.members for s in candidates})
    return TranslationClass(best, orbit)


def same_class(A: PitchClassSet, B: PitchClassSet, include_inversion: bool = False) -> bool:
    return A.c == B.c and (
        canonical_class(A, include_inversion).canonical
        == canonical_class(B, include_inversion).canonical
    )
