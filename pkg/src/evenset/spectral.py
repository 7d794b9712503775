"""Fourier transform on Z_c, interval content, and the identities linking them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import EvensetError, PitchClassSet, complement

TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Spectrum:
    c: int
    values: np.ndarray  # complex, values[t] = F(t)

    def __getitem__(self, t: int) -> complex:
        return complex(self.values[t % self.c])

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    def to_json(self) -> list[dict]:
        return [
            {"t": t, "re": float(v.real), "im": float(v.imag), "abs": float(abs(v))}
            for t, v in enumerate(self.values)
        ]


@dataclass(frozen=True)
class IntervalVector:
    c: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k % self.c]

    def to_json(self) -> list[int]:
        return list(self.counts)


def _phase_table(c: int, points: Sequence[int]) -> np.ndarray:
    # exponent k*t is reduced mod c in integers first
    k = np.asarray(points, dtype=np.int64)
    t = np.arange(c, dtype=np.int64)
    return np.exp(-2j * np.pi * ((np.outer(k, t) % c) / c))


def dft_subset(A: PitchClassSet) -> Spectrum:
    """F_A(t) = sum over a in A of exp(-2 i pi a t / c), by direct summation."""
    if not A.members:
        return Spectrum(A.c, np.zeros(A.c, dtype=complex))
    values = _phase_table(A.c, A.members).sum(axis=0)
    values[0] = len(A)  # exact: every term is 1
    return Spectrum(A.c, values)


def dft_function(f: Sequence[float]) -> Spectrum:
    c = len(f)
    weights = np.asarray(f, dtype=complex)
    values = weights @ _phase_table(c, range(c))
    return Spectrum(c, values)


def inverse_dft(S: Spectrum) -> np.ndarray:
    c = S.c
    k = np.arange(c, dtype=np.int64)
    kernel = np.exp(2j * np.pi * ((np.outer(k, k) % c) / c))
    return (kernel @ S.values) / c


def interval_content(A: PitchClassSet) -> IntervalVector:
    """IC_A(k): number of ordered pairs (x, y) in A x A with y - x = k mod c."""
    counts = [0] * A.c
    for x in A:
        for y in A:
            counts[(y - x) % A.c] += 1
    return IntervalVector(A.c, tuple(counts))


def lewin_deviation(A: PitchClassSet) -> float:
    """Largest pointwise gap between the DFT of IC_A and |F_A|^2."""
    lhs = dft_function(interval_content(A).counts).values
    rhs = np.abs(dft_subset(A).values) ** 2
    return float(np.max(np.abs(lhs - rhs)))


def verify_lewin(A: PitchClassSet) -> tuple[bool, float]:
    dev = lewin_deviation(A)
    return dev < TOLERANCE, dev


def verify_hexachord(A: PitchClassSet) -> bool:
    if A.c % 2 or 2 * len(A) != A.c:
        raise EvensetError("not a half-cardinality set")
    return interval_content(A) == interval_content(complement(A))
