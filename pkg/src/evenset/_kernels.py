"""Scoring kernels for exhaustive sweeps over d-subsets of Z_c.

Every kernel walks the C(c, d) combinations of ``range(c)`` in lexicographic
order and returns one float64 score per combination, so rank ``r`` of the
output always refers to the ``r``-th combination (see :func:`unrank`).

Two implementations exist for each kernel: a numba ``@njit`` loop and a
chunked pure-numpy path.  ``EVENSET_DISABLE_NUMBA=1`` (or numba being absent)
selects the numpy path at import time.
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np

_CHUNK = 1 << 17

try:
    if os.environ.get("EVENSET_DISABLE_NUMBA", "").strip() not in ("", "0"):
        raise ImportError("numba disabled by EVENSET_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def unrank(c: int, d: int, rank: int) -> tuple[int, ...]:
    """The ``rank``-th d-combination of range(c) in lexicographic order."""
    out = []
    x = 0
    for i in range(d):
        while True:
            below = math.comb(c - x - 1, d - i - 1)
            if rank < below:
                break
            rank -= below
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def _unit_weights(c: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    # reduce k*t mod c before the trig call so equal angles give equal floats
    angles = -2.0 * np.pi * ((np.arange(c) * t) % c) / c
    return np.cos(angles), np.sin(angles)


def _iter_chunks(c: int, d: int):
    combos = itertools.combinations(range(c), d)
    total = math.comb(c, d)
    done = 0
    while done < total:
        n = min(_CHUNK, total - done)
        flat = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(combos, n)),
            dtype=np.int64,
            count=n * d,
        )
        yield flat.reshape(n, d)
        done += n


def fourier_scores_numpy(c: int, d: int, t: int) -> np.ndarray:
    wre, wim = _unit_weights(c, t)
    out = np.empty(math.comb(c, d))
    pos = 0
    for block in _iter_chunks(c, d):
        re = wre[block].sum(axis=1)
        im = wim[block].sum(axis=1)
        out[pos:pos + len(block)] = np.hypot(re, im)
        pos += len(block)
    return out


def pair_scores_numpy(c: int, d: int, weights: np.ndarray) -> np.ndarray:
    out = np.empty(math.comb(c, d))
    pos = 0
    for block in _iter_chunks(c, d):
        sub = weights[block[:, :, None], block[:, None, :]]
        out[pos:pos + len(block)] = sub.sum(axis=(1, 2))
        pos += len(block)
    return out


if HAVE_NUMBA:

    @njit(cache=True)
    def _fourier_loop(c, d, n, wre, wim):
        out = np.empty(n)
        idx = np.arange(d)
        for r in range(n):
            re = 0.0
            im = 0.0
            for j in range(d):
                re += wre[idx[j]]
                im += wim[idx[j]]
            out[r] = math.sqrt(re * re + im * im)
            i = d - 1
            while i >= 0 and idx[i] == c - d + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, d):
                idx[j] = idx[j - 1] + 1
        return out

    @njit(cache=True)
    def _pair_loop(c, d, n, weights):
        out = np.empty(n)
        idx = np.arange(d)
        for r in range(n):
            s = 0.0
            for a in range(d):
                row = idx[a]
                for b in range(d):
                    s += weights[row, idx[b]]
            out[r] = s
            i = d - 1
            while i >= 0 and idx[i] == c - d + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, d):
                idx[j] = idx[j - 1] + 1
        return out

    def fourier_scores_numba(c: int, d: int, t: int) -> np.ndarray:
        wre, wim = _unit_weights(c, t)
        return _fourier_loop(c, d, math.comb(c, d), wre, wim)

    def pair_scores_numba(c: int, d: int, weights: np.ndarray) -> np.ndarray:
        w = np.ascontiguousarray(weights, dtype=np.float64)
        return _pair_loop(c, d, math.comb(c, d), w)

    fourier_scores = fourier_scores_numba
    pair_scores = pair_scores_numba
else:
    fourier_scores = fourier_scores_numpy
    pair_scores = pair_scores_numpy

