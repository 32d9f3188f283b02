"""Polylogarithm on the closed unit disk by direct series summation."""

from functools import lru_cache
import math

import numpy as np

TERM_CUTOFF = 1e-16
MAX_TERMS = 10**7
_CHUNK = 10**6


def n_terms(alpha, radius):
    """Number of series terms kept so that the last one is below ``TERM_CUTOFF``."""
    n = math.ceil(TERM_CUTOFF ** (-1.0 / alpha))
    if radius < 1.0:
        if radius == 0.0:
            return 1
        n = min(n, math.ceil(math.log(TERM_CUTOFF) / math.log(radius)))
    return max(1, min(n, MAX_TERMS))


def series_sum(alpha, z, n):
    """``sum_{j=1}^{n} z**j / j**alpha``, accumulated from the smallest terms upward.

    Chunks use numpy's pairwise summation; chunk totals are combined with ``math.fsum``.
    """
    radius, angle = abs(z), np.angle(z)
    re_parts, im_parts = [], []
    for stop in range(n, 0, -_CHUNK):
        j = np.arange(stop, max(stop - _CHUNK, 0), -1, dtype=float)
        mag = j ** (-float(alpha))
        if radius != 1.0:
            mag = mag * radius**j
        re_parts.append(float(np.sum(mag * np.cos(j * angle))))
        im_parts.append(float(np.sum(mag * np.sin(j * angle))))
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def polylog(alpha, z):
    """``Li_alpha(z) = sum_{n>=1} z**n / n**alpha`` for integer ``alpha >= 2`` and ``|z| <= 1``.

    Terms are summed until they drop below 1e-16 (at most 10**7 of them),
    which gives an absolute error below 1e-12 for ``alpha >= 4``.
    """
    if int(alpha) != alpha or alpha < 2:
        raise ValueError(f"alpha must be an integer >= 2, got {alpha!r}")
    z = complex(z)
    radius = abs(z)
    if radius > 1.0 + 1e-12:
        raise ValueError(f"|z| must not exceed 1, got {radius}")
    radius = min(radius, 1.0)
    z = radius * np.exp(1j * np.angle(z)) if radius else 0j
    if radius == 0.0:
        return 0j
    return series_sum(int(alpha), z, n_terms(alpha, radius))


@lru_cache(maxsize=4096)
def _Q(alpha, beta):
    return (polylog(alpha, beta) - polylog(alpha, beta * beta) / 2.0**alpha).real


def Q(alpha, beta):
    """``Re[Li_alpha(beta) - 2**-alpha Li_alpha(beta**2)]``."""
    return _Q(int(alpha), complex(beta))
