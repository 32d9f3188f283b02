import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fgur.polylog import Q, n_terms, polylog, series_sum

ZETA5 = float(mpmath.zeta(5))


@pytest.mark.parametrize(
    "alpha, z, expected",
    [
        (4, 1, math.pi**4 / 90),
        (5, 1, ZETA5),
        (6, 1, math.pi**6 / 945),
        (4, -1, -7 * math.pi**4 / 720),
        (6, -1, -31 / 32 * math.pi**6 / 945),
    ],
)
def test_closed_forms(alpha, z, expected):
    assert abs(polylog(alpha, z) - expected) < 1e-12


def test_printed_constants():
    assert polylog(4, 1).real == pytest.approx(1.0823232, abs=1e-7)
    assert polylog(6, 1).real == pytest.approx(1.0173431, abs=1e-7)
    assert polylog(4, -1).real == pytest.approx(-0.9470328, abs=1e-7)
    assert ZETA5 == pytest.approx(1.0369278, abs=1e-7)


@settings(max_examples=40, deadline=None)
@given(alpha=st.integers(4, 8), theta=st.floats(0, 2 * math.pi), rad=st.floats(0, 1))
def test_against_mpmath(alpha, theta, rad):
    z = rad * cmath.exp(1j * theta)
    assert abs(polylog(alpha, z) - complex(mpmath.polylog(alpha, z))) < 1e-12


def test_low_order_inside_disk():
    for z in (0.5, -0.3 + 0.2j):
        assert abs(polylog(2, z) - complex(mpmath.polylog(2, z))) < 1e-13
        assert abs(polylog(3, z) - complex(mpmath.polylog(3, z))) < 1e-13


def test_input_validation():
    with pytest.raises(ValueError):
        polylog(4, 1.01)
    with pytest.raises(ValueError):
        polylog(1, 0.5)
    with pytest.raises(ValueError):
        polylog(2.5, 0.5)
    assert polylog(4, 0) == 0
    # tiny excursions past the circle from rounding are accepted
    assert abs(polylog(4, cmath.exp(0.3j) * (1 + 1e-13)) - polylog(4, cmath.exp(0.3j))) < 1e-12


def test_term_count():
    assert n_terms(4, 1.0) == 10**4
    assert n_terms(2, 1.0) == 10**7
    assert n_terms(4, 0.5) < 60


def test_series_against_long_reference():
    rng = np.random.default_rng(0)
    for theta in rng.uniform(0, 2 * math.pi, 3):
        z = cmath.exp(1j * theta)
        ref = series_sum(4, z, 10**6)
        assert abs(polylog(4, z) - ref) < 1e-11


def test_Q_closed_forms():
    assert Q(4, 1) == pytest.approx(math.pi**4 / 96, abs=1e-12)
    assert Q(6, 1) == pytest.approx(math.pi**6 / 960, abs=1e-12)
    assert Q(4, -1) == pytest.approx(-math.pi**4 / 96, abs=1e-12)
    assert Q(5, 1) == pytest.approx(31 / 32 * ZETA5, abs=1e-12)
    assert Q(5, -1) == pytest.approx(-31 / 32 * ZETA5, abs=1e-12)


def test_Q_against_mpmath():
    for beta in (cmath.exp(0.4j), cmath.exp(2.2j), 0.3j):
        for alpha in (4, 5, 6):
            ref = (mpmath.polylog(alpha, beta) - mpmath.polylog(alpha, beta**2) / 2**alpha).real
            assert Q(alpha, beta) == pytest.approx(float(ref), abs=1e-12)
