import math
import warnings

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fgur.cavity import (
    CavityGeometry,
    CavityParams,
    cavity_bound,
    cavity_reduced_density,
    coefficients,
    e1_phase,
    f_minus,
    f_plus,
    p_polynomial,
    period,
    re_g,
)
from fgur.measurement import XZ_PAIRS, Basis, MeasurementSetting, OutcomePair, probability
from fgur.unruh import BlochState

INERTIAL = (2 + math.sqrt(2)) / 4
PI = math.pi
ZETA5 = float(mpmath.zeta(5))
MID = CavityParams(0.1, 1, 0.0, 0.5)
PAIR00, PAIR11 = OutcomePair.from_code("00"), OutcomePair.from_code("11")

u_st = st.floats(0, 10)
s_st = st.floats(0, 0.99)


def _midpoint_reference(h=0.1, k=1, s=0.0, prefactor=16):
    """Coefficients at E1 = -1 from the closed forms of Q at +-1.

    Q4(1)-Q4(-1) = pi^4/48, Q6(1)-Q6(-1) = pi^6/480, Q5(1)-Q5(-1) = (31/16) zeta(5),
    Q4(-1) = -pi^4/96, Q6(-1) = -pi^6/960.
    """
    ks = k + s
    fp = 4 * h**2 / PI**4 * (4 * ks**2 * PI**6 / 480 + PI**4 / 48)
    poly = sum(4 * h**2 / PI**4 * (1 - (-1) ** m) * (4 * ks * (ks / m - 1) + 1 / m**4) for m in range(1, k + 1, 2))
    fm = prefactor * h**2 / PI**4 * 2 * ks * (31 / 16) * ZETA5 + poly
    g = 1 - h**2 * ((1 / 48 + PI**2 * ks**2 / 120) - 2 / PI**4 * (4 * ks**2 * (-PI**6 / 960) - PI**4 / 96))
    z00 = 0.25 * (2 + math.sqrt(2) / 2 * (1 - fp) + fm + math.sqrt(2) / 2 * g)
    z11 = 0.25 * (2 + math.sqrt(2) / 2 * (1 - fp) - fm + math.sqrt(2) / 2 * g)
    return fp, fm, g, z00, z11


def test_params_validation():
    with pytest.raises(ValueError):
        CavityParams(0.0)
    with pytest.raises(ValueError):
        CavityParams(0.1, k=0)
    with pytest.raises(ValueError):
        CavityParams(0.1, s=1.0)
    with pytest.raises(ValueError):
        CavityParams(0.1, u=-1)
    with pytest.raises(ValueError):
        CavityParams(0.1, f_minus_prefactor=4)
    with pytest.warns(UserWarning):
        CavityParams(0.2, k=2)


def test_e1_phase():
    assert e1_phase(0) == 1
    assert abs(e1_phase(0.5) + 1) < 1e-15
    assert e1_phase(1) == 1
    for u in np.linspace(0, 5, 17):
        assert abs(abs(e1_phase(u)) - 1) < 1e-14


def test_midpoint_values_against_reference():
    fp, fm, g, z00, z11 = _midpoint_reference()
    assert f_plus(MID) == pytest.approx(fp, abs=1e-12)
    assert f_minus(MID) == pytest.approx(fm, abs=1e-12)
    assert re_g(MID) == pytest.approx(g, abs=1e-12)
    assert cavity_bound(PAIR00, MID) == pytest.approx(z00, abs=1e-12)
    assert cavity_bound(PAIR11, MID) == pytest.approx(z11, abs=1e-12)


def test_midpoint_values_printed_precision():
    assert f_plus(MID) == pytest.approx(0.0041232, abs=1e-6)
    assert f_minus(MID) == pytest.approx(0.007421, abs=1e-5)
    assert re_g(MID) == pytest.approx(0.9979384, abs=1e-6)
    assert cavity_bound(PAIR00, MID) == pytest.approx(0.854315, abs=1e-6)
    assert cavity_bound(PAIR11, MID) == pytest.approx(0.850605, abs=1e-6)


def test_alternative_prefactor():
    p = CavityParams(0.1, 1, 0.0, 0.5, f_minus_prefactor=8)
    assert f_minus(p) == pytest.approx(_midpoint_reference(prefactor=8)[1], abs=1e-12)


def test_higher_mode_reference():
    p = CavityParams(0.05, 3, 0.4, 0.5)
    fp, fm, g, z00, z11 = _midpoint_reference(0.05, 3, 0.4)
    assert (f_plus(p), f_minus(p), re_g(p)) == pytest.approx((fp, fm, g), abs=1e-12)


def test_p_polynomial_odd_terms_only():
    h, s = 0.05, 0.0
    p = CavityParams(h, 2, s, 0.25)
    weight = 1 - math.cos(2 * PI * 0.25)
    expected = 4 * h**2 / PI**4 * weight * (4 * 2 * (2 - 1) + 1)
    assert p_polynomial(p) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("u", [0, 1, 2, 3, 7])
def test_inertial_recovery(u):
    for s in (0.0, 0.3, 0.6):
        p = CavityParams(0.1, 1, s, u)
        c = coefficients(p)
        assert c.F_plus == 0 and c.F_minus == 0
        assert abs(c.reG - 1) < 1e-14
        for pair in XZ_PAIRS:
            assert abs(cavity_bound(pair, p) - INERTIAL) < 1e-12


def test_inertial_identities():
    from fgur.polylog import Q

    assert 1 / 48 == pytest.approx(2 / PI**4 * Q(4, 1), abs=1e-14)
    assert PI**2 / 120 == pytest.approx(2 / PI**4 * 4 * Q(6, 1), abs=1e-14)


@settings(max_examples=20, deadline=None)
@given(u=u_st, s=s_st)
def test_periodicity(u, s):
    a, b = CavityParams(0.1, 1, s, u), CavityParams(0.1, 1, s, u + 1)
    for pair in XZ_PAIRS:
        assert abs(cavity_bound(pair, a) - cavity_bound(pair, b)) < 1e-12
    ca, cb = coefficients(a), coefficients(b)
    assert abs(ca.F_plus - cb.F_plus) < 1e-12 and abs(ca.F_minus - cb.F_minus) < 1e-12


@settings(max_examples=20, deadline=None)
@given(u=u_st, s=s_st)
def test_pair_degeneracy_and_splitting(u, s):
    p = CavityParams(0.1, 1, s, u)
    b = {pair.code: cavity_bound(pair, p) for pair in XZ_PAIRS}
    assert b["00"] == b["10"] and b["11"] == b["01"]
    assert b["00"] - b["11"] == pytest.approx(f_minus(p) / 2, abs=1e-15)


def test_f_plus_nonnegative():
    for u in np.linspace(0, 1, 41):
        assert f_plus(CavityParams(0.1, 1, 0.3, u)) >= -1e-15


def test_h_squared_scaling():
    for u in (0.2, 0.5, 0.77):
        a, b = CavityParams(0.05, 1, 0.3, u), CavityParams(0.1, 1, 0.3, u)
        assert f_plus(b) / f_plus(a) == pytest.approx(4, rel=1e-12)
        assert f_minus(b) / f_minus(a) == pytest.approx(4, rel=1e-12)
        assert (1 - re_g(b)) / (1 - re_g(a)) == pytest.approx(4, rel=1e-9)


def test_reduced_density_inertial_is_input_state():
    s = BlochState(1.2, 0.9)
    np.testing.assert_allclose(cavity_reduced_density(s, CavityParams(0.1, 1, 0.3, 2)), s.density(), atol=1e-14)


def test_reduced_density_unit_trace():
    rng = np.random.default_rng(8)
    for _ in range(20):
        s = BlochState(rng.uniform(0, 2 * PI), rng.uniform(0, 2 * PI))
        p = CavityParams(0.1, 1, rng.uniform(0, 0.9), rng.uniform(0, 3))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rho = cavity_reduced_density(s, p)
        assert abs(np.trace(rho) - 1) < 1e-14
        np.testing.assert_allclose(rho, rho.conj().T, atol=1e-15)


def test_reduced_density_printed_probabilities():
    s = BlochState(PI / 4, 0.0)
    c = coefficients(MID)
    f_up, f_down = (c.F_plus + c.F_minus) / 2, (c.F_plus - c.F_minus) / 2
    rho = cavity_reduced_density(s, MID)
    C2, S2 = math.cos(PI / 8) ** 2, math.sin(PI / 8) ** 2
    assert probability(MeasurementSetting(Basis.Z, 0), rho) == pytest.approx(C2 * (1 - f_down) + S2 * f_up, abs=1e-15)
    assert probability(MeasurementSetting(Basis.Z, 1), rho) == pytest.approx(S2 + C2 * f_down - S2 * f_up, abs=1e-15)
    px0 = probability(MeasurementSetting(Basis.X, 0), rho)
    assert px0 == pytest.approx(0.5 * (1 + math.sin(PI / 4) * c.reG), abs=1e-15)
    assert probability(MeasurementSetting(Basis.X, 1), rho) == pytest.approx(1 - px0, abs=1e-15)


def test_bounds_are_lhs_at_mcs_angles():
    from fgur.measurement import fgur_lhs, paper_mcs_angles

    for u in (0.1, 0.5, 1.3):
        p = CavityParams(0.1, 1, 0.3, u)
        for pair in XZ_PAIRS:
            th, ph = paper_mcs_angles(pair)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                lhs = fgur_lhs(pair, cavity_reduced_density(BlochState(th, ph), p))
            assert lhs == pytest.approx(cavity_bound(pair, p), abs=1e-15)


def test_reduced_density_warns_outside_unit_interval():
    # with the printed prefactor F_minus exceeds F_plus at u=1/2, pushing p(1^z) below 0 at theta=0
    with pytest.warns(UserWarning):
        cavity_reduced_density(BlochState(0.0), MID)


def test_geometry_and_period():
    g = CavityGeometry(L=1.0, x1=20.0, tau1=0.0)
    assert g.h == pytest.approx(2 / 41)
    T = period(g)
    assert T == pytest.approx(4 * 1.0 * 20.0 * math.tanh(g.h / 2) / g.h)
    assert CavityGeometry(1.0, 20.0, T).u == pytest.approx(1.0, abs=1e-14)
    small = CavityGeometry(L=1e-4, x1=1.0)
    assert period(small) == pytest.approx(2 * small.L * small.x1, rel=1e-8)
    with pytest.raises(ValueError):
        CavityGeometry(L=-1, x1=1)
    with pytest.raises(ValueError):
        CavityGeometry(L=1, x1=1, tau1=-1)


def test_bounds_periodic_in_proper_time():
    g0 = CavityGeometry(L=1.0, x1=20.0, tau1=13.7)
    T = period(g0)
    g1 = CavityGeometry(1.0, 20.0, 13.7 + T)
    pa = CavityParams(g0.h, 1, 0.3, g0.u)
    pb = CavityParams(g1.h, 1, 0.3, g1.u)
    for pair in XZ_PAIRS:
        assert abs(cavity_bound(pair, pa) - cavity_bound(pair, pb)) < 1e-12
