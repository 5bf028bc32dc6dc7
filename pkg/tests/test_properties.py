import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from marcum import marcum, marcum_tilde
from marcum.result import Status

ORDER = st.floats(1.0, 1e3)
ARG = st.floats(0.0, 2e3)
FRAC = st.floats(1e-3, 0.5)
SLACK = 1e-12

settings.register_profile("marcum", deadline=None, max_examples=1000)
settings.load_profile("marcum")


def not_above(a, b):
    """``a <= b`` up to the seam tolerance."""
    return a <= b + SLACK * max(a, b)


@given(ORDER, ARG, ARG)
def test_complement_is_exact(mu, x, y):
    r = marcum(mu, x, y)
    assert r.status is not Status.INVALID_INPUT
    assert r.p + r.q == 1.0
    assert 0.0 <= r.q <= 1.0 and 0.0 <= r.p <= 1.0


@given(ORDER, ARG, ARG, FRAC)
def test_q_increases_with_x(mu, x, y, h):
    assert not_above(marcum(mu, x, y).q, marcum(mu, x * (1 + h) + h, y).q)


@given(ORDER, ARG, ARG, FRAC)
def test_q_decreases_with_y(mu, x, y, h):
    assert not_above(marcum(mu, x, y * (1 + h) + h).q, marcum(mu, x, y).q)


@given(ORDER, ARG, ARG, FRAC)
def test_q_increases_with_order(mu, x, y, h):
    assert not_above(marcum(mu, x, y).q, marcum(mu * (1 + h), x, y).q)


@given(ORDER, st.floats(0.0, 60.0), st.floats(0.0, 60.0))
def test_tilde_conversion(m, a, b):
    assert marcum_tilde(m, a, b) == marcum(m, a * a / 2, b * b / 2)


@given(ORDER, ARG)
def test_zero_threshold(mu, x):
    r = marcum(mu, x, 0.0)
    assert (r.p, r.q) == (0.0, 1.0)


@given(st.floats(allow_nan=True, allow_infinity=True), ARG, ARG)
def test_invalid_order(mu, x, y):
    assume(not (math.isfinite(mu) and mu >= 1.0))
    r = marcum(mu, x, y)
    assert r.status is Status.INVALID_INPUT and math.isnan(r.p) and math.isnan(r.q)
