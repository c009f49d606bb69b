import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.bounds.hoelder import hoelder_ratio_check
from src.defs.exceptions import ParameterError
from src.graphs.gnp import make_rng


@pytest.mark.parametrize(
    "x, lhs, rhs",
    [
        ([0.5, 0.5], 0.25, 0.25),
        ([1.0, 1.0], 1.0, 1.0),
        ([0.6, 0.9], 0.47936, 0.53919),
    ],
)
def test_hoelder_ratio_check(x, lhs, rhs):
    check = hoelder_ratio_check(x, [1.0, 1.0])
    assert check.lhs == pytest.approx(lhs, abs=1e-5)
    assert check.rhs == pytest.approx(rhs, abs=1e-5)
    assert check.holds


def test_hoelder_ratio_check_s_and_z():
    check = hoelder_ratio_check([0.6, 0.9], [1.0, 1.0])
    assert check.s == pytest.approx(0.65299, abs=1e-5)
    assert check.z**2 + (1 - check.z) ** 2 == pytest.approx(check.s, rel=1e-12)


@pytest.mark.parametrize(
    "x, beta",
    [([], []), ([0.4], [1.0]), ([1.1], [1.0]), ([0.7], [0.0]), ([0.7, 0.8], [1.0])],
)
def test_hoelder_ratio_check_invalid(x, beta):
    with pytest.raises(ParameterError):
        hoelder_ratio_check(x, beta)


tuples = st.integers(min_value=1, max_value=20).flatmap(
    lambda k: st.tuples(
        st.lists(st.floats(min_value=0.5, max_value=1.0), min_size=k, max_size=k),
        st.lists(st.floats(min_value=0.01, max_value=10.0), min_size=k, max_size=k),
    )
)


@settings(max_examples=500, deadline=None)
@given(tuples)
def test_hoelder_inequality_weighted(xb):
    x, beta = xb
    assert hoelder_ratio_check(x, beta).holds


@settings(max_examples=200, deadline=None)
@given(
    x=st.floats(min_value=0.5, max_value=1.0),
    k=st.integers(min_value=1, max_value=20),
    beta=st.floats(min_value=0.1, max_value=3.0),
)
def test_hoelder_equality_case(x, k, beta):
    """Test that equal x_i give equality."""
    check = hoelder_ratio_check([x] * k, [beta] * k)
    assert abs(check.lhs - check.rhs) <= 1e-12


@pytest.mark.slow
def test_hoelder_inequality_sweep():
    """Test 10^5 random tuples with unit and random weights."""
    rng = make_rng(4242)
    for i in range(10**5):
        k = int(rng.integers(1, 21))
        x = rng.uniform(0.5, 1.0, size=k)
        beta = np.ones(k) if i % 2 == 0 else rng.uniform(0.01, 5.0, size=k)
        assert hoelder_ratio_check(x, beta).holds
