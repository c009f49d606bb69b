import math
import sys

import numpy as np
import pytest
from pydantic import ValidationError

from src.bounds.collision import collision_probability
from src.bounds.suen import (
    block_colouring_inputs,
    block_suen_check,
    delta_over_mu_ratio,
    sparse_deg_bound,
    suen_bound,
)
from src.defs.bounds import SuenInputs
from src.graphs.gnp import make_rng
from src.theory.parameters import s_and_ell0


def test_suen_bound_empty_family():
    out = suen_bound(SuenInputs(kappa=[1, 2], p=0.5, pair_count=0, max_deg=3))
    assert (out.mu, out.delta_big, out.delta_small, out.bound) == (0.0, 0.0, 0.0, 1.0)


def test_suen_bound_no_dependence_is_poisson():
    inputs = SuenInputs(kappa=[1, 1, 2], p=0.4, pair_count=30, max_deg=0)
    out = suen_bound(inputs)
    assert out.delta_big == out.delta_small == 0.0
    assert out.bound == math.exp(-out.mu)


def test_block_colouring_inputs_mu():
    """Test mu = s^k n^2 p / 4 for classes of size ell0."""
    n, p, k = 1000, 0.3, 8
    s, _ = s_and_ell0(p)
    out = suen_bound(block_colouring_inputs(n, p, k))
    assert out.mu == pytest.approx(s**k * int(n * n * p / 4), rel=1e-12)


def test_delta_over_mu_ratio():
    assert delta_over_mu_ratio(0.5, 3) == pytest.approx(0.125)
    assert delta_over_mu_ratio(1.0, 7) == 1.0


def test_sparse_deg_bound():
    assert sparse_deg_bound(100, 0.25) == 50.0


def test_suen_inputs_validation():
    with pytest.raises(ValidationError):
        SuenInputs(kappa=[], p=0.5, pair_count=1, max_deg=1)
    with pytest.raises(ValidationError):
        SuenInputs(kappa=[1], p=1.5, pair_count=1, max_deg=1)


def test_suen_bound_overflow_saturates():
    out = suen_bound(SuenInputs(kappa=[1], p=0.5, pair_count=10**6, max_deg=10**4))
    assert out.log_bound == math.inf
    assert out.bound == sys.float_info.max


def test_suen_bound_underflow_keeps_exponent():
    """Test that a huge mu leaves bound positive and reports the exponent."""
    out = suen_bound(SuenInputs(kappa=[1], p=0.5, pair_count=10**4, max_deg=0))
    assert out.log_bound == pytest.approx(-5000.0)
    assert out.bound == sys.float_info.min
    assert out.bound > 0.0


def test_suen_bound_log_bound_matches():
    out = suen_bound(SuenInputs(kappa=[2, 3], p=0.4, pair_count=50, max_deg=3))
    assert math.exp(out.log_bound) == pytest.approx(out.bound, rel=1e-12)


def test_block_suen_check():
    """Test that the block classes attain the ratio bound and the degree cap is a.a.s."""
    check = block_suen_check(1000, 0.3, 8)
    assert check.inputs.kappa == [s_and_ell0(0.3)[1]] * 8
    assert check.inputs.max_deg == sparse_deg_bound(1000, 0.3)
    assert check.triple_over_pair == pytest.approx(check.ratio_bound, rel=1e-9)
    assert 0.0 < check.degree_tail < 1e-30
    assert check.outputs == suen_bound(check.inputs)


def test_suen_bound_dominates_simulation():
    """Test a 40-vertex cycle of pairs over 6 singleton classes at p = 1/2.

    A pair collides when both vertices see the same subset of the 6 class vertices.
    """
    n_test, k, p, trials = 40, 6, 0.5, 10**4
    out = suen_bound(SuenInputs(kappa=[1] * k, p=p, pair_count=n_test, max_deg=2))
    assert out.mu == pytest.approx(n_test * collision_probability([1] * k, p))

    rng = make_rng(2718)
    sees = rng.random((trials, n_test, k)) < p
    codes = np.packbits(sees, axis=2, bitorder="little")[..., 0]
    no_collision = (codes != np.roll(codes, -1, axis=1)).all(axis=1)
    freq = no_collision.mean()
    stderr = math.sqrt(freq * (1 - freq) / trials)
    assert freq == pytest.approx((63 / 64) ** 40, abs=4 * stderr)
    assert out.bound >= freq - 3 * stderr
