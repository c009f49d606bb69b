import math

import pytest

from src.defs.exceptions import ParameterError
from src.theory.zigzag import (
    landmark_points,
    zigzag_csv,
    zigzag_row,
    zigzag_rows,
    zigzag_table,
)


def test_zigzag_table_full_grid():
    rows = zigzag_table(0.01, 0.99, 0.001)
    assert len(rows) == 981
    assert all(row.r >= 2.0 for row in rows)
    assert min(row.r for row in rows) == pytest.approx(2.0, abs=1e-9)


def test_zigzag_landmark_rows():
    for row in zigzag_rows(landmark_points(6)):
        assert row.r == pytest.approx(2.0, abs=1e-9)
        assert row.s == pytest.approx(0.5, abs=1e-12)


def test_landmark_points():
    points = landmark_points(3)
    assert points[0] == 0.5
    assert points[1] == pytest.approx(0.29289321881, abs=1e-10)
    with pytest.raises(ParameterError):
        landmark_points(0)


def test_zigzag_row_s_column():
    assert zigzag_row(0.6).s == pytest.approx(0.52, abs=1e-12)


def test_zigzag_row_with_n():
    assert zigzag_row(0.5, 1024).r_upper == pytest.approx(1.9)
    assert zigzag_row(0.1, 3).r_upper is None


@pytest.mark.parametrize(
    "p_min, p_max, step",
    [(0.0, 0.5, 0.1), (0.5, 0.5, 0.1), (0.2, 1.0, 0.1), (0.1, 0.5, 0.0)],
)
def test_zigzag_table_invalid(p_min, p_max, step):
    with pytest.raises(ParameterError):
        zigzag_table(p_min, p_max, step)


def test_zigzag_csv():
    lines = zigzag_csv(zigzag_table(0.5, 0.6, 0.1)).splitlines()
    assert lines[:2] == ["p,ell0,s,r", "0.5,1,0.5,2"]
    p, ell0, s, r = lines[2].split(",")
    assert (p, ell0, s) == ("0.6", "1", "0.52")
    assert float(r) == pytest.approx(2.0 / math.log2(1.0 / 0.52), rel=1e-11)
    assert len(lines) == 3


def test_zigzag_csv_with_r_upper():
    header = zigzag_csv(zigzag_table(0.5, 0.6, 0.1, n=1024)).splitlines()[0]
    assert header == "p,ell0,s,r,r_upper"
