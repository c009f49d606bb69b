import pytest
from pydantic import ValidationError

from src.defs.colouring import Colouring, ColourSet, ConstructiveParams, Verdict
from src.defs.exceptions import ParameterError


def test_colouring_basics():
    c = Colouring([1, 2, 1, 3])
    assert c.n == len(c) == 4
    assert c.k == 3
    assert c[2] == 1
    assert c.class_sizes().tolist() == [2, 1, 1]
    assert c.used_colours() == 3
    assert not c.colours.flags.writeable


def test_colouring_explicit_k_counts_empty_classes():
    c = Colouring([1, 1], k=3)
    assert c.class_sizes().tolist() == [2, 0, 0]
    assert c.used_colours() == 1


@pytest.mark.parametrize(
    "colours, k",
    [([], None), ([0, 1], None), ([1, 4], 3), ([1], 0)],
)
def test_colouring_invalid(colours, k):
    with pytest.raises(ParameterError):
        Colouring(colours, k=k)


def test_colouring_permute_colours():
    c = Colouring([1, 2, 3, 1])
    assert c.permute_colours([3, 1, 2]).tolist() == [3, 1, 2, 3]
    with pytest.raises(ParameterError):
        c.permute_colours([1, 1, 2])


def test_colour_set():
    cs = ColourSet.of([3, 1])
    assert cs.colours() == [1, 3]
    assert 3 in cs and 2 not in cs and 0 not in cs
    assert len(cs) == 2
    assert repr(cs) == "{1, 3}"
    assert cs == ColourSet(0b1010)
    assert repr(ColourSet()) == "{}"


@pytest.mark.parametrize("bits", [-2, 1])
def test_colour_set_invalid_bits(bits):
    with pytest.raises(ParameterError):
        ColourSet(bits)


def test_constructive_params():
    assert ConstructiveParams(p=0.5).omega == 10
    with pytest.raises(ValidationError):
        ConstructiveParams(p=1.0)
    with pytest.raises(ValidationError):
        ConstructiveParams(p=0.5, omega=0)


def test_verdict_text():
    assert str(Verdict(valid=True)) == "VALID"
    assert str(Verdict(valid=False, edge=(1, 2))) == "INVALID 1 2"
