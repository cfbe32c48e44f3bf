"""Field arithmetic in Q(i) and the scalar wire format."""

import pytest
from hypothesis import given

from conftest import nonzero_qi, q, qi_scalars
from schurmann import I, ONE, Qi, ZERO, rational
from schurmann.scalars import scalar_from_json, scalar_to_json


def test_constants():
    assert ZERO == Qi(rational(0))
    assert ONE == Qi(rational(1))
    assert I * I == -ONE


def test_string_parsing():
    assert q("1/2") + q("1/2") == ONE
    assert q(("3", "-1/4")) == Qi(rational(3), rational("-1/4"))


def test_repr_round_samples():
    assert repr(q(("1/2", "3/4"))) == "1/2+3/4*i"
    assert repr(-ONE) == "-1"
    assert repr(I) == "1*i"
    assert repr(ZERO) == "0"


def test_division_exact():
    x = q(("1", "1"))
    assert x / x == ONE
    assert (ONE / q("3")) * q("3") == ONE
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(qi_scalars, qi_scalars, qi_scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(qi_scalars)
def test_conjugation_involution(a):
    assert a.conj().conj() == a
    norm = a * a.conj()
    assert norm.im == rational(0)
    assert (norm.re >= 0) or a.is_zero()


@given(nonzero_qi)
def test_multiplicative_inverse(a):
    assert a * (ONE / a) == ONE


@given(qi_scalars)
def test_json_roundtrip(a):
    out = scalar_to_json(a)
    assert set(out) == {"re", "im"}
    assert scalar_from_json(out) == a


def test_json_rejects_zero_denominator():
    with pytest.raises(ValueError):
        scalar_from_json({"re": "1/0", "im": "0"})


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        scalar_from_json({"re": "one", "im": "0"})
    with pytest.raises(ValueError):
        scalar_from_json("1")
