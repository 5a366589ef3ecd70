import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from k3hodge import hilb2, hodge, k3, serialize
from k3hodge.hilb2 import H4Class


def test_rational_strings():
    assert serialize.num_str(Fraction(-6, 4)) == "-3/2"
    assert serialize.num_str(Fraction(4, 2)) == "2"
    assert serialize.num_str(10 ** 30) == "1" + "0" * 30
    assert serialize.parse_rational("-3/6") == Fraction(-1, 2)
    for bad in ("3/-6", "1.5", "1e3", "", "1/0"):
        with pytest.raises(ValueError):
            serialize.parse_rational(bad)
    with pytest.raises(ValueError):
        serialize.parse_rational(0.5)
    with pytest.raises(ValueError):
        serialize.parse_int(True)


@given(st.lists(st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=3, max_size=3), min_size=3, max_size=3))
def test_gram_round_trip(m):
    obj = json.loads(json.dumps(serialize.gram_to_json(m)))
    assert serialize.gram_from_json(obj) == m
    assert serialize.matrix_from_csv(serialize.matrix_to_csv(m)) == m


def test_gram_shape_checked():
    with pytest.raises(ValueError):
        serialize.gram_from_json({"rank": "2", "gram": [["1"]]})


@pytest.mark.parametrize("name", sorted(hilb2.NAMED_CLASSES))
def test_h4_round_trip(name):
    c = hilb2.NAMED_CLASSES[name]()
    text = serialize.dumps(serialize.h4_to_json(c))
    assert serialize.h4_from_json(json.loads(text)) == c


def test_h4_sparse_one_based():
    c = H4Class.basis_vector(hilb2.c_index(16, 17))
    assert serialize.h4_to_json(c)["C"] == [[17, 18, "1"]]
    with pytest.raises(ValueError):
        serialize.h4_from_json({"A": "0", "B": ["0"] * 22, "D": ["0"] * 22, "C": [[18, 17, "1"]]})


def test_config_forms():
    assert serialize.config_from_json({"t": "3"}) == k3.generic_surface(3)
    cfg = k3.generic_surface(2)
    assert serialize.config_from_json(serialize.config_to_json(cfg)) == cfg


def test_report_is_deterministic():
    cfg = k3.generic_surface(2)
    a = serialize.dumps(serialize.report_to_json(hodge.analyze(cfg), cfg))
    b = serialize.dumps(serialize.report_to_json(hodge.analyze(cfg), cfg))
    assert a == b
    obj = json.loads(a)
    assert obj["discriminant"] == "672"
    assert serialize.gram_from_json(obj["gram"]) == hodge.generic_gram_closed_form(2)
