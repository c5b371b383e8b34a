import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import choreogame as cg
from choreogame.documents import format_rational, render_decimal

from conftest import GOLDEN_DOC


def test_loads_golden_document():
    inst = cg.loads(json.dumps(GOLDEN_DOC))
    assert inst.budget == Fraction(34)
    assert inst.announced_prices is None


def test_round_trip_is_identity():
    inst = cg.loads(json.dumps(GOLDEN_DOC))
    text = cg.dumps(inst)
    again = cg.loads(text)
    assert again.graph == inst.graph
    assert again.budget == inst.budget
    assert cg.dumps(again) == text


def test_round_trip_keeps_prices():
    doc = {
        "budget": "10",
        "services": [
            {"id": "a", "cost": "1", "owner": "p", "price": "2.5"},
            {"id": "b", "cost": "1/3", "owner": "q", "price": "1"},
        ],
        "edges": [["a", "b"]],
    }
    inst = cg.loads(json.dumps(doc))
    assert inst.announced_prices == {"a": Fraction(5, 2), "b": Fraction(1)}
    again = cg.loads(cg.dumps(inst))
    assert again.announced_prices == inst.announced_prices


@pytest.mark.parametrize(
    "raw,expected",
    [("34", 34), ("2.5", Fraction(5, 2)), ("1/3", Fraction(1, 3)), (7, 7), (0.25, Fraction(1, 4))],
)
def test_rational_parsing(raw, expected):
    assert cg.as_rational(raw) == expected


@pytest.mark.parametrize("raw", ["", "abc", "1/0", None, [], True])
def test_bad_rationals_rejected(raw):
    with pytest.raises(cg.MalformedDocument):
        cg.as_rational(raw)


@given(st.fractions())
def test_format_round_trips_any_rational(value):
    assert cg.as_rational(format_rational(value)) == value


def test_decimal_rendering():
    assert render_decimal(Fraction(52, 2)) == "26"
    assert render_decimal(Fraction(1, 3)) == "0.333333"
    assert render_decimal(cg.INF) == "inf"


@pytest.mark.parametrize(
    "mutate,error",
    [
        (lambda d: d.pop("budget"), cg.MalformedDocument),
        (lambda d: d.pop("services"), cg.MalformedDocument),
        (lambda d: d["services"][0].pop("owner"), cg.MalformedDocument),
        (lambda d: d["services"][0].pop("cost"), cg.MalformedDocument),
        (lambda d: d["services"].append({"id": "alpha", "cost": "1", "owner": "x"}), cg.DuplicateVertexId),
        (lambda d: d["edges"].append(["gamma", "alpha"]), cg.CycleDetected),
        (lambda d: d["edges"].append(["alpha", "nope"]), cg.MalformedDocument),
        (lambda d: d.update(extra=1), cg.MalformedDocument),
        (lambda d: d["services"][0].update(cost="-2"), cg.NegativeCost),
        (lambda d: d["services"][0].update(id="__source__"), cg.MalformedDocument),
        (lambda d: d["services"][0].update(price="3"), cg.MalformedDocument),
    ],
)
def test_malformed_documents_rejected(mutate, error):
    doc = json.loads(json.dumps(GOLDEN_DOC))
    mutate(doc)
    with pytest.raises(error):
        cg.instance_from_mapping(doc)


def test_not_json_rejected():
    with pytest.raises(cg.MalformedDocument):
        cg.loads("{not json")


def test_root_must_be_object():
    with pytest.raises(cg.MalformedDocument):
        cg.loads("[1, 2]")
