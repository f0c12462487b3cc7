"""Round-trips and canonical formatting of the JSON codecs."""

import json
from fractions import Fraction

import pytest

from tropreal import iojson
from tropreal.errors import ParseError
from tropreal.hyperfields import Balanced, Point, stv
from tropreal.parsing import parse_polyk
from tropreal.polyhedra import Polyhedron, constraint, trop_region
from tropreal.puiseux import PuiseuxSeries
from tropreal.scenarios import get_scenario
from tropreal.troppoly import trop_r


def test_signed_value_roundtrip():
    for v in [stv(1, Fraction(3, 2)), stv(-1, -2), stv(0, "inf")]:
        assert iojson.stv_from_json(iojson.stv_to_json(v)) == v
    assert iojson.stv_to_json(stv(0, "inf")) == {"sign": 0, "val": "inf"}
    assert iojson.stv_to_json(stv(-1, Fraction(1, 2))) == {"sign": -1, "val": "1/2"}


def test_hypervalue_roundtrip():
    for h in [Point(stv(1, 0)), Point(stv(0, "inf")), Balanced(Fraction(5, 3))]:
        assert iojson.hv_from_json(iojson.hv_to_json(h)) == h
    assert iojson.hv_to_json(Balanced(Fraction(5, 3)))["kind"] == "balanced"
    with pytest.raises(ParseError):
        iojson.hv_from_json({"kind": "wat"})


def test_series_roundtrip():
    s = PuiseuxSeries.from_terms([(Fraction(-1, 2), 3), (2, Fraction(-7, 4))])
    assert iojson.series_from_json(iojson.series_to_json(s)) == s


def test_polyk_and_troppoly_roundtrip():
    f = parse_polyk("(x-2)^2 + (y-2)^2 - 1")
    assert iojson.polyk_from_json(iojson.polyk_to_json(f)) == f
    F = trop_r(f)
    assert iojson.troppoly_from_json(iojson.troppoly_to_json(F)) == F


def test_polyhedron_and_regions_roundtrip():
    P = Polyhedron(
        2, (constraint((1, -2), Fraction(1, 3), "<"), constraint((0, 1), -1, "<="))
    )
    assert iojson.polyhedron_from_json(iojson.polyhedron_to_json(P)) == P
    F = trop_r(parse_polyk("x + y - 1"))
    regions = {(1, 1): trop_region(F, (1, 1), "ge"), (1, 0): trop_region(F, (1, 0), "ge")}
    blob = iojson.regions_to_json(2, regions)
    back = iojson.regions_from_json(blob)
    assert set(back) == set(regions)
    for sigma in regions:
        assert back[sigma] == regions[sigma]


def test_description_roundtrip_and_rel_symbols():
    S = get_scenario("intersection_tight").description
    blob = iojson.description_to_json(S)
    assert blob["disjuncts"][0][0]["rel"] == ">="
    assert iojson.description_from_json(blob) == S


def test_dumps_is_canonical():
    a = iojson.dumps({"b": 1, "a": [2, 3]})
    assert a == '{\n  "a": [\n    2,\n    3\n  ],\n  "b": 1\n}\n'
    assert json.loads(a) == {"a": [2, 3], "b": 1}
