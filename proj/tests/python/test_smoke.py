import json
from pathlib import Path

import pytest

import jetinv

FIXTURES = Path(__file__).resolve().parent.parent / "cli" / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def coords(doc):
    return {(c["component"], tuple(c["index"])): c["value"] for c in doc["coords"]}


def test_dim():
    assert jetinv.dim(2, 1, 2) == 8


def test_invariants_of_parabola_jet():
    out = jetinv.invariants(load("order2_velocity.json"))
    assert out["kind"] == "grassmann"
    assert out["chart"] == [1]
    values = {tuple(c["index"]): c["value"] for c in out["coords"] if c["index"]}
    assert values[(1,)] == "2"
    assert values[(1, 1)] == "1"


def test_group_round_trip():
    g = jetinv.random(kind="group", n=2, r=3, seed=4)
    identity = jetinv.compose(g, jetinv.invert(g))
    for (component, index), value in coords(identity).items():
        expected = "1" if len(index) == 1 and index[0] == component else "0"
        assert value == expected


def test_orbit_of_acted_velocity():
    v = load("order2_velocity.json")
    moved = jetinv.act(v, load("scale_by_2.json"))
    check = jetinv.orbit_check(v, moved)
    assert check["equal"] is True
    assert "transporter" in check


def test_curves_in_different_orbits():
    square = jetinv.prolong(load("parabola.json"), order=2)
    cube = jetinv.prolong(load("cubic.json"), order=2)
    assert jetinv.orbit_check(square, cube)["equal"] is False


def test_transform_contact_element():
    out = jetinv.transform(load("swap_chart.json"), load("slope_3.json"))
    assert "1/3" in {c["value"] for c in out["coords"]}


def test_float_mode():
    out = jetinv.invariants(load("float_velocity.json"))
    assert out["scalar_mode"] == "float"


def test_errors():
    with pytest.raises(jetinv.DomainError):
        jetinv.invert(load("singular_group.json"))
    with pytest.raises(jetinv.DomainError):
        jetinv.transform(load("swap_chart.json"), load("slope_0.json"))
    with pytest.raises(jetinv.ParseError):
        jetinv.invariants(load("missing_coord.json"))
    with pytest.raises(jetinv.ParseError):
        jetinv.invariants("{not json")
    assert issubclass(jetinv.ParseError, jetinv.JetinvError)


def test_selftest():
    passed, report = jetinv.selftest()
    assert passed, report
    assert "selftest passed" in report
