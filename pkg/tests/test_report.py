from nildga.report import closed_form, digest, dump_json, format_series
from nildga.superring import SuperRing


def test_closed_form_recognition():
    r = SuperRing(["t2", "t4"], ["s0"], 6)
    f = -(r.var("t4") * r.var("s0")) * (r.const(1) - r.var("t2")).inverse()
    g, k = closed_form(f)
    assert k == 1
    assert format_series(f) == "-t4*s0/(1-t2)"
    assert format_series(r.var("t4")) == "t4"


def test_json_is_deterministic(tmp_path):
    doc = {"b": [1, 2], "a": {"y": 1, "x": 2}}
    p = tmp_path / "out.json"
    text = dump_json(doc, str(p))
    assert p.read_text() == text
    assert text.index('"a"') < text.index('"b"')
    assert digest(doc) == digest({"a": {"x": 2, "y": 1}, "b": [1, 2]})
