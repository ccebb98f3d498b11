import json
from fractions import Fraction

import pytest

from quiverhh.dsl import (load_presentation, parse_presentation,
                          presentation_from_json, presentation_to_json,
                          render_presentation)
from quiverhh.errors import ParseError

SAMPLE = """
# comment line
field Q
vertex 1 2 3
arrow a 1 2
arrow b 1 2
arrow c 2 3
relation a*c          # trailing comment
relation 2/3 * (a*c) - (b*c)
"""


def test_parse_basic():
    p = parse_presentation(SAMPLE)
    assert p.field.characteristic == 0
    assert p.quiver.vertices == ("1", "2", "3")
    assert [a.label for a in p.quiver.arrows] == ["a", "b", "c"]
    assert len(p.relations) == 2
    terms = dict((path, coef) for coef, path in p.relations[1].terms)
    assert terms[("a", "c")] == Fraction(2, 3)
    assert terms[("b", "c")] == Fraction(-1)


def test_roundtrip_dsl():
    p = parse_presentation(SAMPLE)
    text = render_presentation(p)
    assert parse_presentation(text) == p


def test_roundtrip_json():
    p = parse_presentation(SAMPLE)
    data = presentation_to_json(p)
    again = presentation_from_json(json.dumps(data))
    assert again == p


def test_load_sniffs_format():
    p = parse_presentation(SAMPLE)
    as_json = json.dumps(presentation_to_json(p))
    assert load_presentation(as_json) == p
    assert load_presentation(SAMPLE) == p


def test_field_override():
    p = parse_presentation(SAMPLE, field_override="fp:5")
    assert p.field.characteristic == 5


def test_expression_expansion():
    text = """
field Q
vertex 1 2
arrow a 1 2
arrow b 1 2
relation (a + b) * 2 - a * 2
"""
    p = parse_presentation(text)
    assert p.relations[0].terms == ((Fraction(2), ("b",)),)


def test_parse_errors_carry_line_numbers():
    cases = [
        ("field R\nvertex 1\n", 1),
        ("field Q\nvertex 1 1\n", 2),
        ("field Q\nvertex 1\narrow a 1\n", 3),
        ("field Q\nvertex 1\narrow a 1 1\nrelation a*z\n", 4),
        ("field Q\nvertex 1\narrow a 1 1\nrelation a* \n", 4),
        ("field Q\nvertex 1\narrow a 1 1\nrelation (a*a\n", 4),
        ("field Q\nvertex 1\nbogus x\n", 3),
    ]
    for text, line in cases:
        with pytest.raises(ParseError) as err:
            parse_presentation(text)
        assert err.value.line == line


def test_missing_field_rejected():
    with pytest.raises(ParseError):
        parse_presentation("vertex 1\n")


def test_duplicate_arrow_rejected():
    text = "field Q\nvertex 1\narrow a 1 1\narrow a 1 1\n"
    with pytest.raises(ParseError):
        parse_presentation(text)


def test_bad_json_rejected():
    with pytest.raises(ParseError):
        presentation_from_json("{not json")
    with pytest.raises(ParseError):
        presentation_from_json(json.dumps({"field": "Q"}))
