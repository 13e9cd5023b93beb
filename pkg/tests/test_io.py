import json

import pytest
from hypothesis import given, settings, strategies as st

from mindist.errors import DuplicatePointError, PointFileError, ZeroVectorError
from mindist.io import dump_points, parse_point_text, read_points, write_points
from mindist.pointset import normalize

coord = st.one_of(
    st.integers(-50, 50),
    st.fractions(min_value=-20, max_value=20, max_denominator=9),
)


def doc(points, n=None, **extra):
    n = len(points[0]) - 1 if n is None else n
    d = {"version": 1, "n": n, "points": [[str(x) for x in p] for p in points]}
    d.update(extra)
    return json.dumps(d)


def test_parse_basic():
    pts = parse_point_text(doc([[0, 0, 1], [1, "-3/2", 0]]))
    assert pts.n == 2 and pts.m == 2
    assert pts.as_strings() == [["0", "0", "1"], ["1", "-3/2", "0"]]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(coord, min_size=3, max_size=3), min_size=1, max_size=6))
def test_round_trip(raw):
    try:
        pts = normalize(raw, 2)
    except (ZeroVectorError, DuplicatePointError):
        return
    text = dump_points(pts)
    again = parse_point_text(text)
    assert again == pts
    assert dump_points(again) == text


def test_file_round_trip(tmp_path, plane_line):
    path = tmp_path / "pts.json"
    write_points(path, plane_line, "nine points")
    assert read_points(path) == plane_line
    assert json.loads(path.read_text())["description"] == "nine points"


@pytest.mark.parametrize("text,fragment", [
    ('{"version": 1, "n": 2, "points": [["0", "0"]]}', "coordinates"),
    ('{"version": 2, "n": 2, "points": [["0", "0", "1"]]}', "version"),
    ('{"version": 1, "n": 2, "points": [["0", "0", 1]]}', "string"),
    ('{"version": 1, "n": 2, "points": [["0", "0", "1.5"]]}', "bad coordinate"),
    ('{"version": 1, "n": 2, "points": [["0", "0", "1/0"]]}', "zero denominator"),
    ('{"version": 1, "n": 2, "points": []}', "non-empty"),
    ('{"version": 1, "n": 2, "points": [["0", "0", "1"]], "extra": 1}', "unknown keys"),
    ('[1, 2]', "object"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PointFileError) as exc:
        parse_point_text(text)
    assert fragment in str(exc.value)


def test_syntax_error_position():
    text = '{\n  "version": 1,\n  "n": 2,\n  "points": [["0", "0", "1"],]\n}'
    with pytest.raises(PointFileError) as exc:
        parse_point_text(text)
    assert exc.value.line == 4


def test_bad_point_line_number():
    text = '{\n "version": 1,\n "n": 2,\n "points": [\n  ["0", "0", "1"],\n  ["0", "x", "1"]\n ]\n}'
    with pytest.raises(PointFileError) as exc:
        parse_point_text(text)
    assert exc.value.line == 6


def test_duplicate_and_zero_rejected():
    with pytest.raises(DuplicatePointError):
        parse_point_text(doc([[1, 2, 3], [2, 4, 6]]))
    with pytest.raises(ZeroVectorError):
        parse_point_text(doc([[0, 0, 0]]))
