import json

import pytest

from lame_dessins import CASES, generate, new_dessin, table_for_case
from lame_dessins.documents import (
    DocumentError,
    dumps,
    from_document,
    graph_data,
    loads,
    to_document,
    to_dot,
    to_json_graph,
)
from lame_dessins.validation import CHECK_NAMES, all_pass, run_checks


def dot_counts(text):
    nodes = [ln for ln in text.splitlines() if ln.strip().startswith(("b", "w")) and "--" not in ln]
    edges = [ln for ln in text.splitlines() if "--" in ln]
    return len(nodes), len(edges)


@pytest.mark.parametrize("case", CASES)
def test_roundtrip_lossless(case):
    for k in range(8):
        m = generate(case, k)
        assert loads(dumps(m)) == m
        assert dumps(loads(dumps(m))) == dumps(m)


def test_roundtrip_unmarked(three_star):
    doc = to_document(three_star)
    assert "marks" not in doc
    assert doc["sigma_black"] == []  # fixed points omitted
    assert from_document(doc) == three_star


def test_schema_fields():
    doc = json.loads(dumps(generate("oct_half", 1)))
    assert doc["degree"] == 9
    assert set(doc) == {"degree", "sigma_black", "sigma_white", "sigma_face", "marks"}
    assert set(doc["marks"]) == {"0", "1", "lambda", "infinity"}
    assert doc["marks"]["infinity"]["kind"] == "face"
    assert all(len(c) > 1 for c in doc["sigma_black"])


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"degree": 0, "sigma_black": [], "sigma_white": []}',
    '{"degree": 3, "sigma_black": [[1, 4]], "sigma_white": [[1, 2, 3]]}',
    '{"degree": 3, "sigma_black": [[1, 2], [2, 3]], "sigma_white": []}',
    '{"degree": 3, "sigma_black": "(1 2)", "sigma_white": []}',
    '{"degree": 3, "sigma_black": [], "sigma_white": [[1, 2, 3]], "marks": {"zeta": {}}}',
    '{"degree": 3, "sigma_black": [], "sigma_white": [[1, 2, 3]], "marks": {"0": {"kind": "edge", "cycle": [1]}}}',
])
def test_parse_errors(text):
    with pytest.raises(DocumentError):
        loads(text)


def test_dot_three_star(three_star):
    assert dot_counts(to_dot(three_star)) == (4, 3)


def test_dot_path():
    assert dot_counts(to_dot(new_dessin(2, [], [[1, 2]]))) == (3, 2)


def test_dot_oct_half_one():
    text = to_dot(generate("oct_half", 1))
    assert dot_counts(text) == (9, 9)
    assert text.count("fillcolor=black") == 6
    assert 'xlabel="lambda"' in text
    assert "marked infinity" in text
    assert text == to_dot(generate("oct_half", 1))


def test_json_graph():
    g = json.loads(to_json_graph(generate("ico_fifth", 1)))
    assert len(g["edges"]) == 9
    assert sum(1 for f in g["faces"] if f.get("mark") == "infinity") == 1
    assert graph_data(generate("ico_fifth", 1)) == g


def test_validate_roundtrip_all_pass():
    for case in CASES:
        doc = json.loads(dumps(generate(case, 3)))
        checks = run_checks(doc, table_for_case(case, 3))
        assert [c.name for c in checks] == list(CHECK_NAMES)
        assert all_pass(checks)


def test_validate_swapped_white_darts():
    doc = json.loads(dumps(generate("oct_half", 1)))
    cyc = doc["sigma_white"][0]
    cyc[0], cyc[1] = cyc[1], cyc[0]
    failed = {c.name for c in run_checks(doc, table_for_case("oct_half", 1)) if not c.ok}
    assert failed & {"passport", "product identity"}


def test_validate_wrong_table():
    checks = run_checks(generate("oct_half", 0), table_for_case("oct_third", 0))
    failed = {c.name for c in checks if not c.ok}
    assert "degree" in failed and not all_pass(checks)


def test_validate_bad_permutation():
    doc = {"degree": 3, "sigma_black": [[1, 5]], "sigma_white": [[1, 2, 3]]}
    checks = run_checks(doc, table_for_case("oct_half", 0))
    assert not checks[0].ok and len(checks) == len(CHECK_NAMES)


def test_validate_disconnected():
    doc = {"degree": 4, "sigma_black": [[1, 2], [3, 4]], "sigma_white": []}
    failed = [c.name for c in run_checks(doc, table_for_case("oct_half", 0)) if not c.ok]
    assert failed[0] == "transitivity"


def test_validate_missing_marks():
    doc = to_document(generate("oct_half", 0).dessin)
    checks = {c.name: c.ok for c in run_checks(doc, table_for_case("oct_half", 0))}
    assert checks["passport"] and not checks["marks"]
