"""JSON round-trips and schema rejection."""

import json

import pytest

from gpw.algebras import builtin_k, builtin_ut2
from gpw.groups import cyclic
from gpw.documents import (
    algebra_digest,
    algebra_to_document,
    document_to_algebra,
    dumps_algebra,
    load_algebra,
    loads_algebra,
    save_algebra,
)
from gpw.errors import InputError, SchemaError


@pytest.mark.parametrize(
    "fixture_name", ["ut2_g", "ut2_trivial", "k_g", "e2", "m2_transpose"]
)
def test_round_trip_preserves_everything(fixture_name, request):
    algebra = request.getfixturevalue(fixture_name)
    back = document_to_algebra(algebra_to_document(algebra))
    assert back.name == algebra.name
    assert back.mode == algebra.mode
    assert back.basis_labels == algebra.basis_labels
    assert back.grades == algebra.grades
    assert back.involution == algebra.involution
    assert back.group.labels == algebra.group.labels
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            assert back.multiply(
                back.basis_vector(i), back.basis_vector(j)
            ) == algebra.multiply(algebra.basis_vector(i), algebra.basis_vector(j))


def test_dumps_is_deterministic(e2):
    text = dumps_algebra(e2)
    assert text == dumps_algebra(e2)
    assert text.endswith("\n")
    doc = json.loads(text)
    assert list(doc) == sorted(doc)
    # rationals travel as strings, never floats
    assert "e-" not in text and not any(
        isinstance(v, float) for row in doc["structure"] for v in row[2]
    )


def test_digest_is_stable_and_sensitive(k_g):
    d1 = algebra_digest(k_g)
    assert d1 == algebra_digest(k_g)
    assert len(d1) == 64 and set(d1) <= set("0123456789abcdef")

    group = cyclic(2)
    rebuilt = builtin_k(group, group.element("g"))
    assert algebra_digest(rebuilt) == d1  # same construction, same digest

    other = builtin_ut2(group, group.element("g"))
    assert algebra_digest(other) != d1


def test_save_and_load(tmp_path, m2_transpose):
    path = tmp_path / "m2.json"
    save_algebra(m2_transpose, path)
    back = load_algebra(path)
    assert back.name == m2_transpose.name
    assert back.involution == m2_transpose.involution
    assert algebra_digest(back) == algebra_digest(m2_transpose)


def test_load_missing_file_is_a_schema_error(tmp_path):
    with pytest.raises(SchemaError, match="cannot read"):
        load_algebra(tmp_path / "nope.json")


def test_loads_rejects_non_json():
    with pytest.raises(SchemaError, match="not valid JSON"):
        loads_algebra("{")


def _doc(e2):
    return algebra_to_document(e2)


@pytest.mark.parametrize(
    "key", ["format_version", "name", "mode", "group", "basis", "grading", "structure"]
)
def test_missing_key_is_rejected(e2, key):
    doc = _doc(e2)
    del doc[key]
    with pytest.raises(SchemaError, match=key):
        document_to_algebra(doc)


def test_future_format_version_is_rejected(e2):
    doc = _doc(e2)
    doc["format_version"] = 2
    with pytest.raises(SchemaError, match="format_version"):
        document_to_algebra(doc)


@pytest.mark.parametrize("bad", ["1.5", 2.5, True, "1/0", "", None])
def test_bad_rationals_are_rejected(e2, bad):
    doc = _doc(e2)
    doc["structure"][0][2][0] = bad
    with pytest.raises(SchemaError, match="rational"):
        document_to_algebra(doc)


def test_unknown_grade_label_is_rejected(e2):
    doc = _doc(e2)
    doc["grading"][1] = "(7,7)"
    with pytest.raises(SchemaError, match="grade label"):
        document_to_algebra(doc)


def test_grading_length_must_match_basis(e2):
    doc = _doc(e2)
    doc["grading"] = doc["grading"][:-1]
    with pytest.raises(SchemaError, match="grading"):
        document_to_algebra(doc)


def test_duplicate_structure_entry_is_rejected(e2):
    doc = _doc(e2)
    doc["structure"].append(list(doc["structure"][0]))
    with pytest.raises(SchemaError, match="duplicate"):
        document_to_algebra(doc)


def test_structure_vector_length_is_checked(e2):
    doc = _doc(e2)
    doc["structure"][0][2] = doc["structure"][0][2] + ["0"]
    with pytest.raises(SchemaError, match="length"):
        document_to_algebra(doc)


def test_star_mode_requires_involution(e2):
    doc = _doc(e2)
    del doc["involution"]
    with pytest.raises(SchemaError, match="involution"):
        document_to_algebra(doc)


def test_graded_mode_rejects_involution(ut2_g):
    doc = algebra_to_document(ut2_g)
    doc["involution"] = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    with pytest.raises(SchemaError, match="graded mode"):
        document_to_algebra(doc)


def test_ragged_involution_is_rejected(e2):
    doc = _doc(e2)
    doc["involution"][0] = doc["involution"][0][:-1]
    with pytest.raises(SchemaError, match="involution"):
        document_to_algebra(doc)


@pytest.mark.parametrize(
    "spec",
    [
        {"kind": "cyclic", "order": 2},
        {"kind": "product", "orders": [2, 2]},
        {
            "kind": "table",
            "labels": ["e", "a"],
            "table": [["e", "a"], ["a", "e"]],
            "identity": "e",
        },
    ],
)
def test_group_subspec_kinds_load(spec, ut2_trivial):
    doc = algebra_to_document(ut2_trivial)
    doc["group"] = spec
    doc["grading"] = [doc["group"].get("identity", None) or _first_label(spec)] * 3
    algebra = document_to_algebra(doc)
    expected_size = 2 if spec["kind"] != "product" else 4
    assert len(algebra.group.labels) == expected_size


def _first_label(spec):
    if spec["kind"] == "cyclic":
        return "1"
    if spec["kind"] == "product":
        return "(0,0)"
    return spec["labels"][0]


def test_loading_funnels_through_validation(e2):
    # a document whose structure constants break the algebra axioms must not
    # load, even though it is schema-valid JSON
    doc = _doc(e2)
    doc["structure"] = [[0, 0, ["0", "1", "0", "0"]]]  # 1*1 = e1
    with pytest.raises(InputError):
        document_to_algebra(doc)
