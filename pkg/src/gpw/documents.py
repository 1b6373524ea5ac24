"""JSON interchange format for algebras.

A document carries the group description, the basis with grade labels, the
nonzero structure constants, and (in star mode) the involution matrix.  All
rationals travel as strings like ``"3"`` or ``"-5/7"``; nothing is ever a
float.  Loading funnels through the algebra constructor, so a document that
loads is a genuinely valid algebra.

The digest of an algebra is the SHA-256 of its canonical document rendering
(sorted keys, compact separators) and is what result caches key on.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from pathlib import Path

from . import modes
from .algebras import GradedStarAlgebra
from .errors import SchemaError
from .groups import build_group

FORMAT_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise SchemaError(f"not a rational: {value!r} (use e.g. \"-5/7\")")


def _render_rational(value: Fraction) -> str:
    return str(value)


def _require(doc: dict, key: str, types) -> object:
    if key not in doc:
        raise SchemaError(f"document is missing {key!r}")
    value = doc[key]
    if not isinstance(value, types):
        raise SchemaError(f"{key!r} has the wrong type")
    return value


def algebra_to_document(algebra: GradedStarAlgebra) -> dict:
    structure = []
    zero = algebra.zero()
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            product = algebra.multiply(algebra.basis_vector(i), algebra.basis_vector(j))
            if product != zero:
                structure.append([i, j, [_render_rational(c) for c in product]])
    doc = {
        "format_version": FORMAT_VERSION,
        "name": algebra.name,
        "mode": algebra.mode,
        "group": algebra.group.spec,
        "basis": list(algebra.basis_labels),
        "grading": [algebra.group.label(g) for g in algebra.grades],
        "structure": structure,
    }
    if algebra.involution is not None:
        doc["involution"] = [
            [_render_rational(c) for c in row] for row in algebra.involution
        ]
    return doc


def document_to_algebra(doc: dict) -> GradedStarAlgebra:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    version = _require(doc, "format_version", int)
    if version != FORMAT_VERSION:
        raise SchemaError(
            f"unsupported format_version {version} (this build reads {FORMAT_VERSION})"
        )
    name = _require(doc, "name", str)
    mode = _require(doc, "mode", str)
    if mode not in (modes.GRADED, modes.STAR):
        raise SchemaError(f"mode must be 'graded' or 'star', not {mode!r}")
    group = build_group(_require(doc, "group", dict))
    basis = _require(doc, "basis", list)
    if not all(isinstance(b, str) for b in basis):
        raise SchemaError("basis labels must be strings")
    grading = _require(doc, "grading", list)
    if len(grading) != len(basis):
        raise SchemaError("grading must assign one grade label per basis vector")
    grades = []
    for label in grading:
        if not isinstance(label, str) or label not in group.labels:
            raise SchemaError(f"grade label {label!r} is not an element of the group")
        grades.append(group.element(label))

    dim = len(basis)
    structure: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    raw = _require(doc, "structure", list)
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not isinstance(entry[0], int)
            or not isinstance(entry[1], int)
            or not isinstance(entry[2], list)
        ):
            raise SchemaError(
                "each structure entry must be [i, j, [rational, ...]]"
            )
        i, j, vec = entry
        if (i, j) in structure:
            raise SchemaError(f"duplicate structure entry for ({i},{j})")
        if len(vec) != dim:
            raise SchemaError(f"structure vector for ({i},{j}) must have length {dim}")
        structure[(i, j)] = tuple(_parse_rational(v) for v in vec)

    involution = None
    if mode == modes.STAR:
        if "involution" not in doc:
            raise SchemaError("star mode requires an involution matrix")
        rows = doc["involution"]
        if not isinstance(rows, list) or len(rows) != dim:
            raise SchemaError("involution must be a square matrix on the basis")
        involution = tuple(
            tuple(_parse_rational(v) for v in _row_of(row, dim)) for row in rows
        )
    elif "involution" in doc and doc["involution"] is not None:
        raise SchemaError("graded mode must not declare an involution")

    return GradedStarAlgebra(
        name=name,
        group=group,
        basis_labels=tuple(basis),
        grades=tuple(grades),
        structure=structure,
        involution=involution,
    )


def _row_of(row, dim: int) -> list:
    if not isinstance(row, list) or len(row) != dim:
        raise SchemaError("involution rows must match the basis length")
    return row


def dumps_algebra(algebra: GradedStarAlgebra) -> str:
    return json.dumps(algebra_to_document(algebra), indent=2, sort_keys=True) + "\n"


def loads_algebra(text: str) -> GradedStarAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return document_to_algebra(doc)


def load_algebra(path: str | Path) -> GradedStarAlgebra:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    return loads_algebra(text)


def save_algebra(algebra: GradedStarAlgebra, path: str | Path) -> None:
    Path(path).write_text(dumps_algebra(algebra))


def algebra_digest(algebra: GradedStarAlgebra) -> str:
    canonical = json.dumps(
        algebra_to_document(algebra), sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(canonical.encode()).hexdigest()
