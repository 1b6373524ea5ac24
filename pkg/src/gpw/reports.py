"""Rendering of results as TSV or JSON, and the shape literal syntax.

A multipartition prints as a parenthesized list of nonempty components,
each ``(parts)@label`` with a trailing ``+`` (symmetric) or ``-`` (skew) in
star mode, e.g. ``((2,1)@1+,(1)@g-)``.  Labels may themselves contain
parentheses and commas (product groups), so parsing splits at depth zero
only.

Rendered output is deterministic: same algebra, same flags, same bytes.
Timings never appear here.
"""

from __future__ import annotations

import json

from . import modes
from .errors import ParseError, UnknownGradeLabel
from .groups import FiniteGroup
from .shapes import Multipartition

# -- shape literals -----------------------------------------------------------


def format_shape(shape: Multipartition, group: FiniteGroup, mode: str) -> str:
    parts = []
    for slot, lam in enumerate(shape.components):
        if not lam:
            continue
        grade, kind = modes.slot_grade_kind(slot, mode)
        sign = "" if mode == modes.GRADED else ("+" if kind == modes.SYM else "-")
        body = ",".join(str(p) for p in lam)
        parts.append(f"({body})@{group.label(grade)}{sign}")
    return "(" + ",".join(parts) + ")"


def _split_depth_zero(text: str, sep: str) -> list[str]:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", i)
        elif ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError("unbalanced parentheses", len(text))
    out.append(text[start:])
    return out


def parse_shape(text: str, group: FiniteGroup, mode: str) -> Multipartition:
    """Inverse of :func:`format_shape`; unmentioned slots stay empty."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("a shape literal is wrapped in parentheses", 0)
    inner = stripped[1:-1].strip()
    slots = modes.slot_count(len(group), mode)
    components: list[tuple[int, ...]] = [()] * slots
    if inner:
        for chunk in _split_depth_zero(inner, ","):
            chunk = chunk.strip()
            if not chunk.startswith("("):
                raise ParseError(f"component {chunk!r} must start with '('", 0)
            depth, end = 0, None
            for i, ch in enumerate(chunk):
                depth += ch == "("
                depth -= ch == ")"
                if depth == 0:
                    end = i
                    break
            if end is None or end + 1 >= len(chunk) or chunk[end + 1] != "@":
                raise ParseError(f"component {chunk!r} needs '(parts)@label'", 0)
            try:
                lam = tuple(int(p) for p in chunk[1:end].split(","))
            except ValueError:
                raise ParseError(f"bad partition in {chunk!r}", 0) from None
            if any(a < b for a, b in zip(lam, lam[1:])) or any(p <= 0 for p in lam):
                raise ParseError(f"{lam} is not a partition", 0)
            label = chunk[end + 2 :]
            if mode == modes.STAR:
                if not label or label[-1] not in "+-":
                    raise ParseError(
                        f"star-mode component {chunk!r} needs a trailing + or -", 0
                    )
                kind = modes.SYM if label[-1] == "+" else modes.SKEW
                label = label[:-1]
            else:
                kind = modes.PLAIN
            if label not in group.labels:
                raise UnknownGradeLabel(f"grade label {label!r} unknown")
            slot = modes.slot_of(group.element(label), kind, mode)
            if components[slot]:
                raise ParseError(f"slot for {chunk!r} given twice", 0)
            components[slot] = lam
    return Multipartition(tuple(components))


def format_composition(comp, group: FiniteGroup, mode: str) -> str:
    return "(" + ",".join(str(c) for c in comp) + ")"


def slot_legend(group: FiniteGroup, mode: str) -> str:
    names = []
    for slot in range(modes.slot_count(len(group), mode)):
        grade, kind = modes.slot_grade_kind(slot, mode)
        sign = "" if mode == modes.GRADED else ("+" if kind == modes.SYM else "-")
        names.append(f"{group.label(grade)}{sign}")
    return ",".join(names)


# -- report envelopes ----------------------------------------------------------


def render(payload: dict, as_json: bool) -> str:
    """One report, deterministically rendered.

    ``payload`` has ``meta`` (echoed into comment lines / the JSON envelope)
    and ``table``: a header row plus data rows for TSV.  JSON output carries
    the same content under sorted keys.
    """
    if as_json:
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"# {k}: {payload['meta'][k]}" for k in sorted(payload["meta"])]
    table = payload.get("table")
    if table:
        for row in table:
            lines.append("\t".join(str(c) for c in row))
    return "\n".join(lines) + "\n"
