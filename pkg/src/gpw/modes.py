"""Shared vocabulary for the two operating modes and the variable kinds.

A *graded* algebra exposes one variable kind (plain, letter ``x``).  A *star*
algebra exposes two kinds per grade: symmetric (``y``) and skew (``z``).  The
canonical slot order used everywhere — compositions, multipartition
components, report columns — is:

* graded mode: one slot per group element, in group element order;
* star mode: two slots per group element, symmetric before skew, grades in
  group element order.
"""

from __future__ import annotations

GRADED = "graded"
STAR = "star"

PLAIN = "x"
SYM = "y"
SKEW = "z"

KINDS_BY_MODE = {GRADED: (PLAIN,), STAR: (SYM, SKEW)}


def check_mode(mode: str) -> str:
    if mode not in (GRADED, STAR):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def slot_count(num_grades: int, mode: str) -> int:
    return num_grades * len(KINDS_BY_MODE[check_mode(mode)])


def slot_grade_kind(slot: int, mode: str) -> tuple[int, str]:
    """Map a slot index to its (grade index, kind letter)."""
    if mode == GRADED:
        return slot, PLAIN
    return slot // 2, (SYM, SKEW)[slot % 2]


def slot_of(grade: int, kind: str, mode: str) -> int:
    """Inverse of :func:`slot_grade_kind`."""
    kinds = KINDS_BY_MODE[check_mode(mode)]
    if kind not in kinds:
        raise ValueError(f"kind {kind!r} not available in {mode} mode")
    return grade * len(kinds) + kinds.index(kind)
