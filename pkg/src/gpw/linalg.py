"""Exact linear algebra over the rationals.

Rank uses fraction-free Bareiss elimination on integer matrices (rows are
scaled by their denominator lcm first, which does not change rank).  An
optional fast path computes the rank over a word-sized prime field first;
since reduction mod p can only collapse pivots, the modular rank is a lower
bound, and when it already equals ``min(rows, cols)`` it is certified exact
and the Bareiss pass is skipped.  Set ``GPW_NO_MODULAR=1`` to disable the
fast path entirely.

Nullspaces and reduced row echelon forms are computed directly over
``Fraction``; the matrices involved there are small.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

import numpy as np

from ._kernels import PRIME, rank_mod_p

Row = list[Fraction]


def _integer_rows(rows: list[Row]) -> list[list[int]]:
    out = []
    for row in rows:
        scale = lcm(*(f.denominator for f in row)) if row else 1
        ints = [int(f * scale) for f in row]
        if any(ints):
            out.append(ints)
    return out


def _bareiss_rank(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; mutates its argument."""
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        if rank == rows:
            break
        piv = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, rows):
            mr, mp = m[r], m[rank]
            f = mr[col]
            for c in range(col, cols):
                # exact by the Bareiss identity; every lower row must be
                # updated (even when f == 0) or later divisions go inexact
                mr[c] = (mr[c] * pivot - f * mp[c]) // prev
        prev = pivot
        rank += 1
        # drop rows that have become identically zero
        live = [m[r] for r in range(rank, rows) if any(m[r][col + 1 :])]
        if len(live) != rows - rank:
            m[rank:] = live
            rows = rank + len(live)
    return rank


def exact_rank(rows: list[Row], use_modular: bool | None = None) -> int:
    """Rank over the rationals of a matrix given as a list of rows."""
    ints = _integer_rows(rows)
    if not ints:
        return 0
    ncols = len(ints[0])
    bound = min(len(ints), ncols)
    if use_modular is None:
        use_modular = os.environ.get("GPW_NO_MODULAR") != "1"
    if use_modular:
        mat = np.array([[v % PRIME for v in row] for row in ints], dtype=np.int64)
        modular = rank_mod_p(mat)
        if modular == bound:
            # mod-p rank never exceeds the rational rank, so hitting the
            # dimension bound certifies it
            return modular
    return _bareiss_rank(ints)


def rref(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form over Fraction.

    Returns (reduced nonzero rows, pivot column indices).
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


def nullspace(rows: list[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : M v = 0} with columns of M as unknowns.

    Each basis vector is normalized so its first nonzero entry is 1; vectors
    are ordered by their free column, ascending, which makes the result
    deterministic.
    """
    if ncols == 0:
        return []
    if not rows:
        rows = [[Fraction(0)] * ncols]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][free]
        first = next(x for x in v if x != 0)
        basis.append([x / first for x in v])
    return basis
