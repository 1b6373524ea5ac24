"""Evaluation of graded polynomials on algebras, and the ranks built on it.

Everything here reduces to one primitive: evaluate a family of multilinear
polynomials sharing one variable signature on every tuple of homogeneous
basis elements, collect the coordinates into an exact rational matrix, and
take ranks of column blocks.

* The **slice codimension** of a composition is the rank of the matrix whose
  columns are the n! arrangements of the signature's variables.
* The **multiplicity** of a multipartition is the rank of the matrix whose
  columns are the polarized highest weight vectors of its standard
  multitableaux.
* The two are tied together per composition by the identity
  ``slice_codim == sum(multiplicity * degree)`` over that composition's
  shapes; a violation is reported as :class:`ConsistencyViolation` because it
  can only come from a bug, never from user input.

A polynomial is an identity when all its multihomogeneous components
polarize to zero on every basis tuple.  An independent, slower route
(`is_identity_grid`, `multiplicity_grid`) avoids polarization entirely and
substitutes generic component elements on integer grids instead; by
multivariate interpolation a multihomogeneous polynomial vanishing on the
full grid vanishes identically, so the two routes must agree and are
cross-checked in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import modes
from .algebras import GradedStarAlgebra, Vector
from .errors import (
    CapExceeded,
    ConsistencyViolation,
    GradeMismatch,
    InputError,
    KindMismatch,
    ModeMismatch,
)
from .linalg import exact_rank, nullspace
from .polynomials import (
    GradedPoly,
    Monomial,
    Variable,
    highest_weight_vector,
    multilinearize,
)
from .shapes import (
    Composition,
    Multipartition,
    all_multitableaux,
    compositions,
    multipartitions,
    standard_multitableaux,
)

DEFAULT_N_CAP = 5
HARD_N_CAP = 7


def canonical_variable_order(variables, mode: str) -> tuple[Variable, ...]:
    """Slot-major order: grades ascending, kinds in slot order, indices
    ascending."""
    return tuple(
        sorted(variables, key=lambda v: (modes.slot_of(v.grade, v.kind, mode), v.index))
    )


def composition_variables(comp: Composition, mode: str) -> tuple[Variable, ...]:
    out = []
    for slot, count in enumerate(comp):
        grade, kind = modes.slot_grade_kind(slot, mode)
        out.extend(Variable(kind, grade, i) for i in range(1, count + 1))
    return tuple(out)


def check_homogeneous(algebra: GradedStarAlgebra, var: Variable, vec: Vector) -> None:
    inside = set(algebra.component_indices(var.grade))
    for i, coord in enumerate(vec):
        if coord != 0 and i not in inside:
            raise GradeMismatch(
                f"value for {var.display(algebra.group)} is not homogeneous of "
                f"grade {algebra.group.label(var.grade)}"
            )
    if var.kind == modes.PLAIN:
        return
    image = algebra.involve(vec)
    expected = vec if var.kind == modes.SYM else tuple(-c for c in vec)
    if image != expected:
        want = "symmetric" if var.kind == modes.SYM else "skew"
        raise KindMismatch(f"value for {var.display(algebra.group)} is not {want}")


def evaluate(
    poly: GradedPoly,
    algebra: GradedStarAlgebra,
    assignment: dict[Variable, Vector],
    check: bool = True,
) -> Vector:
    """Substitute homogeneous elements for variables and multiply out."""
    if poly.mode != algebra.mode:
        raise ModeMismatch(
            f"{poly.mode} polynomial evaluated on {algebra.mode} algebra"
        )
    if check:
        for var in poly.variables():
            if var not in assignment:
                raise InputError(f"no value assigned to {var.display(algebra.group)}")
            check_homogeneous(algebra, var, assignment[var])
    total = list(algebra.zero())
    for mono, coeff in poly.terms.items():
        if not mono:
            raise InputError("constant terms cannot be evaluated in this algebra")
        value = assignment[mono[0]]
        for var in mono[1:]:
            value = algebra.multiply(value, assignment[var])
        for k, c in enumerate(value):
            if c != 0:
                total[k] += coeff * c
    return tuple(total)


def _mono_value(
    mono: Monomial,
    algebra: GradedStarAlgebra,
    assignment: dict[Variable, Vector],
    memo: dict[Monomial, Vector],
) -> Vector:
    cached = memo.get(mono)
    if cached is not None:
        return cached
    if len(mono) == 1:
        value = assignment[mono[0]]
    else:
        value = algebra.multiply(
            _mono_value(mono[:-1], algebra, assignment, memo), assignment[mono[-1]]
        )
    memo[mono] = value
    return value


@dataclass
class EvaluationMatrix:
    """Exact evaluation matrix: one column per polynomial, one row per
    (basis tuple, coordinate) pair."""

    algebra_name: str
    variables: tuple[Variable, ...]
    column_labels: tuple[str, ...]
    rows: list[list[Fraction]] = field(repr=False)

    def rank(self, columns: slice | None = None) -> int:
        if columns is None:
            return exact_rank(self.rows)
        return exact_rank([row[columns] for row in self.rows])

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self.rows, len(self.column_labels))


def build_evaluation_matrix(
    algebra: GradedStarAlgebra,
    polys: list[GradedPoly],
    variables: tuple[Variable, ...] | None = None,
    column_labels: tuple[str, ...] | None = None,
) -> EvaluationMatrix:
    """Evaluate multilinear polynomials sharing one variable set on all
    tuples of homogeneous component basis elements."""
    if not polys:
        raise InputError("need at least one polynomial")
    if variables is None:
        variables = canonical_variable_order(polys[0].variables(), algebra.mode)
    varset = set(variables)
    for p in polys:
        if p.mode != algebra.mode:
            raise ModeMismatch("polynomial mode does not match the algebra")
        if not p.is_multilinear() or (p.terms and set(p.variables()) != varset):
            raise InputError(
                "evaluation matrices need multilinear polynomials over one "
                "common variable set"
            )
    if column_labels is None:
        column_labels = tuple(p.display(algebra.group) for p in polys)

    bases = [
        algebra.homogeneous_basis(v.grade, v.kind).vectors for v in variables
    ]
    rows: list[list[Fraction]] = []
    dim = algebra.dim
    for combo in itertools.product(*bases):
        assignment = dict(zip(variables, combo))
        memo: dict[Monomial, Vector] = {}
        values = []
        for p in polys:
            acc = [Fraction(0)] * dim
            for mono, coeff in p.terms.items():
                vec = _mono_value(mono, algebra, assignment, memo)
                for k, c in enumerate(vec):
                    if c != 0:
                        acc[k] += coeff * c
            values.append(acc)
        for k in range(dim):
            rows.append([v[k] for v in values])
    return EvaluationMatrix(algebra.name, variables, column_labels, rows)


# -- identities ---------------------------------------------------------------


def is_identity(poly: GradedPoly, algebra: GradedStarAlgebra) -> bool:
    """Does the polynomial vanish under every homogeneous substitution?

    Split into multihomogeneous components, polarize each, and test all
    tuples of component basis vectors; in characteristic zero this is
    equivalent to vanishing everywhere.
    """
    if poly.mode != algebra.mode:
        raise ModeMismatch(
            f"{poly.mode} polynomial tested on {algebra.mode} algebra"
        )
    if any(not mono for mono in poly.terms):
        raise InputError("constant terms cannot be evaluated in this algebra")
    for component in poly.multihomogeneous_components():
        linear = multilinearize(component)
        variables = canonical_variable_order(linear.variables(), algebra.mode)
        bases = [
            algebra.homogeneous_basis(v.grade, v.kind).vectors for v in variables
        ]
        for combo in itertools.product(*bases):
            assignment = dict(zip(variables, combo))
            memo: dict[Monomial, Vector] = {}
            acc = [Fraction(0)] * algebra.dim
            for mono, coeff in linear.terms.items():
                vec = _mono_value(mono, algebra, assignment, memo)
                for k, c in enumerate(vec):
                    if c != 0:
                        acc[k] += coeff * c
            if any(acc):
                return False
    return True


def is_identity_grid(poly: GradedPoly, algebra: GradedStarAlgebra) -> bool:
    """Polarization-free identity oracle.

    Each variable of multiplicity m ranging over a component of dimension d
    is substituted by sum(t_j * b_j) for every integer point t in
    {0..m}^d.  The evaluated expression is, coordinatewise, a polynomial of
    degree at most m in each t_j, so vanishing on the whole grid forces the
    zero polynomial.
    """
    if poly.mode != algebra.mode:
        raise ModeMismatch(
            f"{poly.mode} polynomial tested on {algebra.mode} algebra"
        )
    if any(not mono for mono in poly.terms):
        raise InputError("constant terms cannot be evaluated in this algebra")
    for component in poly.multihomogeneous_components():
        degree = component.multidegree()
        variables = canonical_variable_order(degree.keys(), algebra.mode)
        grids = []
        for v in variables:
            basis = algebra.homogeneous_basis(v.grade, v.kind).vectors
            points = []
            for t in itertools.product(range(degree[v] + 1), repeat=len(basis)):
                vec = [Fraction(0)] * algebra.dim
                for w, b in zip(t, basis):
                    if w:
                        for k, c in enumerate(b):
                            vec[k] += w * c
                points.append(tuple(vec))
            grids.append(points)
        for combo in itertools.product(*grids):
            assignment = dict(zip(variables, combo))
            if any(evaluate(component, algebra, assignment, check=False)):
                return False
    return True


# -- codimensions and multiplicities ------------------------------------------


def _check_composition(algebra: GradedStarAlgebra, comp: Composition) -> None:
    expected = modes.slot_count(len(algebra.group), algebra.mode)
    if len(comp) != expected:
        raise ModeMismatch(
            f"composition has {len(comp)} slots, {algebra.mode} mode over this "
            f"group needs {expected}"
        )
    if any(c < 0 for c in comp):
        raise InputError("composition parts must be nonnegative")


def _arrangements(variables: tuple[Variable, ...], mode: str) -> list[GradedPoly]:
    return [
        GradedPoly.monomial(mode, perm)
        for perm in itertools.permutations(variables)
    ]


def slice_codimension(algebra: GradedStarAlgebra, comp: Composition) -> int:
    """Rank of the n! monomial arrangements of the composition's variables."""
    _check_composition(algebra, comp)
    if sum(comp) == 0:
        return 0
    variables = composition_variables(comp, algebra.mode)
    if _has_empty_slot(algebra, variables):
        return 0
    matrix = build_evaluation_matrix(
        algebra, _arrangements(variables, algebra.mode), variables
    )
    return matrix.rank()


def _has_empty_slot(algebra: GradedStarAlgebra, variables) -> bool:
    return any(
        algebra.homogeneous_basis(v.grade, v.kind).dim == 0 for v in variables
    )


def total_codimension(algebra: GradedStarAlgebra, n: int) -> tuple[int, dict[Composition, int]]:
    """Degree-n codimension and its per-composition breakdown.

    The total weights each slice by the multinomial coefficient counting
    which positions carry which slot's variables.
    """
    if n < 1:
        raise InputError("degree must be at least 1")
    slots = modes.slot_count(len(algebra.group), algebra.mode)
    breakdown: dict[Composition, int] = {}
    total = 0
    for comp in compositions(n, slots):
        c = slice_codimension(algebra, comp)
        breakdown[comp] = c
        weight = factorial(n)
        for part in comp:
            weight //= factorial(part)
        total += weight * c
    return total, breakdown


def multiplicity(
    algebra: GradedStarAlgebra,
    shape: Multipartition,
    fillings: str = "standard",
) -> int:
    """Cocharacter multiplicity of one multipartition.

    ``fillings="standard"`` (the default) spans with the standard
    multitableaux; ``"all"`` uses every filling (slow; for cross-checks);
    ``"grid"`` uses the polarization-free substitution grid on the standard
    tableaux's unpolarized vectors.
    """
    _check_composition(algebra, shape.weight)
    if fillings == "grid":
        return _multiplicity_grid(algebra, shape)
    if fillings == "standard":
        tabs = standard_multitableaux(shape)
    elif fillings == "all":
        tabs = all_multitableaux(shape)
    else:
        raise InputError(f"unknown fillings choice {fillings!r}")
    variables = composition_variables(shape.weight, algebra.mode)
    if _has_empty_slot(algebra, variables):
        return 0
    polys = [
        multilinearize(highest_weight_vector(t, algebra.mode)) for t in tabs
    ]
    matrix = build_evaluation_matrix(algebra, polys, variables)
    return matrix.rank()


def _multiplicity_grid(algebra: GradedStarAlgebra, shape: Multipartition) -> int:
    """Rank of the unpolarized tableau vectors on integer substitution
    grids; agrees with the polarized rank in characteristic zero."""
    tabs = standard_multitableaux(shape)
    polys = [highest_weight_vector(t, algebra.mode) for t in tabs]
    degree = polys[0].multidegree()
    variables = canonical_variable_order(degree.keys(), algebra.mode)
    if _has_empty_slot(algebra, variables):
        return 0
    grids = []
    for v in variables:
        basis = algebra.homogeneous_basis(v.grade, v.kind).vectors
        points = []
        for t in itertools.product(range(degree[v] + 1), repeat=len(basis)):
            vec = [Fraction(0)] * algebra.dim
            for w, b in zip(t, basis):
                if w:
                    for k, c in enumerate(b):
                        vec[k] += w * c
            points.append(tuple(vec))
        grids.append(points)
    rows: list[list[Fraction]] = []
    for combo in itertools.product(*grids):
        assignment = dict(zip(variables, combo))
        values = [evaluate(p, algebra, assignment, check=False) for p in polys]
        for k in range(algebra.dim):
            rows.append([v[k] for v in values])
    return exact_rank(rows)


@dataclass
class CocharacterTable:
    algebra_name: str
    mode: str
    n: int
    slice_codims: list[tuple[Composition, int]]
    entries: list[tuple[Multipartition, int]]
    total_codim: int

    def support(self) -> list[tuple[Multipartition, int]]:
        return [(shape, m) for shape, m in self.entries if m > 0]

    def max_multiplicity(self) -> int:
        return max((m for _, m in self.entries), default=0)

    def multiplicity_of(self, shape: Multipartition) -> int:
        for s, m in self.entries:
            if s == shape:
                return m
        raise KeyError(shape)


def cocharacter_table(
    algebra: GradedStarAlgebra, n: int, cap: int = DEFAULT_N_CAP
) -> CocharacterTable:
    """Full degree-n cocharacter data: every multipartition's multiplicity,
    every composition's slice codimension, and the total codimension.

    Per composition, one evaluation matrix is built whose columns are the
    n! arrangements followed by each shape's polarized standard-tableau
    vectors, so basis tuples are enumerated once; the consistency identity
    (slice codimension equals the multiplicity-weighted degree sum) is then
    checked before anything is returned.
    """
    if n < 1:
        raise InputError("degree must be at least 1")
    if n > min(cap, HARD_N_CAP):
        raise CapExceeded(
            f"n={n} exceeds the cap {min(cap, HARD_N_CAP)} "
            f"(hard maximum {HARD_N_CAP})"
        )
    mode = algebra.mode
    slots = modes.slot_count(len(algebra.group), mode)
    slice_codims: list[tuple[Composition, int]] = []
    entries: list[tuple[Multipartition, int]] = []
    total = 0
    for comp in compositions(n, slots):
        shapes = multipartitions(comp)
        variables = composition_variables(comp, mode)
        if _has_empty_slot(algebra, variables):
            slice_codims.append((comp, 0))
            entries.extend((shape, 0) for shape in shapes)
            continue
        arrangement_polys = _arrangements(variables, mode)
        blocks: list[tuple[Multipartition, int, int]] = []
        polys = list(arrangement_polys)
        for shape in shapes:
            tabs = standard_multitableaux(shape)
            start = len(polys)
            polys.extend(
                multilinearize(highest_weight_vector(t, mode)) for t in tabs
            )
            blocks.append((shape, start, len(polys)))
        matrix = build_evaluation_matrix(algebra, polys, variables)
        slice_c = matrix.rank(slice(0, len(arrangement_polys)))
        slice_codims.append((comp, slice_c))
        weighted = 0
        for shape, start, stop in blocks:
            m = matrix.rank(slice(start, stop))
            entries.append((shape, m))
            weighted += m * shape.degree()
        if weighted != slice_c:
            raise ConsistencyViolation(
                f"composition {comp} on {algebra.name}: slice codimension "
                f"{slice_c} != multiplicity-weighted degree sum {weighted}"
            )
        weight = factorial(n)
        for part in comp:
            weight //= factorial(part)
        total += weight * slice_c
    return CocharacterTable(algebra.name, mode, n, slice_codims, entries, total)
