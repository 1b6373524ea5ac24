"""Finite-dimensional group-graded algebras over Q, optionally with a graded
involution.

An algebra is described by rational structure constants on a labelled basis,
a grade (group element index) per basis vector, and — in star mode — an
involution matrix.  Construction validates everything: homogeneity of the
product, associativity on basis triples, the involution laws, and (in star
mode) that the grading support commutes.

Coordinates are dense tuples of ``Fraction``; dimensions here are tiny.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import modes
from .errors import (
    AssociativityViolation,
    ElementNotOrderTwo,
    HomogeneityViolation,
    InvolutionViolation,
    NonAbelianSupportWithStar,
    PreconditionViolation,
    SchemaError,
    StarRequired,
)
from .groups import FiniteGroup
from .linalg import nullspace

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _unit(dim: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(dim))


@dataclass(frozen=True)
class HomBasis:
    """Basis of one homogeneous component, possibly restricted to the
    symmetric or skew part."""

    grade: int
    kind: str
    vectors: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


class GradedStarAlgebra:
    """Immutable graded algebra with optional involution.

    ``structure[(i, j)]`` (sparse, only nonzero products) gives the
    coordinates of the product of basis vectors i and j.  ``involution`` is a
    matrix whose column j holds the coordinates of the image of basis vector
    j, i.e. ``involve(u)[i] = sum_j involution[i][j] u[j]``.
    """

    def __init__(
        self,
        name: str,
        group: FiniteGroup,
        basis_labels: tuple[str, ...],
        grades: tuple[int, ...],
        structure: dict[tuple[int, int], Vector],
        involution: tuple[Vector, ...] | None = None,
    ):
        dim = len(basis_labels)
        if dim == 0:
            raise SchemaError("an algebra needs at least one basis vector")
        if len(set(basis_labels)) != dim:
            raise SchemaError("basis labels must be distinct")
        if len(grades) != dim:
            raise SchemaError("one grade per basis vector required")
        if any(not 0 <= g < len(group) for g in grades):
            raise SchemaError("grade index out of range")

        zero = tuple(Fraction(0) for _ in range(dim))
        table: list[list[Vector]] = [[zero] * dim for _ in range(dim)]
        for (i, j), vec in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise SchemaError(f"structure index ({i},{j}) out of range")
            vec = tuple(_frac(v) for v in vec)
            if len(vec) != dim:
                raise SchemaError(f"product of ({i},{j}) has wrong length")
            table[i][j] = vec

        self.name = name
        self.group = group
        self.dim = dim
        self.basis_labels = tuple(basis_labels)
        self.grades = tuple(grades)
        self._table = tuple(tuple(row) for row in table)

        for i in range(dim):
            for j in range(dim):
                expected = group.mul(grades[i], grades[j])
                for k, coeff in enumerate(self._table[i][j]):
                    if coeff != 0 and grades[k] != expected:
                        raise HomogeneityViolation(
                            f"{basis_labels[i]}·{basis_labels[j]} has a component "
                            f"of grade {group.label(grades[k])}, expected "
                            f"{group.label(expected)}"
                        )

        for i in range(dim):
            for j in range(dim):
                left = self._table[i][j]
                for k in range(dim):
                    if self.multiply(left, _unit(dim, k)) != self.multiply(
                        _unit(dim, i), self._table[j][k]
                    ):
                        raise AssociativityViolation(
                            f"({basis_labels[i]}·{basis_labels[j]})·{basis_labels[k]}"
                            f" != {basis_labels[i]}·({basis_labels[j]}·{basis_labels[k]})"
                        )

        if involution is not None:
            mat = tuple(tuple(_frac(v) for v in row) for row in involution)
            if len(mat) != dim or any(len(row) != dim for row in mat):
                raise SchemaError("involution matrix must be square of the algebra dimension")
            self.involution = mat
            support = sorted({g for g in grades})
            for a in support:
                for b in support:
                    if group.mul(a, b) != group.mul(b, a):
                        raise NonAbelianSupportWithStar(
                            f"support grades {group.label(a)} and {group.label(b)} "
                            "do not commute"
                        )
            star = [self.involve(_unit(dim, j)) for j in range(dim)]
            for j in range(dim):
                if self.involve(star[j]) != _unit(dim, j):
                    raise InvolutionViolation(
                        f"involution applied twice does not fix {basis_labels[j]}"
                    )
                for i in range(dim):
                    if star[j][i] != 0 and grades[i] != grades[j]:
                        raise InvolutionViolation(
                            f"involution moves {basis_labels[j]} across grades"
                        )
            for i in range(dim):
                for j in range(dim):
                    if self.involve(self._table[i][j]) != self.multiply(star[j], star[i]):
                        raise InvolutionViolation(
                            f"involution is not an anti-automorphism on "
                            f"({basis_labels[i]}, {basis_labels[j]})"
                        )
        else:
            self.involution = None

    # -- mode --------------------------------------------------------------

    @property
    def mode(self) -> str:
        return modes.STAR if self.involution is not None else modes.GRADED

    # -- arithmetic ----------------------------------------------------------

    def zero(self) -> Vector:
        return tuple(Fraction(0) for _ in range(self.dim))

    def basis_vector(self, i: int) -> Vector:
        return _unit(self.dim, i)

    def multiply(self, u: Vector, v: Vector) -> Vector:
        acc = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self._table[i]
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                coeff = ui * vj
                for k, s in enumerate(row[j]):
                    if s != 0:
                        acc[k] += coeff * s
        return tuple(acc)

    def involve(self, u: Vector) -> Vector:
        if self.involution is None:
            raise StarRequired(f"{self.name} carries no involution")
        return tuple(
            sum((row[j] * u[j] for j in range(self.dim) if u[j] != 0), Fraction(0))
            for row in self.involution
        )

    # -- grading -------------------------------------------------------------

    def component_indices(self, grade: int) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.grades) if g == grade)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({g for g in self.grades}))

    def homogeneous_basis(self, grade: int, kind: str = modes.PLAIN) -> HomBasis:
        """Basis of the grade component, or of its symmetric/skew part.

        Symmetric and skew parts are exact eigenspaces of the involution
        restricted to the component; their dimensions always add up to the
        component dimension.
        """
        idx = self.component_indices(grade)
        if kind == modes.PLAIN:
            return HomBasis(grade, kind, tuple(self.basis_vector(i) for i in idx))
        if kind not in (modes.SYM, modes.SKEW):
            raise ValueError(f"unknown kind {kind!r}")
        if self.involution is None:
            raise StarRequired(
                f"{self.name} has no involution; kind {kind!r} is unavailable"
            )
        if not idx:
            return HomBasis(grade, kind, ())
        sign = Fraction(1 if kind == modes.SYM else -1)
        # solve (M - sign·I) u = 0 inside the component's coordinates
        rows = [
            [
                self.involution[r][c] - (sign if r == c else 0)
                for c in idx
            ]
            for r in idx
        ]
        vectors = []
        for sol in nullspace(rows, len(idx)):
            full = [Fraction(0)] * self.dim
            for pos, val in zip(idx, sol):
                full[pos] = val
            vectors.append(tuple(full))
        return HomBasis(grade, kind, tuple(vectors))

    def __repr__(self) -> str:
        return f"GradedStarAlgebra({self.name!r}, dim={self.dim}, mode={self.mode})"


# -- builtins ----------------------------------------------------------------


def builtin_ut2(group: FiniteGroup, g: int) -> GradedStarAlgebra:
    """Upper triangular 2x2 matrices, graded by placing the strictly upper
    cell in grade g and the diagonal cells in the identity grade."""
    e11, e12, e22 = 0, 1, 2
    structure = {
        (e11, e11): _unit(3, e11),
        (e11, e12): _unit(3, e12),
        (e12, e22): _unit(3, e12),
        (e22, e22): _unit(3, e22),
    }
    return GradedStarAlgebra(
        name=f"ut2[{group.label(g)}]",
        group=group,
        basis_labels=("e11", "e12", "e22"),
        grades=(group.identity, g, group.identity),
        structure=structure,
    )


def builtin_k(group: FiniteGroup, g: int) -> GradedStarAlgebra:
    """Span of e12, e13, e22, e23 inside 3x3 matrices, with the two
    idempotent-adjacent cells in the identity grade and the other two in a
    grade of order two."""
    if group.order_of(g) != 2:
        raise ElementNotOrderTwo(
            f"grading element {group.label(g)!r} has order {group.order_of(g)}, "
            "need exactly 2"
        )
    e12, e13, e22, e23 = 0, 1, 2, 3
    structure = {
        (e12, e22): _unit(4, e12),
        (e12, e23): _unit(4, e13),
        (e22, e22): _unit(4, e22),
        (e22, e23): _unit(4, e23),
    }
    return GradedStarAlgebra(
        name=f"k[{group.label(g)}]",
        group=group,
        basis_labels=("e12", "e13", "e22", "e23"),
        grades=(g, group.identity, group.identity, g),
        structure=structure,
    )


def builtin_grassmann2(group: FiniteGroup, g: int, h: int) -> GradedStarAlgebra:
    """Grassmann algebra on two generators with its natural involution.

    Basis 1, e1, e2, e1e2 with e1^2 = e2^2 = 0 and e2·e1 = -e1·e2.  Grades:
    1 ↦ identity, e2 ↦ g, e1 ↦ h, e1e2 ↦ gh.  The involution fixes 1 and
    negates e1 and e2; being an anti-automorphism it then forces
    (e1e2)* = e2*·e1* = e2e1 = -e1e2, so e1e2 is skew as well.
    """
    if not group.is_abelian:
        raise PreconditionViolation("this builtin needs an abelian group")
    if g == h:
        raise PreconditionViolation("the two grading elements must differ")
    gh = group.mul(g, h)
    if gh == group.identity:
        raise PreconditionViolation("the grading elements must not be inverse to each other")
    one, e1, e2, e12 = 0, 1, 2, 3
    minus = tuple(-v for v in _unit(4, e12))
    structure = {
        (one, one): _unit(4, one),
        (one, e1): _unit(4, e1),
        (one, e2): _unit(4, e2),
        (one, e12): _unit(4, e12),
        (e1, one): _unit(4, e1),
        (e2, one): _unit(4, e2),
        (e12, one): _unit(4, e12),
        (e1, e2): _unit(4, e12),
        (e2, e1): minus,
    }
    diag = (Fraction(1), Fraction(-1), Fraction(-1), Fraction(-1))
    invol = tuple(
        tuple(diag[r] if r == c else Fraction(0) for c in range(4)) for r in range(4)
    )
    return GradedStarAlgebra(
        name=f"grassmann2[{group.label(g)},{group.label(h)}]",
        group=group,
        basis_labels=("1", "e1", "e2", "e1e2"),
        grades=(group.identity, h, g, gh),
        structure=structure,
        involution=invol,
    )


BUILTIN_NAMES = ("ut2", "k_g", "grassmann2")
