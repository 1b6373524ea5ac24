"""Classification reports built on the evaluator.

Three families of mechanically checkable facts about a graded (star)
algebra:

* **Sandwich identities.**  For a grade g and degree n, the n candidate
  monomials  x1^(i-1) · x2 · x1^(n-i)  (x1 in the identity grade, x2 in
  grade g) either admit a nonzero identity combination — a *witness* whose
  existence forces bounded cocharacter multiplicities — or their evaluation
  matrix has full rank n, certifying that no witness of that degree exists.
  A verdict is therefore only ever "bounded" or "undecided at the search
  cap": absence of witnesses up to a finite degree proves nothing.

* **Pairwise commutation lists** (star mode).  For every ordered pair of
  distinct grades and every choice of symmetric/skew kinds, scan the
  coefficients {0, 1, -1} for which  u1·v2 + a·v2·u1  is an identity, plus
  the same-grade mixed list  y1·z2 + b·z2·y1.  When every list is satisfied
  all multiplicities are at most one; the report re-checks that empirically
  on low-degree cocharacter tables and treats any counterexample as an
  internal error.

* **Multiplicity-one criteria on one-slot shapes.**  Five known sufficient
  conditions (hypothesis identities in a single grade-and-kind slot forcing
  multiplicity at most one for that slot's shapes) are re-verified: whenever
  the hypothesis identities hold on the supplied algebra, the conclusion is
  recomputed and must hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import modes
from .algebras import GradedStarAlgebra, builtin_ut2
from .errors import (
    CapExceeded,
    ConsistencyViolation,
    InputError,
    ModeMismatch,
    PreconditionViolation,
)
from .evaluator import (
    HARD_N_CAP,
    build_evaluation_matrix,
    cocharacter_table,
    is_identity,
    is_identity_grid,
    multiplicity,
)
from .polynomials import GradedPoly, Variable, highest_weight_vector, multilinearize
from .shapes import Multipartition, Multitableau, partitions


def _sandwich_candidates(mode: str, identity_grade: int, grade: int, n: int):
    x1 = Variable(modes.PLAIN, identity_grade, 1)
    x2 = Variable(modes.PLAIN, grade, 2)
    return [
        GradedPoly.monomial(mode, (x1,) * (i - 1) + (x2,) + (x1,) * (n - i))
        for i in range(1, n + 1)
    ]


@dataclass(frozen=True)
class SandwichWitness:
    grade: int
    n: int
    coefficients: tuple[Fraction, ...]

    def poly(self, algebra: GradedStarAlgebra) -> GradedPoly:
        candidates = _sandwich_candidates(
            algebra.mode, algebra.group.identity, self.grade, self.n
        )
        out = GradedPoly.zero(algebra.mode)
        for coeff, cand in zip(self.coefficients, candidates):
            out = out + cand.scale(coeff)
        return out


def find_sandwich_identity(
    algebra: GradedStarAlgebra, grade: int, n: int
) -> SandwichWitness | None:
    """Nonzero identity combination of the degree-n sandwich candidates, or
    None certified by a full-rank evaluation matrix.

    The candidates share one multidegree, so a combination is an identity
    exactly when its polarization vanishes on basis tuples; the witness is
    re-verified through the polarization-free grid oracle as well.
    """
    if algebra.mode != modes.GRADED:
        raise ModeMismatch("sandwich classification works on graded-mode algebras")
    if n < 2:
        raise InputError("sandwich identities need degree at least 2")
    if n > HARD_N_CAP:
        raise CapExceeded(f"degree {n} above the hard cap {HARD_N_CAP}")
    candidates = _sandwich_candidates(algebra.mode, algebra.group.identity, grade, n)
    linearized = [multilinearize(c) for c in candidates]
    matrix = build_evaluation_matrix(algebra, linearized)
    basis = matrix.nullspace()
    if not basis:
        assert matrix.rank() == n  # full rank certifies absence
        return None
    coeffs = tuple(basis[0])
    witness = SandwichWitness(grade, n, coeffs)
    got = witness.poly(algebra)
    if not (is_identity(got, algebra) and is_identity_grid(got, algebra)):
        raise ConsistencyViolation(
            "nullspace vector failed re-verification as an identity"
        )
    return witness


@dataclass(frozen=True)
class GradeFinding:
    grade: int
    witness: SandwichWitness | None
    excludes_ut2: bool | None  # witness fails to vanish on the matching ut2


@dataclass(frozen=True)
class BoundedReport:
    algebra_name: str
    n_max: int
    findings: tuple[GradeFinding, ...]
    verdict: str  # "BOUNDED" | "UNDECIDED-AT-CAP"
    empirical_max_multiplicity: int


def bounded_multiplicity_report(
    algebra: GradedStarAlgebra, n_max: int = 5
) -> BoundedReport:
    """Search every grade for a sandwich witness up to degree n_max.

    All grades witnessed means every cocharacter multiplicity of the algebra
    is bounded by a constant; any unwitnessed grade leaves the question
    undecided at this cap.  Each witness is additionally evaluated on the
    2x2 upper-triangular algebra graded at the same element, whose exclusion
    from the generated variety is what boundedness hinges on.  The maximal
    multiplicity actually observed up to n_max is attached as the empirical
    lower bound for the constant.
    """
    if algebra.mode != modes.GRADED:
        raise ModeMismatch("boundedness classification works on graded-mode algebras")
    if n_max < 2:
        raise InputError("n_max must be at least 2")
    n_max = min(n_max, HARD_N_CAP)
    findings = []
    for grade in algebra.group:
        witness = None
        for n in range(2, n_max + 1):
            witness = find_sandwich_identity(algebra, grade, n)
            if witness is not None:
                break
        excludes = None
        if witness is not None:
            ut2 = builtin_ut2(algebra.group, grade)
            excludes = not is_identity(witness.poly(ut2), ut2)
        findings.append(GradeFinding(grade, witness, excludes))
    verdict = (
        "BOUNDED"
        if all(f.witness is not None for f in findings)
        else "UNDECIDED-AT-CAP"
    )
    observed = 0
    for n in range(1, n_max + 1):
        observed = max(
            observed, cocharacter_table(algebra, n, cap=n_max).max_multiplicity()
        )
    return BoundedReport(algebra.name, n_max, tuple(findings), verdict, observed)


# -- star mode ------------------------------------------------------------------


@dataclass(frozen=True)
class PairFinding:
    grade_pair: tuple[int, int]  # ordered (g, h), g != h
    kinds: tuple[str, str]
    valid_coefficients: tuple[int, ...]  # subset of (0, 1, -1)


@dataclass(frozen=True)
class SameGradeFinding:
    grade: int
    valid_coefficients: tuple[int, ...]


@dataclass(frozen=True)
class MultOneReport:
    algebra_name: str
    pair_findings: tuple[PairFinding, ...]
    same_grade_findings: tuple[SameGradeFinding, ...]
    verdict: str  # "SATISFIED" | "NOT-SATISFIED"
    empirical_n: int
    empirical_max_multiplicity: int


def _coefficient_scan(
    algebra: GradedStarAlgebra, a: Variable, b: Variable
) -> tuple[int, ...]:
    first = GradedPoly.monomial(algebra.mode, (a, b))
    second = GradedPoly.monomial(algebra.mode, (b, a))
    return tuple(
        alpha
        for alpha in (0, 1, -1)
        if is_identity(first + second.scale(alpha), algebra)
    )


def star_multone_report(
    algebra: GradedStarAlgebra, empirical_n: int = 3
) -> MultOneReport:
    """Scan all pairwise commutation lists; SATISFIED forces every
    multiplicity to one, which is re-checked empirically up to
    ``empirical_n`` (a computed multiplicity of 2 or more under SATISFIED is
    an internal error, not a report entry)."""
    if algebra.mode != modes.STAR:
        raise ModeMismatch("commutation lists require a star-mode algebra")
    empirical_n = min(empirical_n, HARD_N_CAP)
    pair_findings = []
    group = algebra.group
    for g in group:
        for h in group:
            if g == h:
                continue
            for k1 in (modes.SYM, modes.SKEW):
                for k2 in (modes.SYM, modes.SKEW):
                    coeffs = _coefficient_scan(
                        algebra, Variable(k1, g, 1), Variable(k2, h, 2)
                    )
                    pair_findings.append(PairFinding((g, h), (k1, k2), coeffs))
    same_grade = []
    for g in group:
        coeffs = _coefficient_scan(
            algebra, Variable(modes.SYM, g, 1), Variable(modes.SKEW, g, 2)
        )
        same_grade.append(SameGradeFinding(g, coeffs))
    satisfied = all(f.valid_coefficients for f in pair_findings) and all(
        f.valid_coefficients for f in same_grade
    )
    verdict = "SATISFIED" if satisfied else "NOT-SATISFIED"
    observed = 0
    for n in range(1, empirical_n + 1):
        observed = max(
            observed,
            cocharacter_table(algebra, n, cap=empirical_n).max_multiplicity(),
        )
    if satisfied and observed > 1:
        raise ConsistencyViolation(
            f"commutation lists SATISFIED on {algebra.name} but a multiplicity "
            f"of {observed} was computed"
        )
    return MultOneReport(
        algebra.name,
        tuple(pair_findings),
        tuple(same_grade),
        verdict,
        empirical_n,
        observed,
    )


@dataclass(frozen=True)
class FactorizationResult:
    holds: bool
    sign: int | None  # +1 or -1 when holds


def hwv_factorization_check(
    algebra: GradedStarAlgebra, tab: Multitableau
) -> FactorizationResult:
    """Does the tableau's vector split, up to sign and modulo the algebra's
    identities, into the product of its single-component tableau vectors?

    Precondition: the commutation lists are satisfied (that is what lets
    variables of different slots be pulled past each other).
    """
    if algebra.mode != modes.STAR:
        raise ModeMismatch("factorization check requires a star-mode algebra")
    if star_multone_report(algebra, empirical_n=1).verdict != "SATISFIED":
        raise PreconditionViolation(
            "factorization check requires the commutation lists to be satisfied"
        )
    n = tab.shape.n
    if n > HARD_N_CAP - 1:
        raise CapExceeded(f"degree {n} above the factorization cap {HARD_N_CAP - 1}")
    whole = highest_weight_vector(tab, algebra.mode)
    product = GradedPoly.one(algebra.mode)
    blank = [()] * len(tab.shape.components)
    for slot, (lam, rows) in enumerate(zip(tab.shape.components, tab.fillings)):
        if not lam:
            continue
        entries = sorted(v for row in rows for v in row)
        relabel = {v: i for i, v in enumerate(entries, start=1)}
        local_rows = tuple(tuple(relabel[v] for v in row) for row in rows)
        components = list(blank)
        components[slot] = lam
        single = Multitableau(
            Multipartition(tuple(components)),
            tuple(local_rows if s == slot else () for s in range(len(blank))),
        )
        product = product * highest_weight_vector(single, algebra.mode)
    for sign in (1, -1):
        if is_identity(whole - product.scale(sign), algebra):
            return FactorizationResult(True, sign)
    return FactorizationResult(False, None)


# -- multiplicity-one criteria ----------------------------------------------------


@dataclass(frozen=True)
class LemmaFinding:
    criterion: str
    grade: int
    kind: str
    hypothesis: tuple[str, ...]  # display of the hypothesis identities
    hypothesis_holds: bool
    degrees_checked: tuple[int, ...]
    conclusion_holds: bool | None  # None when nothing was in range
    max_multiplicity: int | None


@dataclass(frozen=True)
class LemmaReport:
    algebra_name: str
    n_max: int
    findings: tuple[LemmaFinding, ...]

    def violations(self) -> list[LemmaFinding]:
        return [
            f
            for f in self.findings
            if f.hypothesis_holds and f.conclusion_holds is False
        ]


def _one_slot_max_multiplicity(
    algebra: GradedStarAlgebra, grade: int, kind: str, degrees
) -> int:
    """Max multiplicity over all shapes living in a single (grade, kind)
    slot at the given degrees."""
    slot = modes.slot_of(grade, kind, algebra.mode)
    slots = modes.slot_count(len(algebra.group), algebra.mode)
    best = 0
    for n in degrees:
        for lam in partitions(n):
            components = [()] * slots
            components[slot] = lam
            best = max(
                best, multiplicity(algebra, Multipartition(tuple(components)))
            )
    return best


def verify_multone_lemmas(
    algebra: GradedStarAlgebra, n_max: int = 4
) -> LemmaReport:
    """Re-verify the five single-slot multiplicity-one criteria.

    For every non-identity grade g and kind e in {y, z}, with u_i denoting
    kind-e variables of grade g and w denoting a variable of grade g*g:

    * vanishing-bridge:  y_w·u ≡ 0  or  z_w·u ≡ 0  forces m ≤ 1 in the slot
      for all degrees ≥ 3;
    * cyclic-three:  u1·u3·u2 + u2·u3·u1 ≡ 0  forces it at degree 3;
    * interlock-four:  the cyclic-three identity together with
      u1·u2·u4·u3 + u2·u4·u3·u1 ≡ 0  forces it at degree 4;
    * interlock-high:  the same two identities force it at degrees ≥ 5;
    * rotation:  u1·u3·u2 - u2·u1·u3 ≡ 0  forces it at degrees ≥ 3.
    """
    if algebra.mode != modes.STAR:
        raise ModeMismatch("these criteria concern star-mode algebras")
    n_max = min(n_max, HARD_N_CAP)
    group = algebra.group
    findings = []

    def check(criterion, grade, kind, hyp_polys, degrees):
        holds = all(is_identity(p, algebra) for p in hyp_polys)
        degrees = tuple(d for d in degrees if d <= n_max)
        conclusion = None
        best = None
        if holds and degrees:
            best = _one_slot_max_multiplicity(algebra, grade, kind, degrees)
            conclusion = best <= 1
        findings.append(
            LemmaFinding(
                criterion,
                grade,
                kind,
                tuple(p.display(group) for p in hyp_polys),
                holds,
                degrees,
                conclusion,
                best,
            )
        )

    mode = algebra.mode
    for g in group:
        if g == group.identity:
            continue
        g2 = group.mul(g, g)
        for kind in (modes.SYM, modes.SKEW):
            u1, u2, u3, u4 = (Variable(kind, g, i) for i in range(1, 5))
            y_bridge = GradedPoly.monomial(mode, (Variable(modes.SYM, g2, 1), u2))
            z_bridge = GradedPoly.monomial(mode, (Variable(modes.SKEW, g2, 1), u2))
            bridge_holds = is_identity(y_bridge, algebra) or is_identity(
                z_bridge, algebra
            )
            degrees = tuple(d for d in range(3, n_max + 1))
            conclusion = None
            best = None
            if bridge_holds and degrees:
                best = _one_slot_max_multiplicity(algebra, g, kind, degrees)
                conclusion = best <= 1
            findings.append(
                LemmaFinding(
                    "vanishing-bridge",
                    g,
                    kind,
                    (y_bridge.display(group), z_bridge.display(group)),
                    bridge_holds,
                    degrees,
                    conclusion,
                    best,
                )
            )

            cyc = GradedPoly.monomial(mode, (u1, u3, u2)) + GradedPoly.monomial(
                mode, (u2, u3, u1)
            )
            check("cyclic-three", g, kind, [cyc], [3])
            interlock = GradedPoly.monomial(
                mode, (u1, u2, u4, u3)
            ) + GradedPoly.monomial(mode, (u2, u4, u3, u1))
            check("interlock-four", g, kind, [cyc, interlock], [4])
            check("interlock-high", g, kind, [cyc, interlock], range(5, n_max + 1))
            rot = GradedPoly.monomial(mode, (u1, u3, u2)) - GradedPoly.monomial(
                mode, (u2, u1, u3)
            )
            check("rotation", g, kind, [rot], range(3, n_max + 1))

    return LemmaReport(algebra.name, n_max, tuple(findings))
