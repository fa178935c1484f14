"""Macaulay inverse systems under the apolarity contraction.

The polynomial ring acts on a second copy of itself (written in upper-case
variables) by differentiation-style contraction:

    x^a o X^b  =  (b! / (b-a)!) X^(b-a)   when b >= a componentwise,
                  0                        otherwise,

extended bilinearly.  In characteristic zero the inverse system of a
monomial ideal is spanned by the dual staircase monomials, and the corner
combinatorics of the staircase mirrors over to the dual side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .linalg import Subspace, kernel
from .quotient import (
    HilbertSeries,
    QuotientModule,
    act,
    hilbert,
    monomial_span,
    staircase,
)
from .ring import (
    AlgebraError,
    ExponentVector,
    InternalCheckError,
    MonomialIdeal,
    Polynomial,
    VariableSet,
    divides,
    grlex_key,
    minimalize,
    monomial_str,
    poly_monomial,
    total_degree,
    variable_polys,
)
from .reduced import monomials_up_to_degree, outside_corners


def apolarity(poly: Polynomial, dual: Polynomial) -> Polynomial:
    """Contraction of a dual element by a polynomial, extended bilinearly."""
    items = []
    for a, ca in poly.terms.items():
        for b, cb in dual.terms.items():
            if len(a) != len(b):
                raise AlgebraError("mismatched arities under apolarity")
            if not divides(a, b):
                continue
            coeff = ca * cb
            for ai, bi in zip(a, b):
                for k in range(ai):
                    coeff *= bi - k
            items.append((tuple(bi - ai for ai, bi in zip(a, b)), coeff))
    return Polynomial(items)


@dataclass(frozen=True)
class InverseSystem:
    """The finitely generated inverse system I-perp of a monomial ideal."""

    variables: VariableSet
    source_ideal: MonomialIdeal
    dual_basis: tuple[ExponentVector, ...]
    grading: HilbertSeries

    @property
    def dim(self) -> int:
        return len(self.dual_basis)

    def label(self, exps: ExponentVector) -> str:
        return monomial_str(self.variables.dual_names(), exps)

    def labels(self) -> list[str]:
        return [self.label(e) for e in self.dual_basis]

    def index(self, exps: ExponentVector):
        try:
            return self.dual_basis.index(tuple(exps))
        except ValueError:
            return None

    def unit_vector(self, exps: ExponentVector) -> tuple:
        pos = self.index(exps)
        if pos is None:
            raise AlgebraError(f"{exps} is not in the dual basis")
        return tuple(
            Fraction(1) if i == pos else Fraction(0) for i in range(self.dim)
        )


def inverse_system(variables: VariableSet, ideal: MonomialIdeal) -> InverseSystem:
    """I-perp, spanned by the dual monomials of the staircase of I.

    Two exact checks run on construction: every generator of I contracts
    every dual basis monomial to zero, and every non-staircase dual monomial
    of bounded degree survives contraction by some generator.
    """
    basis = tuple(staircase(variables, ideal))
    gens = [poly_monomial(g) for g in ideal.min_gens]
    for e in basis:
        dual = poly_monomial(e)
        for g in gens:
            if not apolarity(g, dual).is_zero:
                raise InternalCheckError(
                    f"dual staircase monomial {e} not annihilated by a generator"
                )
    maxdeg = max((total_degree(e) for e in basis), default=0)
    in_basis = set(basis)
    for e in monomials_up_to_degree(variables.n, maxdeg):
        if e in in_basis:
            continue
        dual = poly_monomial(e)
        if all(apolarity(g, dual).is_zero for g in gens):
            raise InternalCheckError(
                f"non-staircase dual monomial {e} annihilated by every generator"
            )
    grading = HilbertSeries.from_degrees(total_degree(e) for e in basis)
    return InverseSystem(variables, ideal, basis, grading)


def inner_span(system: InverseSystem) -> Subspace:
    """Span of all single-variable contractions of the dual staircase.

    This is the image of the maximal ideal acting on the inverse system;
    it is checked to coincide with the span of the non-maximal dual
    monomials (everything except the dual outside corners).
    """
    n = system.variables.n
    dim = system.dim
    vecs = []
    for e in system.dual_basis:
        for i in range(n):
            if e[i] == 0:
                continue
            target = tuple(v - int(j == i) for j, v in enumerate(e))
            pos = system.index(target)
            if pos is None:
                raise InternalCheckError("dual staircase is not downward closed")
            vec = [Fraction(0)] * dim
            vec[pos] = Fraction(e[i])
            vecs.append(vec)
    span = Subspace(dim, vecs)
    in_basis = set(system.dual_basis)
    non_maximal = [
        e
        for e in system.dual_basis
        if any(
            tuple(v + int(j == i) for j, v in enumerate(e)) in in_basis
            for i in range(n)
        )
    ]
    expected = Subspace(dim, [system.unit_vector(e) for e in non_maximal])
    if span != expected:
        raise InternalCheckError(
            "contraction image differs from the span of non-maximal duals"
        )
    return span


def dual_corners(system: InverseSystem) -> tuple[ExponentVector, ...]:
    """Dual basis monomials outside the contraction image; the duals of the
    outside corners of the staircase."""
    span = inner_span(system)
    return tuple(
        e
        for e in system.dual_basis
        if not span.contains(system.unit_vector(e))
    )


@dataclass(frozen=True)
class SocleDual:
    """Generators of the largest reduced quotient of the inverse system."""

    system: InverseSystem
    generators: tuple[ExponentVector, ...]  # corner duals, coset representatives
    modulus_dim: int  # dimension of the contraction image being quotiented out

    def labels(self) -> list[str]:
        return [self.system.label(e) for e in self.generators]


def socle_dual(module: QuotientModule) -> SocleDual:
    """Corner-dual coset generators of I-perp mod its contraction image.

    The generator set is checked to match the outside corners of the
    staircase one for one.
    """
    system = inverse_system(module.variables, module.ideal)
    corners = outside_corners(module).corners
    duals = dual_corners(system)
    if sorted(duals, key=grlex_key) != sorted(corners, key=grlex_key):
        raise InternalCheckError(
            "dual corner set does not mirror the staircase corners"
        )
    span = inner_span(system)
    return SocleDual(system, duals, span.dim)


def hilbert_duality_check(
    module: QuotientModule,
) -> tuple[HilbertSeries, HilbertSeries, HilbertSeries, HilbertSeries]:
    """(HS of M, of I-perp, of the reduced part, of its dual); the first two
    and the last two must agree."""
    system = inverse_system(module.variables, module.ideal)
    hs_module = hilbert(module)
    hs_dual = system.grading
    corners = outside_corners(module).corners
    hs_reduced = HilbertSeries.from_degrees(total_degree(e) for e in corners)
    hs_reduced_dual = HilbertSeries.from_degrees(
        total_degree(e) for e in dual_corners(system)
    )
    if hs_module != hs_dual:
        raise InternalCheckError("Hilbert series of M and I-perp differ")
    if hs_reduced != hs_reduced_dual:
        raise InternalCheckError(
            "Hilbert series of the reduced part and its dual differ"
        )
    return hs_module, hs_dual, hs_reduced, hs_reduced_dual


# ---------------------------------------------------------------------------
# annihilators of dual submodules

@dataclass(frozen=True)
class PerpResult:
    """Annihilator of a span of dual elements.

    Monomial-spanned inputs give the exact monomial ideal.  Otherwise the
    result is a degree-truncated kernel description: for each degree up to
    the bound, a basis of the homogeneous polynomials contracting the whole
    span to zero.
    """

    exact: bool
    ideal: MonomialIdeal | None
    degree_bound: int | None
    by_degree: tuple[tuple[Polynomial, ...], ...] | None


def _monomial_support(duals: Sequence[Polynomial]):
    exps = []
    for f in duals:
        if len(f.terms) != 1:
            return None
        (e, c), = f.terms.items()
        if c != 1:
            return None
        exps.append(e)
    return exps


def _complement_min_gens(closure: set, n: int) -> MonomialIdeal:
    box = [max((e[i] for e in closure), default=0) + 1 for i in range(n)]
    gens = []
    for cand in product(*(range(b + 1) for b in box)):
        if cand in closure:
            continue
        below_ok = all(
            cand[i] == 0
            or tuple(v - int(j == i) for j, v in enumerate(cand)) in closure
            for i in range(n)
        )
        if below_ok:
            gens.append(cand)
    return minimalize(gens)


def perp_of_submodule(
    variables: VariableSet,
    duals: Sequence[Polynomial],
    degree_bound: int = 6,
) -> PerpResult:
    """Polynomials annihilating a finite set of dual elements under contraction.

    Contraction commutes with the ring action, so annihilating the listed
    elements annihilates the submodule they generate.
    """
    if not duals:
        raise AlgebraError("empty dual generator set")
    n = variables.n
    support = _monomial_support(duals)
    if support is not None:
        closure = set()
        for e in support:
            for below in product(*(range(v + 1) for v in e)):
                closure.add(below)
        return PerpResult(
            exact=True,
            ideal=_complement_min_gens(closure, n),
            degree_bound=None,
            by_degree=None,
        )
    layers = []
    for deg in range(degree_bound + 1):
        monos = [e for e in monomials_up_to_degree(n, deg) if sum(e) == deg]
        # kernel of c -> (coefficients of sum_m c_m (x^m o w)) over all w
        rows = []
        targets: dict[tuple, int] = {}
        images = []
        for w in duals:
            images.append([apolarity(poly_monomial(m), w) for m in monos])
            for img in images[-1]:
                for e in img.terms:
                    targets.setdefault(e, len(targets))
        for img_row in images:
            for e in targets:
                rows.append(
                    [img.terms.get(e, Fraction(0)) for img in img_row]
                )
        ker = kernel(rows, len(monos)) if rows else Subspace.full(len(monos))
        layer = tuple(
            Polynomial({m: c for m, c in zip(monos, row) if c})
            for row in ker.rows
        )
        layers.append(layer)
    return PerpResult(
        exact=False,
        ideal=None,
        degree_bound=degree_bound,
        by_degree=tuple(layers),
    )


# ---------------------------------------------------------------------------
# the truncated full dual space

@dataclass(frozen=True)
class TruncatedDual:
    """All dual monomials of degree <= degree_bound in n variables."""

    n: int
    degree_bound: int
    basis: tuple[ExponentVector, ...]


def truncated_dual(n: int, degree_bound: int) -> TruncatedDual:
    if n < 1 or degree_bound < 1:
        raise AlgebraError("need n >= 1 and degree_bound >= 1")
    return TruncatedDual(
        n, degree_bound, tuple(monomials_up_to_degree(n, degree_bound))
    )


@dataclass(frozen=True)
class DualTruncationReport:
    """Witness bookkeeping for the reducedness structure of a truncated dual.

    witnesses lists, per dual monomial other than 1, a pair
    (power that kills it, single variable that does not).
    """

    n: int
    split_index: int
    degree_bound: int
    subring_size: int
    annihilation_checks: int
    membership_checks: int
    witnesses: tuple[tuple[ExponentVector, ExponentVector, ExponentVector], ...]


def truncated_dual_report(n: int, split_index: int, degree_bound: int) -> DualTruncationReport:
    """Check the reducedness dichotomy on the degree-truncated dual space.

    Splitting the variables at `split_index` (written i below): the ideal
    generated by the trailing variables x_{i+1}..x_n contracts the leading
    subring (dual monomials in the first i variables) to zero; a dual
    monomial outside that subring carries a trailing variable x_j to the
    power s >= 1, and then x_j^(s+1) kills it while x_j does not; and every
    dual monomial other than 1 admits such a witness pair for some variable
    it contains, so only the constants are reduced.
    """
    if not 0 <= split_index <= n:
        raise AlgebraError("split index out of range")
    td = truncated_dual(n, degree_bound)
    ann_checks = 0
    mem_checks = 0
    witnesses = []
    for e in td.basis:
        dual = poly_monomial(e)
        in_subring = all(e[j] == 0 for j in range(split_index, n))
        if in_subring:
            for j in range(split_index, n):
                step = tuple(int(t == j) for t in range(n))
                if not apolarity(poly_monomial(step), dual).is_zero:
                    raise InternalCheckError(
                        f"trailing variable fails to annihilate {e}"
                    )
                ann_checks += 1
        else:
            j = next(
                j for j in range(split_index, n) if e[j] > 0
            )
            s = e[j]
            kill = tuple((s + 1) * int(t == j) for t in range(n))
            single = tuple(int(t == j) for t in range(n))
            if not apolarity(poly_monomial(kill), dual).is_zero:
                raise InternalCheckError(f"power witness fails to kill {e}")
            if apolarity(poly_monomial(single), dual).is_zero:
                raise InternalCheckError(f"variable witness wrongly kills {e}")
            mem_checks += 1
        if any(e):
            j = next(j for j in range(n) if e[j] > 0)
            s = e[j]
            kill = tuple((s + 1) * int(t == j) for t in range(n))
            single = tuple(int(t == j) for t in range(n))
            if not apolarity(poly_monomial(kill), dual).is_zero:
                raise InternalCheckError(f"reduced witness fails to kill {e}")
            if apolarity(poly_monomial(single), dual).is_zero:
                raise InternalCheckError(f"reduced witness wrongly kills {e}")
            witnesses.append((e, kill, single))
        else:
            # the constant: no monomial a of positive degree has a o 1 != 0,
            # so no witness pair can exist and 1 stays reduced
            for a in monomials_up_to_degree(n, degree_bound + 1):
                if any(a) and not apolarity(poly_monomial(a), dual).is_zero:
                    raise InternalCheckError("a positive-degree monomial moved 1")
    return DualTruncationReport(
        n=n,
        split_index=split_index,
        degree_bound=degree_bound,
        subring_size=sum(
            1
            for e in td.basis
            if all(e[j] == 0 for j in range(split_index, n))
        ),
        annihilation_checks=ann_checks,
        membership_checks=mem_checks,
        witnesses=tuple(witnesses),
    )


# ---------------------------------------------------------------------------
# top-degree check for power-of-the-maximal-ideal quotients

@dataclass(frozen=True)
class TopDegreeReport:
    n: int
    top_degree: int
    ideal_power_dim: int
    top_piece_dim: int
    corner_span_dim: int
    dual_final_dim: int
    element_power_dim: int
    readings_differ: bool


def top_degree_check(variables: VariableSet, ideal: MonomialIdeal) -> TopDegreeReport:
    """For the ideal of all monomials of degree n+1: multiplying M by the
    maximal ideal n times leaves exactly the top graded piece.

    The iterated-ideal reading m^n M is the asserted equality; the
    single-element reading ((x_1+...+x_n)^n M) is computed alongside and
    flagged when it differs.
    """
    n = variables.n
    expected = {
        e for e in monomials_up_to_degree(n, n + 1) if sum(e) == n + 1
    }
    if set(ideal.min_gens) != expected:
        raise AlgebraError(
            f"ideal is not generated by all monomials of degree {n + 1}"
        )
    module = QuotientModule(variables, ideal)
    xs = variable_polys(n)
    current = Subspace.full(module.dim)
    for _ in range(n):
        vecs = [act(module, xv, row) for xv in xs for row in current.rows]
        current = Subspace(module.dim, vecs)
    top_piece = monomial_span(
        module, (e for e in module.basis if total_degree(e) == n)
    )
    corner_span = monomial_span(module, outside_corners(module).corners)
    if current != top_piece or current != corner_span:
        raise InternalCheckError(
            "iterated maximal-ideal image is not the top graded piece"
        )
    # dual side: n contractions shrink the inverse system to the constants
    system = inverse_system(variables, ideal)
    dual_space = Subspace.full(system.dim)
    for _ in range(n):
        vecs = []
        for row in dual_space.rows:
            f = Polynomial(
                {e: c for e, c in zip(system.dual_basis, row) if c}
            )
            for i in range(n):
                step = tuple(int(t == i) for t in range(n))
                img = apolarity(poly_monomial(step), f)
                vec = [Fraction(0)] * system.dim
                for e, c in img.terms.items():
                    vec[system.index(e)] = c
                vecs.append(vec)
        dual_space = Subspace(system.dim, vecs)
    one = system.unit_vector((0,) * n)
    if dual_space != Subspace(system.dim, [one]):
        raise InternalCheckError(
            "iterated contraction does not end at the constants"
        )
    # single-element reading
    diag = Polynomial({tuple(int(t == i) for t in range(n)): Fraction(1) for i in range(n)})
    elem = Subspace.full(module.dim)
    for _ in range(n):
        elem = Subspace(module.dim, [act(module, diag, row) for row in elem.rows])
    return TopDegreeReport(
        n=n,
        top_degree=n,
        ideal_power_dim=current.dim,
        top_piece_dim=top_piece.dim,
        corner_span_dim=corner_span.dim,
        dual_final_dim=dual_space.dim,
        element_power_dim=elem.dim,
        readings_differ=elem != current,
    )
