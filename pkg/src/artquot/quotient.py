"""Finite quotients R/I by Artinian monomial ideals.

The standard-monomial (staircase) basis is enumerated by a bounded box
walk; multiplication is a per-variable shift table mapping a basis slot to
another slot or to zero.  Module elements are coordinate tuples of
Fractions over that basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .linalg import Subspace, kernel
from .ring import (
    AlgebraError,
    ExponentVector,
    MonomialIdeal,
    Polynomial,
    VariableSet,
    ev_add,
    grlex_key,
    monomial_str,
    pure_power_bounds,
    total_degree,
    variable_polys,
)


@dataclass(frozen=True)
class HilbertSeries:
    """Degree census of a graded finite module; trailing coefficient nonzero."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise AlgebraError("negative Hilbert coefficient")
        if self.coeffs and self.coeffs[-1] == 0:
            raise AlgebraError("trailing Hilbert coefficient must be nonzero")

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "HilbertSeries":
        counts: dict[int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        if not counts:
            return cls(())
        top = max(counts)
        return cls(tuple(counts.get(d, 0) for d in range(top + 1)))

    def total(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                t = "t" if d == 1 else f"t^{d}"
                parts.append(t if c == 1 else f"{c}{t}")
        return " + ".join(parts)


def staircase(variables: VariableSet, ideal: MonomialIdeal) -> list[ExponentVector]:
    """Standard monomials of R/I in canonical order."""
    bounds = pure_power_bounds(variables, ideal)
    cells = [
        e
        for e in product(*(range(b) for b in bounds))
        if not ideal.contains(e)
    ]
    return sorted(cells, key=grlex_key)


class QuotientModule:
    """R/I on its staircase basis, with shift tables for each variable."""

    __slots__ = ("variables", "ideal", "basis", "index", "var_action")

    def __init__(self, variables: VariableSet, ideal: MonomialIdeal):
        if ideal.n != variables.n:
            raise AlgebraError("ideal and variable set have different arities")
        if ideal.contains((0,) * variables.n):
            raise AlgebraError("unit ideal: the quotient is the zero ring")
        self.variables = variables
        self.ideal = ideal
        self.basis = tuple(staircase(variables, ideal))
        self.index = {e: i for i, e in enumerate(self.basis)}
        action = []
        for i in range(variables.n):
            step = [0] * variables.n
            step[i] = 1
            step = tuple(step)
            action.append(
                tuple(self.index.get(ev_add(e, step)) for e in self.basis)
            )
        self.var_action = tuple(action)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.variables.n

    def label(self, exps: ExponentVector) -> str:
        return monomial_str(self.variables.names, exps)

    def labels(self) -> list[str]:
        return [self.label(e) for e in self.basis]

    def zero_element(self) -> tuple:
        return (Fraction(0),) * self.dim

    def basis_element(self, exps: ExponentVector) -> tuple:
        pos = self.index.get(tuple(exps))
        if pos is None:
            raise AlgebraError(f"{exps} is not a standard monomial")
        return tuple(
            Fraction(1) if i == pos else Fraction(0) for i in range(self.dim)
        )

    def element(self, coeffs: dict) -> tuple:
        """Element from a map exponent-vector -> coefficient."""
        out = [Fraction(0)] * self.dim
        for exps, c in coeffs.items():
            pos = self.index.get(tuple(exps))
            if pos is None:
                raise AlgebraError(f"{exps} is not a standard monomial")
            out[pos] += Fraction(c)
        return tuple(out)

    def element_str(self, vec: Sequence) -> str:
        terms = {
            self.basis[i]: c for i, c in enumerate(vec) if c
        }
        return Polynomial(terms).to_str(self.variables.names) if terms else "0"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "basis": self.labels(),
            "hilbert": list(hilbert(self).coeffs),
        }

    def __repr__(self):
        return f"QuotientModule(dim={self.dim}, vars={self.variables.names})"


def build_quotient(variables: VariableSet, ideal: MonomialIdeal) -> QuotientModule:
    """Staircase model of R/I; raises NotArtinianError when R/I is infinite."""
    return QuotientModule(variables, ideal)


def act(module: QuotientModule, poly: Polynomial, vec: Sequence) -> tuple:
    """Multiply the element `vec` by the polynomial `poly` inside R/I."""
    if len(vec) != module.dim:
        raise AlgebraError("element has wrong length")
    out = [Fraction(0)] * module.dim
    for exps, coeff in poly.terms.items():
        if len(exps) != module.n:
            raise AlgebraError("polynomial arity does not match the ring")
        for b, cb in enumerate(vec):
            if cb:
                target = module.index.get(ev_add(module.basis[b], exps))
                if target is not None:
                    out[target] += coeff * cb
    return tuple(out)


def poly_action_matrix(module: QuotientModule, poly: Polynomial) -> tuple:
    """Row-major matrix of multiplication by `poly` on the staircase basis."""
    d = module.dim
    rows = [[Fraction(0)] * d for _ in range(d)]
    for exps, coeff in poly.terms.items():
        if len(exps) != module.n:
            raise AlgebraError("polynomial arity does not match the ring")
        for b in range(d):
            target = module.index.get(ev_add(module.basis[b], exps))
            if target is not None:
                rows[target][b] += coeff
    return tuple(tuple(r) for r in rows)


def ideal_times_module(
    module: QuotientModule, gens: Iterable[Polynomial]
) -> Subspace:
    """The submodule J*M as a subspace: span of g*b over generators and basis."""
    vecs = []
    for g in gens:
        for b in range(module.dim):
            unit = [Fraction(0)] * module.dim
            unit[b] = Fraction(1)
            vecs.append(act(module, g, unit))
    return Subspace(module.dim, vecs)


def annihilator(module: QuotientModule, gens: Iterable[Polynomial]) -> Subspace:
    """(0 :_M J) = kernel of the stacked action matrices of the generators."""
    stacked = []
    for g in gens:
        stacked.extend(poly_action_matrix(module, g))
    if not stacked:
        return Subspace.full(module.dim)
    return kernel(stacked, module.dim)


def hilbert(module: QuotientModule) -> HilbertSeries:
    return HilbertSeries.from_degrees(total_degree(e) for e in module.basis)


def socle(module: QuotientModule) -> Subspace:
    """(0 :_M m), the annihilator of the irrelevant maximal ideal."""
    return annihilator(module, variable_polys(module.n))


def is_gorenstein(module: QuotientModule) -> bool:
    return socle(module).dim == 1


def monomial_span(module: QuotientModule, exps_list: Iterable[ExponentVector]) -> Subspace:
    """Span of classes of standard monomials."""
    vecs = [module.basis_element(e) for e in exps_list]
    return Subspace(module.dim, vecs)


def subspace_monomials(module: QuotientModule, space: Subspace):
    """The standard monomials spanning `space`, or None if some row is not
    a single basis monomial."""
    found = []
    for row in space.rows:
        hits = [i for i, c in enumerate(row) if c]
        if len(hits) != 1 or row[hits[0]] != 1:
            return None
        found.append(module.basis[hits[0]])
    return sorted(found, key=grlex_key)


def positive_degree_span(module: QuotientModule) -> Subspace:
    """Span of all standard monomials of positive degree."""
    return monomial_span(
        module, (e for e in module.basis if total_degree(e) > 0)
    )
