"""Outside corners, the largest reduced submodule, and reducedness oracles.

An element m of a module is "reduced" when a^2 m = 0 forces a m = 0 for
every ring element a.  For a staircase quotient the reduced part, the
socle, and the span of the outside corner monomials all coincide; the
functions here compute the three descriptions separately and insist that
they agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .linalg import Subspace
from .quotient import QuotientModule, act, annihilator, monomial_span
from .ring import (
    AlgebraError,
    ExponentVector,
    InternalCheckError,
    Polynomial,
    grlex_key,
    poly_monomial,
    variable_polys,
)

_COEFF_POOL = (-2, -1, 1, 2)


@dataclass(frozen=True)
class CornerReport:
    """Staircase monomials split into outside corners and the rest."""

    corners: tuple[ExponentVector, ...]
    inner: tuple[ExponentVector, ...]


def outside_corners(module: QuotientModule) -> CornerReport:
    """Standard monomials pushed into the ideal by every variable."""
    corners = []
    inner = []
    for b, exps in enumerate(module.basis):
        if all(module.var_action[i][b] is None for i in range(module.n)):
            corners.append(exps)
        else:
            inner.append(exps)
    return CornerReport(tuple(corners), tuple(inner))


def largest_reduced_submodule(module: QuotientModule) -> Subspace:
    """Span of the outside corners; checked against (0 :_M m) exactly."""
    span = monomial_span(module, outside_corners(module).corners)
    ann = annihilator(module, variable_polys(module.n))
    if span != ann:
        raise InternalCheckError(
            "corner span and maximal-ideal annihilator disagree: "
            f"dims {span.dim} vs {ann.dim}"
        )
    return span


def monomials_up_to_degree(n: int, bound: int) -> list[ExponentVector]:
    """All exponent vectors with total degree <= bound, canonical order."""
    cells = [
        e for e in product(range(bound + 1), repeat=n) if sum(e) <= bound
    ]
    return sorted(cells, key=grlex_key)


def _random_poly(rng: random.Random, n: int, degree_bound: int, constant: bool) -> Polynomial:
    terms = []
    if constant:
        terms.append(((0,) * n, Fraction(rng.choice(_COEFF_POOL))))
    for _ in range(rng.randint(1, 3)):
        exps = [0] * n
        for _ in range(rng.randint(1, max(1, degree_bound))):
            exps[rng.randrange(n)] += 1
        terms.append((tuple(exps), Fraction(rng.choice(_COEFF_POOL))))
    return Polynomial(terms)


def _witness_candidates(
    module: QuotientModule, degree_bound: int, trials: int, seed: int
) -> list[Polynomial]:
    cands = [
        poly_monomial(e)
        for e in monomials_up_to_degree(module.n, degree_bound)
    ]
    rng = random.Random(seed)
    for t in range(trials):
        cands.append(_random_poly(rng, module.n, degree_bound, constant=t % 2 == 0))
    return cands


def reduced_membership_oracle(
    module: QuotientModule,
    vec: Sequence,
    degree_bound: int = 4,
    trials: int = 8,
    seed: int = 0,
) -> bool:
    """Search for a witness a with a^2 v = 0 but a v != 0.

    Returns False as soon as a witness turns up among all monomials of
    total degree <= degree_bound plus `trials` seeded random polynomials
    (alternating with and without constant term); True otherwise.  One-sided:
    a True answer is only as strong as the search space.
    """
    if not any(vec):
        return True
    for a in _witness_candidates(module, degree_bound, trials, seed):
        av = act(module, a, vec)
        if any(av) and not any(act(module, a, av)):
            return False
    return True


def is_ideal_reduced(module: QuotientModule, gens: Iterable[Polynomial]) -> bool:
    """Whether (0 :_M J) = (0 :_M J^2); J^2 runs over pairwise products."""
    gens = list(gens)
    squares = [
        gens[i] * gens[j] for i in range(len(gens)) for j in range(i, len(gens))
    ]
    return annihilator(module, gens) == annihilator(module, squares)


def is_coreduced_subspace(
    module: QuotientModule,
    space: Subspace,
    degree_bound: int = 2,
    trials: int = 8,
    seed: int = 0,
) -> bool:
    """Whether the submodule N spanned by `space` satisfies aN = a^2 N for all a.

    Exact criterion: N is coreduced iff every variable kills N.  The verdict
    is cross-validated by sampling monomials up to `degree_bound` and seeded
    random polynomials; disagreement raises InternalCheckError.  Raises
    AlgebraError when `space` is not closed under the module action.
    """
    if space.ambient != module.dim:
        raise AlgebraError("subspace does not live in this module")
    if degree_bound < 1:
        raise AlgebraError("degree_bound must be at least 1")
    xs = variable_polys(module.n)
    for row in space.rows:
        for xv in xs:
            if not space.contains(act(module, xv, row)):
                raise AlgebraError("subspace is not a submodule")
    exact = all(
        not any(act(module, xv, row)) for row in space.rows for xv in xs
    )
    violated = False
    for a in _witness_candidates(module, degree_bound, trials, seed):
        a_im = Subspace(module.dim, [act(module, a, r) for r in space.rows])
        aa = a * a
        aa_im = Subspace(module.dim, [act(module, aa, r) for r in space.rows])
        if a_im != aa_im:
            violated = True
            if exact:
                raise InternalCheckError(
                    "coreduced criterion said yes but sampling found aN != a^2 N"
                )
    if not exact and not violated and space.dim > 0:
        raise InternalCheckError(
            "coreduced criterion said no but sampling found no violation"
        )
    return exact
