"""Envelope, Jacobson radical, and semiprime submodules of staircase quotients.

The envelope of zero collects the products r*m where some power of r kills
m; for an Artinian monomial quotient its span, the Jacobson radical, and
the intersection of the semiprime submodules all equal the span of the
positive-degree standard monomials.  Semiprime submodules are enumerated
by brute force over the monomial submodules, which are exactly the
up-closed subsets of the staircase under divisibility.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Subspace
from .quotient import (
    QuotientModule,
    act,
    ideal_times_module,
    monomial_span,
    positive_degree_span,
)
from .ring import (
    AlgebraError,
    ExponentVector,
    InternalCheckError,
    poly_monomial,
    variable_polys,
)
from .reduced import _COEFF_POOL, _random_poly, monomials_up_to_degree

DEFAULT_ENUMERATION_BOUND = 14


def envelope_zero(
    module: QuotientModule, trials: int = 20, seed: int = 0
) -> Subspace:
    """Span of {r*m : r^k m = 0 for some k}, which is m*M here.

    Sampling checks run alongside the exact span: every variable really is
    nilpotent on every basis class, and no sampled unit (a polynomial with
    nonzero constant term) has a vanishing power on a nonzero element.
    """
    span = ideal_times_module(module, variable_polys(module.n))
    # every variable multiple of a basis class lands in the envelope
    for i in range(module.n):
        for b in range(module.dim):
            vec = module.basis_element(module.basis[b])
            power = vec
            dead = False
            for _ in range(module.dim + 1):
                power = act(module, variable_polys(module.n)[i], power)
                if not any(power):
                    dead = True
                    break
            if not dead:
                raise InternalCheckError("a variable failed to be nilpotent")
    rng = random.Random(seed)
    for _ in range(trials):
        r = _random_poly(rng, module.n, 2, constant=True)
        if r.constant_term() == 0:
            continue
        vec = tuple(
            Fraction(rng.choice(_COEFF_POOL)) if rng.random() < 0.5 else Fraction(0)
            for _ in range(module.dim)
        )
        if not any(vec):
            continue
        power = vec
        for _ in range(module.dim):
            power = act(module, r, power)
            if not any(power):
                raise InternalCheckError(
                    "a unit-like polynomial had a vanishing power on a nonzero element"
                )
    return span


def jacobson_radical(module: QuotientModule) -> Subspace:
    """Span of the positive-degree standard monomials; checked against the
    envelope of zero."""
    span = positive_degree_span(module)
    if span != envelope_zero(module):
        raise InternalCheckError("Jacobson radical differs from the envelope of zero")
    return span


# ---------------------------------------------------------------------------
# monomial submodules as bitmasks over the staircase

def _cover_masks(module: QuotientModule) -> list[int]:
    """For each basis slot, the bitmask of its single-variable shifts."""
    masks = []
    for b in range(module.dim):
        m = 0
        for i in range(module.n):
            t = module.var_action[i][b]
            if t is not None:
                m |= 1 << t
        masks.append(m)
    return masks


def _upsets(module: QuotientModule):
    """All monomial submodules (up-closed staircase subsets), as bitmasks."""
    covers = _cover_masks(module)
    d = module.dim
    out = []
    for mask in range(1 << d):
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            b = low.bit_length() - 1
            if covers[b] & mask != covers[b]:
                ok = False
                break
            rest ^= low
        if ok:
            out.append(mask)
    return out


def _mask_monomials(module: QuotientModule, mask: int) -> tuple[ExponentVector, ...]:
    return tuple(
        module.basis[b] for b in range(module.dim) if mask >> b & 1
    )


@dataclass(frozen=True)
class SemiprimeReport:
    """Result of the brute-force semiprime enumeration."""

    intersection: Subspace
    semiprime: tuple[tuple[ExponentVector, ...], ...]
    submodules_scanned: int

    @property
    def unique(self) -> bool:
        return len(self.semiprime) == 1


def semiprime_bruteforce(
    module: QuotientModule, bound: int = DEFAULT_ENUMERATION_BOUND
) -> SemiprimeReport:
    """Enumerate proper monomial submodules N and keep those with M/N reduced.

    M/N is reduced exactly when the maximal ideal maps M into N, so the
    test is the single containment m*M <= N.  The quotient by the full
    module is zero and vacuously reduced; submodules are therefore required
    to be proper, matching the usual properness convention for (semi)prime
    submodules.
    """
    if module.dim > bound:
        raise AlgebraError(
            f"module dimension {module.dim} exceeds the enumeration bound {bound}"
        )
    mm = positive_degree_span(module)
    mm_mask = 0
    for e in _mask_from_span(module, mm):
        mm_mask |= 1 << module.index[e]
    full = (1 << module.dim) - 1
    semiprime = []
    inter = full
    count = 0
    for mask in _upsets(module):
        if mask == full:
            continue
        count += 1
        if mm_mask & ~mask == 0:
            semiprime.append(mask)
            inter &= mask
    spaces = tuple(
        _mask_monomials(module, m) for m in sorted(semiprime)
    )
    inter_space = monomial_span(
        module, _mask_monomials(module, inter if semiprime else 0)
    )
    return SemiprimeReport(inter_space, spaces, count)


def _mask_from_span(module: QuotientModule, span: Subspace) -> list[ExponentVector]:
    exps = []
    for row in span.rows:
        hits = [i for i, c in enumerate(row) if c]
        if len(hits) != 1 or row[hits[0]] != 1:
            raise InternalCheckError("expected a monomial-spanned subspace")
        exps.append(module.basis[hits[0]])
    return exps


def envelope_of_submodule_bruteforce(
    module: QuotientModule, submodule_mask_exps: Sequence[ExponentVector],
    degree_bound: int = 6,
) -> Subspace:
    """Direct scan of {r*m : r monomial, m basis class, r^k m in N}."""
    n_space = monomial_span(module, submodule_mask_exps)
    vecs = list(n_space.rows)
    for r_exps in monomials_up_to_degree(module.n, degree_bound):
        r = poly_monomial(r_exps)
        for b in range(module.dim):
            vec = module.basis_element(module.basis[b])
            power = vec
            landed = False
            for _ in range(module.dim + 1):
                power = act(module, r, power)
                if n_space.contains(power):
                    landed = True
                    break
            if landed:
                vecs.append(act(module, r, vec))
    return Subspace(module.dim, vecs)


@dataclass(frozen=True)
class RadicalFormulaReport:
    envelope_dim: int
    jacobson_dim: int
    semiprime_dim: int | None
    semiprime_unique: bool | None
    enumeration_skipped: bool
    spot_checks: int
    satisfies: bool


def satisfies_radical_formula(
    module: QuotientModule,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    spot_checks: int = 3,
    seed: int = 0,
) -> RadicalFormulaReport:
    """Check the radical-formula chain on one staircase quotient.

    The envelope of zero, the Jacobson radical, and (when the dimension is
    within the enumeration bound) the intersection of the semiprime
    submodules must all coincide.  Quotients of M by monomial submodules
    are again staircase quotients, so this single check propagates to every
    submodule; a few random submodule envelopes are spot-checked directly.
    """
    env = envelope_zero(module, seed=seed)
    jac = jacobson_radical(module)
    if env != jac:
        raise InternalCheckError("envelope and Jacobson radical differ")
    semiprime_dim = None
    unique = None
    skipped = module.dim > bound
    if not skipped:
        report = semiprime_bruteforce(module, bound)
        semiprime_dim = report.intersection.dim
        unique = report.unique
        if report.intersection != env:
            raise InternalCheckError(
                "semiprime intersection differs from the envelope of zero"
            )
    rng = random.Random(seed)
    done = 0
    if module.dim <= bound:
        ups = [m for m in _upsets(module) if m != (1 << module.dim) - 1]
        for _ in range(spot_checks):
            mask = rng.choice(ups)
            exps = _mask_monomials(module, mask)
            brute = envelope_of_submodule_bruteforce(module, exps)
            expected = monomial_span(module, exps).sum(env)
            if brute != expected:
                raise InternalCheckError(
                    "submodule envelope differs from N + m*M"
                )
            done += 1
    return RadicalFormulaReport(
        envelope_dim=env.dim,
        jacobson_dim=jac.dim,
        semiprime_dim=semiprime_dim,
        semiprime_unique=unique,
        enumeration_skipped=skipped,
        spot_checks=done,
        satisfies=True,
    )
