"""Seeded random instances for the verification suites.

The ideal distribution is fixed and documented so that failures are
reproducible from a seed alone:

  * the number of variables is uniform on {1, 2, 3};
  * each variable gets a pure power with exponent uniform on 1..6;
  * between 0 and 2n extra generators are sampled uniformly from the box
    under the pure powers (zero vectors are rejected);
  * the generator set is minimalized, and the whole draw is rejected and
    retried when the staircase dimension leaves [1, dim_bound].

Instance i of a run with master seed s uses its own seed s + 1000003*i, so
any single instance can be replayed with --count 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .linalg import Matrix, identity_matrix, is_invertible, mat_mul
from .quotient import QuotientModule, staircase
from .ring import MonomialIdeal, Polynomial, VariableSet, minimalize, poly_monomial
from .torsion import FiniteModule, conjugate

SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class SamplerConfig:
    max_vars: int = 3
    max_exponent: int = 6
    dim_bound: int = 60


def instance_seed(master_seed: int, index: int) -> int:
    return master_seed + SEED_STRIDE * index


def random_artinian_ideal(
    rng: random.Random, config: SamplerConfig = SamplerConfig()
) -> tuple[VariableSet, MonomialIdeal]:
    while True:
        n = rng.randint(1, config.max_vars)
        variables = (
            VariableSet(("x", "y", "z")[:n]) if n <= 3 else VariableSet.default(n)
        )
        bounds = [rng.randint(1, config.max_exponent) for _ in range(n)]
        gens = []
        for i in range(n):
            e = [0] * n
            e[i] = bounds[i]
            gens.append(tuple(e))
        for _ in range(rng.randint(0, 2 * n)):
            e = tuple(rng.randrange(b) for b in bounds)
            if any(e):
                gens.append(e)
        ideal = minimalize(gens)
        dim = len(staircase(variables, ideal))
        if 1 <= dim <= config.dim_bound:
            return variables, ideal


def sample_ideals(
    count: int, seed: int, config: SamplerConfig = SamplerConfig()
) -> Iterator[tuple[int, VariableSet, MonomialIdeal]]:
    """Yields (instance seed, variables, ideal)."""
    for i in range(count):
        s = instance_seed(seed, i)
        yield s, *random_artinian_ideal(random.Random(s), config)


def sample_modules(
    count: int, seed: int, config: SamplerConfig = SamplerConfig()
) -> Iterator[tuple[int, QuotientModule]]:
    for s, variables, ideal in sample_ideals(count, seed, config):
        yield s, QuotientModule(variables, ideal)


# ---------------------------------------------------------------------------
# random commuting matrix families

_ENTRY_POOL = (-2, -1, 0, 0, 1, 1, 2)


def _random_base_matrix(rng: random.Random, dim: int) -> Matrix:
    """Upper triangular; nilpotent, invertible, or a mixed block of both."""
    mode = rng.choice(("nilpotent", "invertible", "mixed"))
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    split = dim if mode == "nilpotent" else 0 if mode == "invertible" else rng.randint(0, dim)
    for i in range(dim):
        for j in range(i + 1, dim):
            rows[i][j] = Fraction(rng.choice(_ENTRY_POOL))
        if i >= split:
            rows[i][i] = Fraction(rng.choice((-2, -1, 1, 2)))
    return tuple(tuple(r) for r in rows)


def _random_unimodular(rng: random.Random, dim: int) -> tuple[Matrix, Matrix]:
    """A change of basis and its inverse, built as unit triangular factors."""
    lower = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    upper = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for i in range(dim):
        for j in range(i):
            lower[i][j] = Fraction(rng.choice((-1, 0, 0, 1)))
            upper[j][i] = Fraction(rng.choice((-1, 0, 0, 1)))
    lo = tuple(tuple(r) for r in lower)
    up = tuple(tuple(r) for r in upper)
    p = mat_mul(lo, up)

    def invert_unit_triangular(mat, is_lower):
        d = len(mat)
        inv = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        order = range(d) if is_lower else range(d - 1, -1, -1)
        for col in range(d):
            for i in order:
                s = Fraction(0)
                for k in range(d):
                    if k != i and mat[i][k]:
                        s += mat[i][k] * inv[k][col]
                inv[i][col] = (Fraction(int(i == col)) - s) / mat[i][i]
        return tuple(tuple(r) for r in inv)

    p_inv = mat_mul(invert_unit_triangular(up, False), invert_unit_triangular(lo, True))
    return p, p_inv


def random_finite_module(
    rng: random.Random, max_dim: int = 8, conjugated: bool = True
) -> FiniteModule:
    """Commuting family: polynomials in one triangular base matrix, then an
    optional change of basis."""
    n = rng.randint(1, 3)
    dim = rng.randint(1, max_dim)
    base = _random_base_matrix(rng, dim)
    mats = [base]
    for _ in range(n - 1):
        coeffs = [Fraction(rng.choice(_ENTRY_POOL)) for _ in range(3)]
        out = [[coeffs[0] * Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        power = identity_matrix(dim)
        for c in coeffs[1:]:
            power = mat_mul(power, base)
            for i in range(dim):
                for j in range(dim):
                    out[i][j] += c * power[i][j]
        mats.append(tuple(tuple(r) for r in out))
    module = FiniteModule(n, dim, tuple(mats))
    if conjugated:
        p, p_inv = _random_unimodular(rng, dim)
        if not is_invertible(p):
            raise AssertionError("unimodular construction failed")
        module = conjugate(module, p, p_inv)
    return module


def random_monomial_ideal_polys(
    rng: random.Random, nvars: int
) -> tuple[Polynomial, ...]:
    """A small random monomial ideal in the module's variables, as polynomials."""
    gens = []
    for _ in range(rng.randint(1, 2)):
        e = [0] * nvars
        for _ in range(rng.randint(1, 2)):
            e[rng.randrange(nvars)] += 1
        gens.append(poly_monomial(tuple(e)))
    return tuple(gens)
