"""Finite modules as commuting matrix actions: torsion, completion, duality.

A FiniteModule is n pairwise-commuting square matrices over the rationals,
one per variable.  The torsion functor stabilizes the ascending chain of
annihilators of ideal powers; the completion functor quotients by the
stabilized image chain.  Matlis duality is the linear dual: transpose every
action matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .linalg import (
    Matrix,
    Subspace,
    identity_matrix,
    kernel,
    mat_add,
    mat_mul,
    mat_scale,
    mat_vec,
    rank,
    transpose,
    zero_matrix,
)
from .quotient import QuotientModule
from .ring import AlgebraError, InternalCheckError, Polynomial
from .reduced import monomials_up_to_degree


@dataclass(frozen=True)
class FiniteModule:
    """A finite-dimensional module over k[x_1..x_n] given by action matrices."""

    nvars: int
    dim: int
    action: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.action) != self.nvars:
            raise AlgebraError("need one action matrix per variable")
        for mat in self.action:
            if len(mat) != self.dim or any(len(r) != self.dim for r in mat):
                raise AlgebraError("action matrix has wrong shape")
        for i in range(self.nvars):
            for j in range(i + 1, self.nvars):
                ab = mat_mul(self.action[i], self.action[j])
                ba = mat_mul(self.action[j], self.action[i])
                if ab != ba:
                    raise AlgebraError(
                        f"action matrices {i} and {j} do not commute"
                    )

    def poly_matrix(self, poly: Polynomial) -> Matrix:
        """Evaluate a polynomial at the action matrices."""
        out = zero_matrix(self.dim)
        for exps, coeff in poly.terms.items():
            if len(exps) != self.nvars:
                raise AlgebraError("polynomial arity does not match the module")
            term = identity_matrix(self.dim)
            for i, e in enumerate(exps):
                for _ in range(e):
                    term = mat_mul(term, self.action[i])
            out = mat_add(out, mat_scale(term, coeff))
        return out


def from_quotient(module: QuotientModule) -> FiniteModule:
    """Transcribe the staircase shift tables into 0/1 action matrices."""
    d = module.dim
    mats = []
    for i in range(module.n):
        rows = [[Fraction(0)] * d for _ in range(d)]
        for b, target in enumerate(module.var_action[i]):
            if target is not None:
                rows[target][b] = Fraction(1)
        mats.append(tuple(tuple(r) for r in rows))
    return FiniteModule(module.n, d, tuple(mats))


def _gen_matrices(module: FiniteModule, gens: Iterable[Polynomial]) -> list[Matrix]:
    return [module.poly_matrix(g) for g in gens]


def annihilator_of(module: FiniteModule, gens: Iterable[Polynomial]) -> Subspace:
    """(0 : J) = joint kernel of the generator actions."""
    stacked = []
    for mat in _gen_matrices(module, gens):
        stacked.extend(mat)
    if not stacked:
        return Subspace.full(module.dim)
    return kernel(stacked, module.dim)


def image_of(module: FiniteModule, gens: Iterable[Polynomial]) -> Subspace:
    """J M = sum of the generator images."""
    vecs = []
    for mat in _gen_matrices(module, gens):
        vecs.extend(zip(*mat))
    return Subspace(module.dim, vecs)


def torsion_part(module: FiniteModule, gens: Iterable[Polynomial]) -> Subspace:
    """Stabilized union of (0 : J^k); elements killed by some power of J."""
    space, _ = torsion_part_with_exponent(module, gens)
    return space


def torsion_part_with_exponent(
    module: FiniteModule, gens: Iterable[Polynomial]
) -> tuple[Subspace, int]:
    mats = _gen_matrices(module, gens)
    current = Subspace.zero(module.dim)
    exponent = 0
    for k in range(1, module.dim + 2):
        res = current.residual_matrix()
        stacked = []
        for mat in mats:
            stacked.extend(mat_mul(res, mat))
        nxt = kernel(stacked, module.dim) if stacked else Subspace.full(module.dim)
        if nxt == current:
            break
        current = nxt
        exponent = k
    if exponent > module.dim:
        raise InternalCheckError("torsion chain failed to stabilize in dim steps")
    return current, exponent


def submodule_module(module: FiniteModule, space: Subspace) -> FiniteModule:
    """Restrict the action to an invariant subspace, in its row basis."""
    mats = []
    for mat in module.action:
        rows = []
        for r in space.rows:
            img = mat_vec(mat, r)
            rows.append(space.coords(img))  # raises if not invariant
        # rows currently express images of basis vectors; transpose to act on
        # coordinate columns
        mats.append(transpose(tuple(rows)))
    return FiniteModule(module.nvars, space.dim, tuple(mats))


def quotient_module(module: FiniteModule, space: Subspace) -> FiniteModule:
    """Induced action on M / N via the free coordinates of N's echelon form."""
    for mat in module.action:
        for r in space.rows:
            if not space.contains(mat_vec(mat, r)):
                raise AlgebraError("subspace is not a submodule")
    d = module.dim
    free = [c for c in range(d) if c not in set(space.pivots)]
    if not free:
        return FiniteModule(module.nvars, 0, tuple(() for _ in module.action))

    def project(vec):
        red = space.reduce(vec)
        return [red[c] for c in free]

    mats = []
    for mat in module.action:
        cols = []
        for c in free:
            unit = [Fraction(0)] * d
            unit[c] = Fraction(1)
            cols.append(project(mat_vec(mat, unit)))
        mats.append(tuple(zip(*cols)))
    return FiniteModule(module.nvars, len(free), tuple(mats))


def adic_completion(
    module: FiniteModule, gens: Iterable[Polynomial]
) -> tuple[FiniteModule, int]:
    """(M / J^inf M, stabilization exponent of the descending chain J^k M)."""
    mats = _gen_matrices(module, gens)
    current = Subspace.full(module.dim)
    exponent = 0
    for k in range(1, module.dim + 2):
        vecs = [mat_vec(mat, r) for mat in mats for r in current.rows]
        nxt = Subspace(module.dim, vecs)
        if nxt == current:
            break
        current = nxt
        exponent = k
    if exponent > module.dim:
        raise InternalCheckError("image chain failed to stabilize in dim steps")
    return quotient_module(module, current), exponent


def matlis_dual(module: FiniteModule) -> FiniteModule:
    """Linear dual: every action matrix transposed."""
    return FiniteModule(
        module.nvars,
        module.dim,
        tuple(transpose(mat) for mat in module.action),
    )


def is_ideal_reduced_module(module: FiniteModule, gens: Iterable[Polynomial]) -> bool:
    gens = list(gens)
    squares = [
        gens[i] * gens[j] for i in range(len(gens)) for j in range(i, len(gens))
    ]
    return annihilator_of(module, gens) == annihilator_of(module, squares)


def is_ideal_coreduced_module(module: FiniteModule, gens: Iterable[Polynomial]) -> bool:
    gens = list(gens)
    squares = [
        gens[i] * gens[j] for i in range(len(gens)) for j in range(i, len(gens))
    ]
    return image_of(module, gens) == image_of(module, squares)


@dataclass(frozen=True)
class TtfTag:
    """Torsion-theory classification of a module relative to an ideal."""

    tag: str  # "T_I" | "F_I" | "FrakT_I" | "none"
    j_reduced: bool
    j_coreduced: bool
    gamma_dim: int
    lambda_dim: int

    def __post_init__(self):
        if self.tag not in ("T_I", "F_I", "FrakT_I", "none"):
            raise AlgebraError(f"unknown tag {self.tag!r}")
        if self.tag in ("T_I", "F_I") and not self.j_reduced:
            raise AlgebraError("torsion/torsion-free tags require reducedness")
        if self.tag == "FrakT_I" and not self.j_coreduced:
            raise AlgebraError("the coreduced torsion class requires coreducedness")


def classify(module: FiniteModule, gens: Iterable[Polynomial]) -> TtfTag:
    """Place M in the torsion / coreduced-torsion / torsion-free trichotomy.

    A module can satisfy the torsion-free and coreduced-torsion definitions
    at once (the whole-ring ideal on a one-dimensional module does); the
    coreduced tag wins in that case, and the predicate bits carry the rest.
    """
    gens = list(gens)
    reduced = is_ideal_reduced_module(module, gens)
    coreduced = is_ideal_coreduced_module(module, gens)
    gamma = torsion_part(module, gens)
    lam, _ = adic_completion(module, gens)
    image = image_of(module, gens)
    if reduced and gamma.dim == module.dim:
        tag = "T_I"
    elif coreduced and image.dim == module.dim:
        tag = "FrakT_I"
    elif reduced and gamma.dim == 0:
        tag = "F_I"
    else:
        tag = "none"
    return TtfTag(
        tag=tag,
        j_reduced=reduced,
        j_coreduced=coreduced,
        gamma_dim=gamma.dim,
        lambda_dim=lam.dim,
    )


@dataclass(frozen=True)
class DualityReport:
    """Outcome of the three torsion-theory duality equivalences."""

    hypothesis_met: bool
    items: tuple[str, str, str]  # each "pass" | "fail" | "skipped"

    @property
    def ok(self) -> bool:
        return all(s != "fail" for s in self.items)


def verify_ttf_duality(
    module: FiniteModule, gens: Iterable[Polynomial]
) -> DualityReport:
    """Check that Matlis duality swaps the torsion classes as predicted.

    Requires M to be both reduced and coreduced relative to the ideal;
    otherwise every item is reported as skipped.
    """
    gens = list(gens)
    mine = classify(module, gens)
    if not (mine.j_reduced and mine.j_coreduced):
        return DualityReport(False, ("skipped", "skipped", "skipped"))
    dual = matlis_dual(module)
    theirs = classify(dual, gens)
    in_t = mine.j_reduced and mine.gamma_dim == module.dim
    dual_in_t = theirs.j_reduced and theirs.gamma_dim == dual.dim
    in_f = mine.j_reduced and mine.gamma_dim == 0
    dual_in_f = theirs.j_reduced and theirs.gamma_dim == 0
    image = image_of(module, gens)
    dual_image = image_of(dual, gens)
    in_frak = mine.j_coreduced and image.dim == module.dim
    dual_in_frak = theirs.j_coreduced and dual_image.dim == dual.dim
    items = (
        "pass" if in_t == dual_in_t else "fail",
        "pass" if in_f == dual_in_frak else "fail",
        "pass" if in_frak == dual_in_f else "fail",
    )
    return DualityReport(True, items)


@dataclass(frozen=True)
class LevelCollapseReport:
    """Dimensions of the filtration levels that merge under (co)reducedness."""

    j_reduced: bool
    j_coreduced: bool
    semisimple_case: bool
    gamma_dim: int
    socle_level_dim: int  # dim (0 : J)
    lambda_dim: int
    top_level_dim: int  # dim M / J M
    collapses: tuple[str, ...]


def level_collapse_check(
    module: FiniteModule, gens: Iterable[Polynomial]
) -> LevelCollapseReport:
    """When M is reduced the whole torsion part is already killed by J;
    when M is coreduced the completion is just M / J M; when every variable
    acts by zero (and the ideal sits inside the variables' span) all the
    left-hand levels coincide with M itself."""
    gens = list(gens)
    reduced = is_ideal_reduced_module(module, gens)
    coreduced = is_ideal_coreduced_module(module, gens)
    gamma = torsion_part(module, gens)
    ann = annihilator_of(module, gens)
    lam, _ = adic_completion(module, gens)
    image = image_of(module, gens)
    top_level = module.dim - image.dim
    collapses = []
    if reduced:
        if gamma.dim != ann.dim:
            raise InternalCheckError("reduced module with a deeper torsion part")
        collapses.append("torsion-part == annihilator")
    if coreduced:
        if lam.dim != top_level:
            raise InternalCheckError("coreduced module with a deeper completion")
        collapses.append("completion == top quotient")
    semisimple = all(
        all(not x for row in mat for x in row) for mat in module.action
    ) and all(g.constant_term() == 0 for g in gens)
    if semisimple:
        if not (gamma.dim == ann.dim == module.dim):
            raise InternalCheckError("semisimple module with proper torsion levels")
        collapses.append("all torsion levels == M")
    return LevelCollapseReport(
        j_reduced=reduced,
        j_coreduced=coreduced,
        semisimple_case=semisimple,
        gamma_dim=gamma.dim,
        socle_level_dim=ann.dim,
        lambda_dim=lam.dim,
        top_level_dim=top_level,
        collapses=tuple(collapses),
    )


def conjugate(module: FiniteModule, p: Matrix, p_inv: Matrix) -> FiniteModule:
    """Change of basis: every action matrix becomes P A P^{-1}."""
    mats = tuple(
        mat_mul(mat_mul(p, mat), p_inv) for mat in module.action
    )
    return FiniteModule(module.nvars, module.dim, mats)


def word_rank_profile(module: FiniteModule) -> dict:
    """Rank of every monomial word of length <= dim in the action matrices.

    The actions commute, so words collapse to exponent vectors.  Two
    isomorphic modules share this profile; it is the cheap invariant used
    to compare a module with its double dual.
    """
    profile = {}
    for exps in monomials_up_to_degree(module.nvars, module.dim):
        if not any(exps):
            continue
        word = identity_matrix(module.dim)
        for i, e in enumerate(exps):
            for _ in range(e):
                word = mat_mul(word, module.action[i])
        profile[exps] = rank(word, module.dim)
    return profile
