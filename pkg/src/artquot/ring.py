"""Variables, exponent vectors, exact-rational polynomials, and monomial ideals.

Exponent vectors are plain tuples of nonnegative ints, one entry per
variable; they are the atom everything else is built from.  Coefficients
are always `fractions.Fraction` -- no floating point anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class AlgebraError(Exception):
    """Invalid input to a domain operation."""


class ParseError(AlgebraError):
    """Malformed input text; `pos` is a 0-based offset when known."""

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


class NotArtinianError(AlgebraError):
    """The quotient is infinite dimensional; `variable` lacks a pure power."""

    def __init__(self, variable: str):
        super().__init__(
            f"quotient is not finite dimensional: no pure power of {variable!r} "
            "among the ideal generators"
        )
        self.variable = variable


class InternalCheckError(RuntimeError):
    """A theorem-level identity failed.  Signals a bug, never bad input."""


# ---------------------------------------------------------------------------
# exponent vectors

ExponentVector = tuple  # tuple[int, ...]


def total_degree(exps: ExponentVector) -> int:
    return sum(exps)


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """Componentwise a <= b, i.e. x^a divides x^b."""
    return all(ai <= bi for ai, bi in zip(a, b))


def ev_add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(ai + bi for ai, bi in zip(a, b))


def grlex_key(exps: ExponentVector):
    """Canonical sort key: ascending total degree, then descending lex
    with the first variable largest (so x^2 before x*y before y^2)."""
    return (sum(exps), tuple(-e for e in exps))


def monomial_str(names: tuple[str, ...], exps: ExponentVector) -> str:
    if not any(exps):
        return "1"
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# variables

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

# short aliases accepted on input whenever there are at most three variables
_ALIAS = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class VariableSet:
    """Ordered variable names; the order fixes the monomial order."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise AlgebraError("need at least one variable")
        seen = set()
        for name in self.names:
            if not _NAME_RE.fullmatch(name):
                raise AlgebraError(f"bad variable name {name!r}")
            if name in seen:
                raise AlgebraError(f"duplicate variable name {name!r}")
            seen.add(name)

    @property
    def n(self) -> int:
        return len(self.names)

    @classmethod
    def default(cls, n: int) -> "VariableSet":
        return cls(tuple(f"x{i + 1}" for i in range(n)))

    def index_of(self, name: str) -> int:
        if name in self.names:
            return self.names.index(name)
        if self.n <= 3 and name in _ALIAS and _ALIAS[name] < self.n:
            return _ALIAS[name]
        raise AlgebraError(f"unknown variable {name!r}")

    def dual_names(self) -> tuple[str, ...]:
        """Upper-cased names for elements of the dual (inverse-system) side."""
        return tuple(nm[0].upper() + nm[1:] for nm in self.names)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse polynomial: exponent vector -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for exps, coeff in items:
            key = tuple(int(e) for e in exps)
            if any(e < 0 for e in key):
                raise AlgebraError("negative exponent in polynomial term")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self.terms = {k: v for k, v in acc.items() if v}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(total_degree(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        for exps, coeff in self.terms.items():
            if not any(exps):
                return coeff
        return Fraction(0)

    def sorted_terms(self) -> list[tuple[ExponentVector, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        items = list(self.terms.items()) + list(other.terms.items())
        return Polynomial(items)

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        items = []
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                items.append((ev_add(ea, eb), ca * cb))
        return Polynomial(items)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial({e: c * v for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_str(self, names: tuple[str, ...]) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self.sorted_terms():
            mono = monomial_str(names, exps)
            if coeff == 1 and mono != "1":
                body = mono
            elif coeff == -1 and mono != "1":
                body = f"-{mono}"
            elif mono == "1":
                body = str(coeff)
            else:
                body = f"{coeff}*{mono}"
            chunks.append(body)
        out = chunks[0]
        for body in chunks[1:]:
            out += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def poly_monomial(exps: ExponentVector, coeff=1) -> Polynomial:
    return Polynomial({tuple(exps): Fraction(coeff)})


def poly_one(n: int) -> Polynomial:
    return poly_monomial((0,) * n)


def poly_variable(n: int, i: int) -> Polynomial:
    exps = [0] * n
    exps[i] = 1
    return poly_monomial(tuple(exps))


def variable_polys(n: int) -> tuple[Polynomial, ...]:
    """Generators of the irrelevant maximal ideal (x_1, ..., x_n)."""
    return tuple(poly_variable(n, i) for i in range(n))


# ---------------------------------------------------------------------------
# monomial ideals

@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators, stored as a canonically sorted antichain."""

    min_gens: tuple[ExponentVector, ...]

    def __post_init__(self):
        gens = self.min_gens
        if not gens:
            raise AlgebraError("empty generator set")
        n = len(gens[0])
        for g in gens:
            if len(g) != n:
                raise AlgebraError("generators have mixed lengths")
            if any(e < 0 for e in g):
                raise AlgebraError("negative exponent in generator")
        for g in gens:
            for h in gens:
                if h != g and divides(h, g):
                    raise AlgebraError("generators are not minimal")
        if list(gens) != sorted(gens, key=grlex_key):
            raise AlgebraError("generators are not canonically sorted")

    @property
    def n(self) -> int:
        return len(self.min_gens[0])

    def contains(self, exps: ExponentVector) -> bool:
        if len(exps) != self.n:
            raise AlgebraError("exponent vector has wrong length")
        return any(divides(g, exps) for g in self.min_gens)


def minimalize(gens: Iterable[ExponentVector]) -> MonomialIdeal:
    """Drop every generator divisible by another one; sort canonically."""
    pool = {tuple(int(e) for e in g) for g in gens}
    if not pool:
        raise AlgebraError("empty generator set")
    keep = [g for g in pool if not any(h != g and divides(h, g) for h in pool)]
    return MonomialIdeal(tuple(sorted(keep, key=grlex_key)))


def contains_monomial(ideal: MonomialIdeal, exps: ExponentVector) -> bool:
    return ideal.contains(tuple(exps))


def pure_power_bounds(variables: VariableSet, ideal: MonomialIdeal) -> tuple[int, ...]:
    """Least pure-power exponent of each variable in the ideal.

    These bound the staircase box.  Raises NotArtinianError when some
    variable has no pure power among the generators.
    """
    if ideal.n != variables.n:
        raise AlgebraError("ideal and variable set have different arities")
    bounds = []
    for i in range(variables.n):
        powers = [
            g[i]
            for g in ideal.min_gens
            if all(e == 0 for j, e in enumerate(g) if j != i)
        ]
        if not powers:
            raise NotArtinianError(variables.names[i])
        bounds.append(min(powers))
    return tuple(bounds)


def is_artinian(variables: VariableSet, ideal: MonomialIdeal) -> bool:
    try:
        pure_power_bounds(variables, ideal)
    except NotArtinianError:
        return False
    return True


def render(variables: VariableSet, ideal: MonomialIdeal) -> str:
    """Canonical text form; parse_input round-trips it exactly."""
    gens = ", ".join(monomial_str(variables.names, g) for g in ideal.min_gens)
    return f"ring {','.join(variables.names)}; ideal {gens}"


# ---------------------------------------------------------------------------
# parsing

class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def try_char(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect_char(self, ch: str):
        if not self.try_char(ch):
            raise ParseError(f"expected {ch!r}", self.pos)

    def ident(self) -> str:
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an identifier", self.pos)
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())


def _parse_monomial(cur: _Cursor, variables: VariableSet) -> ExponentVector:
    """One monomial: `1` or a '*'-separated product of name(^int)? factors."""
    exps = [0] * variables.n
    first = True
    while True:
        cur.skip_ws()
        start = cur.pos
        ch = cur.peek()
        if ch.isdigit():
            value = cur.integer()
            if not first or value != 1:
                raise ParseError(
                    f"non-monomial generator: coefficient {value}", start
                )
            nxt = cur.peek()
            if nxt and nxt in "*^":
                raise ParseError(
                    "non-monomial generator: coefficient 1 cannot carry factors",
                    cur.pos,
                )
            # the unit monomial
        elif ch.isalpha():
            name = cur.ident()
            try:
                idx = variables.index_of(name)
            except AlgebraError:
                raise ParseError(f"unknown variable {name!r}", start) from None
            power = 1
            if cur.try_char("^"):
                ppos = cur.pos
                power = cur.integer()
                if power < 1:
                    raise ParseError("exponent must be a positive integer", ppos)
            exps[idx] += power
        else:
            raise ParseError("expected a monomial", cur.pos)
        first = False
        if not cur.try_char("*"):
            break
    tail = cur.peek()
    if tail and tail in "+-":
        raise ParseError(
            "non-monomial generator: only single monomials are allowed", cur.pos
        )
    return tuple(exps)


def _parse_json_input(text: str) -> tuple[VariableSet, MonomialIdeal]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON input: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict) or set(obj) != {"ring", "ideal"}:
        raise ParseError('JSON input needs exactly the keys "ring" and "ideal"')
    ring = obj["ring"]
    gens_raw = obj["ideal"]
    if not isinstance(ring, list) or not all(isinstance(s, str) for s in ring):
        raise ParseError('"ring" must be a list of variable names')
    if not isinstance(gens_raw, list) or not all(isinstance(s, str) for s in gens_raw):
        raise ParseError('"ideal" must be a list of monomial strings')
    if not gens_raw:
        raise ParseError("empty generator set")
    try:
        variables = VariableSet(tuple(ring))
    except AlgebraError as exc:
        raise ParseError(str(exc)) from None
    gens = []
    for s in gens_raw:
        cur = _Cursor(s)
        gens.append(_parse_monomial(cur, variables))
        if not cur.eof():
            raise ParseError(f"trailing input in generator {s!r}", cur.pos)
    return variables, minimalize(gens)


def parse_input(text: str) -> tuple[VariableSet, MonomialIdeal]:
    """Parse `ring x,y; ideal x^4, x^3*y` or the equivalent JSON object.

    Whitespace is insignificant.  Generators are minimalized.  In rings of
    at most three variables the names x, y, z are accepted as aliases for
    the first, second, and third declared variable.
    """
    if text.lstrip().startswith("{"):
        return _parse_json_input(text)
    cur = _Cursor(text)
    cur.skip_ws()
    kwpos = cur.pos
    if cur.ident() != "ring":
        raise ParseError("input must start with 'ring'", kwpos)
    names = [cur.ident()]
    while cur.try_char(","):
        names.append(cur.ident())
    cur.expect_char(";")
    kwpos = cur.pos
    if cur.ident() != "ideal":
        raise ParseError("expected 'ideal' after the ring declaration", kwpos)
    try:
        variables = VariableSet(tuple(names))
    except AlgebraError as exc:
        raise ParseError(str(exc)) from None
    if cur.eof():
        raise ParseError("empty generator set", cur.pos)
    gens = [_parse_monomial(cur, variables)]
    while cur.try_char(","):
        gens.append(_parse_monomial(cur, variables))
    if not cur.eof():
        raise ParseError("trailing input", cur.pos)
    return variables, minimalize(gens)


def _parse_poly_term(cur: _Cursor, variables: VariableSet):
    coeff = Fraction(1)
    exps = [0] * variables.n
    while True:
        cur.skip_ws()
        start = cur.pos
        ch = cur.peek()
        if ch.isdigit():
            num = cur.integer()
            if cur.try_char("/"):
                den = cur.integer()
                if den == 0:
                    raise ParseError("zero denominator", start)
                coeff *= Fraction(num, den)
            else:
                coeff *= num
        elif ch.isalpha():
            name = cur.ident()
            try:
                idx = variables.index_of(name)
            except AlgebraError:
                raise ParseError(f"unknown variable {name!r}", start) from None
            power = 1
            if cur.try_char("^"):
                power = cur.integer()
            exps[idx] += power
        else:
            raise ParseError("expected a coefficient or a variable", cur.pos)
        if not cur.try_char("*"):
            break
    return tuple(exps), coeff


def parse_polynomial(text: str, variables: VariableSet) -> Polynomial:
    """Parse an integer/rational-coefficient polynomial like `x^2 - 2*x*y + 1`."""
    cur = _Cursor(text)
    terms = []
    sign = -1 if cur.try_char("-") else 1
    while True:
        exps, coeff = _parse_poly_term(cur, variables)
        terms.append((exps, sign * coeff))
        if cur.try_char("+"):
            sign = 1
        elif cur.try_char("-"):
            sign = -1
        else:
            break
    if not cur.eof():
        raise ParseError("trailing input", cur.pos)
    return Polynomial(terms)


def parse_polynomial_list(text: str, variables: VariableSet) -> tuple[Polynomial, ...]:
    """Comma-separated polynomials, e.g. ideal generators for torsion predicates."""
    parts = [p for p in text.split(",")]
    if not any(p.strip() for p in parts):
        raise ParseError("empty generator set")
    return tuple(parse_polynomial(p, variables) for p in parts)
