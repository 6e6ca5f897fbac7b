"""Exact polynomial arithmetic over the rationals.

Polynomials are sparse maps from exponent tuples to nonzero ``Fraction``
coefficients.  Every polynomial carries a fixed variable count (at most 4,
named x, y, z, w); arithmetic between polynomials of different variable
counts is an error.  Terms are ordered graded-lexicographically with
x > y > z > w, which fixes both printing and the "monic" normalization used
for ideal generators.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

VARIABLES = "xyzw"
MAX_VARS = len(VARIABLES)

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


class VariableCountMismatch(PolyError):
    pass


class UnsupportedFactorization(PolyError):
    pass


def grlex_key(exp: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exp), exp)


class Poly:
    """Immutable sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None, nvars: int = 2):
        if not 0 <= nvars <= MAX_VARS:
            raise PolyError(f"variable count must be in 0..{MAX_VARS}, got {nvars}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise PolyError(f"bad exponent {exp} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 2) -> Poly:
        return cls({}, nvars)

    @classmethod
    def const(cls, c: Scalar, nvars: int = 2) -> Poly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int = 2) -> Poly:
        if not 0 <= i < nvars:
            raise PolyError(f"variable index {i} out of range for {nvars} variables")
        return cls({tuple(int(j == i) for j in range(nvars)): 1}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: Scalar = 1) -> Poly:
        return cls({tuple(exp): c}, len(exp))

    @classmethod
    def parse(cls, text: str, nvars: int = 2) -> Poly:
        return parse_poly(text, nvars)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_value(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self._terms:
            raise PolyError("zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def used_variables(self) -> list[int]:
        return [i for i in range(self.nvars) if any(e[i] for e in self._terms)]

    def homogeneous_part(self, d: int) -> Poly:
        return Poly({e: c for e, c in self._terms.items() if sum(e) == d}, self.nvars)

    def truncate(self, d: int) -> Poly:
        """Drop every term of total degree above ``d``."""
        return Poly({e: c for e, c in self._terms.items() if sum(e) <= d}, self.nvars)

    def monic(self) -> Poly:
        if not self._terms:
            return self
        _, lc = self.leading_term()
        return self * (1 / lc)

    def with_nvars(self, nvars: int) -> Poly:
        """Embed into a ring with more (or trim to fewer unused) variables."""
        if nvars == self.nvars:
            return self
        out = {}
        for e, c in self._terms.items():
            if nvars < self.nvars and any(e[nvars:]):
                raise PolyError(f"{self} uses variables beyond the first {nvars}")
            out[(tuple(e) + (0,) * nvars)[:nvars]] = c
        return Poly(out, nvars)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise VariableCountMismatch(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({e: c * other for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other, self.nvars)._terms
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, nvars={self.nvars})"

    def divide_exact(self, q: Poly) -> Poly | None:
        return divide_exact(self, q)


# -- printing ---------------------------------------------------------------

def _format_monomial(exp: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(VARIABLES[i])
        elif e > 1:
            parts.append(f"{VARIABLES[i]}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lex descending terms, e.g. ``x^2 + 2*x*y - 1/2*y^2``."""
    if p.is_zero():
        return "0"
    pieces = []
    for exp, c in p.sorted_terms():
        mono = _format_monomial(exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyzw])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").replace("·", "*")
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyError(f"cannot parse polynomial {text!r} at position {pos}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg: str):
        raise PolyError(f"{msg} in {self.text!r}")

    def parse(self) -> Poly:
        if not self.tokens:
            self.fail("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        result = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> Poly:
        result = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                if not d.is_constant() or d.is_zero():
                    self.fail("division only by a nonzero constant")
                result = result * (1 / d.constant_value())
            elif kind == "var" or (kind == "op" and val == "("):
                result = result * self.factor()  # implicit product, e.g. 2y or x(x+y)
            else:
                return result

    def factor(self) -> Poly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                self.fail("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.const(int(val), self.nvars)
        if kind == "var":
            idx = VARIABLES.index(val)
            if idx >= self.nvars:
                self.fail(f"variable {val} not available with {self.nvars} variables")
            return Poly.var(idx, self.nvars)
        if kind == "op" and val == "(":
            p = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return p
        if kind == "op" and val == "-":
            return -self.factor()
        self.fail(f"unexpected token {val!r}")


def parse_poly(text: str, nvars: int = 2) -> Poly:
    """Parse polynomial text such as ``"(x+2y)^2"`` or ``"3/2*x*y - 1"``."""
    return _Parser(str(text), nvars).parse()


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if p.nvars != q.nvars:
        raise VariableCountMismatch(f"variable count mismatch: {p.nvars} vs {q.nvars}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise PolyError(f"unknown operation {op!r}")


# -- division ---------------------------------------------------------------

def divide_exact(p: Poly, q: Poly) -> Poly | None:
    """Return r with p == q*r, or None when q does not divide p.

    A single polynomial is a Groebner basis of the ideal it generates, so the
    division remainder is unique; the first leading term that ``LT(q)`` fails
    to divide proves non-divisibility.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.nvars != q.nvars:
        raise VariableCountMismatch(f"variable count mismatch: {p.nvars} vs {q.nvars}")
    lt_exp, lt_c = q.leading_term()
    rest = dict(p.terms)
    quot: dict[tuple[int, ...], Fraction] = {}
    q_terms = list(q.terms.items())
    while rest:
        exp = max(rest, key=grlex_key)
        if any(a < b for a, b in zip(exp, lt_exp)):
            return None
        shift = tuple(a - b for a, b in zip(exp, lt_exp))
        c = rest[exp] / lt_c
        quot[shift] = c
        for e, qc in q_terms:
            t = tuple(a + b for a, b in zip(e, shift))
            v = rest.get(t, 0) - c * qc
            if v:
                rest[t] = v
            else:
                rest.pop(t, None)
    return Poly(quot, p.nvars)


def divides(q: Poly, p: Poly) -> bool:
    return divide_exact(p, q) is not None


# -- homogeneity ------------------------------------------------------------

class _ZeroDegree:
    """Degree reported for the zero polynomial: compatible with any degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _ZeroDegree()


def homogeneous_degree(p: Poly):
    """Common total degree of all terms, ``None`` if mixed, ``ZERO`` for 0."""
    if p.is_zero():
        return ZERO
    degs = {sum(e) for e in p.terms}
    return degs.pop() if len(degs) == 1 else None


# -- factored generators ----------------------------------------------------

@dataclass(frozen=True)
class FactoredGen:
    """unit * prod(factor ** mult) with monic, irreducible, pairwise distinct factors."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]
    nvars: int = 2

    def __post_init__(self):
        if not self.unit:
            raise PolyError("unit of a factored generator must be nonzero")
        seen = set()
        for f, k in self.factors:
            if k <= 0 or f.is_constant() or f in seen or f.nvars != self.nvars:
                raise PolyError(f"invalid factor ({f}, {k})")
            seen.add(f)
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=_factor_sort_key)))

    def expand(self) -> Poly:
        out = Poly.const(self.unit, self.nvars)
        for f, k in self.factors:
            out = out * f ** k
        return out

    def multiplicities(self) -> dict[Poly, int]:
        return dict(self.factors)

    def degree(self) -> int:
        return sum(f.degree() * k for f, k in self.factors)

    def __str__(self) -> str:
        parts = [f"({f})^{k}" if k > 1 else f"({f})" for f, k in self.factors]
        if self.unit != 1 or not parts:
            parts.insert(0, str(self.unit))
        return "*".join(parts)


def _factor_sort_key(item: tuple[Poly, int]):
    f, _ = item
    return (f.degree(), [(-sum(e), tuple(-x for x in e), c) for e, c in f.sorted_terms()])


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _uni_eval(coeffs: list[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _uni_div_linear(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Synthetic division by (t - root); coefficients low to high."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    carry = Fraction(0)
    for k in range(n, 0, -1):
        carry = coeffs[k] + carry * root
        out[k - 1] = carry
    return out


# Divisor enumeration beyond this size is handed to sympy instead.
_ROOT_SEARCH_LIMIT = 10 ** 12


def _factor_univariate(coeffs: list[Fraction]) -> tuple[Fraction, list[tuple[list[Fraction], int]]]:
    """Factor a univariate polynomial (coefficients low to high) over Q.

    Linear factors come from rational-root search; a leftover block of
    degree <= 3 has no rational root and is therefore irreducible.  Larger
    leftover blocks are split with sympy.
    """
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    unit = coeffs[-1]
    coeffs = [c / unit for c in coeffs]
    factors: dict[tuple[Fraction, ...], int] = {}

    def add(f: list[Fraction], k: int = 1):
        key = tuple(f)
        factors[key] = factors.get(key, 0) + k

    zero_mult = 0
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        zero_mult += 1
    if zero_mult:
        add([Fraction(0), Fraction(1)], zero_mult)

    searched = False
    if len(coeffs) > 2:
        den = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        a0, an = ints[0], ints[-1]
        if abs(a0) <= _ROOT_SEARCH_LIMIT and abs(an) <= _ROOT_SEARCH_LIMIT:
            searched = True
            candidates = sorted({Fraction(s * p, q) for p in _divisors(a0)
                                 for q in _divisors(an) for s in (1, -1)})
            for r in candidates:
                while len(coeffs) > 2 and _uni_eval(coeffs, r) == 0:
                    coeffs = _uni_div_linear(coeffs, r)
                    add([-r, Fraction(1)])
    deg = len(coeffs) - 1
    if deg == 1 or (searched and deg <= 3):
        add(coeffs)
    elif deg >= 2:
        for f, k in _sympy_factor(coeffs):
            add(f, k)
    return unit, [(list(f), k) for f, k in factors.items()]


def _sympy_factor(coeffs: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** k for k, c in enumerate(coeffs))
    _, parts = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for f, k in parts:
        fc = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        lead = fc[-1]
        out.append(([c / lead for c in fc], k))
    return out


def factor_generator(p: Poly, supplied: Iterable[tuple[Poly, int]] | None = None) -> FactoredGen:
    """Factor an edge-label generator into monic irreducibles.

    Supported shapes: constants, univariate polynomials, and bivariate
    homogeneous polynomials (factored by dehomogenizing).  Anything else must
    come with a ``supplied`` factorization, which is checked by expansion.
    """
    if p.is_zero():
        raise PolyError("cannot factor the zero polynomial")
    n = p.nvars
    if supplied is not None:
        merged: dict[Poly, int] = {}
        for f, k in supplied:
            f = f.monic()
            if not f.is_constant():
                merged[f] = merged.get(f, 0) + int(k)
        prod = Poly.const(1, n)
        for f, k in merged.items():
            prod = prod * f ** k
        unit = p.leading_term()[1] / prod.leading_term()[1]
        if prod * unit != p:
            raise PolyError(f"supplied factors do not multiply to {p}")
        return FactoredGen(unit, tuple(merged.items()), n)
    used = p.used_variables()
    if not used:
        return FactoredGen(p.constant_value(), (), n)
    if len(used) == 1:
        i = used[0]
        coeffs = [Fraction(0)] * (p.degree() + 1)
        for e, c in p.terms.items():
            coeffs[e[i]] = c
        unit, parts = _factor_univariate(coeffs)
        factors = []
        for f, k in parts:
            fp = Poly({tuple(j if v == i else 0 for v in range(n)): c
                       for j, c in enumerate(f)}, n)
            factors.append((fp, k))
        return _normalized(p, factors)
    if len(used) == 2 and homogeneous_degree(p) is not None:
        i, j = used
        total = p.degree()
        coeffs = [Fraction(0)] * (total + 1)
        for e, c in p.terms.items():
            coeffs[e[i]] = c
        _, parts = _factor_univariate(coeffs)
        deg_q = max(e[i] for e in p.terms)
        factors = []
        y_mult = total - deg_q
        for f, k in parts:
            e_deg = len(f) - 1
            fp = Poly({tuple(a if v == i else (e_deg - a if v == j else 0) for v in range(n)): c
                       for a, c in enumerate(f)}, n)
            factors.append((fp, k))
        if y_mult:
            factors.append((Poly.var(j, n), y_mult))
        return _normalized(p, factors)
    raise UnsupportedFactorization(
        f"cannot factor {p}: only univariate or bivariate homogeneous generators are "
        "supported without a supplied factorization")


def _normalized(p: Poly, factors: list[tuple[Poly, int]]) -> FactoredGen:
    merged: dict[Poly, int] = {}
    for f, k in factors:
        f = f.monic()
        merged[f] = merged.get(f, 0) + k
    prod = Poly.const(1, p.nvars)
    for f, k in merged.items():
        prod = prod * f ** k
    unit = p.leading_term()[1] / prod.leading_term()[1]
    fg = FactoredGen(unit, tuple(merged.items()), p.nvars)
    if fg.expand() != p:
        raise AssertionError(f"factorization of {p} failed to round-trip")
    return fg


def lcm_gen(f: FactoredGen, g: FactoredGen) -> FactoredGen:
    if f.nvars != g.nvars:
        raise VariableCountMismatch(f"variable count mismatch: {f.nvars} vs {g.nvars}")
    mult = f.multiplicities()
    for h, k in g.factors:
        mult[h] = max(mult.get(h, 0), k)
    return FactoredGen(Fraction(1), tuple(mult.items()), f.nvars)


def gcd_gen(f: FactoredGen, g: FactoredGen) -> FactoredGen:
    if f.nvars != g.nvars:
        raise VariableCountMismatch(f"variable count mismatch: {f.nvars} vs {g.nvars}")
    gm = g.multiplicities()
    common = tuple((h, min(k, gm[h])) for h, k in f.factors if h in gm)
    return FactoredGen(Fraction(1), common, f.nvars)


# -- changes of variables ---------------------------------------------------

def substitute_linear(p: Poly, M: Sequence[Sequence[Scalar]],
                      shift: Sequence[Scalar] | None = None) -> Poly:
    """Replace variable i by ``sum_j M[i][j] * x_j + shift[i]``."""
    from .linsolve import determinant

    n = p.nvars
    if len(M) != n or any(len(row) != n for row in M):
        raise PolyError(f"substitution matrix must be {n}x{n}")
    if determinant(M) == 0:
        raise PolyError("substitution matrix is singular")
    shift = list(shift) if shift is not None else [0] * n
    if len(shift) != n:
        raise PolyError(f"shift must have length {n}")
    images = []
    for i in range(n):
        img = Poly.const(shift[i], n)
        for j in range(n):
            if M[i][j]:
                img = img + Poly.var(j, n) * Fraction(M[i][j])
        images.append(img)
    powers: dict[tuple[int, int], Poly] = {}

    def power(i: int, k: int) -> Poly:
        if (i, k) not in powers:
            powers[(i, k)] = images[i] ** k
        return powers[(i, k)]

    out = Poly.zero(n)
    for exp, c in p.terms.items():
        term = Poly.const(c, n)
        for i, k in enumerate(exp):
            if k:
                term = term * power(i, k)
        out = out + term
    return out


@dataclass(frozen=True)
class LinForm:
    """Affine form ``sum coeffs[i] * x_i + const``."""

    coeffs: tuple[Fraction, ...]
    const: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "const", Fraction(self.const))
        if not any(self.coeffs) and not self.const:
            raise PolyError("linear form is identically zero")

    @classmethod
    def from_poly(cls, p: Poly) -> LinForm:
        if p.degree() > 1:
            raise PolyError(f"{p} is not an affine linear form")
        n = p.nvars
        coeffs = tuple(p.coeff(tuple(int(j == i) for j in range(n))) for i in range(n))
        return cls(coeffs, p.constant_value())

    def to_poly(self) -> Poly:
        n = len(self.coeffs)
        out = Poly.const(self.const, n)
        for i, c in enumerate(self.coeffs):
            out = out + Poly.var(i, n) * c
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        return sum((c * Fraction(v) for c, v in zip(self.coeffs, point)), self.const)

    def is_homogeneous(self) -> bool:
        return self.const == 0

    def proportional_to(self, other: LinForm) -> bool:
        a = self.coeffs + (self.const,)
        b = other.coeffs + (other.const,)
        return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(len(a)))
