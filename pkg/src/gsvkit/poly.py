"""Sparse multivariate polynomials over the exact rationals.

A polynomial stores an ordered variable tuple and a dict mapping exponent
tuples to nonzero ``Fraction`` coefficients.  Everything is immutable by
convention: arithmetic returns fresh objects and never mutates inputs, so
values are safe to share across concurrent computations.

Two term orders are provided.  ``GLOBAL_DEGREVLEX`` is the usual
degree-reverse-lexicographic well-order.  ``LOCAL_ANTIDEGREVLEX`` ranks
lower total degree as larger (ties broken reverse-lexicographically), so
the constant monomial 1 beats every other monomial; it is the order under
which leading terms, division and quotient dimensions acquire their
local-ring meaning.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    PolynomialSyntaxError,
    UnknownVariableError,
    VariableMismatchError,
)

Exponents = tuple[int, ...]


# ---------------------------------------------------------------------------
# monomials (bare exponent tuples)

def monomial_degree(exps: Exponents) -> int:
    return sum(exps)


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    """True when the monomial with exponents ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    """Exponents of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class MonomialOrder(Enum):
    GLOBAL_DEGREVLEX = "degrevlex"
    LOCAL_ANTIDEGREVLEX = "antidegrevlex"

    @property
    def is_local(self) -> bool:
        return self is MonomialOrder.LOCAL_ANTIDEGREVLEX

    def key(self, exps: Exponents):
        """Sort key: larger key means larger monomial in this order."""
        deg = sum(exps)
        rev = tuple(-e for e in reversed(exps))
        return (-deg, rev) if self.is_local else (deg, rev)


GLOBAL_DEGREVLEX = MonomialOrder.GLOBAL_DEGREVLEX
LOCAL_ANTIDEGREVLEX = MonomialOrder.LOCAL_ANTIDEGREVLEX


# ---------------------------------------------------------------------------
# polynomials

def _coerce_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Sparse exact polynomial in a fixed ordered variable tuple."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        clean: dict[Exponents, Fraction] = {}
        n = len(variables)
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(
                    f"exponent tuple {exps} has length {len(exps)}, expected {n}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = _coerce_coeff(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, variables, terms) -> "Polynomial":
        """Internal fast path: ``terms`` must already be canonical."""
        self = object.__new__(cls)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", terms)
        return self

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, value) -> "Polynomial":
        variables = tuple(variables)
        value = _coerce_coeff(value)
        if not value:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, index) -> "Polynomial":
        variables = tuple(variables)
        if not 0 <= index < len(variables):
            raise IndexError(f"variable index {index} out of range")
        exps = [0] * len(variables)
        exps[index] = 1
        return cls._raw(variables, {tuple(exps): Fraction(1)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading(self, order: MonomialOrder) -> tuple[Exponents, Fraction]:
        """(exponents, coefficient) of the largest term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def sorted_terms(self, order: MonomialOrder = GLOBAL_DEGREVLEX):
        """Terms as (exponents, coeff) pairs, descending in ``order``."""
        return [(e, self.terms[e]) for e in
                sorted(self.terms, key=order.key, reverse=True)]

    def _require_same_variables(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"variable lists differ: {self.variables} vs {other.variables}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_variables(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return Polynomial._raw(self.variables, terms)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_variables(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) - coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return Polynomial._raw(self.variables, terms)

    def __neg__(self):
        return Polynomial._raw(self.variables,
                               {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._require_same_variables(other)
            terms: dict[Exponents, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    exps = monomial_mul(e1, e2)
                    acc = terms.get(exps, Fraction(0)) + c1 * c2
                    if acc:
                        terms[exps] = acc
                    else:
                        del terms[exps]
            return Polynomial._raw(self.variables, terms)
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, scalar) -> "Polynomial":
        scalar = _coerce_coeff(scalar)
        if not scalar:
            return Polynomial._raw(self.variables, {})
        return Polynomial._raw(self.variables,
                               {e: c * scalar for e, c in self.terms.items()})

    def mul_term(self, exps: Exponents, coeff) -> "Polynomial":
        """Multiply by the single term coeff * x^exps."""
        coeff = _coerce_coeff(coeff)
        if not coeff:
            return Polynomial._raw(self.variables, {})
        return Polynomial._raw(
            self.variables,
            {monomial_mul(e, exps): c * coeff for e, c in self.terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus and substitution ------------------------------------------

    def partial_derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < len(self.variables):
            raise IndexError(f"variable index {index} out of range")
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            new = list(exps)
            new[index] = e - 1
            terms[tuple(new)] = coeff * e
        return Polynomial._raw(self.variables, terms)

    def evaluate(self, point) -> Fraction:
        point = [_coerce_coeff(c) for c in point]
        if len(point) != len(self.variables):
            raise ValueError("point length does not match variable count")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for a, e in zip(point, exps):
                if e:
                    value *= a ** e
            total += value
        return total

    def translate(self, point) -> "Polynomial":
        """p(x + point): the germ of p recentred so that ``point`` maps to 0."""
        point = [_coerce_coeff(c) for c in point]
        if len(point) != len(self.variables):
            raise ValueError("point length does not match variable count")
        # cache (variable, power) -> (x_i + a_i)^power
        cache: dict[tuple[int, int], Polynomial] = {}
        nvars = len(self.variables)

        def shifted_power(i: int, e: int) -> Polynomial:
            got = cache.get((i, e))
            if got is None:
                base = Polynomial.variable(self.variables, i) + \
                    Polynomial.constant(self.variables, point[i])
                got = base ** e
                cache[(i, e)] = got
            return got

        total = Polynomial.zero(self.variables)
        for exps, coeff in self.terms.items():
            part = Polynomial.constant(self.variables, coeff)
            plain = [0] * nvars
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if point[i] == 0:
                    plain[i] = e
                else:
                    part = part * shifted_power(i, e)
            if any(plain):
                part = part.mul_term(tuple(plain), 1)
            total = total + part
        return total

    def specialize_at_one(self, index: int) -> "Polynomial":
        """Set variable ``index`` to 1 and drop it from the variable list."""
        if not 0 <= index < len(self.variables):
            raise IndexError(f"variable index {index} out of range")
        new_vars = self.variables[:index] + self.variables[index + 1:]
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            reduced = exps[:index] + exps[index + 1:]
            acc = terms.get(reduced, Fraction(0)) + coeff
            if acc:
                terms[reduced] = acc
            else:
                del terms[reduced]
        return Polynomial._raw(new_vars, terms)

    def rename_variables(self, new_variables) -> "Polynomial":
        new_variables = tuple(new_variables)
        if len(new_variables) != len(self.variables):
            raise ValueError("variable count mismatch")
        return Polynomial._raw(new_variables, dict(self.terms))

    # -- normalization ------------------------------------------------------

    def primitive_factor(self) -> Fraction:
        """Positive c with c*self having coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        return Fraction(den, num)

    # -- comparison / hashing / text ----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms(GLOBAL_DEGREVLEX):
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# jacobians and minors

def jacobian(polys) -> list[list[Polynomial]]:
    polys = list(polys)
    if not polys:
        raise ValueError("empty polynomial list")
    variables = polys[0].variables
    for p in polys[1:]:
        if p.variables != variables:
            raise VariableMismatchError("jacobian rows use different variables")
    return [[p.partial_derivative(j) for j in range(len(variables))]
            for p in polys]


def poly_det(matrix) -> Polynomial:
    """Determinant of a square polynomial matrix by cofactor expansion."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]
    variables = matrix[0][0].variables
    total = Polynomial.zero(variables)
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def jacobian_minors(polys) -> list[Polynomial]:
    """All r x r minors of the Jacobian of r polynomials in m variables.

    Minors are determinants of the column subsets, listed in lexicographic
    order of the column index tuples, each taken as-is (no alternating
    sign): the ideal the minors generate does not see the sign.
    """
    polys = list(polys)
    r = len(polys)
    m = len(polys[0].variables) if polys else 0
    if r > m:
        raise ValueError(f"need r <= m, got r={r} rows and m={m} variables")
    jac = jacobian(polys)
    out = []
    for cols in itertools.combinations(range(m), r):
        out.append(poly_det([[row[c] for c in cols] for row in jac]))
    return out


def translate_to_origin(p: Polynomial, point) -> Polynomial:
    """p(x + point); evaluating the result at 0 gives p(point)."""
    return p.translate(point)


# ---------------------------------------------------------------------------
# parser
#
# expr     := term (('+'|'-') term)*
# term     := factor ('*' factor)*
# factor   := rational | var | var '^' uint | '(' expr ')' | '-' factor
# rational := uint ('/' uint)?
#
# Whitespace is insignificant; implicit multiplication is rejected.

_END = "end"


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                raise PolynomialSyntaxError(
                    "non-integer literal: decimal point not allowed", j)
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch == ".":
            raise PolynomialSyntaxError(
                "non-integer literal: decimal point not allowed", i)
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append((_END, "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = tuple(variables)
        self.index = {name: i for i, name in enumerate(self.variables)}

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.advance()
        if tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {what}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek()
        if tok[0] != _END:
            raise PolynomialSyntaxError(
                f"unexpected trailing input {tok[1]!r}", tok[2])
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        tok = self.advance()
        kind, text, offset = tok
        if kind == "-":
            return -self.factor()
        if kind == "(":
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if kind == "int":
            value = Fraction(int(text))
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int", "an unsigned integer denominator")
                den = int(den_tok[1])
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_tok[2])
                value /= den
            return Polynomial.constant(self.variables, value)
        if kind == "name":
            if text not in self.index:
                raise UnknownVariableError(text, offset)
            var = Polynomial.variable(self.variables, self.index[text])
            if self.peek()[0] == "^":
                self.advance()
                exp_tok = self.expect("int", "an unsigned integer exponent")
                return var ** int(exp_tok[1])
            return var
        if kind == _END:
            raise PolynomialSyntaxError("unexpected end of input", offset)
        raise PolynomialSyntaxError(f"unexpected token {text!r}", offset)


def parse_polynomial(text: str, variables) -> Polynomial:
    """Parse polynomial text over the given ordered variable names.

    Raises PolynomialSyntaxError (with byte offset) or UnknownVariableError.
    Printing a polynomial with ``str`` and re-parsing is a fixed point.
    """
    return _Parser(text, variables).parse()
