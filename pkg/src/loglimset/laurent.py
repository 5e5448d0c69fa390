"""Exact Laurent polynomials over the rationals in named variables.

A polynomial is a sparse map from integer exponent vectors to nonzero
Fraction coefficients.  The variable order is explicit and carried by every
polynomial: the downstream geometry (Newton polytopes, boundary-slope
detection) is order-sensitive, so nothing here reorders variables silently.

The concrete text grammar accepted by :func:`parse` is

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := NUMBER | VAR ('^' SINT)? | '(' expr ')'
    NUMBER := INT ('/' INT)?          SINT := '-'? INT

with whitespace ignored.  ``render`` emits terms in graded-lexicographic
exponent order (highest first) with explicit '*' and '^', and its output
always reparses to the same polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

ExponentVector = tuple[int, ...]

# Exponents are kept well inside machine-word range; coefficients are
# arbitrary-precision rationals.
MAX_EXPONENT = 2**62


class ParseError(ValueError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    """An identifier in the input is not in the declared variable list."""


class ExponentOverflowError(OverflowError):
    """An exponent exceeded the configured integer width."""


def _checked_exponent(e: int) -> int:
    if abs(e) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {e} exceeds width bound {MAX_EXPONENT}")
    return e


class LaurentPolynomial:
    """Immutable Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_variables", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[ExponentVector, int | Fraction] | Iterable[tuple[ExponentVector, int | Fraction]] = (),
    ):
        vars_tuple = tuple(variables)
        if len(set(vars_tuple)) != len(vars_tuple):
            raise ValueError(f"duplicate variable names in {vars_tuple}")
        m = len(vars_tuple)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[ExponentVector, Fraction] = {}
        for exps, coeff in items:
            key = tuple(int(e) for e in exps)
            if len(key) != m:
                raise ValueError(f"exponent vector {key} has length {len(key)}, expected {m}")
            for e in key:
                _checked_exponent(e)
            c = clean.get(key, Fraction(0)) + Fraction(coeff)
            if c:
                clean[key] = c
            elif key in clean:
                del clean[key]
        self._variables = vars_tuple
        self._terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPolynomial":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: int | Fraction) -> "LaurentPolynomial":
        m = len(tuple(variables))
        return cls(variables, {(0,) * m: Fraction(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "LaurentPolynomial":
        vars_tuple = tuple(variables)
        if name not in vars_tuple:
            raise ValueError(f"{name!r} is not among variables {vars_tuple}")
        exps = tuple(1 if v == name else 0 for v in vars_tuple)
        return cls(vars_tuple, {exps: Fraction(1)})

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "LaurentPolynomial":
        return _Parser(text, tuple(variables)).parse()

    # ------------------------------------------------------------------
    # inspection

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> dict[ExponentVector, Fraction]:
        """Copy of the term map (exponent vector -> nonzero coefficient)."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[ExponentVector, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> frozenset[ExponentVector]:
        return frozenset(self._terms)

    def coefficient(self, exps: ExponentVector) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------
    # ring operations (all pure; operands must share the variable list)

    def _require_same_variables(self, other: "LaurentPolynomial") -> None:
        if self._variables != other._variables:
            raise ValueError(
                f"variable lists differ: {self._variables} vs {other._variables}"
            )

    def __add__(self, other: "LaurentPolynomial | int | Fraction") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(self._variables, other)
        self._require_same_variables(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = out.get(exps, Fraction(0)) + coeff
            if c:
                out[exps] = c
            elif exps in out:
                del out[exps]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._variables = self._variables
        result._terms = out
        return result

    def __radd__(self, other: int | Fraction) -> "LaurentPolynomial":
        return self.__add__(other)

    def __neg__(self) -> "LaurentPolynomial":
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._variables = self._variables
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: "LaurentPolynomial | int | Fraction") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(self._variables, other)
        return self.__add__(-other)

    def __rsub__(self, other: int | Fraction) -> "LaurentPolynomial":
        return (-self).__add__(other)

    def __mul__(self, other: "LaurentPolynomial | int | Fraction") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            scalar = Fraction(other)
            result = LaurentPolynomial.__new__(LaurentPolynomial)
            result._variables = self._variables
            result._terms = {} if scalar == 0 else {e: c * scalar for e, c in self._terms.items()}
            return result
        self._require_same_variables(other)
        out: dict[ExponentVector, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(_checked_exponent(x + y) for x, y in zip(ea, eb))
                c = out.get(key, Fraction(0)) + ca * cb
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._variables = self._variables
        result._terms = out
        return result

    def __rmul__(self, other: int | Fraction) -> "LaurentPolynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined here")
        result = LaurentPolynomial.constant(self._variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._variables, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # substitutions

    def negate_variable(self, name: str) -> "LaurentPolynomial":
        """Substitute ``name -> -name`` (flips the sign of odd-degree terms)."""
        if name not in self._variables:
            raise ValueError(f"{name!r} is not among variables {self._variables}")
        i = self._variables.index(name)
        out = {e: (-c if e[i] % 2 else c) for e, c in self._terms.items()}
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._variables = self._variables
        result._terms = out
        return result

    def substitute_square(self, new_variables: Sequence[str] | None = None) -> "LaurentPolynomial":
        """Replace each variable square by a fresh variable (x_i^2 -> X_i).

        Every exponent of every variable must be even; exponents are halved
        and the variables renamed (default: uppercased names).
        """
        if new_variables is None:
            new_vars = tuple(v.upper() for v in self._variables)
        else:
            new_vars = tuple(new_variables)
        if len(new_vars) != len(self._variables) or len(set(new_vars)) != len(new_vars):
            raise ValueError(f"need {len(self._variables)} distinct fresh names, got {new_vars}")
        out: dict[ExponentVector, Fraction] = {}
        for exps, coeff in self._terms.items():
            for v, e in zip(self._variables, exps):
                if e % 2:
                    raise ValueError(f"odd exponent {e} of {v!r}; square substitution undefined")
            out[tuple(e // 2 for e in exps)] = coeff
        return LaurentPolynomial(new_vars, out)

    # ------------------------------------------------------------------
    # text form

    def render(self) -> str:
        """Canonical text form; ``parse(render(f), f.variables) == f``."""
        if not self._terms:
            return "0"
        order = sorted(
            self._terms,
            key=lambda e: (-sum(e), tuple(-x for x in e)),
        )
        pieces: list[str] = []
        for exps in order:
            coeff = self._terms[exps]
            body = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self._variables, exps)
                if e != 0
            )
            mag = abs(coeff)
            if body and mag == 1:
                s = body
            elif body:
                s = f"{mag}*{body}"
            else:
                s = str(mag)
            if not pieces:
                pieces.append(f"-{s}" if coeff < 0 else s)
            else:
                pieces.append(f"- {s}" if coeff < 0 else f"+ {s}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._variables!r}, {self.render()!r})"


def parse(text: str, variables: Sequence[str]) -> LaurentPolynomial:
    """Parse polynomial text over an explicit ordered variable list."""
    return LaurentPolynomial.parse(text, variables)


_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/])|(?P<bad>\S)")


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.tokens: list[tuple[str, str, int]] = []
        for match in _TOKEN_RE.finditer(text):
            kind = match.lastgroup or "bad"
            if kind == "bad":
                raise ParseError(f"unexpected character {match.group()!r}", match.start())
            self.tokens.append((kind, match.group(), match.start()))
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("end", "", len(self.text))

    def advance(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, at = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}, found {value or 'end of input'!r}", at)
        self.advance()

    def parse(self) -> LaurentPolynomial:
        if not self.tokens:
            raise ParseError("empty input", 0)
        poly = self.parse_expr()
        kind, value, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", at)
        return poly

    def parse_expr(self) -> LaurentPolynomial:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        poly = self.parse_term() * sign
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                term = self.parse_term()
                poly = poly + (term if value == "+" else -term)
            else:
                return poly

    def parse_term(self) -> LaurentPolynomial:
        poly = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.parse_factor()
            else:
                return poly

    def parse_factor(self) -> LaurentPolynomial:
        kind, value, at = self.advance()
        if kind == "int":
            numerator = int(value)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.advance()
                k3, v3, at3 = self.advance()
                if k3 != "int":
                    raise ParseError("expected integer denominator after '/'", at3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", at3)
                return LaurentPolynomial.constant(self.variables, Fraction(numerator, int(v3)))
            return LaurentPolynomial.constant(self.variables, numerator)
        if kind == "name":
            if value not in self.variables:
                raise UnknownVariableError(f"unknown variable {value!r}", at)
            exponent = 1
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "^":
                self.advance()
                exponent = self.parse_signed_int()
            exps = tuple(exponent if v == value else 0 for v in self.variables)
            return LaurentPolynomial(self.variables, {exps: Fraction(1)})
        if kind == "op" and value == "(":
            poly = self.parse_expr()
            self.expect_op(")")
            return poly
        raise ParseError(f"expected a number, variable or '(', found {value or 'end of input'!r}", at)

    def parse_signed_int(self) -> int:
        kind, value, at = self.advance()
        negative = False
        if kind == "op" and value == "-":
            negative = True
            kind, value, at = self.advance()
        if kind != "int":
            raise ParseError("expected integer exponent after '^'", at)
        return _checked_exponent(-int(value) if negative else int(value))


# ----------------------------------------------------------------------
# factored forms


def unit_normal(f: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by the unique unit (+-monomial) putting the lex-least support
    point at the origin with a positive coefficient there."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no unit-normal form")
    least = min(f.support())
    shifted = {tuple(e - t for e, t in zip(exps, least)): c for exps, c in f.items()}
    if shifted[(0,) * len(f.variables)] < 0:
        shifted = {e: -c for e, c in shifted.items()}
    return LaurentPolynomial(f.variables, shifted)


class FactorList:
    """Ordered list of nonzero factors, each with a positive multiplicity."""

    __slots__ = ("_factors",)

    def __init__(self, factors: Iterable[LaurentPolynomial | tuple[LaurentPolynomial, int]]):
        items: list[tuple[LaurentPolynomial, int]] = []
        variables: tuple[str, ...] | None = None
        for entry in factors:
            if isinstance(entry, LaurentPolynomial):
                poly, mult = entry, 1
            else:
                poly, mult = entry
            if poly.is_zero():
                raise ValueError("zero polynomial cannot be a factor")
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            if variables is None:
                variables = poly.variables
            elif poly.variables != variables:
                raise ValueError("all factors must share one variable list")
            items.append((poly, int(mult)))
        if variables is None:
            raise ValueError("a factor list needs at least one factor")
        self._factors = tuple(items)

    @property
    def factors(self) -> tuple[tuple[LaurentPolynomial, int], ...]:
        return self._factors

    @property
    def variables(self) -> tuple[str, ...]:
        return self._factors[0][0].variables

    def __iter__(self) -> Iterator[tuple[LaurentPolynomial, int]]:
        return iter(self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def expand(self) -> LaurentPolynomial:
        """The product of all factors with multiplicities."""
        out = LaurentPolynomial.constant(self.variables, 1)
        for poly, mult in self._factors:
            out = out * poly**mult
        return out

    def deduplicated(self) -> "FactorList":
        """Distinct factors up to units, each with multiplicity one.

        Factors are unit-normalised, duplicates merged, and the result sorted
        canonically, so two lists describing the same squarefree locus compare
        equal.
        """
        normals = {unit_normal(poly) for poly, _ in self._factors}
        ordered = sorted(normals, key=lambda p: (p.variables, sorted(p.terms.items())))
        return FactorList([(p, 1) for p in ordered])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactorList):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(self._factors)

    def __repr__(self) -> str:
        inner = " * ".join(
            f"({poly.render()})" + (f"^{mult}" if mult != 1 else "")
            for poly, mult in self._factors
        )
        return f"FactorList[{inner}]"
