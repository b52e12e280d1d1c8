"""Sparse multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` throughout, so zero tests, slice
comparisons and GCDs are exact.  A polynomial keeps an ordered tuple of
variable names plus a dict mapping exponent tuples to nonzero coefficients.
Terms are printed in graded-lexicographic order (total degree first, then
the declared variable order), which makes parse -> print -> parse a fixed
point.

The accepted text grammar:

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('+'|'-') factor | power
    power  := atom ['^' INT]          # INT must be non-negative
    atom   := INT ['/' INT] | NAME | '(' expr ')'

Whitespace is ignored.  NAME must be one of the declared variables.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "PolyParseError",
    "Polynomial",
    "UniPoly",
    "parse_poly",
    "uni_roots_in",
    "bivariate_gcd",
    "try_divide",
]

Exponent = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    # graded-lex: compare total degree first, then the exponent vector
    return (sum(exp), exp)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Fraction | int]):
        self.vars: tuple[str, ...] = tuple(variables)
        nvars = len(self.vars)
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent vector {exp} does not match {nvars} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c != 0:
                clean[exp] = c
        self.terms: dict[Exponent, Fraction] = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Polynomial:
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: Fraction | int) -> Polynomial:
        return cls(variables, {(0,) * len(tuple(variables)): Fraction(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> Polynomial:
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"undeclared variable {name!r}")
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): _ONE})

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        """Maximum total exponent over all terms (0 for the zero polynomial)."""
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self._var_index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading_exponent(self) -> Exponent:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex_key)

    def _var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise ValueError(f"undeclared variable {name!r}") from None

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError("polynomials declare different variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return None

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, _ZERO) + c
        return Polynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return -(self - other)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, _ZERO) + c1 * c2
        return Polynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation and calculus --------------------------------------------

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        """Exact value at a point given in declared variable order."""
        if len(values) != len(self.vars):
            raise ValueError(
                f"arity mismatch: {len(self.vars)} variables, {len(values)} values"
            )
        vals = [v if isinstance(v, Fraction) else Fraction(v) for v in values]
        powers: list[dict[int, Fraction]] = [{} for _ in vals]
        total = _ZERO
        for exp, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exp):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = vals[i] ** e
                        powers[i][e] = p
                    term = term * p
            total += term
        return total

    def partial(self, name: str) -> Polynomial:
        """Formal partial derivative with respect to `name`."""
        i = self._var_index(name)
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            if exp[i] == 0:
                continue
            e = list(exp)
            e[i] -= 1
            out[tuple(e)] = out.get(tuple(e), _ZERO) + coeff * exp[i]
        return Polynomial(self.vars, out)

    def specialize(self, bindings: Mapping[str, Fraction | int]) -> Polynomial:
        """Substitute values for a subset of the variables.

        Returns a polynomial in the remaining variables; the result is the
        zero polynomial exactly when every coefficient cancels.
        """
        for name in bindings:
            self._var_index(name)
        bound = {self._var_index(n): Fraction(v) for n, v in bindings.items()}
        keep = [i for i in range(len(self.vars)) if i not in bound]
        out: dict[Exponent, Fraction] = {}
        powers: dict[tuple[int, int], Fraction] = {}
        for exp, coeff in self.terms.items():
            c = coeff
            for i, v in bound.items():
                e = exp[i]
                if e:
                    p = powers.get((i, e))
                    if p is None:
                        p = v ** e
                        powers[(i, e)] = p
                    c = c * p
            rest = tuple(exp[i] for i in keep)
            nc = out.get(rest, _ZERO) + c
            if nc == 0:
                out.pop(rest, None)
            else:
                out[rest] = nc
        return Polynomial([self.vars[i] for i in keep], out)

    def to_unipoly(self) -> UniPoly:
        """Dense univariate view; requires exactly one declared variable."""
        if len(self.vars) != 1:
            raise ValueError(f"polynomial in {len(self.vars)} variables is not univariate")
        if self.is_zero:
            return UniPoly([])
        deg = max(e[0] for e in self.terms)
        coeffs = [_ZERO] * (deg + 1)
        for (e,), c in self.terms.items():
            coeffs[e] = c
        return UniPoly(coeffs)

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[exp]
            factors = []
            for name, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.vars)!r}, {str(self)!r})"


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def evaluate(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"


def uni_roots_in(g: UniPoly, candidates: Iterable[Fraction | int]) -> set[Fraction]:
    """Exact roots of g among the candidate values.

    The identically-zero polynomial is rejected: a degenerate slice must be
    handled by the caller (it vanishes everywhere, not at a root set).
    """
    if g.is_zero:
        raise ValueError("identically-zero polynomial: every candidate is a root")
    return {Fraction(c) for c in candidates if g.evaluate(c) == 0}


# -- parsing ------------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out: list[tuple[str, str, int]] = []
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
            out.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
        elif ch in "+-*^/()":
            out.append((ch, ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = variables

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expr()
        kind, _, at = self.peek()
        if kind != "end":
            raise PolyParseError("unexpected trailing input", at)
        return poly

    def expr(self) -> Polynomial:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.advance()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Polynomial:
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = node * self.factor()
        return node

    def factor(self) -> Polynomial:
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            op, _, _ = self.advance()
            inner = self.factor()
            return inner if op == "+" else -inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            kind, value, at = self.peek()
            if kind == "-":
                raise PolyParseError("negative exponent", at)
            if kind != "int":
                raise PolyParseError("exponent must be a non-negative integer", at)
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, at = self.advance()
        if kind == "int":
            num = int(value)
            if self.peek()[0] == "/":
                self.advance()
                dkind, dvalue, dat = self.advance()
                if dkind != "int":
                    raise PolyParseError("expected integer denominator", dat)
                if int(dvalue) == 0:
                    raise PolyParseError("zero denominator", dat)
                return Polynomial.constant(self.vars, Fraction(num, int(dvalue)))
            return Polynomial.constant(self.vars, num)
        if kind == "name":
            if value not in self.vars:
                raise PolyParseError(f"undeclared variable {value!r}", at)
            return Polynomial.variable(self.vars, value)
        if kind == "(":
            inner = self.expr()
            ckind, _, cat = self.advance()
            if ckind != ")":
                raise PolyParseError("expected ')'", cat)
            return inner
        raise PolyParseError(f"unexpected token {value!r}" if value else "unexpected end of input", at)


def parse_poly(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse polynomial text over the declared variables into canonical form."""
    return _Parser(text, tuple(variables)).parse()


# -- exact division ------------------------------------------------------------


def try_divide(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Return q with f == q*g when g divides f exactly, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.vars != g.vars:
        raise ValueError("polynomials declare different variables")
    if f.is_zero:
        return Polynomial.zero(f.vars)
    g_lead = g.leading_exponent()
    g_lc = g.terms[g_lead]
    rem = dict(f.terms)
    quo: dict[Exponent, Fraction] = {}
    while rem:
        r_lead = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(r_lead, g_lead))
        if any(d < 0 for d in diff):
            return None
        c = rem[r_lead] / g_lc
        quo[diff] = quo.get(diff, _ZERO) + c
        for exp, coeff in g.terms.items():
            e = tuple(a + b for a, b in zip(diff, exp))
            nv = rem.get(e, _ZERO) - c * coeff
            if nv == 0:
                rem.pop(e, None)
            else:
                rem[e] = nv
    return Polynomial(f.vars, quo)


# -- bivariate GCD --------------------------------------------------------------
#
# Euclid over the rational-function field in the first variable: a bivariate
# polynomial is handled as a polynomial in the second variable whose
# coefficients are dense univariate polynomials in the first.  The primitive
# polynomial remainder sequence keeps coefficient growth in check.

_UC = tuple[Fraction, ...]  # univariate coefficient vector, ascending, trimmed


def _u_trim(cs: list[Fraction]) -> _UC:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _u_mul(a: _UC, b: _UC) -> _UC:
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _u_trim(out)

def _u_sub(a: _UC, b: _UC) -> _UC:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for j, cb in enumerate(b):
        out[j] -= cb
    return _u_trim(out)


def _u_divmod(a: _UC, b: _UC) -> tuple[_UC, _UC]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    quo = [_ZERO] * max(len(a) - len(b) + 1, 0)
    db, lb = len(b) - 1, b[-1]
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        c = rem[-1] / lb
        quo[shift] = c
        for j, cb in enumerate(b):
            rem[shift + j] -= c * cb
        while rem and rem[-1] == 0:
            rem.pop()
    return _u_trim(quo), _u_trim(rem)


def _u_div_exact(a: _UC, b: _UC) -> _UC:
    q, r = _u_divmod(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def _u_monic(a: _UC) -> _UC:
    if not a:
        return ()
    lc = a[-1]
    return tuple(c / lc for c in a)


def _u_gcd(a: _UC, b: _UC) -> _UC:
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    return _u_monic(a)


_Rec = list  # list of _UC, index = degree in the main (second) variable


def _rec_trim(r: _Rec) -> _Rec:
    while r and not r[-1]:
        r.pop()
    return r


def _rec_content(r: _Rec) -> _UC:
    cont: _UC = ()
    for c in r:
        if c:
            cont = _u_gcd(cont, c) if cont else _u_monic(c)
    return cont


def _rec_primitive(r: _Rec) -> _Rec:
    cont = _rec_content(r)
    return [_u_div_exact(c, cont) if c else () for c in r]


def _rec_prem(f: _Rec, g: _Rec) -> _Rec:
    # pseudo-remainder of f by g in the main variable
    f = list(f)
    dg, lg = len(g) - 1, g[-1]
    while f and len(f) - 1 >= dg:
        shift = len(f) - 1 - dg
        lf = f[-1]
        out = [_u_mul(lg, c) for c in f[:-1]]
        for i, gc in enumerate(g[:-1]):
            out[shift + i] = _u_sub(out[shift + i], _u_mul(lf, gc))
        f = _rec_trim(out)
    return f


def _to_rec(p: Polynomial) -> _Rec:
    dy = max(e[1] for e in p.terms)
    dx = max(e[0] for e in p.terms)
    rows: list[list[Fraction]] = [[_ZERO] * (dx + 1) for _ in range(dy + 1)]
    for (i, j), c in p.terms.items():
        rows[j][i] = c
    return _rec_trim([_u_trim(row) for row in rows])


def _from_rec(r: _Rec, variables: tuple[str, ...]) -> Polynomial:
    terms: dict[Exponent, Fraction] = {}
    for j, row in enumerate(r):
        for i, c in enumerate(row):
            if c != 0:
                terms[(i, j)] = c
    return Polynomial(variables, terms)


def _make_primitive(p: Polynomial) -> Polynomial:
    """Scale to coprime integer coefficients with positive graded-lex leader."""
    if p.is_zero:
        return p
    denom_lcm = math.lcm(*(c.denominator for c in p.terms.values()))
    num_gcd = math.gcd(*(abs(c.numerator * (denom_lcm // c.denominator)) for c in p.terms.values()))
    scale = Fraction(denom_lcm, num_gcd)
    if p.terms[p.leading_exponent()] < 0:
        scale = -scale
    return Polynomial(p.vars, {e: c * scale for e, c in p.terms.items()})


def bivariate_gcd(g1: Polynomial, g2: Polynomial) -> Polynomial:
    """GCD of two bivariate polynomials, primitive with positive leader.

    Used to expose plane-curve components shared by many parameter slices of
    a quadrivariate polynomial; a nontrivial result means the two slices have
    a common component.
    """
    if len(g1.vars) != 2 or g1.vars != g2.vars:
        raise ValueError("expected two bivariate polynomials over the same variables")
    if g1.is_zero or g2.is_zero:
        raise ValueError("gcd of the zero polynomial is undefined here")
    a, b = _to_rec(g1), _to_rec(g2)
    if len(a) == 1 or len(b) == 1:
        # one input is free of the main variable: gcd lives in the first variable
        u = a[0] if len(a) == 1 else _rec_content(a)
        v = b[0] if len(b) == 1 else _rec_content(b)
        g = [_u_gcd(u, v)]
    else:
        cont = _u_gcd(_rec_content(a), _rec_content(b))
        a, b = _rec_primitive(a), _rec_primitive(b)
        while b:
            r = _rec_prem(a, b)
            if r:
                r = _rec_primitive(r)
            a, b = b, r
        g = [_u_mul(c, cont) for c in a]
    return _make_primitive(_from_rec(_rec_trim(g), g1.vars))
