"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent vectors (tuples of non-negative ints,
one slot per variable of the context) to nonzero ``fractions.Fraction``
coefficients.  Zero coefficients are never stored, so the zero polynomial
has an empty term map.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator

Monomial = tuple  # tuple[int, ...]
OrderKey = Callable[[Monomial], object]


def grevlex_key(m: Monomial):
    """Sort key realizing graded reverse lexicographic order (bigger sorts later)."""
    return (sum(m), tuple(-m[i] for i in range(len(m) - 1, -1, -1)))


def lex_key(m: Monomial):
    """Sort key realizing lexicographic order with the first variable largest."""
    return tuple(m)


def elim_key(k: int) -> OrderKey:
    """Block order eliminating the first ``k`` variables.

    Any monomial involving one of the first ``k`` variables is larger than any
    monomial in the remaining variables alone, so a Groebner basis under this
    order intersects cleanly with the subring in the trailing variables.
    """

    def key(m: Monomial):
        return (grevlex_key(m[:k]), grevlex_key(m[k:]))

    return key


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial ``a`` divides monomial ``b``."""
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """The quotient monomial a / b (assumes b divides a)."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    ``ctx`` is the tuple of variable names; ``terms`` maps exponent tuples to
    nonzero Fractions.  Instances are hashable and compare by value.
    """

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: tuple, terms: dict | None = None):
        self.ctx = tuple(ctx)
        cleaned = {}
        if terms:
            for mono, coeff in terms.items():
                c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if c != 0:
                    cleaned[tuple(mono)] = c
        self.terms = cleaned
        self._hash = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx) -> "Polynomial":
        return cls(ctx, {})

    @classmethod
    def constant(cls, ctx, value) -> "Polynomial":
        n = len(ctx)
        return cls(ctx, {(0,) * n: Fraction(value)})

    @classmethod
    def one(cls, ctx) -> "Polynomial":
        return cls.constant(ctx, 1)

    @classmethod
    def variable(cls, ctx, name: str) -> "Polynomial":
        i = tuple(ctx).index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(ctx)))
        return cls(ctx, {mono: Fraction(1)})

    @classmethod
    def from_monomial(cls, ctx, mono: Monomial, coeff=1) -> "Polynomial":
        return cls(ctx, {tuple(mono): Fraction(coeff)})

    @classmethod
    def parse(cls, ctx, text: str) -> "Polynomial":
        """Parse ``text`` like ``"x^2*y - 3/4*x + 1"`` over the variables ``ctx``."""
        return _Parser(tuple(ctx), text).parse()

    # ---- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.ctx), Fraction(0))

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading(self, key: OrderKey = grevlex_key) -> tuple:
        """(monomial, coefficient) of the leading term under ``key``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def sorted_terms(self, key: OrderKey = grevlex_key) -> list:
        """Terms sorted descending under ``key`` (deterministic)."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=key, reverse=True)]

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.sorted_terms())

    # ---- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ValueError(f"context mismatch: {other.ctx} vs {self.ctx}")
            return other
        return Polynomial.constant(self.ctx, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if c == 0:
                return Polynomial.zero(self.ctx)
            return Polynomial(self.ctx, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        prod: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = prod.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    prod.pop(m, None)
                else:
                    prod[m] = s
        return Polynomial(self.ctx, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return self * Fraction(c)

    def monic(self, key: OrderKey = grevlex_key) -> "Polynomial":
        if self.is_zero():
            return self
        _, lc = self.leading(key)
        return self * (Fraction(1) / lc)

    # ---- context plumbing --------------------------------------------

    def extend_ctx(self, new_ctx: tuple) -> "Polynomial":
        """Re-express in a larger context containing all current variables."""
        new_ctx = tuple(new_ctx)
        pos = [new_ctx.index(v) for v in self.ctx]
        n = len(new_ctx)
        terms = {}
        for m, c in self.terms.items():
            mono = [0] * n
            for i, e in enumerate(m):
                mono[pos[i]] = e
            terms[tuple(mono)] = c
        return Polynomial(new_ctx, terms)

    def restrict_ctx(self, new_ctx: tuple) -> "Polynomial":
        """Drop variables that never appear; fails if a dropped variable occurs."""
        new_ctx = tuple(new_ctx)
        keep = []
        for i, v in enumerate(self.ctx):
            if v in new_ctx:
                keep.append((i, new_ctx.index(v)))
            else:
                if any(m[i] for m in self.terms):
                    raise ValueError(f"variable {v} occurs but is being dropped")
        n = len(new_ctx)
        terms = {}
        for m, c in self.terms.items():
            mono = [0] * n
            for old, new in keep:
                mono[new] = m[old]
            terms[tuple(mono)] = c
        return Polynomial(new_ctx, terms)

    def involves(self, name: str) -> bool:
        i = self.ctx.index(name)
        return any(m[i] for m in self.terms)

    # ---- comparison / display ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ctx, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def _term_str(self, m: Monomial, c: Fraction) -> str:
        factors = []
        for name, e in zip(self.ctx, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return str(c)
        body = "*".join(factors)
        if c == 1:
            return body
        if c == -1:
            return f"-{body}"
        return f"{c}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            s = self._term_str(m, c)
            if not parts:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(f"- {s[1:]}")
            else:
                parts.append(f"+ {s}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.ctx!r}, {self!s})"


class _Parser:
    """Recursive-descent parser for the textual polynomial format."""

    def __init__(self, ctx: tuple, text: str):
        self.ctx = ctx
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list:
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("num", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("var", text[i:j]))
                i = j
            elif text.startswith("**", i):
                tokens.append(("op", "^"))
                i += 2
            elif ch in "+-*/^()":
                tokens.append(("op", ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in polynomial")
        return tokens

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        p = self._expr()
        if self.pos != len(self.tokens):
            raise ValueError("trailing input in polynomial")
        return p

    def _expr(self) -> Polynomial:
        kind, val = self._peek()
        negate = False
        if (kind, val) == ("op", "-"):
            self._next()
            negate = True
        elif (kind, val) == ("op", "+"):
            self._next()
        p = self._term()
        if negate:
            p = -p
        while True:
            kind, val = self._peek()
            if (kind, val) == ("op", "+"):
                self._next()
                p = p + self._term()
            elif (kind, val) == ("op", "-"):
                self._next()
                p = p - self._term()
            else:
                return p

    def _term(self) -> Polynomial:
        p = self._factor()
        while True:
            kind, val = self._peek()
            if (kind, val) == ("op", "*"):
                self._next()
                p = p * self._factor()
            elif (kind, val) == ("op", "/"):
                self._next()
                kind2, val2 = self._next()
                if kind2 != "num":
                    raise ValueError("only division by integers is supported")
                p = p * Fraction(1, val2)
            elif kind in ("var",) or (kind, val) == ("op", "("):
                # implicit multiplication, e.g. "2x" or "x(y+1)"
                p = p * self._factor()
            else:
                return p

    def _factor(self) -> Polynomial:
        p = self._atom()
        kind, val = self._peek()
        if (kind, val) == ("op", "^"):
            self._next()
            kind2, val2 = self._next()
            if kind2 != "num":
                raise ValueError("exponent must be an integer")
            p = p ** val2
        return p

    def _atom(self) -> Polynomial:
        kind, val = self._next()
        if kind == "num":
            return Polynomial.constant(self.ctx, val)
        if kind == "var":
            if val not in self.ctx:
                raise ValueError(f"unknown variable {val!r} (context {self.ctx})")
            return Polynomial.variable(self.ctx, val)
        if (kind, val) == ("op", "("):
            p = self._expr()
            kind2, val2 = self._next()
            if (kind2, val2) != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return p
        if (kind, val) == ("op", "-"):
            return -self._atom()
        raise ValueError(f"unexpected token {val!r}")


def monomials_up_to(nvars: int, degree: int) -> list:
    """All exponent tuples of total degree <= degree, sorted ascending grevlex."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    out.sort(key=grevlex_key)
    return out
