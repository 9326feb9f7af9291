"""Exact sparse multivariate polynomial arithmetic over the rationals.

This layer is the substrate for everything else in the package.  Coefficients
are arbitrary-precision ``fractions.Fraction`` values -- machine floats would
silently corrupt the discrete prime-set answers computed downstream -- and
every value is immutable so results can be cached and shared freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

Exponents = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RingError(ValueError):
    """Invalid ring-level input or mismatched contexts."""


class ParseError(RingError):
    """Malformed polynomial text."""

    def __init__(self, message: str, position: int | None = None) -> None:
        if position is not None:
            message = f"{message} (column {position + 1})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class RingCtx:
    """The polynomial ring Q[x_1..x_n], given by its ordered variable names."""

    var_names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not self.var_names:
            raise RingError("a ring needs at least one variable")
        if any(not name for name in self.var_names):
            raise RingError("variable names must be nonempty")
        if len(set(self.var_names)) != len(self.var_names):
            raise RingError("variable names must be unique")

    @classmethod
    def parse(cls, text: str) -> "RingCtx":
        names = [part.strip() for part in text.split(",") if part.strip()]
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise RingError(f"unknown variable {name!r}") from None

    def extend(self, extra: Iterable[str]) -> "RingCtx":
        return RingCtx(self.var_names + tuple(extra))

    def fresh_name(self, stem: str) -> str:
        """A variable name not already declared, for internal tag variables."""
        if stem not in self.var_names:
            return stem
        k = 0
        while f"{stem}{k}" in self.var_names:
            k += 1
        return f"{stem}{k}"

    def __str__(self) -> str:
        return "Q[" + ", ".join(self.var_names) + "]"


def ring(*names: str) -> RingCtx:
    return RingCtx(tuple(names))


# ---------------------------------------------------------------------------
# Monomials as bare exponent tuples.

def mono_one(n: int) -> Exponents:
    return (0,) * n


def mono_mul(u: Exponents, v: Exponents) -> Exponents:
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u: Exponents, v: Exponents) -> bool:
    """True when the monomial with exponents u divides the one with v."""
    return all(a <= b for a, b in zip(u, v))


def mono_quotient(u: Exponents, v: Exponents) -> Exponents:
    if not mono_divides(v, u):
        raise RingError("monomial quotient requested for a non-divisor")
    return tuple(a - b for a, b in zip(u, v))


def mono_lcm(u: Exponents, v: Exponents) -> Exponents:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_gcd(u: Exponents, v: Exponents) -> Exponents:
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_degree(u: Exponents) -> int:
    return sum(u)


def mono_support(u: Exponents) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(u) if e)


def _degrevlex_key(e: Exponents):
    # u > v iff deg u > deg v, else the last nonzero entry of u - v is < 0.
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative monomial well-order usable as a max-selection key.

    kind "block" is the elimination order: exponents are compared degrevlex
    on the first (dominant) index block, then on the second, so any monomial
    involving a dominant variable beats every monomial that avoids them.
    """

    kind: str
    blocks: tuple[tuple[int, ...], ...] = ()

    def key(self, e: Exponents):
        if self.kind == "degrevlex":
            return _degrevlex_key(e)
        if self.kind == "lex":
            return e
        return tuple(_degrevlex_key(tuple(e[i] for i in blk)) for blk in self.blocks)

    def token(self):
        return (self.kind, self.blocks)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(drop: Iterable[int], n: int) -> MonomialOrder:
    drop_t = tuple(sorted(set(drop)))
    if not drop_t:
        return DEGREVLEX
    keep_t = tuple(i for i in range(n) if i not in set(drop_t))
    return MonomialOrder("block", (drop_t, keep_t))


def order_by_name(name: str) -> MonomialOrder:
    try:
        return {"degrevlex": DEGREVLEX, "lex": LEX}[name]
    except KeyError:
        raise RingError(f"unknown monomial order {name!r}") from None


# ---------------------------------------------------------------------------
# Polynomials.

class Polynomial:
    """An immutable sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: RingCtx, terms: dict | None = None) -> None:
        cleaned: dict[Exponents, Fraction] = {}
        if terms:
            n = ctx.n
            for e, c in terms.items():
                if len(e) != n:
                    raise RingError("exponent tuple has wrong length")
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    cleaned[tuple(e)] = c
        self.ctx = ctx
        self._terms = cleaned
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ctx: RingCtx) -> "Polynomial":
        return cls(ctx)

    @classmethod
    def const(cls, ctx: RingCtx, c) -> "Polynomial":
        return cls(ctx, {mono_one(ctx.n): Fraction(c)})

    @classmethod
    def variable(cls, ctx: RingCtx, name: str) -> "Polynomial":
        i = ctx.index(name)
        e = tuple(1 if j == i else 0 for j in range(ctx.n))
        return cls(ctx, {e: _ONE})

    @classmethod
    def from_monomial(cls, ctx: RingCtx, e: Exponents, c=1) -> "Polynomial":
        return cls(ctx, {tuple(e): Fraction(c)})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def is_term(self) -> bool:
        """Exactly one monomial (with any coefficient)."""
        return len(self._terms) == 1

    def term_map(self) -> dict[Exponents, Fraction]:
        """Read-only view of the term dict; callers must not mutate it."""
        return self._terms

    def coeff(self, e: Exponents) -> Fraction:
        return self._terms.get(tuple(e), _ZERO)

    def support(self) -> set[int]:
        out: set[int] = set()
        for e in self._terms:
            for i, x in enumerate(e):
                if x:
                    out.add(i)
        return out

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def lead(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exponents, Fraction]:
        if not self._terms:
            raise RingError("zero polynomial has no leading term")
        e = max(self._terms, key=order.key)
        return e, self._terms[e]

    def terms_sorted(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        _, c = self.lead(order)
        if c == 1:
            return self
        return self * (_ONE / c)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise RingError("mixed ring contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.ctx, other)
        return None

    def __add__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.ctx)
            return Polynomial(self.ctx, {e: v * c for e, v in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = mono_mul(e1, e2)
                v = out.get(e, _ZERO) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise RingError("negative powers are not polynomials")
        out = Polynomial.const(self.ctx, 1)
        for _ in range(k):
            out = out * self
        return out

    def mul_term(self, e: Exponents, c: Fraction) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.ctx)
        return Polynomial(self.ctx, {mono_mul(t, e): v * c for t, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ctx == other.ctx
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<poly {self} over {self.ctx}>"

    def map_vars(self, new_ctx: RingCtx, index_map: dict[int, int]) -> "Polynomial":
        """Reinterpret over new_ctx, sending old variable i to index_map[i].

        Every variable actually appearing in the polynomial must be mapped.
        """
        out: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            ne = [0] * new_ctx.n
            for i, x in enumerate(e):
                if x:
                    if i not in index_map:
                        raise RingError("variable lost by context remap")
                    ne[index_map[i]] = x
            key = tuple(ne)
            v = out.get(key, _ZERO) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return Polynomial(new_ctx, out)


# ---------------------------------------------------------------------------
# Text format: `^` for powers, `*` optional, integer or rational coefficients.

_NUM_RE = re.compile(r"\d+(?:/\d+)?")


def _tokenize(text: str, ctx: RingCtx) -> list[tuple[str, str, int]]:
    names = sorted(ctx.var_names, key=len, reverse=True)
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        m = _NUM_RE.match(text, i)
        if m:
            tokens.append(("num", m.group(), i))
            i = m.end()
            continue
        for name in names:
            if text.startswith(name, i):
                tokens.append(("var", name, i))
                i += len(name)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_poly(text: str, ctx: RingCtx) -> Polynomial:
    """Parse polynomial text like ``x^2*y - 3*z`` or ``1/2x y``."""
    tokens = _tokenize(text, ctx)
    if not tokens:
        raise ParseError("empty polynomial text")
    terms: dict[Exponents, Fraction] = {}
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, "", len(text))

    def parse_number(tok_text: str, at: int) -> Fraction:
        if "/" in tok_text:
            num, den = tok_text.split("/")
            if int(den) == 0:
                raise ParseError("division by zero in a coefficient", at)
            return Fraction(int(num), int(den))
        return Fraction(int(tok_text))

    while pos < len(tokens):
        sign = _ONE
        kind, val, at = peek()
        if kind in "+-":
            if kind == "-":
                sign = -_ONE
            pos += 1
            kind, val, at = peek()
        coeff = sign
        exps = [0] * ctx.n
        saw_factor = False
        while True:
            kind, val, at = peek()
            if kind == "num":
                coeff *= parse_number(val, at)
                pos += 1
                saw_factor = True
            elif kind == "var":
                idx = ctx.index(val)
                pos += 1
                power = 1
                if peek()[0] == "^":
                    pos += 1
                    k2, v2, a2 = peek()
                    if k2 != "num" or "/" in v2:
                        raise ParseError("exponent must be a nonnegative integer", a2)
                    power = int(v2)
                    pos += 1
                exps[idx] += power
                saw_factor = True
            elif kind == "*":
                pos += 1
                k2, _, a2 = peek()
                if k2 not in ("num", "var"):
                    raise ParseError("dangling '*'", a2)
                continue
            else:
                break
        if not saw_factor:
            raise ParseError("expected a term", at)
        key = tuple(exps)
        v = terms.get(key, _ZERO) + coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
        kind, val, at = peek()
        if kind is None:
            break
        if kind not in "+-":
            raise ParseError(f"unexpected {val!r}", at)
    return Polynomial(ctx, terms)


def format_poly(p: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    """Canonical text form; ``parse_poly(format_poly(p), ctx) == p``."""
    if p.is_zero():
        return "0"
    names = p.ctx.var_names
    pieces: list[str] = []
    for k, (e, c) in enumerate(p.terms_sorted(order)):
        factors = []
        for i, x in enumerate(e):
            if x == 1:
                factors.append(names[i])
            elif x > 1:
                factors.append(f"{names[i]}^{x}")
        mag = abs(c)
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = str(mag) + "*" + "*".join(factors)
        else:
            body = str(mag)
        if k == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)
