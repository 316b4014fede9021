"""Exact scalars in the real field Q(r2, r3, r5, r7).

A scalar is a finite sum q_d * sqrt(d) over the 16 squarefree divisors d
of 210, with rational q_d.  The text syntax accepted by parse() uses
integer or a/b literals, radical tokens r2, r3, r5, ..., r210, the
operators + - * /, and parentheses: "7/8", "-1/4*r5", "(1 + r2)/2".
"""

from __future__ import annotations

from ._kernel import (
    DIVISORS,
    MASK_OF_DIVISOR,
    s_add,
    s_from_rat,
    s_inv,
    s_mul,
    s_neg,
    s_rat_scale,
    s_sub,
)
from ._rat import RAT, R1


class Scalar:
    """Immutable field element; .c is the mask -> rational dict."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {} if c is None else c

    @classmethod
    def of(cls, q) -> "Scalar":
        """Rational scalar from an int, a rational, or a/b."""
        return cls(s_from_rat(RAT(q)))

    @classmethod
    def sqrt(cls, d: int) -> "Scalar":
        """sqrt(d) for a squarefree divisor d of 210."""
        mask = MASK_OF_DIVISOR.get(d)
        if mask is None:
            raise ValueError("not a squarefree divisor of 210: %r" % (d,))
        return cls({mask: R1})

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        return _parse(text)

    def coeffs(self) -> dict:
        """Map divisor -> rational coefficient, nonzero entries only."""
        return {DIVISORS[k]: q for k, q in sorted(self.c.items())}

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return not self.c or set(self.c) == {0}

    def rational_part(self):
        return self.c.get(0, RAT(0))

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, RAT)):
            return Scalar.of(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(s_add(self.c, o.c))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(s_sub(self.c, o.c))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(s_sub(o.c, self.c))

    def __neg__(self):
        return Scalar(s_neg(self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(s_mul(self.c, o.c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(s_mul(self.c, s_inv(o.c)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(s_mul(o.c, s_inv(self.c)))

    def inverse(self) -> "Scalar":
        return Scalar(s_inv(self.c))

    def scale(self, q) -> "Scalar":
        return Scalar(s_rat_scale(self.c, RAT(q)))

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "Scalar(%r)" % format_scalar(self)


ZERO = Scalar()
ONE = Scalar.of(1)


def as_scalar(x) -> Scalar:
    """Coerce an int, rational, string, or Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return _parse(x)
    return Scalar.of(x)


def _term_text(divisor, q):
    if divisor == 1:
        return str(q)
    if q == 1:
        return "r%d" % divisor
    if q == -1:
        return "-r%d" % divisor
    return "%s*r%d" % (q, divisor)


def format_scalar(s: Scalar) -> str:
    """Canonical text form, sorted by divisor; parses back exactly."""
    if not s.c:
        return "0"
    parts = []
    for k in sorted(s.c):
        parts.append(_term_text(DIVISORS[k], s.c[k]))
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


class _Tokens:
    def __init__(self, text):
        self.toks = _lex(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t


def _lex(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/()":
            toks.append(ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
            continue
        if ch == "r":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ValueError("bad radical token at %r" % text[i:])
            toks.append(("rad", int(text[i + 1:j])))
            i = j
            continue
        raise ValueError("unexpected character %r in scalar" % ch)
    return toks


def _parse(text: str) -> Scalar:
    tk = _Tokens(text)
    v = _parse_expr(tk)
    if tk.peek() is not None:
        raise ValueError("trailing input in scalar: %r" % (tk.peek(),))
    return v


def _parse_expr(tk) -> Scalar:
    v = _parse_term(tk)
    while tk.peek() in ("+", "-"):
        op = tk.take()
        w = _parse_term(tk)
        v = v + w if op == "+" else v - w
    return v


def _parse_term(tk) -> Scalar:
    v = _parse_factor(tk)
    while tk.peek() in ("*", "/"):
        op = tk.take()
        w = _parse_factor(tk)
        v = v * w if op == "*" else v / w
    return v


def _parse_factor(tk) -> Scalar:
    t = tk.peek()
    if t == "-":
        tk.take()
        return -_parse_factor(tk)
    if t == "+":
        tk.take()
        return _parse_factor(tk)
    if t == "(":
        tk.take()
        v = _parse_expr(tk)
        if tk.take() != ")":
            raise ValueError("unbalanced parenthesis in scalar")
        return v
    if isinstance(t, tuple):
        tk.take()
        kind, val = t
        if kind == "int":
            return Scalar.of(val)
        if val in MASK_OF_DIVISOR and val != 1:
            return Scalar.sqrt(val)
        raise ValueError("r%d is not a squarefree divisor of 210" % val)
    raise ValueError("expected a scalar factor, got %r" % (t,))
