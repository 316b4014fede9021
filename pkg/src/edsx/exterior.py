"""Sparse exterior algebra on R^n with exact field coefficients.

Multi-indices are 1-based strictly increasing tuples.  Conventions fixed
here and relied on everywhere else:

* orientation / volume form is e^{1...n};
* the Hodge star treats e^1, ..., e^n as an oriented orthonormal coframe;
* contraction by a decomposable multivector applies the rightmost vector
  first: (v1 ^ ... ^ vk) -| a = v1 -| (... (vk -| a));
* flatten() lists coefficients over p-subsets in lexicographic order.

The form literal syntax extends the scalar syntax with e[i,j,...] atoms,
e.g. "-1/4*r5*e[2,5,8,9] + e[1,3]"; * between e-atoms is a wedge.
"""

from __future__ import annotations

from itertools import combinations

from ._kernel import s_add, s_mul, s_neg, s_rat_scale, s_sub
from ._rat import RAT
from .scalar import MASK_OF_DIVISOR, Scalar, as_scalar


def _merge_sign(I, J):
    """Sorted merge of disjoint index tuples with the wedge sign."""
    out = []
    sign = 1
    i = j = 0
    li, lj = len(I), len(J)
    while i < li and j < lj:
        a, b = I[i], J[j]
        if a == b:
            return None, 0
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
            if (li - i) & 1:
                sign = -sign
    out.extend(I[i:])
    out.extend(J[j:])
    return tuple(out), sign


def _sort_sign(idx):
    """Sort an index tuple, returning (sorted tuple, sign); 0 on repeats."""
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j] < lst[j - 1]:
            lst[j], lst[j - 1] = lst[j - 1], lst[j]
            sign = -sign
            j -= 1
    for i in range(1, len(lst)):
        if lst[i] == lst[i - 1]:
            return None, 0
    return tuple(lst), sign


class Form:
    """Homogeneous exterior form; terms maps multi-index -> Scalar."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        deg = None
        if terms:
            for idx, c in terms.items():
                c = as_scalar(c)
                if not c:
                    continue
                idx = tuple(idx)
                if deg is None:
                    deg = len(idx)
                elif len(idx) != deg:
                    raise ValueError("mixed degrees in one form")
                if any(not 1 <= i <= n for i in idx):
                    raise ValueError("index out of range 1..%d: %r" % (n, idx))
                if any(idx[k] >= idx[k + 1] for k in range(len(idx) - 1)):
                    raise ValueError("multi-index not strictly increasing: %r" % (idx,))
                clean[idx] = c
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def monomial(cls, n, idx, coeff=1):
        """coeff * e^{idx}; idx may be unsorted and is sorted with sign."""
        sidx, sign = _sort_sign(tuple(idx))
        if sign == 0:
            return cls(n)
        c = as_scalar(coeff)
        if sign < 0:
            c = -c
        return cls(n, {sidx: c})

    @property
    def degree(self):
        """Common degree of the terms; None for the zero form."""
        if not self.terms:
            return None
        return len(next(iter(self.terms)))

    def is_zero(self):
        return not self.terms

    def coeff(self, idx) -> Scalar:
        return self.terms.get(tuple(idx), Scalar())

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("forms on different spaces")
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("adding forms of different degrees")
        out = dict(self.terms)
        for idx, c in other.terms.items():
            cur = out.get(idx)
            s = c if cur is None else cur + c
            if s:
                out[idx] = s
            else:
                del out[idx]
        f = Form(self.n)
        f.terms = out
        return f

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        f = Form(self.n)
        f.terms = {idx: -c for idx, c in self.terms.items()}
        return f

    def scale(self, s) -> "Form":
        s = as_scalar(s)
        f = Form(self.n)
        if s:
            f.terms = {idx: c * s for idx, c in self.terms.items()}
        return f

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __str__(self):
        return form_literal(self)

    def __repr__(self):
        return "Form(%d, %r)" % (self.n, form_literal(self))


def wedge(a: Form, b: Form) -> Form:
    if a.n != b.n:
        raise ValueError("forms on different spaces")
    out = {}
    for I, ca in a.terms.items():
        cac = ca.c
        for J, cb in b.terms.items():
            K, sign = _merge_sign(I, J)
            if K is None:
                continue
            c = s_mul(cac, cb.c)
            if sign < 0:
                c = s_neg(c)
            cur = out.get(K)
            if cur is None:
                out[K] = c
            else:
                cur = s_add(cur, c)
                if cur:
                    out[K] = cur
                else:
                    del out[K]
    f = Form(a.n)
    f.terms = {K: Scalar(c) for K, c in out.items()}
    return f


def wedge_all(forms):
    if not forms:
        raise ValueError("empty wedge product")
    acc = forms[0]
    for f in forms[1:]:
        acc = wedge(acc, f)
    return acc


def contract(v, a: Form) -> Form:
    """Interior product v -| a for a vector v (list of n Scalars)."""
    vc = [as_scalar(x).c for x in v]
    if len(vc) != a.n:
        raise ValueError("vector length %d != ambient %d" % (len(vc), a.n))
    out = {}
    for I, c in a.terms.items():
        cc = c.c
        for pos, i in enumerate(I):
            x = vc[i - 1]
            if not x:
                continue
            K = I[:pos] + I[pos + 1:]
            add = s_mul(cc, x)
            if pos & 1:
                add = s_neg(add)
            cur = out.get(K)
            if cur is None:
                out[K] = add
            else:
                cur = s_add(cur, add)
                if cur:
                    out[K] = cur
                else:
                    del out[K]
    f = Form(a.n)
    f.terms = {K: Scalar(c) for K, c in out.items() if c}
    return f


def contract_index(i, a: Form) -> Form:
    """e_i -| a, the coordinate fast path."""
    out = {}
    for I, c in a.terms.items():
        if i in I:
            pos = I.index(i)
            K = I[:pos] + I[pos + 1:]
            out[K] = -c if pos & 1 else c
    f = Form(a.n)
    f.terms = out
    return f


def contract_multi(vectors, a: Form) -> Form:
    """(v1 ^ ... ^ vk) -| a, contracting the rightmost vector first."""
    for v in reversed(list(vectors)):
        a = contract(v, a)
    return a


def hodge(a: Form) -> Form:
    """Hodge star for the orthonormal coframe with volume e^{1...n}."""
    n = a.n
    full = range(1, n + 1)
    out = {}
    for I, c in a.terms.items():
        iset = set(I)
        Ic = tuple(j for j in full if j not in iset)
        inv = 0
        for i in I:
            for j in Ic:
                if i > j:
                    inv += 1
        out[Ic] = -c if inv & 1 else c
    f = Form(n)
    f.terms = out
    return f


class Subspace:
    """Subspace of R^n given by an ordered basis of vectors."""

    __slots__ = ("n", "vectors", "coords")

    def __init__(self, n, vectors, coords=None):
        self.n = n
        self.vectors = vectors
        self.coords = coords

    @classmethod
    def coordinate(cls, n, indices):
        """Span of e_i for i in indices, in the given order."""
        indices = tuple(indices)
        if len(set(indices)) != len(indices):
            raise ValueError("repeated coordinate index")
        if any(not 1 <= i <= n for i in indices):
            raise ValueError("coordinate index out of range")
        vecs = []
        for i in indices:
            v = [Scalar() for _ in range(n)]
            v[i - 1] = as_scalar(1)
            vecs.append(v)
        return cls(n, vecs, indices)

    @classmethod
    def hyperplane(cls, n, drop):
        """The coordinate hyperplane e_drop^perp, basis in ascending order."""
        return cls.coordinate(n, [i for i in range(1, n + 1) if i != drop])

    @classmethod
    def from_vectors(cls, n, vectors):
        vecs = [[as_scalar(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise ValueError("basis vector of wrong length")
        return cls(n, vecs, None)

    @property
    def dim(self):
        return len(self.vectors)

    def __repr__(self):
        if self.coords is not None:
            return "Subspace(coords=%r of %d)" % (self.coords, self.n)
        return "Subspace(dim=%d of %d)" % (self.dim, self.n)


def restrict(a: Form, w: Subspace) -> Form:
    """Pullback of a along the inclusion of w, in w's basis coordinates."""
    if w.n != a.n:
        raise ValueError("subspace of a different ambient space")
    k = w.dim
    if w.coords is not None:
        local = {i: p + 1 for p, i in enumerate(w.coords)}
        keep = set(w.coords)
        out = {}
        for I, c in a.terms.items():
            if not all(i in keep for i in I):
                continue
            idx, sign = _sort_sign(tuple(local[i] for i in I))
            if sign == 0:
                continue
            cur = out.get(idx)
            add = -c if sign < 0 else c
            s = add if cur is None else cur + add
            if s:
                out[idx] = s
            elif cur is not None:
                del out[idx]
        f = Form(k)
        f.terms = out
        return f
    p = a.degree
    if p is None:
        return Form(k)
    if p > k:
        return Form(k)
    out = {}
    for L in combinations(range(1, k + 1), p):
        x = a
        for l in L:
            x = contract(w.vectors[l - 1], x)
        c = x.terms.get((), None)
        if c:
            out[L] = c
    f = Form(k)
    f.terms = out
    return f


def flatten(a: Form, p=None):
    """Coefficient vector over lex-ordered p-subsets of 1..n."""
    if p is None:
        p = a.degree
        if p is None:
            raise ValueError("flatten of the zero form needs an explicit degree")
    elif a.terms and a.degree != p:
        raise ValueError("form has degree %s, not %d" % (a.degree, p))
    return [a.terms.get(I, Scalar()) for I in combinations(range(1, a.n + 1), p)]


def unflatten(vec, n, p) -> Form:
    combs = list(combinations(range(1, n + 1), p))
    if len(vec) != len(combs):
        raise ValueError("vector length %d != C(%d,%d)" % (len(vec), n, p))
    return Form(n, {I: c for I, c in zip(combs, vec)})


def scalar_value(a: Form) -> Scalar:
    """Value of a degree-0 form."""
    if not a.terms:
        return Scalar()
    if a.degree != 0:
        raise ValueError("not a degree-0 form")
    return a.terms[()]


# ---------------------------------------------------------------- parsing

def _lex_form(text):
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
        if ch == "r" and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("rad", int(text[i + 1:j])))
            i = j
            continue
        if ch == "e" and i + 1 < len(text) and text[i + 1] == "[":
            j = text.index("]", i)
            inner = text[i + 2:j]
            idx = tuple(int(s) for s in inner.split(",")) if inner else ()
            toks.append(("mono", idx))
            i = j + 1
            continue
        raise ValueError("unexpected character %r in form literal" % ch)
    return toks


class _FTokens:
    def __init__(self, text):
        self.toks = _lex_form(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t


def parse_form(text: str, n: int) -> Form:
    """Parse a form literal on R^n; scalars alone give degree-0 forms."""
    tk = _FTokens(text)
    v = _pf_expr(tk, n)
    if tk.peek() is not None:
        raise ValueError("trailing input in form literal: %r" % (tk.peek(),))
    return v


def _pf_expr(tk, n):
    v = _pf_term(tk, n)
    while tk.peek() in ("+", "-"):
        op = tk.take()
        w = _pf_term(tk, n)
        v = v + w if op == "+" else v - w
    return v


def _pf_term(tk, n):
    v = _pf_factor(tk, n)
    while tk.peek() in ("*", "/"):
        op = tk.take()
        w = _pf_factor(tk, n)
        if op == "*":
            v = wedge(v, w)
        else:
            if w.degree not in (0, None):
                raise ValueError("division by a non-scalar form")
            v = v.scale(scalar_value(w).inverse())
    return v


def _pf_factor(tk, n):
    t = tk.peek()
    if t == "-":
        tk.take()
        return -_pf_factor(tk, n)
    if t == "+":
        tk.take()
        return _pf_factor(tk, n)
    if t == "(":
        tk.take()
        v = _pf_expr(tk, n)
        if tk.take() != ")":
            raise ValueError("unbalanced parenthesis in form literal")
        return v
    if isinstance(t, tuple):
        tk.take()
        kind, val = t
        if kind == "int":
            return Form(n, {(): as_scalar(val)})
        if kind == "rad":
            if val in MASK_OF_DIVISOR and val != 1:
                return Form(n, {(): Scalar.sqrt(val)})
            raise ValueError("r%d is not a squarefree divisor of 210" % val)
        return Form.monomial(n, val)
    raise ValueError("expected a form factor, got %r" % (t,))


def _coeff_text(c: Scalar):
    """(sign, body) pieces for one term's coefficient."""
    items = sorted(c.c.items())
    if len(items) > 1:
        return "+", "(%s)*" % str(c)
    k, q = items[0]
    d = 1
    if k:
        from ._kernel import DIVISORS

        d = DIVISORS[k]
    sign = "-" if q < 0 else "+"
    q = abs(q)
    if d == 1:
        body = "" if q == 1 else "%s*" % q
    elif q == 1:
        body = "r%d*" % d
    else:
        body = "%s*r%d*" % (q, d)
    return sign, body


def form_literal(a: Form) -> str:
    """Canonical text form, terms in lex multi-index order."""
    if not a.terms:
        return "0"
    if a.degree == 0:
        return str(a.terms[()])
    parts = []
    for I in sorted(a.terms):
        sign, body = _coeff_text(a.terms[I])
        mono = "e[%s]" % ",".join(str(i) for i in I)
        parts.append((sign, body + mono))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, piece in parts[1:]:
        out += (" - " if sign == "-" else " + ") + piece
    return out
