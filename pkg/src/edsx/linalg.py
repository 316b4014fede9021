"""Exact dense linear algebra over the scalar field.

Everything reduces to one deterministic RREF kernel (see edsx._fallback
for the pivot rule), so ranks, kernels, and affine solves are canonical:
the same input always yields the same basis vectors.

Vectors are lists of Scalar.  Internally rows are lists of the kernel's
mask -> rational dicts; wrapping happens only at the API boundary.
"""

from __future__ import annotations

from ._kernel import rref as _rref_rows
from ._kernel import s_add, s_mul, s_neg, s_sub
from ._rat import R1
from .scalar import Scalar, as_scalar


def _unwrap(v):
    return [as_scalar(x).c for x in v]


def _wrap(row):
    return [Scalar(dict(c)) for c in row]


class Matrix:
    """Dense matrix; entries are Scalars on the outside, dicts inside."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows, ncols, rows):
        self.nrows = nrows
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [_unwrap(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), ncols, rows)

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols, [[{} for _ in range(ncols)] for _ in range(nrows)])

    @classmethod
    def identity(cls, n):
        m = cls.zero(n, n)
        for i in range(n):
            m._rows[i][i] = {0: R1}
        return m

    def entry(self, i, j) -> Scalar:
        return Scalar(dict(self._rows[i][j]))

    def set_entry(self, i, j, value):
        self._rows[i][j] = as_scalar(value).c

    def row(self, i):
        return _wrap(self._rows[i])

    def copy_rows(self):
        return [[dict(c) for c in r] for r in self._rows]

    def transpose(self) -> "Matrix":
        rows = [[dict(self._rows[i][j]) for i in range(self.nrows)]
                for j in range(self.ncols)]
        return Matrix(self.ncols, self.nrows, rows)

    def mul_vector(self, v):
        vc = _unwrap(v)
        out = []
        for r in self._rows:
            acc = {}
            for c, x in zip(r, vc):
                if c and x:
                    acc = s_add(acc, s_mul(c, x))
            out.append(Scalar(acc))
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self._rows) == (
            other.nrows, other.ncols, other._rows)

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.nrows, self.ncols)


class AffineSpace:
    """Solution set x0 + span(basis); particular None marks empty."""

    __slots__ = ("ambient_dim", "particular", "basis")

    def __init__(self, ambient_dim, particular, basis):
        self.ambient_dim = ambient_dim
        self.particular = particular
        self.basis = basis

    @property
    def is_empty(self):
        return self.particular is None

    @property
    def dim(self):
        """Affine dimension, or None for the empty set."""
        if self.particular is None:
            return None
        return len(self.basis)

    def __repr__(self):
        if self.is_empty:
            return "AffineSpace(EMPTY)"
        return "AffineSpace(dim=%d in %d)" % (self.dim, self.ambient_dim)


def rref(m: Matrix):
    """Canonical reduced row echelon form and the pivot column list."""
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.ncols)
    return Matrix(m.nrows, m.ncols, rows), pivots


def rank(m: Matrix) -> int:
    rows = m.copy_rows()
    return len(_rref_rows(rows, m.ncols))


def _kernel_from_rref(rows, pivots, ncols):
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    out = []
    for f in free:
        v = [{} for _ in range(ncols)]
        v[f] = {0: R1}
        for t, p in enumerate(pivots):
            c = rows[t][f]
            if c:
                v[p] = s_neg(c)
        out.append(v)
    return out


def kernel_basis(m: Matrix):
    """Right kernel, one basis vector per free column (unit there)."""
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.ncols)
    return [_wrap(v) for v in _kernel_from_rref(rows, pivots, m.ncols)]


def solve_affine(m: Matrix, rhs) -> AffineSpace:
    """All x with m x = rhs as an AffineSpace (possibly empty)."""
    rhsc = _unwrap(rhs)
    if len(rhsc) != m.nrows:
        raise ValueError("rhs length %d != %d rows" % (len(rhsc), m.nrows))
    rows = m.copy_rows()
    for r, b in zip(rows, rhsc):
        r.append(dict(b))
    pivots = _rref_rows(rows, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return AffineSpace(m.ncols, None, [])
    part = [{} for _ in range(m.ncols)]
    for t, p in enumerate(pivots):
        b = rows[t][m.ncols]
        if b:
            part[p] = dict(b)
    amat = [r[:m.ncols] for r in rows]
    kern = _kernel_from_rref(amat, pivots, m.ncols)
    return AffineSpace(m.ncols, _wrap(part), [_wrap(v) for v in kern])


def span_rank(vectors) -> int:
    """Rank of a list of equal-length vectors."""
    if not vectors:
        return 0
    return rank(Matrix.from_rows(vectors))


def in_span(vectors, v) -> bool:
    """True when v is a linear combination of the given vectors."""
    if not any(as_scalar(x) for x in v):
        return True
    if not vectors:
        return False
    cols = Matrix.from_rows(vectors).transpose()
    return not solve_affine(cols, v).is_empty


def echelon_span(vectors):
    """Canonical echelon basis of the span of the given vectors."""
    if not vectors:
        return []
    m = Matrix.from_rows(vectors)
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.ncols)
    return [_wrap(rows[t]) for t in range(len(pivots))]


def vec_add(a, b):
    return [Scalar(s_add(as_scalar(x).c, as_scalar(y).c)) for x, y in zip(a, b)]


def vec_sub(a, b):
    return [Scalar(s_sub(as_scalar(x).c, as_scalar(y).c)) for x, y in zip(a, b)]


def vec_scale(a, s):
    sc = as_scalar(s).c
    return [Scalar(s_mul(as_scalar(x).c, sc)) for x in a]


def vec_is_zero(a):
    return all(not as_scalar(x) for x in a)
