"""Lie algebra representations on exterior algebras and tensor spaces.

The action on the coframe is fixed globally as

    X . e^i = - sum_j X[j][i] e^j,

extended to Lambda^* as a degree-0 derivation; on vectors X acts as
v -> X v.  Invariance kernels do not depend on this sign choice, and
orbit spans {X . a} are the same set either way.

casimir_decompose targets a 3-dimensional Lie algebra normalized like
so(3): it calibrates the spin-j eigenvalue scale lambda_j = kappa j(j+1)
from the scalar action of C = sum_b x_b^2 on T, then reads off spin
multiplicities as dim ker(C - lambda_j) / (2j + 1).
"""

from __future__ import annotations

from itertools import combinations

from ._kernel import rref as _rref_rows
from ._kernel import s_add, s_mul, s_neg, s_sub
from ._rat import RAT, R1
from .exterior import Form, _sort_sign, flatten, unflatten
from .linalg import Matrix, kernel_basis, solve_affine
from .scalar import Scalar, as_scalar


def mat_from(rows):
    """Coerce a nested list into a matrix of Scalars."""
    return [[as_scalar(x) for x in row] for row in rows]


def mat_is_skew(m) -> bool:
    n = len(m)
    return all(m[i][j] == -m[j][i] for i in range(n) for j in range(i, n))


def mat_bracket(x, y):
    n = len(x)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = {}
            for k in range(n):
                a, b = x[i][k].c, y[k][j].c
                if a and b:
                    acc = s_add(acc, s_mul(a, b))
                a, b = y[i][k].c, x[k][j].c
                if a and b:
                    acc = s_sub(acc, s_mul(a, b))
            row.append(Scalar(acc))
        out.append(row)
    return out


def mat_flatten(m):
    return [x for row in m for x in row]


class LieRep:
    """A Lie algebra presented by matrices acting on R^n."""

    def __init__(self, name, n, basis, skew=True):
        self.name = name
        self.n = n
        self.basis = basis
        self.skew = skew
        self._constants = None

    @classmethod
    def from_matrices(cls, name, n, mats, skew=True, validate=True):
        basis = [mat_from(m) for m in mats]
        rep = cls(name, n, basis, skew=skew)
        if validate:
            rep.validate()
        return rep

    @property
    def dim(self):
        return len(self.basis)

    def validate(self):
        for k, x in enumerate(self.basis):
            if len(x) != self.n or any(len(r) != self.n for r in x):
                raise ValueError("%s: basis matrix %d is not %dx%d"
                                 % (self.name, k, self.n, self.n))
            if self.skew and not mat_is_skew(x):
                raise ValueError("%s: basis matrix %d is not skew" % (self.name, k))
        self.structure_constants()

    def structure_constants(self):
        """c[a][b] with [x_a, x_b] = sum_d c[a][b][d] x_d; raises when
        a bracket leaves the span of the basis."""
        if self._constants is not None:
            return self._constants
        flats = [mat_flatten(x) for x in self.basis]
        cols = Matrix.from_rows(flats).transpose()
        consts = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                br = mat_bracket(self.basis[a], self.basis[b])
                sol = solve_affine(cols, mat_flatten(br))
                if sol.is_empty:
                    raise ValueError("%s: bracket [%d,%d] leaves the span"
                                     % (self.name, a, b))
                row.append(sol.particular)
            consts.append(row)
        self._constants = consts
        return consts


def act_on_form(x, a: Form) -> Form:
    """Derivation action of the matrix x on a form."""
    n = a.n
    out = {}
    for I, c in a.terms.items():
        cc = c.c
        for pos in range(len(I)):
            i = I[pos]
            for j in range(1, n + 1):
                xc = x[j - 1][i - 1]
                if not xc:
                    continue
                K, sign = _sort_sign(I[:pos] + (j,) + I[pos + 1:])
                if sign == 0:
                    continue
                add = s_mul(cc, xc.c)
                if sign < 0:
                    add = s_neg(add)
                cur = out.get(K)
                if cur is None:
                    out[K] = s_neg(add)
                else:
                    cur = s_sub(cur, add)
                    if cur:
                        out[K] = cur
                    else:
                        del out[K]
    f = Form(n)
    f.terms = {K: Scalar(v) for K, v in out.items()}
    return f


def _combine_forms(basis_forms, coeffs):
    acc = Form(basis_forms[0].n) if basis_forms else None
    for b, c in zip(basis_forms, coeffs):
        c = as_scalar(c)
        if c:
            acc = acc + b.scale(c)
    return acc


def _echelon_forms(forms, p):
    if not forms:
        return []
    n = forms[0].n
    m = Matrix.from_rows([flatten(f, p) for f in forms])
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.ncols)
    return [unflatten([Scalar(dict(c)) for c in rows[t]], n, p)
            for t in range(len(pivots))]


def invariants(g: LieRep, p: int):
    """Echelon basis of the forms of degree p killed by every generator."""
    n = g.n
    basis = [Form(n, {I: 1}) for I in combinations(range(1, n + 1), p)]
    for x in g.basis:
        if not basis:
            return []
        flats = [flatten(act_on_form(x, b), p) for b in basis]
        m = Matrix.from_rows(flats).transpose()
        basis = [_combine_forms(basis, c) for c in kernel_basis(m)]
    return _echelon_forms(basis, p)


def gl_basis(n, skew=False):
    """Elementary matrices E_ij in row-major order, or E_ij - E_ji (i<j)."""
    out = []
    if skew:
        pairs = [(i, j) for i in range(n) for j in range(n) if i < j]
        for i, j in pairs:
            m = [[Scalar() for _ in range(n)] for _ in range(n)]
            m[i][j] = as_scalar(1)
            m[j][i] = as_scalar(-1)
            out.append(m)
    else:
        for i in range(n):
            for j in range(n):
                m = [[Scalar() for _ in range(n)] for _ in range(n)]
                m[i][j] = as_scalar(1)
                out.append(m)
    return out


def orbit_matrix(a: Form, skew=False) -> Matrix:
    """Columns are X . a over the gl(n) (or so(n)) basis."""
    p = a.degree
    gens = gl_basis(a.n, skew=skew)
    flats = [flatten(act_on_form(x, a), p) for x in gens]
    return Matrix.from_rows(flats).transpose()


def stabilizer(a: Form, skew=False, name=None) -> LieRep:
    """Matrices with X . a = 0, in gl(n) or intersected with so(n)."""
    gens = gl_basis(a.n, skew=skew)
    m = orbit_matrix(a, skew=skew)
    mats = []
    for c in kernel_basis(m):
        acc = [[Scalar() for _ in range(a.n)] for _ in range(a.n)]
        for x, co in zip(gens, c):
            co = as_scalar(co)
            if co:
                for i in range(a.n):
                    for j in range(a.n):
                        if x[i][j]:
                            acc[i][j] = acc[i][j] + x[i][j] * co
        mats.append(acc)
    label = name or ("stab(%s)" % a)
    return LieRep(label, a.n, mats, skew=skew)


class HomMap:
    """Linear map T -> Lambda^2 T given by the images of the coframe."""

    __slots__ = ("n", "images")

    def __init__(self, n, images):
        self.n = n
        self.images = images

    @classmethod
    def zero(cls, n):
        return cls(n, [Form(n) for _ in range(n)])

    @classmethod
    def unflatten(cls, n, vec):
        step = len(list(combinations(range(1, n + 1), 2)))
        images = [unflatten(vec[i * step:(i + 1) * step], n, 2) for i in range(n)]
        return cls(n, images)

    def flatten(self):
        out = []
        for img in self.images:
            out.extend(flatten(img, 2))
        return out

    def is_zero(self):
        return all(img.is_zero() for img in self.images)

    def __eq__(self, other):
        if not isinstance(other, HomMap):
            return NotImplemented
        return self.n == other.n and self.images == other.images

    def __repr__(self):
        return "HomMap(%d, [%s])" % (
            self.n, ", ".join(repr(str(f)) for f in self.images))


def act_on_hom(x, D: HomMap) -> HomMap:
    """(x . D)(xi) = x . D(xi) - D(x . xi) for a coframe element xi."""
    n = D.n
    images = []
    for i in range(1, n + 1):
        img = act_on_form(x, D.images[i - 1])
        for j in range(1, n + 1):
            xc = x[j - 1][i - 1]
            if xc and not D.images[j - 1].is_zero():
                img = img + D.images[j - 1].scale(xc)
        images.append(img)
    return HomMap(n, images)


def hom_dim(n):
    return n * (n * (n - 1) // 2)


def equivariant_maps(g: LieRep):
    """Basis of Hom(T, Lambda^2 T) commuting with the g-action."""
    n = g.n
    step = n * (n - 1) // 2
    basis = []
    for i in range(1, n + 1):
        for J in combinations(range(1, n + 1), 2):
            images = [Form(n) for _ in range(n)]
            images[i - 1] = Form(n, {J: 1})
            basis.append(HomMap(n, images))
    for x in g.basis:
        if not basis:
            return []
        flats = [act_on_hom(x, D).flatten() for D in basis]
        m = Matrix.from_rows(flats).transpose()
        kern = kernel_basis(m)
        new = []
        for c in kern:
            acc = HomMap.zero(n)
            vec = [Scalar() for _ in range(hom_dim(n))]
            for D, co in zip(basis, c):
                co = as_scalar(co)
                if co:
                    for t, v in enumerate(D.flatten()):
                        if v:
                            vec[t] = vec[t] + v * co
            new.append(HomMap.unflatten(n, vec))
        basis = new
    if not basis:
        return []
    m = Matrix.from_rows([D.flatten() for D in basis])
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.ncols)
    return [HomMap.unflatten(n, [Scalar(dict(c)) for c in rows[t]])
            for t in range(len(pivots))]


def cartan_three_form(constants, inner=None) -> Form:
    """rho(x_a, x_b, x_c) = <[x_a, x_b], x_c> from a bracket table.

    constants[a][b] is the coefficient vector of [x_a, x_b]; inner is a
    symmetric Gram matrix (identity when omitted).
    """
    m = len(constants)
    c = [[[as_scalar(v) for v in constants[a][b]] for b in range(m)]
         for a in range(m)]
    for a in range(m):
        for b in range(m):
            if any(c[a][b][d] != -c[b][a][d] for d in range(m)):
                raise ValueError("bracket table is not antisymmetric")
    if inner is None:
        gram = None
    else:
        gram = [[as_scalar(inner[i][j]) for j in range(m)] for i in range(m)]
        for i in range(m):
            for j in range(i, m):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("inner product is not symmetric")
    terms = {}
    for a in range(m):
        for b in range(a + 1, m):
            vec = c[a][b]
            for cc in range(b + 1, m):
                if gram is None:
                    val = vec[cc]
                else:
                    val = Scalar()
                    for d in range(m):
                        if vec[d] and gram[d][cc]:
                            val = val + vec[d] * gram[d][cc]
                if val:
                    terms[(a + 1, b + 1, cc + 1)] = val
    return Form(m, terms)


# ------------------------------------------------------------- casimir

class CasimirError(ValueError):
    pass


class CasimirDecomposition:
    """Spin decomposition: parts is a sorted list of (2j+1, multiplicity)."""

    __slots__ = ("space", "dim", "kappa", "parts")

    def __init__(self, space, dim, kappa, parts):
        self.space = space
        self.dim = dim
        self.kappa = kappa
        self.parts = parts

    @property
    def components(self):
        return sum(m for _, m in self.parts)

    def __repr__(self):
        body = " + ".join("%d*V%d" % (m, d) if m > 1 else "V%d" % d
                          for d, m in self.parts)
        return "CasimirDecomposition(%s: dim %d = %s)" % (self.space, self.dim, body)


def _sparse_rows(mat_scalars):
    """list-of-rows (col, coeff-dict) sparse view of a Scalar matrix."""
    out = []
    for row in mat_scalars:
        out.append([(j, x.c) for j, x in enumerate(row) if x])
    return out


def _sparse_square_sum(sparse_ops, dim):
    """C = sum_b op_b^2 as dense rows of coeff dicts."""
    C = [[{} for _ in range(dim)] for _ in range(dim)]
    for op in sparse_ops:
        for i in range(dim):
            for k, a in op[i]:
                for j, b in op[k]:
                    C[i][j] = s_add(C[i][j], s_mul(a, b))
    return C


def _vec_act_pair(x, j, k):
    """Vector action of x on e_j ^ e_k (bivectors, no dual twist)."""
    out = []
    n = len(x)
    for l in range(1, n + 1):
        c = x[l - 1][j - 1]
        if c:
            K, sign = _sort_sign((l, k))
            if sign:
                out.append((K, (-c).c if sign < 0 else c.c))
        c = x[l - 1][k - 1]
        if c:
            K, sign = _sort_sign((j, l))
            if sign:
                out.append((K, (-c).c if sign < 0 else c.c))
    return out


def _space_operators(g: LieRep, label):
    """(dimension, [sparse column-action matrices]) for a space label."""
    n = g.n
    if label == "T":
        dim = n
        ops = []
        for x in g.basis:
            cols = [[] for _ in range(dim)]
            for j in range(n):
                for i in range(n):
                    if x[i][j]:
                        cols[j].append((i, x[i][j].c))
            ops.append(_cols_to_rows(cols, dim))
        return dim, ops
    if label.startswith("lambda:"):
        p = int(label.split(":")[1])
        monos = list(combinations(range(1, n + 1), p))
        pos = {I: t for t, I in enumerate(monos)}
        dim = len(monos)
        ops = []
        for x in g.basis:
            cols = [[] for _ in range(dim)]
            for t, I in enumerate(monos):
                img = act_on_form(x, Form(n, {I: 1}))
                for K, c in img.terms.items():
                    cols[t].append((pos[K], c.c))
            ops.append(_cols_to_rows(cols, dim))
        return dim, ops
    if label == "hom":
        pairs = list(combinations(range(1, n + 1), 2))
        step = len(pairs)
        dim = n * step
        ops = []
        for x in g.basis:
            cols = [[] for _ in range(dim)]
            for i in range(1, n + 1):
                for t, J in enumerate(pairs):
                    images = [Form(n) for _ in range(n)]
                    images[i - 1] = Form(n, {J: 1})
                    img = act_on_hom(x, HomMap(n, images))
                    col = (i - 1) * step + t
                    for ii in range(n):
                        for K, c in img.images[ii].terms.items():
                            cols[col].append((ii * step + pairs.index(K), c.c))
            ops.append(_cols_to_rows(cols, dim))
        return dim, ops
    if label == "t-lambda2":
        pairs = list(combinations(range(1, n + 1), 2))
        pos = {J: t for t, J in enumerate(pairs)}
        step = len(pairs)
        dim = n * step
        ops = []
        for x in g.basis:
            cols = [[] for _ in range(dim)]
            for i in range(n):
                for t, J in enumerate(pairs):
                    col = i * step + t
                    for l in range(n):
                        if x[l][i]:
                            cols[col].append((l * step + t, x[l][i].c))
                    for K, c in _vec_act_pair(x, J[0], J[1]):
                        cols[col].append((i * step + pos[K], c))
            ops.append(_cols_to_rows(cols, dim))
        return dim, ops
    if label == "t-g":
        consts = g.structure_constants()
        k = g.dim
        dim = k * n
        ops = []
        for b in range(k):
            x = g.basis[b]
            cols = [[] for _ in range(dim)]
            for a in range(k):
                for i in range(n):
                    col = a * n + i
                    for d in range(k):
                        c = consts[b][a][d]
                        if c:
                            cols[col].append((d * n + i, c.c))
                    for l in range(n):
                        if x[l][i]:
                            cols[col].append((a * n + l, x[l][i].c))
            ops.append(_cols_to_rows(cols, dim))
        return dim, ops
    raise CasimirError("unknown representation space %r" % label)


def _cols_to_rows(cols, dim):
    rows = [[] for _ in range(dim)]
    for j, entries in enumerate(cols):
        merged = {}
        for i, c in entries:
            merged[i] = s_add(merged.get(i, {}), c) if i in merged else dict(c)
        for i, c in merged.items():
            if c:
                rows[i].append((j, c))
    return rows


def _calibrate(g: LieRep):
    """kappa with C|_T = kappa j_T (j_T + 1); errors if C is not scalar."""
    n = g.n
    dim, ops = _space_operators(g, "T")
    C = _sparse_square_sum(ops, dim)
    c0 = Scalar(dict(C[0][0]))
    for i in range(dim):
        for j in range(dim):
            val = Scalar(dict(C[i][j]))
            want = c0 if i == j else Scalar()
            if val != want:
                raise CasimirError("Casimir is not scalar on T; calibration fails")
    if n % 2 == 0:
        raise CasimirError("even-dimensional T has no integer spin; calibration fails")
    j_t = (n - 1) // 2
    return c0 / (j_t * (j_t + 1))


def _rat_kernel(rows_rat, dim):
    """Kernel of a rational matrix given as dense rows of rationals."""
    rows = [[({0: q} if q else {}) for q in r] for r in rows_rat]
    pivots = _rref_rows(rows, dim)
    pivset = set(pivots)
    free = [j for j in range(dim) if j not in pivset]
    out = []
    for f in free:
        v = [{} for _ in range(dim)]
        v[f] = {0: R1}
        for t, p in enumerate(pivots):
            c = rows[t][f]
            if c:
                v[p] = s_neg(c)
        out.append((f, v))
    return out


def _weight_blocks(hop, dim):
    """Blocks ker(Hhat^2 + m^2) for the sqrt2-rational first generator.

    Returns None when the generator is not sqrt2-rational, else a list of
    (free_cols, vectors) per weight m with nonempty kernel.
    """
    hrat = [[RAT(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j, c in hop[i]:
            if set(c) != {1}:
                return None
            hrat[i][j] = c[1]
    h2 = [[RAT(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for k in range(dim):
            a = hrat[i][k]
            if a:
                rk = hrat[k]
                row = h2[i]
                for j in range(dim):
                    if rk[j]:
                        row[j] += a * rk[j]
    blocks = []
    seen = 0
    m = 0
    while seen < dim:
        if m * m > 4 * dim * dim:
            raise CasimirError("weight search did not terminate")
        mat = [row[:] for row in h2]
        mm = RAT(m * m)  # Hhat^2 has eigenvalue -m^2 on the weight-m block
        for i in range(dim):
            mat[i][i] += mm
        kern = _rat_kernel(mat, dim)
        if kern:
            blocks.append((m, kern))
            seen += len(kern)
        m += 1
    return blocks


def _restrict_to_block(C, block):
    """C restricted to a kernel-basis block, using unit free columns."""
    free = [f for f, _ in block]
    vecs = [v for _, v in block]
    d = len(vecs)
    out = [[{} for _ in range(d)] for _ in range(d)]
    for b, v in enumerate(vecs):
        img = [{} for _ in range(len(v))]
        for i in range(len(v)):
            acc = {}
            for j, c in C[i]:
                if v[j]:
                    acc = s_add(acc, s_mul(c, v[j]))
            img[i] = acc
        for r, f in enumerate(free):
            out[r][b] = img[f]
    return out


def _kernel_dim_shift(rows, lam, dim):
    """dim ker(M - lam I) for dense dict rows."""
    lamc = lam.c
    work = []
    for i in range(dim):
        row = [dict(c) for c in rows[i]]
        if lamc:
            row[i] = s_sub(row[i], lamc)
        work.append(row)
    return dim - len(_rref_rows(work, dim))


def casimir_decompose(g: LieRep, space: str) -> CasimirDecomposition:
    """Decompose a representation space under a 3-dimensional g."""
    if g.dim != 3:
        raise CasimirError("casimir_decompose needs a 3-dimensional Lie algebra")
    if space in ("t-gperp", "quotient"):
        whole = casimir_decompose(g, "t-lambda2")
        sub = casimir_decompose(g, "t-g")
        parts = dict(whole.parts)
        for d, m in sub.parts:
            if parts.get(d, 0) < m:
                raise CasimirError("g (x) T does not embed in T (x) Lambda^2 T")
            parts[d] -= m
        parts = sorted((d, m) for d, m in parts.items() if m)
        dim = whole.dim - sub.dim
        return CasimirDecomposition(space, dim, whole.kappa, parts)
    kappa = _calibrate(g)
    dim, ops = _space_operators(g, space)
    C_rows = _sparse_square_sum(ops, dim)
    C_sparse = [[(j, c) for j, c in enumerate(row) if c] for row in C_rows]
    blocks = _weight_blocks(ops[0], dim)
    parts = []
    seen = 0
    if blocks is not None:
        restricted = [(m, _restrict_to_block(C_sparse, b)) for m, b in blocks]
        j = 0
        while seen < dim:
            if (2 * j + 1) > dim + 1:
                raise CasimirError("spectrum of C exceeds the expected spins")
            lam = kappa * (j * (j + 1))
            kd = 0
            for mb, rows in restricted:
                if mb > j:
                    break
                kd += _kernel_dim_shift(rows, lam, len(rows))
            if kd:
                if kd % (2 * j + 1):
                    raise CasimirError("kernel of C - lambda_%d is not a multiple of %d" % (j, 2 * j + 1))
                parts.append((2 * j + 1, kd // (2 * j + 1)))
                seen += kd
            j += 1
    else:
        dense = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, row in enumerate(C_sparse):
            for jj, c in row:
                dense[i][jj] = c
        j = 0
        while seen < dim:
            if (2 * j + 1) > dim + 1:
                raise CasimirError("spectrum of C exceeds the expected spins")
            lam = kappa * (j * (j + 1))
            kd = _kernel_dim_shift(dense, lam, dim)
            if kd:
                if kd % (2 * j + 1):
                    raise CasimirError("kernel of C - lambda_%d is not a multiple of %d" % (j, 2 * j + 1))
                parts.append((2 * j + 1, kd // (2 * j + 1)))
                seen += kd
            j += 1
    return CasimirDecomposition(space, dim, kappa, parts)
