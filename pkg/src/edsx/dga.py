"""Degree-raising operators on invariant algebras and their integral spaces.

The algebra A is handled through its span-closure: every wedge product of
generators, organized by degree.  An operator given on generators induces
values on products through the graded Leibniz rule; whether that assignment
is well defined on linear relations is a rank condition, checked degree by
degree.  Extensions to derivations of the full exterior algebra are found by
solving a linear system over Hom(T, Lambda^2 T), whose solution set is the
affine space Z'; Z and Z'' dimensions follow by bookkeeping.
"""

from .scalar import Scalar
from .exterior import Form, flatten, wedge, _sort_sign
from .linalg import Matrix, solve_affine, span_rank, in_span, vec_is_zero
from .rep import HomMap, equivariant_maps, invariants
from .catalog import StructureSpec, DiffOpSpec

__all__ = [
    "DgaError",
    "Closure",
    "derivation_value",
    "OpCheck",
    "ZReport",
    "check_operator",
    "z_spaces",
    "strong_admissibility",
    "lie_tensor_rows",
]


class DgaError(ValueError):
    pass


def _resolve_op(s: StructureSpec, op):
    if isinstance(op, DiffOpSpec):
        return op
    if op in s.operators:
        return s.operators[op]
    raise DgaError("structure %r has no operator %r" % (s.name, op))


class Closure:
    """Span-closure of a finite set of generating forms.

    Words are multisets of generator positions in nondecreasing order; the
    associated form is the wedge product in that order.  Zero products are
    kept: they encode relations that an induced operator must respect.
    """

    def __init__(self, n, generators):
        self.n = n
        self.gen_names = list(generators)
        self.gen_forms = [generators[g] for g in self.gen_names]
        self.gen_degrees = []
        for name, form in zip(self.gen_names, self.gen_forms):
            if form.degree is None:
                raise DgaError("generator %r is zero" % name)
            self.gen_degrees.append(form.degree)
        self.words = []
        self.by_degree = {}
        queue = []
        for i in range(len(self.gen_forms)):
            queue.append(((i,), self.gen_forms[i], self.gen_degrees[i]))
        while queue:
            word, form, deg = queue.pop(0)
            self.words.append((word, form, deg))
            self.by_degree.setdefault(deg, []).append(len(self.words) - 1)
            for j in range(word[-1], len(self.gen_forms)):
                nd = deg + self.gen_degrees[j]
                if nd <= n:
                    queue.append((word + (j,), wedge(form, self.gen_forms[j]), nd))
        self._solvers = {}

    def degree_dim(self, p):
        """Dimension of the degree-p part of the algebra."""
        idxs = self.by_degree.get(p, ())
        rows = [flatten(self.words[i][1], p) for i in idxs]
        return span_rank(rows)

    def express(self, a: Form, p):
        """Coefficients over degree-p words with sum equal to a, or None."""
        idxs = self.by_degree.get(p, ())
        if not idxs:
            return None if not a.is_zero() else []
        cols = [flatten(self.words[i][1], p) for i in idxs]
        m = Matrix.from_rows(cols).transpose()
        sol = solve_affine(m, flatten(a, p))
        if sol.is_empty:
            return None
        return list(zip(idxs, sol.particular))

    def induced_value(self, word_idx, fvals):
        """Leibniz expansion of the operator on the given word."""
        word, _, _ = self.words[word_idx]
        n = self.n
        total = None
        for t in range(len(word)):
            img = fvals.get(self.gen_names[word[t]])
            if img is None or img.is_zero():
                continue
            shift = sum(self.gen_degrees[g] for g in word[:t])
            piece = img if shift % 2 == 0 else img.scale(Scalar.of(-1))
            for u, g in enumerate(word):
                if u == t:
                    continue
                factor = self.gen_forms[g]
                piece = wedge(factor, piece) if u < t else wedge(piece, factor)
            total = piece if total is None else total + piece
        return Form.zero(n) if total is None else total


def derivation_value(images, a: Form) -> Form:
    """Apply the degree-one derivation with e^i -> images[i-1] to a form."""
    n = a.n
    out = {}
    for idx, c in a.terms.items():
        for t, it in enumerate(idx):
            img = images[it - 1]
            if img is None or img.is_zero():
                continue
            base = c if t % 2 == 0 else -c
            prefix = idx[:t]
            suffix = idx[t + 1:]
            for jdx, d in img.terms.items():
                merged, sign = _sort_sign(prefix + jdx + suffix)
                if merged is None:
                    continue
                coef = base * d
                if sign < 0:
                    coef = -coef
                acc = out.get(merged)
                acc = coef if acc is None else acc + coef
                if acc.is_zero():
                    out.pop(merged, None)
                else:
                    out[merged] = acc
    res = Form.zero(n)
    if out:
        res = Form(n, out)
    return res


class OpCheck:
    """Outcome of the operator checks on one structure."""

    __slots__ = ("leibniz_ok", "square_zero_ok", "extends_ok",
                 "extension_witness", "equivariant_witness")

    def __init__(self, leibniz_ok, square_zero_ok, extends_ok,
                 extension_witness, equivariant_witness):
        self.leibniz_ok = leibniz_ok
        self.square_zero_ok = square_zero_ok
        self.extends_ok = extends_ok
        self.extension_witness = extension_witness
        self.equivariant_witness = equivariant_witness

    def all_ok(self):
        return self.leibniz_ok and self.square_zero_ok and self.extends_ok

    def to_json(self):
        def wit(h):
            if h is None:
                return "empty"
            return [str(v) for v in h.flatten()]
        return {
            "leibniz_ok": self.leibniz_ok,
            "square_zero_ok": self.square_zero_ok,
            "extends_ok": self.extends_ok,
            "extension_witness": wit(self.extension_witness),
            "equivariant_witness": wit(self.equivariant_witness),
        }


class ZReport:
    """Dimensions of the integral spaces of one operator."""

    __slots__ = ("n", "z_prime", "z_dim", "z_doubleprime_dim", "xi_f")

    def __init__(self, n, z_prime, z_dim, z_doubleprime_dim, xi_f):
        self.n = n
        self.z_prime = z_prime
        self.z_dim = z_dim
        self.z_doubleprime_dim = z_doubleprime_dim
        self.xi_f = xi_f

    def z_prime_dim(self):
        return self.z_prime.dim

    def to_json(self):
        e = "empty"
        return {
            "z_prime_dim": e if self.z_prime.is_empty else self.z_prime.dim,
            "z_dim": e if self.z_dim is None else self.z_dim,
            "z_doubleprime_dim": (e if self.z_doubleprime_dim is None
                                  else self.z_doubleprime_dim),
            "xi_f": (e if self.xi_f is None
                     else [str(v) for v in self.xi_f.flatten()]),
        }


def _hom_units(n):
    """Units of Hom(T, Lambda^2 T): (i, (j, k)) in flat column order."""
    pairs = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    return [(i, jk) for i in range(1, n + 1) for jk in pairs]


def _extension_system(n, pairs):
    """Rows of the linear system d_D(g) = f(g) over Hom units.

    pairs is a list of (generator form, target form); returns (matrix, rhs).
    """
    units = _hom_units(n)
    columns = []
    for i, (j, k) in units:
        images = [None] * n
        images[i - 1] = Form.monomial(n, (j, k), Scalar.of(1))
        col = []
        for g, _ in pairs:
            col.extend(flatten(derivation_value(images, g), g.degree + 1))
        columns.append(col)
    rhs = []
    for g, target in pairs:
        rhs.extend(flatten(target, g.degree + 1))
    return Matrix.from_rows(columns).transpose(), rhs


def _closure_for(s: StructureSpec):
    return Closure(s.n, s.generators)


def _instantiated(s, op, params):
    spec = _resolve_op(s, op)
    return spec, spec.instantiate(params)


def _check_expressible(closure, fvals):
    for gname, val in fvals.items():
        if val.is_zero():
            continue
        if closure.express(val, val.degree) is None:
            raise DgaError(
                "value of %r does not lie in the algebra" % gname)


def check_operator(s: StructureSpec, op, params=None) -> OpCheck:
    """Leibniz well-definedness, squaring to zero, and extension solving."""
    spec, fvals = _instantiated(s, op, params)
    closure = _closure_for(s)
    _check_expressible(closure, fvals)
    n = s.n

    leibniz_ok = True
    for p, idxs in sorted(closure.by_degree.items()):
        left = []
        aug = []
        for i in idxs:
            lrow = flatten(closure.words[i][1], p)
            vrow = ([] if p + 1 > n
                    else flatten(closure.induced_value(i, fvals), p + 1))
            left.append(lrow)
            aug.append(lrow + vrow)
        if span_rank(left) != span_rank(aug):
            leibniz_ok = False
            break

    square_zero_ok = True
    for gname, val in fvals.items():
        if val.is_zero():
            continue
        expr = closure.express(val, val.degree)
        second = Form.zero(n)
        for widx, coef in expr:
            if coef.is_zero():
                continue
            second = second + closure.induced_value(widx, fvals).scale(coef)
        if not second.is_zero():
            square_zero_ok = False
            break

    gens = [(form, fvals.get(gname, Form.zero(n)))
            for gname, form in s.generators.items()]
    m, rhs = _extension_system(n, gens)
    sol = solve_affine(m, rhs)
    extends_ok = not sol.is_empty
    witness = HomMap.unflatten(n, sol.particular) if extends_ok else None

    equi = None
    if extends_ok:
        basis = equivariant_maps(s.lie)
        if basis:
            cols = []
            for h in basis:
                col = []
                for g, _ in gens:
                    col.extend(flatten(derivation_value(h.images, g),
                                       g.degree + 1))
                cols.append(col)
            esol = solve_affine(Matrix.from_rows(cols).transpose(), rhs)
            if not esol.is_empty:
                images = [Form.zero(n) for _ in range(n)]
                for h, c in zip(basis, esol.particular):
                    if c.is_zero():
                        continue
                    for i in range(n):
                        images[i] = images[i] + h.images[i].scale(c)
                equi = HomMap(n, images)
        elif vec_is_zero(rhs):
            equi = HomMap.zero(n)
    return OpCheck(leibniz_ok, square_zero_ok, extends_ok, witness, equi)


def lie_tensor_rows(lie, n):
    """Flat Hom(T, Lambda^2 T) images of the basis of g (x) T.

    The pair (X, e_m) maps to the derivation candidate sending e^i to
    e^m wedge sum_j X_ij e^j, matching d(theta_i) = sum_j w_ij theta_j.
    """
    rows = []
    one = Scalar.of(1)
    for x in lie.basis:
        for m in range(1, n + 1):
            em = Form.monomial(n, (m,), one)
            images = []
            for i in range(n):
                lin = Form.zero(n)
                for j in range(n):
                    c = x[i][j]
                    if not c.is_zero():
                        lin = lin + Form.monomial(n, (j + 1,), c)
                images.append(wedge(em, lin))
            rows.append(HomMap(n, images).flatten())
    return rows


def z_spaces(s: StructureSpec, op, params=None) -> ZReport:
    """Z', Z and Z'' dimensions for an operator on the structure."""
    spec, fvals = _instantiated(s, op, params)
    n = s.n
    gens = [(form, fvals.get(gname, Form.zero(n)))
            for gname, form in s.generators.items()]
    m, rhs = _extension_system(n, gens)
    sol = solve_affine(m, rhs)
    if sol.is_empty:
        return ZReport(n, sol, None, None, None)
    z_dim = len(sol.basis) + n * (n * (n + 1) // 2)
    g_rows = lie_tensor_rows(s.lie, n)
    g_rank = span_rank(g_rows)
    z2 = span_rank(g_rows + sol.basis) - g_rank
    xi = HomMap.unflatten(n, sol.particular) if z2 == 0 else None
    return ZReport(n, sol, z_dim, z2, xi)


def strong_admissibility(s: StructureSpec):
    """Whether Z'' of the zero operator vanishes, with cross-checks.

    Requires the generators to span the full invariant algebra; returns
    (verdict, report) where the report carries every compared dimension.
    """
    closure = _closure_for(s)
    n = s.n
    for p in range(1, n + 1):
        have = closure.degree_dim(p)
        want = len(invariants(s.lie, p))
        if have != want:
            raise DgaError(
                "the algebra is incomplete in degree %d: spans %d of %d"
                % (p, have, want))
    report = {}
    z0 = z_spaces(s, "zero")
    strong = (z0.z_doubleprime_dim == 0)
    codim = n ** 3 - z0.z_dim
    expected = n * (n * (n - 1) // 2 - s.lie.dim)
    g_rows = lie_tensor_rows(s.lie, n)
    g_rank = span_rank(g_rows)
    direction = z0.z_prime.basis
    g_inside = all(in_span(direction, row) for row in g_rows)
    report["z_doubleprime_dim"] = z0.z_doubleprime_dim
    report["codim_z0"] = codim
    report["dim_t_gperp"] = expected
    report["codim_matches"] = (codim == expected)
    report["z_prime_dim"] = z0.z_prime.dim
    report["g_tensor_rank"] = g_rank
    report["g_tensor_expected"] = n * s.lie.dim
    report["g_tensor_inside"] = g_inside
    report["splitting_exact"] = (g_inside
                                 and g_rank == n * s.lie.dim
                                 and z0.z_prime.dim == n * s.lie.dim)
    return strong, report
