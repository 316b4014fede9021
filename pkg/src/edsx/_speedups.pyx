# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of edsx._fallback.

Same dict-of-mask representation and the same pivot rule, so results are
bit-identical to the pure kernel; the gain comes from typed indices and
C-level dispatch in the row reduction inner loop.
"""

from ._rat import RAT, R1

PRIMES = (2, 3, 5, 7)


def _divisor(mask):
    d = 1
    for k, p in enumerate(PRIMES):
        if mask >> k & 1:
            d *= p
    return d


DIVISORS = tuple(_divisor(m) for m in range(16))

cdef int _G[16]
for _m in range(16):
    _G[_m] = DIVISORS[_m]

MASK_OF_DIVISOR = {d: m for m, d in enumerate(DIVISORS)}

_R1 = R1
_R0 = RAT(0)


def s_from_rat(q):
    return {0: q} if q else {}


cpdef dict s_add(dict a, dict b):
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for k, q in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = q
        else:
            cur = cur + q
            if cur:
                out[k] = cur
            else:
                del out[k]
    return out


cpdef dict s_sub(dict a, dict b):
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for k, q in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = -q
        else:
            cur = cur - q
            if cur:
                out[k] = cur
            else:
                del out[k]
    return out


cpdef dict s_neg(dict a):
    cdef dict out = {}
    for k, q in a.items():
        out[k] = -q
    return out


cpdef dict s_rat_scale(dict a, q):
    if not q:
        return {}
    cdef dict out = {}
    for k, v in a.items():
        out[k] = v * q
    return out


cpdef dict s_mul(dict a, dict b):
    if not a or not b:
        return {}
    cdef int ka, kb, k, g
    cdef dict out
    if len(a) == 1 and len(b) == 1:
        (ka, qa), = a.items()
        (kb, qb), = b.items()
        q = qa * qb
        g = _G[ka & kb]
        if g != 1:
            q = q * g
        return {ka ^ kb: q}
    out = {}
    for ka, qa in a.items():
        for kb, qb in b.items():
            k = ka ^ kb
            q = qa * qb
            g = _G[ka & kb]
            if g != 1:
                q = q * g
            cur = out.get(k)
            if cur is None:
                out[k] = q
            else:
                cur = cur + q
                if cur:
                    out[k] = cur
                else:
                    del out[k]
    return out


cpdef dict s_submul(dict a, dict c, dict b):
    """a - c*b for nonzero c, b; the row reduction inner loop."""
    cdef int kc, kb, k, g
    cdef dict out
    if len(c) == 1 and len(b) == 1:
        (kc, qc), = c.items()
        (kb, qb), = b.items()
        k = kc ^ kb
        q = qc * qb
        g = _G[kc & kb]
        if g != 1:
            q = q * g
        if not a:
            return {k: -q}
        out = dict(a)
        cur = out.get(k)
        if cur is None:
            out[k] = -q
        else:
            cur = cur - q
            if cur:
                out[k] = cur
            else:
                del out[k]
        return out
    out = dict(a)
    for kc, qc in c.items():
        for kb, qb in b.items():
            k = kc ^ kb
            q = qc * qb
            g = _G[kc & kb]
            if g != 1:
                q = q * g
            cur = out.get(k)
            if cur is None:
                out[k] = -q
            else:
                cur = cur - q
                if cur:
                    out[k] = cur
                else:
                    del out[k]
    return out


cpdef dict s_inv(dict a):
    """Multiplicative inverse, solved inside the radical span of a's keys."""
    cdef int k, m, v, b, n, i, j, r, pi, t
    if not a:
        raise ZeroDivisionError("scalar inverse of zero")
    if len(a) == 1:
        (k, q), = a.items()
        return {k: _R1 / (q * _G[k])}
    cdef list basis = []
    for k in a:
        v = k
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    cdef list span = [0]
    for b in sorted(basis):
        span += [s ^ b for s in span]
    span.sort()
    cdef dict pos = {m: i for i, m in enumerate(span)}
    n = len(span)
    cdef list mat = [[None] * (n + 1) for _ in range(n)]
    cdef list row
    for j, m in enumerate(span):
        for k, q in a.items():
            i = pos[k ^ m]
            row = mat[i]
            cur = row[j]
            add = q * _G[k & m]
            row[j] = add if cur is None else cur + add
    zero = _R0
    for row in mat:
        for j in range(n + 1):
            if row[j] is None:
                row[j] = zero
    mat[0][n] = _R1
    cdef list piv = []
    r = 0
    for j in range(n):
        pi = -1
        for i in range(r, n):
            if mat[i][j]:
                pi = i
                break
        if pi < 0:
            continue
        mat[r], mat[pi] = mat[pi], mat[r]
        inv = _R1 / mat[r][j]
        mat[r] = [x * inv for x in mat[r]]
        prow = mat[r]
        for i in range(n):
            if i != r and mat[i][j]:
                c = mat[i][j]
                mat[i] = [x - c * y for x, y in zip(mat[i], prow)]
        piv.append(j)
        r += 1
    if r != n:
        raise ArithmeticError("singular radical multiplication matrix")
    cdef dict out = {}
    for t in range(len(piv)):
        j = piv[t]
        q = mat[t][n]
        if q:
            out[span[j]] = q
    return out


def rref(list rows, int ncols):
    """In-place reduced row echelon form over the field.

    Pivot rule and output layout match edsx._fallback.rref exactly: the
    pivot is the first nonzero entry by lowest row then lowest column,
    pivot rows come first sorted by pivot column and normalized to a
    leading 1, and the sorted pivot column list is returned.
    """
    cdef int nrows = len(rows)
    cdef list leads = [0] * nrows
    cdef list pivots = []
    cdef int r = 0
    cdef int i, j, pi, pj
    cdef list row, prow, pnz
    cdef dict lead, c, vd
    while r < nrows:
        pi = -1
        for i in range(r, nrows):
            row = rows[i]
            j = leads[i]
            while j < ncols and not row[j]:
                j += 1
            leads[i] = j
            if j < ncols:
                pi = i
                break
        if pi < 0:
            break
        pj = leads[pi]
        if pi != r:
            rows[pi], rows[r] = rows[r], rows[pi]
            leads[pi], leads[r] = leads[r], leads[pi]
        prow = rows[r]
        lead = prow[pj]
        if len(lead) != 1 or lead.get(0) != _R1:
            inv = s_inv(lead)
            for j in range(pj + 1, ncols):
                if prow[j]:
                    prow[j] = s_mul(prow[j], inv)
        prow[pj] = {0: _R1}
        pnz = [(j, prow[j]) for j in range(pj, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            c = row[pj]
            if c:
                for j, vd in pnz:
                    row[j] = s_submul(row[j], c, vd)
        pivots.append(pj)
        r += 1
    cdef list order = sorted(range(r), key=lambda t: pivots[t])
    rows[:r] = [rows[t] for t in order]
    return sorted(pivots)
