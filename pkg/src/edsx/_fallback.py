"""Pure Python twin of the compiled field kernel.

A scalar in Q(r2, r3, r5, r7) is a plain dict mapping a 4-bit mask to a
nonzero rational coefficient.  Bit k of the mask says whether PRIMES[k]
sits under the square root, so radicals multiply by XOR of masks times
the product of the shared primes.  The empty dict is zero.

edsx._speedups is a line-by-line transliteration of this module; both
must produce identical dicts for identical inputs.
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
# multiplier picked up when two radicals share the primes of `mask`
_G = tuple(_divisor(m) for m in range(16))

MASK_OF_DIVISOR = {d: m for m, d in enumerate(DIVISORS)}


def s_from_rat(q):
    return {0: q} if q else {}


def s_add(a, b):
    if not b:
        return dict(a)
    out = dict(a)
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


def s_sub(a, b):
    if not b:
        return dict(a)
    out = dict(a)
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


def s_neg(a):
    return {k: -q for k, q in a.items()}


def s_rat_scale(a, q):
    if not q:
        return {}
    return {k: v * q for k, v in a.items()}


def s_mul(a, b):
    if not a or not b:
        return {}
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


def s_submul(a, c, b):
    """a - c*b for nonzero c, b; the row reduction inner loop."""
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


def s_inv(a):
    """Multiplicative inverse, solved inside the radical span of a's keys."""
    if not a:
        raise ZeroDivisionError("scalar inverse of zero")
    if len(a) == 1:
        (k, q), = a.items()
        # 1/(q*sqrt(d)) = sqrt(d)/(q*d)
        return {k: R1 / (q * _G[k])}
    # GF(2) span of the masks; multiplication by a preserves it
    basis = []
    for k in a:
        v = k
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    span = [0]
    for b in sorted(basis):
        span += [s ^ b for s in span]
    span.sort()
    pos = {m: i for i, m in enumerate(span)}
    n = len(span)
    mat = [[None] * (n + 1) for _ in range(n)]
    for j, m in enumerate(span):
        for k, q in a.items():
            i = pos[k ^ m]
            cur = mat[i][j]
            add = q * _G[k & m]
            mat[i][j] = add if cur is None else cur + add
    zero = RAT(0)
    for row in mat:
        for j in range(n + 1):
            if row[j] is None:
                row[j] = zero
    mat[0][n] = R1
    piv = []
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
        inv = R1 / mat[r][j]
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
    out = {}
    for t, j in enumerate(piv):
        q = mat[t][n]
        if q:
            out[span[j]] = q
    return out


def rref(rows, ncols):
    """In-place reduced row echelon form over the field.

    The pivot is always the first nonzero entry scanning by lowest row
    index then lowest column index.  On return the pivot rows come
    first, sorted by pivot column and normalized to leading 1, with zero
    rows below; the sorted pivot column list is returned.  The result is
    the canonical RREF of the row space, so reruns are bit-identical.
    """
    nrows = len(rows)
    leads = [0] * nrows
    pivots = []
    r = 0
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
        if len(lead) != 1 or lead.get(0) != R1:
            inv = s_inv(lead)
            for j in range(pj + 1, ncols):
                if prow[j]:
                    prow[j] = s_mul(prow[j], inv)
        prow[pj] = {0: R1}
        pnz = [(j, prow[j]) for j in range(pj, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            c = row[pj]
            if c:
                for j, v in pnz:
                    row[j] = s_submul(row[j], c, v)
        pivots.append(pj)
        r += 1
    order = sorted(range(r), key=lambda t: pivots[t])
    rows[:r] = [rows[t] for t in order]
    return sorted(pivots)
